import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import FunctionTransformer

from troploc.errors import MissingCapsError, ReducibleError
from troploc.estimator import ChebyshevCenter, MaxPlusSpectrum

X = np.array([[0.0, 0.0], [10.0, 4.0]])


def test_fit_attributes():
    est = ChebyshevCenter().fit(X)
    assert est.lambda_ == 5 and est.lambda0_ == 5 and est.exact_
    assert est.p_.tolist() == [10, 4] and est.q_.tolist() == [0, 0]
    assert est.location_.tolist() == [5, 2]
    assert est.n_features_in_ == 2


def test_params_round_trip():
    est = ChebyshevCenter(alpha=1.0, n_samples=3)
    assert est.get_params() == {"alpha": 1.0, "constrained": "auto", "n_samples": 3}
    other = clone(est).set_params(alpha=0.0).fit(X)
    assert other.location_.tolist() == [5, 5]


def test_transform_and_score():
    est = ChebyshevCenter(alpha=1.0).fit(X)
    d = est.transform(X)
    assert d.shape == (2, 1) and d[:, 0].tolist() == [5, 5]
    assert est.score(X) == -5
    assert est.score(X, addends=[1.0, 0.0]) == -6


def test_locations():
    est = ChebyshevCenter().fit(X)
    stack = est.locations([[0, 0], [1, 1]])
    assert stack.tolist() == [[5, 5], [5, -1]]


def test_constrained_auto():
    est = ChebyshevCenter().fit([[0.0], [10.0]], caps=[3.0, 9.0])
    assert est.lambda_ == 1 and est.lambda0_ == 5 and not est.exact_
    free = ChebyshevCenter(constrained=False).fit([[0.0], [10.0]], caps=[3.0, 9.0])
    assert free.lambda_ == 5
    with pytest.raises(MissingCapsError):
        ChebyshevCenter(constrained=True).fit([[0.0], [10.0]])


def test_one_dimensional_input():
    est = ChebyshevCenter().fit([0.0, 10.0], addends=[2.0, 0.0])
    assert est.lambda_ == 6 and est.location_.tolist() == [4]


def test_input_validation():
    with pytest.raises(ValueError):
        ChebyshevCenter().fit([[0.0, np.nan]])
    with pytest.raises(ValueError):
        ChebyshevCenter().fit(X, addends=[1.0])
    est = ChebyshevCenter().fit(X)
    with pytest.raises(ValueError):
        est.transform([[1.0, 2.0, 3.0]])


def test_not_fitted():
    with pytest.raises(NotFittedError):
        ChebyshevCenter().transform(X)


def test_pipeline():
    pipe = make_pipeline(FunctionTransformer(lambda z: z * 2.0), ChebyshevCenter())
    out = pipe.fit_transform(X)
    assert out[:, 0].tolist() == [10, 10]


def test_spectrum():
    est = MaxPlusSpectrum().fit([[None, 4], [2, None]])
    assert est.eigenvalue_ == 3
    assert est.basis_.tolist() == [[0], [-1]]
    est = MaxPlusSpectrum().fit(np.array([[-np.inf, 0, 0], [10, -np.inf, -np.inf], [4, -np.inf, -np.inf]]))
    assert est.eigenvalue_ == 5 and est.basis_[:, 0].tolist() == [0, 5, -1]
    with pytest.raises(ReducibleError):
        MaxPlusSpectrum().fit([[None, 1], [None, None]])
