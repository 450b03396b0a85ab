"""Estimator facade: sklearn protocol plus agreement with the scan."""

import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from zigzagwalk.estimator import ZigZagLocator
from zigzagwalk.oracle import brute_force_locate

SQUARE_X = [[0.0, 0.0], [2.0, 0.0], [2.0, 2.0], [0.0, 2.0]]
SQUARE_T = [(0, 1, 2), (0, 2, 3)]


def test_get_params_roundtrip():
    est = ZigZagLocator()
    assert est.get_params() == {
        "triangles": None, "policy": "right", "seed": 0, "max_steps": None}
    est = ZigZagLocator(policy="random", seed=7, max_steps=50)
    cloned = clone(est)
    assert cloned.get_params() == est.get_params()
    est.set_params(policy="left")
    assert est.policy == "left"


def test_predict_requires_fit():
    with pytest.raises(NotFittedError):
        ZigZagLocator().predict([[0.0, 0.0]])


def test_explicit_triangles_path():
    est = ZigZagLocator(triangles=SQUARE_T).fit(SQUARE_X)
    assert est.mesh_.n_faces == 2
    got = est.predict([[1.5, 0.5], [0.5, 1.5], [5.0, 5.0]])
    assert got.tolist() == [0, 1, -1]


def test_score():
    est = ZigZagLocator(triangles=SQUARE_T).fit(SQUARE_X)
    X = [[1.5, 0.5], [0.5, 1.5], [5.0, 5.0]]
    assert est.score(X, [0, 1, -1]) == 1.0
    assert est.score(X, [0, 0, -1]) == pytest.approx(2 / 3)


def test_input_validation():
    with pytest.raises(ValueError):
        ZigZagLocator().fit([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [0.0, 1.0, 1.0]])
    est = ZigZagLocator(triangles=SQUARE_T).fit(SQUARE_X)
    with pytest.raises(ValueError):
        est.predict([[0.5, 0.5, 0.5]])


@pytest.mark.parametrize("policy", ["right", "left", "random"])
def test_delaunay_path_agrees_with_scan(policy):
    rng = np.random.default_rng(23)
    X = rng.uniform(-10.0, 10.0, (40, 2))
    est = ZigZagLocator(policy=policy, seed=5).fit(X)
    queries = rng.uniform(-12.0, 12.0, (300, 2))
    pred = est.predict(queries)
    for (x, y), f in zip(queries, pred):
        ans = brute_force_locate(est.mesh_, (float(x), float(y)))
        if f >= 0:
            assert f in ans.faces
        else:
            assert not ans.inside
