import math

import pytest

import hypembed


def test_generate_and_distances():
    z = hypembed.generate("circle", {"N": 8})
    assert len(z) == 8
    assert math.isclose(z.diameter, math.pi)
    assert math.isclose(z.distance(0, 4), math.pi)
    assert len(z.ids) == 8


def test_space_from_matrix_and_json():
    z = hypembed.Space(["a", "b", "c"], [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    again = hypembed.space_from_json(z.to_json(True))
    assert again.distance(0, 2) == 2
    with pytest.raises(hypembed.HypembedError):
        hypembed.Space(["a", "b", "c"], [[0, 1, 5], [1, 0, 1], [5, 1, 0]])


def test_neighborhoods():
    z = hypembed.generate("circle", {"N": 8})
    assert hypembed.neighborhood(z, [0], 1.0) == [0, 1, 7]
    assert hypembed.neighborhood(z, [0, 1, 2], -0.5) == [0, 1, 2]
    assert hypembed.neighborhood(z, [0, 1, 2], -1.0) == [1]
    assert hypembed.closed_neighborhood(z, [0], math.pi / 4) == [0, 1, 7]


def test_hyperbolic_helpers():
    assert math.isclose(hypembed.hyperbolic_distance(2.0, 0.0, 1.0), 2.0)
    tripod = hypembed.Space(["o", "x", "y"], [[0, 3, 4], [3, 0, 7], [4, 7, 0]])
    assert hypembed.gromov_product(tripod, 0, 1, 2) == 0
    assert hypembed.delta_hyperbolicity(tripod, 0) == 0


def test_fit_qi():
    assert hypembed.fit_qi([(1.0, 1.0), (2.0, 2.0)]) == (1.0, 0.0)
    lam, sigma = hypembed.fit_qi([(1.0, 2.0), (2.0, 4.0)])
    assert math.isclose(lam, 2.0) and sigma == 0.0
    with pytest.raises(hypembed.HypembedError):
        hypembed.fit_qi([])


def test_visual_circle_and_profile():
    z = hypembed.visual_metric_circle(4)
    assert math.isclose(z.distance(0, 1), math.sqrt(2))
    prof = hypembed.capacity_profile(hypembed.generate("point"), [0], [1.0], 0.1)
    assert all(e["capacity"] == 1.0 for e in prof["entries"])


def test_pipeline_on_cantor():
    out = hypembed.run_pipeline(
        {"generator": "cantor", "params": {"depth": 6}, "r": 1 / 3, "J": 3, "colors": 2,
         "enforce_standing_assumptions": False}
    )
    assert out["passed"]
    assert out["qireport"]["post_check_violations"] == 0
    assert all(t["audit_ok"] and t["delta_hyperbolicity"] == 0 for t in out["trees"])


def test_pipeline_stage_error():
    with pytest.raises(hypembed.HypembedError, match="standing assumption"):
        hypembed.run_pipeline({"generator": "point", "params": {}, "r": 0.5, "J": 2})
