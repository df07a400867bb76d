"""Smoke test for the Python bindings.

Build and install first:
    maturin build --release -m crates/py/Cargo.toml
    pip install target/wheels/pseudohiggs-*.whl
Then run `python python/smoke_test.py` or `pytest python/smoke_test.py`.
"""

import json
from math import gcd

import pseudohiggs as ph


def test_h2_counts():
    for n in range(1, 5):
        for m in range(1, 5):
            assert len(ph.Cocycle.h2_classes([n], m)) == gcd(n, m)


def test_cocycle_methods():
    c = ph.Cocycle.cyclic_standard(4, 4, 1)
    assert c.is_cocycle()
    assert c.zeta(1) == 1
    assert c.extension_order() == 16
    bad = ph.Cocycle([3], 2, [0, 0, 0, 0, 1, 0, 0, 0, 0])
    assert not bad.is_cocycle()
    try:
        bad.extension_order()
    except ValueError as e:
        assert str(e).startswith("NotACocycle")
    else:
        raise AssertionError("expected NotACocycle")


def test_pseudoreps():
    c = ph.Cocycle.cyclic_standard(2, 1, 0)
    assert ph.classify_generator(c, [["-1", "0"], ["0", "1"]]) == ("0/1", ["1/2", "0/1"])
    assert len(ph.enumerate_classes(2, 2, "0")) == 3
    assert len(ph.enumerate_classes(3, 2, "0", special=True)) == 2


def test_lie():
    w = ph.WeightVector.normalize(ph.GroupModel.sl(3), ["1/3", "2/3", "0"])
    assert w.entries == ["1/3", "0/1", "-1/3"] and w.shift == 1 and w.is_interior()
    dims = [d for _, d in ph.WeightVector.normalize(ph.GroupModel.gl(2), ["1/3", "0"]).eigenspaces()]
    assert sum(dims) == ph.GroupModel.gl(2).dim_m
    masks = ph.parabolic(ph.GroupModel.gl(3), ["1", "1", "0"])
    assert masks["l"][0][1] and not masks["l"][0][2]


def test_local_round_trip():
    series = {
        "model": {"kind": "gl", "r": 2},
        "alpha": ["1/2", "0"],
        "N": 2,
        "variable": "z",
        "trunc": 4,
        "terms": [{"basis": [2, 1], "k": 0, "coeff": "1"}],
    }
    up = ph.GradedSeries.from_json(json.dumps(series))
    assert up.is_invariant()
    down, residue = up.descend()
    assert down.variable == "w"
    assert json.loads(residue)["in_descended_image"]
    assert down.ascend().agrees_with(up)


def test_moduli_and_cli():
    assert ph.riemann_hurwitz(2, 2, [2, 2]) == 1
    assert ph.degree_scaling_check("1/3", 2, "2/3") == (True, False)
    assert ph.degree_pairing(["-1", "1"], [(1, 1), (1, -1)]) == "-2/1"
    assert ph.strata_count(2, 2, [2, 2], 2, ph.GroupModel.gl(1)) == 2
    code, out = ph.run_cli(["moduli", "rh", "-"], json.dumps({"genus_x": 2, "N": 3, "orbits": []}))
    assert code == 1 and json.loads(out)["error"] == "NonIntegralGenus"


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"ok {name}")
