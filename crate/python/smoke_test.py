"""Smoke test for the algsoliton Python module.

    pip install --no-build-isolation -e crates/python
    python python/smoke_test.py
"""

import json
import sys
from fractions import Fraction

import algsoliton
from algsoliton import AlgSolitonError, Space

HEISENBERG = json.dumps({
    "name": "heisenberg3", "dim": 3, "m_dim": 3,
    "brackets": [{"i": 0, "j": 1, "coeffs": {"2": "1"}}],
    "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
})

BROKEN = json.dumps({
    "name": "broken", "dim": 3, "m_dim": 3,
    "brackets": [
        {"i": 0, "j": 1, "coeffs": {"2": "1"}},
        {"i": 1, "j": 2, "coeffs": {"0": "1"}},
        {"i": 0, "j": 2, "coeffs": {"0": "-1"}},
    ],
    "metric": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
})


def check(label, ok):
    print(("PASS " if ok else "FAIL ") + label)
    return ok


def main():
    results = []

    names = [t["space"] for t in algsoliton.catalog_types()]
    results.append(check("catalog lists A-D", names == ["A", "B", "C", "D"]))

    a = Space.catalog("A", delta=Fraction(3, 2))
    sol = a.solve()
    results.append(check("type A is a shrinking soliton", sol["status"] == "soliton" and sol["sign_class"] == "shrinking"))
    results.append(check("type A derivations", len(a.derivations()) == 6))

    b = Space.catalog("B", **{"lambda": 1, "epsilon": 1})
    results.append(check("type B is not a soliton", b.solve()["status"] == "not_soliton"))

    c = Space.catalog("C", sign=-1)
    rep = c.analyze()
    results.append(check("type C report", rep["validation"]["jacobi"] and rep["derivation_dim"] == 6))

    d = Space.catalog("D", **{"lambda": "-2/3"})
    results.append(check("type D Ricci", d.ricci_operator()[2][2] == "9/2"))
    results.append(check("type D invariants", all(ok for _, ok, _ in d.verify())))

    h = Space.from_json(HEISENBERG)
    sol = h.solve()
    results.append(check("heisenberg nilsoliton", sol["c"] == "-3/2" and len(h.derivations()) == 6))
    results.append(check("json round trip", Space.from_json(h.to_json()).to_json() == h.to_json()))
    results.append(check("bracket", h.bracket([1, 0, 0], [0, 1, 0]) == ["0", "0", "1"]))

    bad = Space.from_json(BROKEN)
    results.append(check("jacobi failure reported", bad.check_jacobi() == ((0, 1, 2), ["0", "0", "-1"])))
    try:
        bad.analyze()
        results.append(check("analyze refuses broken algebra", False))
    except AlgSolitonError as e:
        results.append(check("analyze refuses broken algebra", "(x0, x1, x2)" in str(e)))

    try:
        Space.catalog("A", delta=0)
        results.append(check("domain error", False))
    except ValueError:
        results.append(check("domain error", True))

    return 0 if all(results) else 1


if __name__ == "__main__":
    sys.exit(main())
