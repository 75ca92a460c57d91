#!/usr/bin/env python3
"""Smoke test for the matchcrit_py extension module.

Builds the cdylib with cargo if needed, stages it under an importable
name, and exercises the Python surface end to end. Run from anywhere:

    python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import sysconfig
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def _built_library() -> Path:
    """Find (building if necessary) the compiled extension."""
    candidates = [
        REPO / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libmatchcrit_py.so", "libmatchcrit_py.dylib", "matchcrit_py.dll")
    ]
    for c in candidates:
        if c.exists():
            return c
    subprocess.run(
        ["cargo", "build", "-p", "matchcrit-python"],
        cwd=REPO,
        check=True,
    )
    for c in candidates:
        if c.exists():
            return c
    raise FileNotFoundError("cargo build produced no matchcrit_py library")


def _stage(library: Path, stage_dir: Path) -> None:
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy2(library, stage_dir / f"matchcrit_py{suffix}")


def run() -> None:
    stage = Path(tempfile.mkdtemp(prefix="matchcrit_py_"))
    _stage(_built_library(), stage)
    sys.path.insert(0, str(stage))

    import matchcrit_py as mc

    # Graph construction, graph6 round trip, structure queries.
    k2 = mc.Graph(2, [(0, 1)])
    assert k2.n == 2 and k2.m == 1
    assert k2.graph6() == "A_"
    assert mc.Graph.from_graph6(">>graph6<<A_") == k2
    p3 = mc.Graph.from_graph6("Bo")
    assert p3.is_tree() and p3.is_connected()
    assert p3.degree(1) + p3.degree(0) + p3.degree(2) == 4
    try:
        mc.Graph(2, [(0, 2)])
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-range edge must raise ValueError")

    # Matching polynomials, exactly.
    w6 = mc.family("W", 6)
    assert str(mc.matching_polynomial(w6)) == "x^6-5x^4+4x^2"
    h1 = mc.family("H1")
    h2 = mc.family("H2")
    assert mc.matching_polynomial(h1) == mc.matching_polynomial(h2)
    assert not h1.is_isomorphic(h2)

    # Counts are plain Python ints, including the big ones.
    c6 = mc.Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert mc.matching_counts(c6) == [1, 6, 9, 2]
    k6 = mc.Graph(6, [(a, b) for a in range(6) for b in range(a + 1, 6)])
    assert mc.matching_counts(k6) == [1, 15, 45, 15]

    # Polynomial type: parsing, coefficients, evaluation.
    p = mc.Polynomial("x^2-3")
    assert p.degree == 2 and p.coeffs() == [-3, 0, 1]
    assert p(7) == 46
    assert mc.Polynomial.from_coeffs([-3, 0, 1]) == p

    # Roots, multiplicity, classification, criticality.
    one = mc.Root.integer(1)
    sqrt3 = mc.Root.sqrt(3)
    assert str(sqrt3.minpoly) == "x^2-3"
    assert mc.multiplicity(w6, one) == 1
    assert mc.is_critical(w6, one)
    verdict = mc.classify(mc.family("Gstar"), sqrt3)
    assert verdict["multiplicity"] == 1 and not verdict["critical"]
    kinds = [c["kind"] for c in verdict["classes"]]
    assert kinds == (
        ["Positive"] * 3 + ["Neutral"] * 3 + ["Essential"] * 6
    )
    assert [c["special"] for c in verdict["classes"]].count(True) == 1
    try:
        mc.is_critical(k2.disjoint_union(k2), one)
    except ValueError:
        pass
    else:
        raise AssertionError("disconnected input must raise ValueError")

    # Extremal multiplicity with its squarefree part.
    m, part = mc.max_multiplicity(mc.family("T", 7))
    assert m == 2 and str(part) == "x^2-1"

    # Enumeration and the minimum-order scan.
    assert len(mc.connected_graphs(4)) == 6
    assert len(mc.trees(7)) == 11
    order, members = mc.n_theta(mc.Root("x^2-2"))
    assert order == 3 and len(members) == 1
    assert members[0].is_isomorphic(p3)

    # Path tree identities.
    check = mc.path_tree_check(mc.Graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert check["nodes"] == 5
    assert check["divisible"] and check["ratio_identity"]
    assert str(check["quotient"]) == "x^2-1"

    # Claim harness round trip through JSON.
    import json

    report = json.loads(mc.verify_claim("tree-census", n=6))
    assert not report["violations"] and len(report["witnesses"]) == 1

    print("smoke test passed")


if __name__ == "__main__":
    run()
