#!/usr/bin/env python3
"""Builds the native extension with cargo and exercises it end to end.

Run from anywhere:

    python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_extension() -> Path:
    subprocess.run(
        ["cargo", "build", "-p", "lexdom-py", "--release"],
        cwd=ROOT,
        check=True,
    )
    built = ROOT / "target" / "release" / "liblexdom_py.so"
    if not built.exists():  # e.g. macOS
        built = ROOT / "target" / "release" / "liblexdom_py.dylib"
    stage = Path(tempfile.mkdtemp(prefix="lexdom-py-"))
    shutil.copy(built, stage / "lexdom_py.so")
    return stage


def main() -> None:
    sys.path.insert(0, str(build_extension()))
    import lexdom_py as lx

    # graph construction round-trips
    p6 = lx.Graph.from_family("path:6")
    assert p6.n == 6
    assert lx.Graph.from_graph6(p6.graph6()) == p6
    k2 = lx.Graph(2, [(0, 1)])
    assert k2.graph6() == "A_"

    # exact invariants and witnesses
    assert lx.exact_invariant(p6, "gx2") == 5
    assert lx.exact_invariant(lx.Graph.from_family("cycle:7"), "gx2") == 5
    star = lx.Graph.from_family("star:1,4")
    assert lx.exact_invariant(star, "gx2") == 5
    assert lx.exact_invariant(star, "gtr2") == 3
    witness = lx.min_witness(p6, "gx2")
    assert len(witness) == 5 and lx.validate(p6, "gx2", witness)
    assert lx.count_minimum_witnesses(lx.Graph.from_family("cycle:3"), "gt") == 3
    try:
        lx.exact_invariant(lx.Graph.from_family("empty:3"), "gt")
    except ValueError as err:
        assert "isolated" in str(err)
    else:
        raise AssertionError("total domination of an empty graph must be infeasible")

    # products: the double domination number matches the closed formula
    p7 = lx.Graph.from_family("path:7")
    p4 = lx.Graph.from_family("path:4")
    product = lx.lex_product(p7, p4)
    assert product.n == 28
    assert lx.exact_invariant(product, "gx2") == 6
    formula = lx.gamma_x2_formula("path:7", p4)
    assert formula["value"] == 6 and formula["rule"] == "path-h-domination-2"

    # the scheme witness validates on the product
    scheme = lx.path_scheme(7, p4)
    assert len(scheme) == 6 and lx.validate(product, "gx2", scheme)

    # bounds and the small-value classifier
    bounds = lx.gamma_x2_bounds(lx.Graph.from_family("cycle:4"), lx.Graph.from_family("empty:2"))
    assert (bounds["lower"], bounds["upper"]) == (3, 4)
    assert lx.classify_product_value(lx.Graph.from_family("complete:3"), k2) == "2"

    # rooted product shape
    rooted = lx.rooted_product(k2, k2, 0)
    assert rooted.n == 4 and len(rooted.edges()) == 3

    # a verification check over a small corpus
    report = lx.run_check("V6")
    assert report["verdict"] == "pass" and report["tested"] > 0

    print("smoke test: PASS")


if __name__ == "__main__":
    main()
