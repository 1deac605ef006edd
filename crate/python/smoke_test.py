#!/usr/bin/env python3
"""Smoke test for the burnt_pancake_py extension module.

Builds nothing itself: expects `cargo build -p burnt-pancake-py` (or
--release) to have produced the cdylib, which is loaded from the target
directory.

    cargo build -p burnt-pancake-py
    python3 python/smoke_test.py
"""

import importlib.util
import math
import pathlib
import sys


def load_module():
    root = pathlib.Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("libburnt_pancake_py.so", "burnt_pancake_py.so")
    ]
    for path in candidates:
        if path.exists():
            spec = importlib.util.spec_from_file_location("burnt_pancake_py", path)
            mod = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(mod)
            return mod
    sys.exit(
        "burnt_pancake_py cdylib not found; run `cargo build -p burnt-pancake-py` first"
    )


def main():
    bp = load_module()
    checks = 0

    def check(name, cond):
        nonlocal checks
        if not cond:
            sys.exit(f"FAIL {name}")
        checks += 1
        print(f"ok {name}")

    # permutation algebra
    e = bp.SignedPerm.identity(3)
    check("identity window", e.window() == [1, 2, 3])
    r2 = e.apply_reversal(2)
    check("prefix reversal", r2.window() == [-2, -1, 3])
    check("involution", r2.apply_reversal(2) == e)
    check("parse/str", bp.SignedPerm.parse(str(r2)) == r2)
    check("inverse", r2.compose(r2.inverse()) == e)
    check("neighbors", len(e.neighbors()) == 3)
    check("rank roundtrip", bp.unrank(3, r2.rank()) == r2)

    # counts
    s = bp.stats(4)
    check("stats vertices", s["vertices"] == 2**4 * math.factorial(4))
    check("stats edges", s["edges"] == 768)
    check("stats density", s["density"] == (4, 383))

    # synthesis + verification across the whole feasible range at n=4
    w = bp.synth_cycle(4, 123)
    check("synth length", w.length == 123 and len(w.word) == 123)
    check("verify synth", bp.verify(4, w.word))
    check("verify rejects", not bp.verify(3, "121212"))
    ham = bp.synth_cycle(5, 3840)
    check("hamiltonian", ham.length == 2**5 * math.factorial(5))
    check("plan json", '"step"' in ham.plan_json)

    # scaffold cycles
    b = bp.base_cycle(7, 4)
    check("base length", b["length"] == 30 and b["case"] == "mid-k")
    check("base copies", b["copies_visited"] == 12)

    # 8-cycle classification
    check("count bp2", bp.count_8cycles(2) == 1)
    check("count bp4", bp.count_8cycles(4) == 864)
    check("through vertex", bp.count_8cycles_through_vertex(4) == 18)
    check("classify", bp.classify_8cycle(4, "42424242") == "F2(i=2, j=2, k=4)")
    canon_word, _start = bp.canonicalize_8cycle(bp.SignedPerm.identity(2), "12121212")
    check("canonicalize", canon_word == "21212121")

    # oracle
    check("girth signed", bp.girth(3) == 8)
    check("girth unsigned", bp.girth(4, unsigned=True) == 6)
    total, through = bp.count_cycles(4, 23, unsigned=True)
    check("23-cycles", (total, through) == (192, 184))
    check("find none below girth", bp.find_cycle(3, 7) is None)
    check("find girth cycle", len(bp.find_cycle(3, 8)) == 8)
    check("bfs distance", bp.bfs_distance(e, bp.SignedPerm.parse("[2 1 3]")) == 3)

    print(f"smoke test passed ({checks} checks)")


if __name__ == "__main__":
    main()
