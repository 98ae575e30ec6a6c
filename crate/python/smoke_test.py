#!/usr/bin/env python3
"""Smoke test for the hyperring_py extension module.

Builds nothing itself: run `cargo build --release -p hyperring-python`
first, then `python3 python/smoke_test.py`. The script locates the built
cdylib, exposes it under the importable module name, and drives the main
types and operations end to end.
"""

import json
import pathlib
import shutil
import sys
import tempfile

REPO = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        REPO / "target" / "release" / "libhyperring_py.so",
        REPO / "target" / "debug" / "libhyperring_py.so",
        REPO / "target" / "release" / "libhyperring_py.dylib",
        REPO / "target" / "debug" / "libhyperring_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit(
            "extension not built; run: cargo build --release -p hyperring-python"
        )
    stage = pathlib.Path(tempfile.mkdtemp(prefix="hyperring-py-"))
    shutil.copy2(built, stage / "hyperring_py.so")
    sys.path.insert(0, str(stage))
    import hyperring_py

    return hyperring_py


def check(name, cond):
    status = "ok" if cond else "FAIL"
    print(f"{status:>4}  {name}")
    if not cond:
        sys.exit(1)


def main():
    hp = load_module()
    z = hp.Hyperring.z4h()
    check("z4h loads", z.n == 4 and z.zero == 0)
    check("set-valued cell 1*1", z.mul(1, 1) == [0, 1, 2, 3])
    check("set-valued cell 2*2", z.mul(2, 2) == [0])
    check("identities {1,3}", z.identities() == [1, 3])
    check("units {1,3}", z.units() == [1, 3])
    check("not strongly distributive", not z.strongly_distributive())

    flags = z.flags()
    check("local with nilpotents", flags["local"] and not flags["reduced"])

    check("ideal lattice", z.ideals() == [[0], [0, 2], [0, 1, 2, 3]])
    check("generated ideal <2>", z.generate_ideal([2]) == [0, 2])
    check("radical of zero", z.radical([0]) == [0, 2])
    check("d-set matches", z.d_set([0]) == [0, 2])
    check("colon (0 : 2)", z.colon([0], 2) == [0, 2])

    report = json.loads(z.classify([0, 2]))
    check(
        "maximal ideal classification",
        report["strongly_one_abs_primary"]
        and report["prime"]
        and not report["is_c_hyperideal"],
    )

    check("gamma collapses z4h", z.gamma_classes() == [[0, 1, 2, 3]])

    # Round trip through the canonical JSON document.
    again = hp.Hyperring.from_json(z.to_json())
    check("json round trip", again.to_json() == z.to_json())

    z6a = hp.Hyperring.template_zn(6, [2, 3])
    check("template has no identity", z6a.identities() == [])
    check("z6a ideal lattice size", len(z6a.ideals()) == 4)

    q = z6a.quotient([0, 3])
    check("quotient carrier", q.n == 3)

    prod = hp.Hyperring.template_zn(2, [1]).product(hp.Hyperring.template_zn(3, [1]))
    check("product carrier", prod.n == 6)

    tz = prod.triple_zeros([0])
    check("triple zeros found in Z2xZ3", (2, 1, 3) in tz or len(tz) > 0)

    names = hp.catalog_names()
    check("catalog size", len(names) == 64 and "z4h" in names)

    rep = json.loads(hp.run_theorems(mode="all", only=["T5.NOPROD"]))
    check("theorem suite runs", rep["mode"] == "all" and len(rep["results"]) == 64)
    outcomes = {r["ring"]: r["outcome"] for r in rep["results"]}
    check("no strongly ideal on products", outcomes["z4h x z4h"] == "pass")
    check("theorem vacuous off products", outcomes["z4h"] == "vacuous")

    print("smoke test passed")


if __name__ == "__main__":
    main()
