#!/usr/bin/env python3
"""Smoke test for the normforge_py extension module.

Builds the cdylib if needed, stages it under an importable name, and
exercises each exposed surface against known exact values.

Usage: python3 python/smoke_test.py [--release]
"""

import json
import shutil
import subprocess
import sys
import sysconfig
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_and_stage(release: bool) -> Path:
    profile = "release" if release else "debug"
    cmd = ["cargo", "build", "-p", "normforge-py"]
    if release:
        cmd.append("--release")
    subprocess.run(cmd, cwd=ROOT, check=True)
    built = ROOT / "target" / profile / "libnormforge_py.so"
    if not built.exists():
        sys.exit(f"expected {built} after the build")
    stage = Path(tempfile.mkdtemp(prefix="normforge_py_"))
    suffix = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy2(built, stage / f"normforge_py{suffix}")
    return stage


def main() -> None:
    stage = build_and_stage("--release" in sys.argv[1:])
    sys.path.insert(0, str(stage))
    import normforge_py as nf

    # Counting and exclusion norms.
    assert nf.binomial(10, 3) == 120
    assert nf.binomial(3, 7) == 0
    assert nf.norm0(4, [[0, 1], [2, 3]]) == 2
    assert nf.norm1(2, 4, [0, 1]) == "2/3"
    assert nf.norm1(2, 4, []) == "2/5"

    lo, hi = nf.factorial_bounds(5)
    assert lo <= 120.0 <= hi

    # Subset norm with witness, bounds and the refutation.
    value, witness = nf.norm2(1, 4, [[0, 1], [2, 3]])
    assert (value, witness) == (2, [0, 2])
    lower, upper = nf.norm2_bounds(1, 4, 1)
    assert (lower, upper) == ("1/3", "1/2")
    norm, ratio, product, threshold, refuted = nf.refute_baju(1, 8, 2)
    assert (norm, ratio, product, threshold) == (2, "11/14", "3/14", "1/4")
    assert refuted

    # Coloring norm: triangle vs 4-cycle, recursive oracle, k-gons.
    value, partition = nf.norm3(3, [[0, 1], [1, 2], [0, 2]])
    assert value == 2 and len(partition) == 3
    value, partition = nf.norm3(4, [[0, 1], [1, 2], [2, 3], [3, 0]])
    assert value == 1 and partition == [[0, 2], [1, 3]]
    assert nf.norm3_recursive(4, [[0, 1], [1, 2], [2, 3], [3, 0]]) == 1
    assert nf.splitting(3, [[0, 1], [1, 2], [0, 2]])[0] == 3
    assert nf.kgon(6, 3) == (3, 3, True)
    assert nf.kgon(4, 2) == (4, 3, False)

    # Hall norm, delta/dset round trip, hn versus HN.
    assert nf.norm4(3, ["000", "100", "010", "001"]) == 2
    d = nf.hall_delta(4, ["0000"])
    assert d == [{0: 1}, {1: 1}, {2: 1}, {3: 1}]
    assert nf.hall_hn(4, d) == 2
    back = nf.hall_dset(4, d)
    assert back == ["0000"]
    assert nf.hall_hn(4, [{0: 0, 1: 0, 2: 0, 3: 0}]) == 5
    value, refined = nf.hall_HN(4, [{0: 0, 1: 1}, {2: 0}, {3: 0}])
    assert value == 2 and all(len(p) == 1 for p in refined)

    # Profile maps.
    assert nf.profile({0: 1, 1: 0, 2: 1}) == [0, 2]
    cases, violations = nf.pstar_scan(2, 65536, 1)
    assert violations > 0

    # Classes.
    fam = nf.Family(4, [[2, 3], [0, 1]])
    assert fam.counting_norm() == 2
    assert len(fam.restrict([0, 1])) == 1
    assert json.loads(fam.to_json())["sets"] == [[0, 1], [2, 3]]
    assert nf.Family.from_json(fam.to_json()).members() == fam.members()

    fs = nf.FunctionSet(3, ["000", "111"])
    assert fs.hall_norm() == 2
    assert {0: 1, 1: 0} in fs.delta()
    everything = nf.FunctionSet(3, [format(i, "03b")[::-1] for i in range(8)])
    assert everything.hall_norm() == 4

    # Suites and the divergence report.
    names = nf.suites()
    assert "hall.thm6.30" in names and "coloring.kgon" in names
    report = json.loads(nf.verify("norm2.sandwich", seed=1, budget=50))
    assert report["violations"] == []
    assert report["cases"] > 0
    findings = json.loads(nf.discrepancies())
    assert len(findings["discrepancies"]) == 5

    print("normforge_py smoke test: all checks passed")


if __name__ == "__main__":
    main()
