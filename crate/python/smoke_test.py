#!/usr/bin/env python3
"""Smoke test for the weightgrowth Python extension.

Locates the built cdylib (release preferred), exposes it under the module
name and exercises the main surface. Build it first with:

    cargo build -p weightgrowth-py --release --features extension-module
"""

import json
import math
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / "release" / "libweightgrowth_py.so",
        ROOT / "target" / "debug" / "libweightgrowth_py.so",
        ROOT / "target" / "release" / "libweightgrowth_py.dylib",
        ROOT / "target" / "debug" / "libweightgrowth_py.dylib",
    ]
    built = next((c for c in candidates if c.exists()), None)
    if built is None:
        sys.exit(
            "extension not built; run: "
            "cargo build -p weightgrowth-py --release --features extension-module"
        )
    stage = pathlib.Path(tempfile.mkdtemp(prefix="weightgrowth_py_"))
    target = stage / ("weightgrowth_py" + (".so" if built.suffix == ".so" else ".so"))
    shutil.copyfile(built, target)
    sys.path.insert(0, str(stage))
    import weightgrowth_py

    return weightgrowth_py


def main():
    wg = load_module()

    # associated weight function of the factorial sequence at t = e
    g1 = wg.WeightSequence.gevrey(1.0, 100)
    got = g1.omega(math.e)
    expect = 2.0 - math.log(2.0)
    assert abs(got - expect) < 1e-9, (got, expect)
    assert abs(g1.omega_bruteforce(math.e) - got) < 1e-9
    assert g1.flags() == (True, True, True)
    assert abs(g1.recover_log_m(10) - sum(math.log(k) for k in range(1, 11))) < 1e-6

    # condition verdicts as JSON
    g2 = wg.WeightSequence.gevrey(2.0, 200)
    mg = json.loads(g2.check("mg"))
    assert mg["status"] == "holds", mg
    assert abs(math.exp(mg["witnesses"]["log_sup_mu_ratio"]) - 4.0) < 1e-6

    cex = wg.WeightSequence.beta3_counterexample(5)
    beta3 = json.loads(cex.check("beta3"))
    omega1 = json.loads(cex.check("omega1_seq"))
    assert beta3["status"] == "fails", beta3
    assert omega1["status"] == "holds" and omega1["witnesses"]["L"] == 2.0, omega1

    # theorem verification
    report = json.loads(cex.verify("omega1charact"))
    assert report["consistency"] == "consistent", report

    # matrix export: row 1 is the base sequence
    mx = json.loads(g1.matrix_json([1.0, 2.0], 40))
    row1 = mx["rows"]["1"]
    assert abs(row1[5] - sum(math.log(k) for k in range(1, 6))) < 1e-6

    # function side: the t log t weight separates the subadditivity flavors
    tl = wg.WeightFunction.closed_form("t_log_t")
    assert abs(tl.eval(2.0) - 2.0 * math.log(2.0)) < 1e-12
    a1 = json.loads(tl.check("alpha1_fn"))
    a0 = json.loads(tl.check("alpha0_fn"))
    assert a1["status"] == "holds" and a0["status"] == "fails", (a1, a0)
    gamma, sentinel = tl.gamma_index()
    assert not sentinel and 0.75 <= gamma <= 1.25, gamma

    # conjugate pinned value for the linear weight
    lin = wg.WeightFunction.closed_form("linear")
    assert abs(lin.phi_star(2.0) - (2.0 * math.log(2.0) - 1.0)) < 1e-9

    # deterministic corpus sweep with no violations
    summary = json.loads(wg.corpus_sweep(20, "generic", ["chain"], 7, 150))
    assert summary["violated"] == 0, summary
    assert summary["subjects"] == 20

    print("smoke test: PASS")


if __name__ == "__main__":
    main()
