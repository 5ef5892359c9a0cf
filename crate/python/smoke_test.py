#!/usr/bin/env python3
"""Smoke test for the psd3py extension module.

Builds the cdylib with cargo if needed, copies it next to this script as an
importable module, and exercises the main surface: family constructors,
exact evaluation, certification, grid refutation, zero counts, lift kernel
verification, classification, and the two explicit higher-degree kernels.

Run from anywhere:  python3 python/smoke_test.py
"""

import json
import pathlib
import shutil
import subprocess
import sys

HERE = pathlib.Path(__file__).resolve().parent
ROOT = HERE.parent


def ensure_module() -> None:
    target = ROOT / "target" / "release" / "libpsd3py.so"
    if not target.exists():
        subprocess.run(
            ["cargo", "build", "--release", "-p", "psd3-py"], cwd=ROOT, check=True
        )
    dest = HERE / "psd3py.so"
    if not dest.exists() or target.stat().st_mtime > dest.stat().st_mtime:
        shutil.copy2(target, dest)
    sys.path.insert(0, str(HERE))


def main() -> int:
    ensure_module()
    import psd3py

    checks = 0

    def ok(cond, label):
        nonlocal checks
        checks += 1
        if not cond:
            print(f"FAIL: {label}")
            sys.exit(1)
        print(f"ok: {label}")

    # family constructors and exact evaluation
    f0 = psd3py.make_f_pqr("0", "0", "0")
    ok(f0.eval("1", "1", "1") == "0", "f0 vanishes at (1,1,1)")
    ok(f0.eval("1", "2", "3") == "5", "f0 at (1,2,3) equals 5")

    g = psd3py.make_g_pq("1/4", "1/4")
    ok(g.eval("0", "1", "1/4") == "0", "g vanishes at (0,1,p)")

    h = psd3py.make_h_pq("1", "1")
    ok(h.eval("1", "1", "1") == "2", "h kernel normalization")

    # JSON round trip
    back = psd3py.Form.from_json(h.to_json())
    ok(back == h, "form JSON round trip")

    # derivative and square substitution
    fx = f0.partial("x", 1)
    ok(fx.degree == 2, "partial drops the degree")
    lifted = g.square_substitute()
    ok(lifted.is_even() and lifted.degree == 6, "square substitution is even")

    # certification and its grid cross-oracle
    out = psd3py.certify_g("1/4", "1/4")
    ok(out["verdict"] == "certified", "g certified inside the region")
    out = psd3py.certify_g("3/5", "3/5")
    ok(out["verdict"] == "refuted", "g refuted outside the region")
    ok(psd3py.refute_by_grid(psd3py.make_g_pq("3/5", "3/5"), 3) is not None,
       "grid finds the refutation")
    ok(psd3py.refute_by_grid(g, 3) is None, "grid clean on a certified member")
    out = psd3py.certify_f("1", "1", "1")
    ok(out["verdict"] == "certified", "f certified")
    out = psd3py.certify_h("2", "0")
    ok(out["verdict"] == "certified", "h certified at a boundary parameter")

    # zero counts
    total, breakdown = psd3py.count_n(psd3py.make_f_pqr("1", "2", "3"))
    ok(total == 10 and breakdown == [4, 2, 2, 2], "N(f) = 4+2+2+2")
    total, breakdown = psd3py.count_n(h)
    ok(total == 10 and breakdown == [6, 2, 2], "N(h) = 6+2+2")

    # lift kernel verification
    v = psd3py.lift_verify(psd3py.make_f_pqr("1", "2", "3"))
    ok(v["kernel_dim"] == 1 and v["matched"], "lift kernel is the lifted form")

    # classification round trip
    r = psd3py.classify(psd3py.make_g_pq("1/4", "1/3"))
    ok(r["verdict"] == "case3_g" and r["params"] == ["1/4", "1/3"], "classify g member")
    r = psd3py.classify(h)
    ok(r["verdict"] == "case4_h", "classify h member")

    # explicit higher-degree kernels
    r = psd3py.verify_octic()
    ok(r["kernel_dim"] == 1 and r["matched"] and r["rank"] == 44, "octic kernel")
    r = psd3py.verify_decic()
    ok(r["kernel_dim"] == 1 and r["matched"] and r["rank"] == 65, "decic kernel")

    # exact identity suite
    failures = psd3py.verify_identities(seed=7, tuples=5)
    ok(failures == [], "identity suite clean")

    print(f"\nsmoke test passed ({checks} checks)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
