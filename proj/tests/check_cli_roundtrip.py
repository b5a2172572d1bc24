#!/usr/bin/env python3
"""End-to-end CLI checks: deterministic reports, circuits-document
round-trip, and exit codes. Usage: check_cli_roundtrip.py <bcx> <datadir>."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def run(args, expect=0):
    proc = subprocess.run(args, capture_output=True, text=True)
    if proc.returncode != expect:
        sys.exit(f"FAIL: {' '.join(map(str, args))} exited {proc.returncode} (expected {expect})\n"
                 f"stderr: {proc.stderr}")
    return proc


def load_stripped(path):
    doc = json.loads(Path(path).read_text())
    doc.pop("timing", None)
    return doc


def main():
    bcx, datadir = sys.argv[1], Path(sys.argv[2])
    k23 = datadir / "k23.graph"
    with tempfile.TemporaryDirectory() as tmp:
        tmp = Path(tmp)
        r1, r2, r3 = tmp / "r1.json", tmp / "r2.json", tmp / "r3.json"
        emitted = tmp / "emitted.json"

        # Identical inputs and flags give byte-identical reports modulo timing.
        run([bcx, "invariants", str(k23), "--out", str(r1), "--emit-circuits", str(emitted)])
        run([bcx, "invariants", str(k23), "--out", str(r3)])
        a, b = load_stripped(r1), load_stripped(r3)
        if json.dumps(a) != json.dumps(b):
            sys.exit("FAIL: reports for identical inputs differ outside the timing section")

        # The emitted circuits document re-parses to the same invariants.
        run([bcx, "invariants", str(emitted), "--out", str(r2)])
        c = load_stripped(r2)
        for key in ("matroid", "invariants", "order"):
            if a[key] != c[key]:
                sys.exit(f"FAIL: circuits-document round trip changed '{key}'")

        # The worked-example values travel through the tool unchanged.
        inv = a["invariants"]
        expectations = {
            "h_vector": [1, 2, 3, 1],
            "complementary_h": [0, 1],
            "g_vector": [1, 1],
            "f_vector": [1, 6, 15, 17, 7],
            "characteristic": [7, -17, 15, -6, 1],
        }
        for key, want in expectations.items():
            if inv[key] != want:
                sys.exit(f"FAIL: {key} = {inv[key]}, expected {want}")

        # Exit codes: a failing predicate gives 1, usage errors give 2.
        run([bcx, "check", str(k23), "--predicates", "symmetric"], expect=1)
        run([bcx, "check", str(k23), "--predicates", "not-a-predicate"], expect=2)
        run([bcx, "check", str(tmp / "missing.graph")], expect=2)
        run([bcx, "invariants", str(k23), "--order", "6,5,4,3,2,1"])

    print("cli round-trip checks pass")


if __name__ == "__main__":
    main()
