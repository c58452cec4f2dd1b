#!/usr/bin/env python3
"""Run the built-in verification suite and print a summary table.

Usage:
    python scripts/run_verify.py [--only CHECK] [--out results.json]
"""

import argparse
import sys
import time

sys.path.insert(0, "src")

from redspectra.cli import main as cli_main  # noqa: E402


def run():
    ap = argparse.ArgumentParser()
    ap.add_argument("--only", default=None)
    ap.add_argument("--out", default="verify_results.json")
    args = ap.parse_args()
    argv = ["verify", "--builtin", "--out", args.out]
    if args.only:
        argv += ["--only", args.only]
    t0 = time.time()
    rc = cli_main(argv)
    print(f"wrote {args.out} in {time.time() - t0:.1f}s (exit {rc})")
    return rc


if __name__ == "__main__":
    sys.exit(run())
