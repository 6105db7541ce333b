#!/usr/bin/env python3
"""Run the whole law catalogue and report per-law timing.

This is the desk-scale experiment behind a release: every law at full case
count, with a wall-clock column to keep an eye on the expensive ones.
"""

import argparse
import sys
import time

from nes import GenConfig, PROPERTY_NAMES, parse_atom, run_property


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-size", type=int, default=20)
    ap.add_argument("--pool", default="x,y,z,w,v")
    args = ap.parse_args()

    pool = tuple(parse_atom(p.strip()) for p in args.pool.split(","))
    config = GenConfig(
        max_size=args.max_size, atom_pool=pool, seed=args.seed, cases=args.cases
    )

    failed = 0
    total = 0.0
    for name in PROPERTY_NAMES:
        start = time.perf_counter()
        report = run_property(name, config)
        elapsed = time.perf_counter() - start
        total += elapsed
        status = "ok  " if report.failures == 0 else "FAIL"
        print(
            f"{status} {name:<26} cases={report.cases_run} "
            f"failures={report.failures} seed={report.seed} [{elapsed:6.2f}s]"
        )
        if report.counterexample:
            for key, value in report.counterexample:
                print(f"       {key} = {value}")
        if report.failures:
            failed += 1
    print(f"\n{len(PROPERTY_NAMES) - failed}/{len(PROPERTY_NAMES)} laws passed "
          f"in {total:.1f}s")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
