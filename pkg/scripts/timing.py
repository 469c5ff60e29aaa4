"""Time every verification suite a few times and report the median.

    python scripts/timing.py --repeat 3
"""

import argparse
import statistics
import time

from ramanujan_elliptic.suites import SUITES, SuiteOptions, run_suite


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--order", type=int, default=None, help="override the series order for exact suites")
    args = p.parse_args(argv)

    opts = SuiteOptions(order=args.order)
    for name in SUITES:
        times = []
        ok = True
        for _ in range(args.repeat):
            t0 = time.perf_counter()
            ok = all(r.passed for r in run_suite(name, opts)) and ok
            times.append(time.perf_counter() - t0)
        print(f"{name:18s} {'ok' if ok else 'FAILED':6s} median {statistics.median(times) * 1000:9.1f} ms")


if __name__ == "__main__":
    main()
