"""Run every verification suite and write a JSON report.

    python3 scripts/run_verification.py [--max-n N] [--out report.json]
"""

import argparse
import json
import sys

from sylvmon.verify import VerifyConfig, run_all


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=None)
    ap.add_argument("--out", default="verification_report.json")
    args = ap.parse_args()
    results = run_all(args.max_n, VerifyConfig())
    for r in results:
        print(r.line())
    with open(args.out, "w") as fh:
        json.dump([r.to_json() for r in results], fh, indent=2, sort_keys=True)
    print(f"report written to {args.out}")
    return 0 if all(r.ok for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
