"""Run a small conjecture sweep and emit the JSON verdict report."""

import sys

from ehall import checks

limit = int(sys.argv[1]) if len(sys.argv) > 1 else 4
names = ["schur-seed", "incl-e", "epos-h", "dim-delta", "qt1-formula"]
verdicts = checks.run_all(limit=limit, names=names)
print(checks.report_json(verdicts))
print(
    f"\n{len(verdicts)} verdicts; exit code {checks.exit_code(verdicts)}",
    file=sys.stderr,
)
sys.exit(checks.exit_code(verdicts))
