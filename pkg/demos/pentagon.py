"""Run the five-flip cycle on the pentagon and check it acts as the identity."""

import sys

from qtrace.mutation import verify_consistency

n = int(sys.argv[1]) if len(sys.argv) > 1 else 2
report = verify_consistency("P5", n)
for case in report.cases:
    print(f"{case.key}: {'ok' if case.ok else 'FAILED'} ({len(case.steps)} mutation steps)")
print("verdict:", report.verdict)
