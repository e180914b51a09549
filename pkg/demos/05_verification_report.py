"""Run every cross-check and summarise the report.

One family of rows fails: the interleaved-count flavor of the factorised
two-dimensional walk identity.  The mismatch is real and the rows are kept
in the report rather than hidden.
"""

from collections import Counter

from planar_count.oracle import verify_all

report = verify_all()
print(report.summary())
per_claim = Counter((row.claim, row.passed) for row in report.rows)
for claim in sorted({c for c, _ in per_claim}):
    print(f"  {claim:24s} pass={per_claim[(claim, True)]:3d} fail={per_claim[(claim, False)]:3d}")

for row in report.failures[:3]:
    print("failing:", row.params, {k: str(v) for k, v in row.values.items()})
