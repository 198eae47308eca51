"""Run the full identity registry and read a diagnostic's report.

Every claimed identity lives in one registry entry that computes its
two sides by declared, distinct routes. Entries for statements that
only hold under a corrected reading run in diagnostic mode: mismatches
are flagged with an explanatory note instead of failing the run.
"""

import json

from rbpa import identities

summary = identities.run_all("quick")
print(f"profile:     {summary.profile}")
print(f"identities:  {summary.identities}")
print(f"checks:      {summary.checks}")
print(f"passed:      {summary.passed}")
print(f"failed:      {summary.failed}")
print(f"flagged:     {summary.flagged}  (diagnostic mismatches, explained)")
print(f"exit code:   {summary.exit_code}")

print()
print("identities with flagged checks:")
flagged = sorted({r.identity for r in summary.diagnostics})
for ident in flagged:
    spec = identities.REGISTRY.get(ident)
    print(f"  {ident}: {spec.anchor}")

print()
print("one diagnostic in detail:")
report = identities.run_identity("UREL", overrides={"b": [0], "n": [2]})[0]
print(json.dumps(report.as_dict(), indent=2, sort_keys=True))

print()
print("a passing identity, spot run with custom ranges:")
reports = identities.run_identity("EQ8", overrides={"b": [1], "n": [1, 2, 3]})
for r in reports:
    print(f"  {r.identity} {r.params}: lhs = rhs = {r.lhs} -> {r.passed}")
