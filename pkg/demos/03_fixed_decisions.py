"""
Fixed decisions: bans, pins, and their graph
============================================

A negative decision bans a cell (nurse 2 must not do job 2), a positive
decision pins one (nurse 1 must do job 1).  In the graph a ban becomes a
self-attack and a pin loses all incoming attacks, so exactly the
decision-respecting feasible schedules stay stable.
"""

from argsched import (
    FixedDecisions,
    Instance,
    Schedule,
    build_fixed_decision_af,
    enumerate_stable,
    explain_schedule,
)

inst = Instance(machines=2, processing_times=(1, 1))
d = FixedDecisions(negative={(2, 2)}, positive={(1, 1)})

af = build_fixed_decision_af(inst, d)
print("attacks with the decisions wired in:")
for a, b in sorted(af.attacks):
    marker = "  (self-attack = ban)" if a == b else ""
    print(f"  {a.label} -> {b.label}{marker}")

# Only one schedule survives both decisions here.
print("stable extensions:")
for e in enumerate_stable(af):
    print("  {" + ", ".join(a.label for a in sorted(e)) + "}")
print()

# A schedule that defies the ban gets the self-attack sentence.
banned = explain_schedule(inst, Schedule({(1, 1), (2, 2)}), d)
for x in banned.for_dimension("fixed"):
    print("-", x.text)

# One that merely ignores the pin gets the non-attack sentence.
missed = explain_schedule(inst, Schedule({(1, 2), (2, 1)}), d)
for x in missed.for_dimension("fixed"):
    print("-", x.text)

# And the compliant schedule earns a certificate listing what it respected.
good = explain_schedule(inst, Schedule({(1, 1), (1, 2)}), d)
for cert in good.certificates:
    print("+", cert.text)
