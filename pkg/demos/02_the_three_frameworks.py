"""
The three attack graphs behind the reports
==========================================

Every (machine, job) cell is an argument "machine i does job j".  The
feasibility graph makes same-job arguments fight; a proposed schedule
rewires it into its optimality graph; fixed decisions rewire it another
way.  Stable argument sets of each graph are exactly the schedules that
are good in that dimension.
"""

from argsched import (
    Instance,
    Schedule,
    build_feasibility_af,
    build_optimality_af,
    enumerate_stable,
    schedule_to_extension,
)

inst = Instance(machines=2, processing_times=(1, 1))

feas = build_feasibility_af(inst)
print("feasibility arguments:", " ".join(a.label for a in feas.sorted_args))
print("feasibility attacks:")
for a, b in sorted(feas.attacks):
    print(f"  {a.label} -> {b.label}")

# Stable extensions of the feasibility graph = feasible schedules.  Two
# machines, two jobs: four ways to place each job, four extensions.
print("stable extensions:")
for e in enumerate_stable(feas):
    print("  {" + ", ".join(a.label for a in sorted(e)) + "}")
print()

# A worse instance: job 2 is long, and we pile jobs 1 and 2 on machine 1.
busy = Instance(machines=2, processing_times=(1, 2, 1))
s = Schedule({(1, 1), (1, 2), (2, 3)})
base = build_feasibility_af(busy)
opt = build_optimality_af(busy, s)

# The rewiring is small and readable: one attack removed per improving
# move, one added per improving swap.
print("removed attacks (improving single moves):")
for a, b in sorted(base.attacks - opt.attacks):
    print(f"  {a.label} -> {b.label}")
print("added attacks (improving pair swaps):")
for a, b in sorted(opt.attacks - base.attacks):
    print(f"  {a.label} -> {b.label}")

# The proposed schedule's own argument set is no longer stable in its
# optimality graph; the added attack lands inside it.
e = schedule_to_extension(s)
print("proposal stable in optimality graph:",
      e in {frozenset(x) for x in enumerate_stable(opt)})
