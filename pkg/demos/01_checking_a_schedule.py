"""
Checking a schedule and reading the explanations
=================================================

A small rostering day: two machines (say, nurses) and three jobs with
durations 1, 2 and 1.  We propose a lopsided schedule and let the report
tell us, sentence by sentence, what is wrong with it.
"""

from argsched import Instance, Schedule, compute_metrics, explain_schedule

inst = Instance(machines=2, processing_times=(1, 2, 1))

# Nurse 1 takes jobs 1 and 2, nurse 2 only job 3.
s = Schedule({(1, 1), (1, 2), (2, 3)})

metrics = compute_metrics(inst, s)
print("completion times:", metrics.completion)
print("makespan:", metrics.cmax)
print("critical pairs:", sorted(metrics.critical))
print()

report = explain_schedule(inst, s)
print("feasible: ", report.feasible)
print("efficient:", report.efficient)
print()

# Every defect comes with a witness in the argument graph and one rendered
# sentence.  Here the swap (jobs 2 and 3) and the single move (job 1) both
# shorten nurse 1's shift.
for x in report.explanations:
    print("-", x.text)
print()

# Good dimensions come with certificates instead: the schedule's own
# argument set, verified stable in that dimension's framework.
for cert in report.certificates:
    print("+", cert.text)
