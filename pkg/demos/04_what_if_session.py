"""
A what-if session, end to end
=============================

The session layer is what the HTTP service exposes: create a session
around a solver baseline, try proposals against it, inject a disturbance,
and export the whole conversation as one JSON document.
"""

import json

from argsched import (
    Instance,
    Schedule,
    apply_disturbance,
    create_session,
    export_session,
    get_af,
    import_session,
    propose,
)

inst = Instance(machines=2, processing_times=(1, 2, 1))

# The baseline comes from LPT (use solver="exact" for the budgeted search).
session = create_session(inst)
print("baseline:", sorted(session.baseline.assigned))

# What if nurse 1 took jobs 1 and 2?  The report says that is worse.
report = propose(session, schedule=Schedule({(1, 1), (1, 2), (2, 3)}))
print("proposal efficient:", report.efficient)
for x in report.explanations:
    print("-", x.text)
print()

# The optimality graph of the live proposal, ready for a UI graph panel.
doc = get_af(session, "optimality")
print("optimality graph:", len(doc["arguments"]), "arguments,",
      len(doc["attacks"]), "attacks")

# Machine 1 calls in sick: every cell of its row becomes a ban, and the
# proposal now violates the decisions too.
report = apply_disturbance(session, "machine_ill", 1)
print("after disturbance, fixed decisions ok:", report.fixed_ok)
print()

# The whole session round-trips through JSON.
doc = export_session(session)
twin = import_session(json.loads(json.dumps(doc)))
print("export/import identical:", export_session(twin) == doc)
print("history:", [h.event for h in twin.history])
