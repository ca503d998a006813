"""Explanation extraction, template rendering, and report assembly."""
import random

from argsched import (
    AFKind,
    Arg,
    Dimension,
    Explanation,
    FixedDecisions,
    Form,
    Instance,
    Schedule,
    attack_explanations,
    attacks_within,
    build_feasibility_af,
    build_fixed_decision_af,
    build_optimality_af,
    compute_metrics,
    explain_schedule,
    is_feasible,
    lpt_schedule,
    non_attack_explanations,
    render_text,
    schedule_to_extension,
    unattacked_by,
)

from conftest import desk_instances, map_schedules


BUSY_INSTANCE = Instance(2, (1, 2, 1))
BUSY_SCHEDULE = Schedule({(1, 1), (1, 2), (2, 3)})


def findings(explanations):
    return {(x.dimension.value, x.form.value, x.attacker, x.target) for x in explanations}


def literal_findings(inst, s, d=None):
    """Oracle: read the findings straight off the built graphs."""
    e = schedule_to_extension(s)
    feas = build_feasibility_af(inst)
    opt = build_optimality_af(inst, s)
    found = set()
    for a, b in attacks_within(feas, e):
        found.add(("feasibility", "attack", a, b))
    for a, b in attacks_within(opt, e):
        if (a, b) not in feas.attacks:
            found.add(("efficiency", "attack", a, b))
    for b in unattacked_by(feas, e):
        found.add(("feasibility", "non_attack", None, b))
    for b in unattacked_by(opt, e):
        if opt.targets_of[b] & e:
            found.add(("efficiency", "non_attack", None, b))
    if d is not None:
        fixed = build_fixed_decision_af(inst, d)
        for a, b in attacks_within(fixed, e):
            if (a, b) not in feas.attacks:
                found.add(("fixed", "attack", a, b))
        attacked = {b for _, b in fixed.attacks}
        for b in fixed.args:
            if b not in attacked and b not in e:
                found.add(("fixed", "non_attack", None, b))
    return found


def test_attack_explanations_doubled_job():
    inst = Instance(2, (1, 1))
    out = attack_explanations(inst, Schedule({(1, 1), (2, 1)}))
    assert findings(out) == {
        ("feasibility", "attack", Arg(1, 1), Arg(2, 1)),
        ("feasibility", "attack", Arg(2, 1), Arg(1, 1)),
    }


def test_attack_explanations_improving_swap():
    out = attack_explanations(BUSY_INSTANCE, BUSY_SCHEDULE)
    assert findings(out) == {("efficiency", "attack", Arg(2, 3), Arg(1, 2))}
    assert out[0].detail == {
        "critical_machine": 1, "critical_job": 2,
        "partner_machine": 2, "partner_job": 3,
    }


def test_attack_explanations_hit_negative_decision():
    d = FixedDecisions({(2, 2)}, {(1, 1)})
    out = attack_explanations(Instance(2, (1, 1)), Schedule({(1, 1), (2, 2)}), d)
    assert findings(out) == {("fixed", "attack", Arg(2, 2), Arg(2, 2))}


def test_non_attack_explanations_unscheduled_job():
    out = non_attack_explanations(Instance(2, (1, 1)), Schedule({(1, 1)}))
    assert findings(out) == {
        ("feasibility", "non_attack", None, Arg(1, 2)),
        ("feasibility", "non_attack", None, Arg(2, 2)),
    }


def test_non_attack_explanations_improving_move():
    out = non_attack_explanations(BUSY_INSTANCE, BUSY_SCHEDULE)
    assert findings(out) == {("efficiency", "non_attack", None, Arg(2, 1))}
    assert out[0].detail == {"job": 1, "from_machine": 1, "to_machine": 2}


def test_non_attack_explanations_missed_positive_decision():
    d = FixedDecisions({(2, 2)}, {(1, 1)})
    out = non_attack_explanations(Instance(2, (1, 1)), Schedule({(1, 2), (2, 1)}), d)
    assert findings(out) == {("fixed", "non_attack", None, Arg(1, 1))}


def test_template_attack_feasibility():
    x = Explanation(Dimension.FEASIBILITY, Form.ATTACK, target=Arg(2, 1), attacker=Arg(1, 1))
    assert render_text(x) == (
        "S is not feasible because attack a(1,1) -> a(2,1) shows that "
        "two machines 1 and 2 are assigned the same job 1.")


def test_template_attack_efficiency():
    x = Explanation(Dimension.EFFICIENCY, Form.ATTACK, target=Arg(1, 2), attacker=Arg(2, 3))
    assert render_text(x) == (
        "S is not efficient because attack a(2,3) -> a(1,2) shows that "
        "S can be improved by swapping jobs 3 and 2 between machines 2 and 1.")


def test_template_attack_fixed():
    x = Explanation(Dimension.FIXED, Form.ATTACK, target=Arg(2, 2), attacker=Arg(2, 2))
    assert render_text(x) == (
        "S violates fixed decisions because attack a(2,2) -> a(2,2) shows that "
        "job 2 is assigned to machine 2 contrary to the negative fixed decision (2, 2).")


def test_template_non_attack_feasibility():
    x = Explanation(Dimension.FEASIBILITY, Form.NON_ATTACK, target=Arg(1, 2))
    assert render_text(x) == (
        "S is not feasible because non-attack E -/-> a(1,2) shows that job 2 is not scheduled.")


def test_template_non_attack_efficiency():
    x = Explanation(Dimension.EFFICIENCY, Form.NON_ATTACK, target=Arg(2, 1))
    assert render_text(x) == (
        "S is not efficient because non-attack E -/-> a(2,1) shows that "
        "S can be improved by moving job 1 to machine 2.")


def test_template_non_attack_fixed():
    x = Explanation(Dimension.FIXED, Form.NON_ATTACK, target=Arg(1, 1))
    assert render_text(x) == (
        "S violates fixed decisions because non-attack E -/-> a(1,1) shows that "
        "job 1 is not assigned to machine 1 contrary to the positive fixed decision (1, 1).")


def test_text_property_matches_render():
    x = Explanation(Dimension.EFFICIENCY, Form.NON_ATTACK, target=Arg(2, 1))
    assert x.text == render_text(x)


def test_report_on_good_schedule():
    s = lpt_schedule(BUSY_INSTANCE)
    report = explain_schedule(BUSY_INSTANCE, s)
    assert report.feasible and report.efficient
    assert report.fixed_ok is None
    assert report.explanations == ()
    assert [c.kind for c in report.certificates] == [AFKind.FEASIBILITY, AFKind.OPTIMALITY]
    ext = "{a(1,2), a(2,1), a(2,3)}"
    assert report.certificates[0].text == \
        f"S is feasible: its extension {ext} is stable in the feasibility framework."
    assert report.certificates[1].text == \
        f"S is efficient: its extension {ext} is stable in the optimality framework."
    assert report.all_good()


def test_report_on_improvable_schedule():
    report = explain_schedule(BUSY_INSTANCE, BUSY_SCHEDULE)
    assert report.feasible
    assert not report.efficient
    assert findings(report.explanations) == {
        ("efficiency", "attack", Arg(2, 3), Arg(1, 2)),
        ("efficiency", "non_attack", None, Arg(2, 1)),
    }
    assert [c.kind for c in report.certificates] == [AFKind.FEASIBILITY]
    assert not report.all_good()


def test_report_fixed_dimension_only_when_decisions_supplied():
    d = FixedDecisions({(2, 2)}, {(1, 1)})
    inst = Instance(2, (1, 1))
    s = Schedule({(1, 2), (2, 1)})
    without = explain_schedule(inst, s)
    assert without.fixed_ok is None
    assert not without.for_dimension(Dimension.FIXED)
    with_d = explain_schedule(inst, s, d)
    assert with_d.fixed_ok is False
    assert findings(with_d.for_dimension(Dimension.FIXED)) == \
        {("fixed", "non_attack", None, Arg(1, 1))}
    assert not with_d.all_good()


def test_report_fixed_certificate_lists_decisions():
    d = FixedDecisions({(2, 2)}, {(1, 1)})
    inst = Instance(2, (1, 1))
    report = explain_schedule(inst, Schedule({(1, 1), (1, 2)}), d)
    assert report.fixed_ok is True
    cert = [c for c in report.certificates if c.kind is AFKind.FIXED]
    assert len(cert) == 1
    assert cert[0].satisfied_negative == ((2, 2),)
    assert cert[0].satisfied_positive == ((1, 1),)
    assert cert[0].text == (
        "S satisfies the fixed decisions: its extension {a(1,1), a(1,2)} is stable "
        "in the fixed decision framework. "
        "Respected negative decisions: (2, 2). "
        "Respected positive decisions: (1, 1).")


def test_report_on_empty_instance():
    report = explain_schedule(Instance(2), Schedule())
    assert report.feasible and report.efficient and report.fixed_ok is None
    assert report.explanations == ()
    assert report.all_good()


def test_explanations_sorted_dimension_major():
    inst = Instance(2, (5, 1, 1))
    s = Schedule({(1, 1), (2, 1), (1, 2)})  # job 1 doubled, job 3 dropped
    d = FixedDecisions({(1, 1)}, {(2, 3)})
    report = explain_schedule(inst, s, d)
    dims = [x.dimension for x in report.explanations]
    assert dims == sorted(dims, key=[Dimension.FEASIBILITY, Dimension.EFFICIENCY,
                                     Dimension.FIXED].index)
    for a, b in zip(report.explanations, report.explanations[1:]):
        if a.dimension == b.dimension:
            assert (a.form is b.form) or (a.form is Form.ATTACK)


def test_findings_match_graph_reading_on_feasible_schedules():
    rng = random.Random(11)
    for inst in desk_instances(seed=13, count=45, max_n=4):
        for s in map_schedules(inst):
            pairs = [(i, j) for i in inst.machine_ids for j in inst.job_ids]
            d = None
            if pairs and rng.random() < 0.7:
                neg = {p for p in pairs if rng.random() < 0.2}
                pos_pool = [p for p in pairs if p not in neg]
                pos = {}
                for i, j in pos_pool:
                    if rng.random() < 0.15 and j not in pos:
                        pos[j] = (i, j)
                d = FixedDecisions(neg, set(pos.values()))
            assert is_feasible(inst, s)
            produced = findings(
                attack_explanations(inst, s, d) + non_attack_explanations(inst, s, d))
            assert produced == literal_findings(inst, s, d)


def test_indicated_moves_and_swaps_improve_the_touched_machines():
    for inst in desk_instances(seed=29, count=30, max_n=5):
        for s in map_schedules(inst):
            before = compute_metrics(inst, s)
            for x in attack_explanations(inst, s):
                if x.dimension is not Dimension.EFFICIENCY:
                    continue
                i, j = x.target
                k, l = x.attacker
                edited = Schedule((s.assigned - {(i, j), (k, l)}) | {(k, j), (i, l)})
                after = compute_metrics(inst, edited)
                assert max(after.completion_of(i), after.completion_of(k)) < \
                    max(before.completion_of(i), before.completion_of(k))
            for x in non_attack_explanations(inst, s):
                if x.dimension is not Dimension.EFFICIENCY:
                    continue
                k, j = x.target
                i = x.detail["from_machine"]
                edited = Schedule((s.assigned - {(i, j)}) | {(k, j)})
                after = compute_metrics(inst, edited)
                assert after.completion_of(i) < before.completion_of(i)
                assert max(after.completion_of(i), after.completion_of(k)) < \
                    max(before.completion_of(i), before.completion_of(k))
