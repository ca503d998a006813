"""Instance/schedule types and the diagnostic predicates."""
import pytest

from argsched import (
    BoundsError,
    FixedDecisions,
    Instance,
    Schedule,
    compute_metrics,
    is_feasible,
    pep_violations,
    satisfies_fixed,
    sep_violations,
)


def test_instance_validation():
    with pytest.raises(ValueError):
        Instance(0, (1,))
    with pytest.raises(ValueError):
        Instance(2, (1, 0))
    with pytest.raises(ValueError):
        Instance(2, (1, -3))
    inst = Instance(3, (2, 5))
    assert inst.jobs == 2
    assert list(inst.machine_ids) == [1, 2, 3]
    assert inst.processing_time(2) == 5


def test_instance_allows_empty_job_set():
    inst = Instance(2)
    assert inst.jobs == 0
    assert list(inst.job_ids) == []


def test_schedule_normalizes_pairs():
    s = Schedule([(1, 2), (2, 1), (1, 2)])
    assert s.assigned == frozenset({(1, 2), (2, 1)})
    assert (1, 2) in s
    assert (2, 2) not in s


def test_metrics_on_busy_schedule():
    inst = Instance(2, (1, 2, 1))
    s = Schedule({(1, 1), (1, 2), (2, 3)})
    m = compute_metrics(inst, s)
    assert m.completion == (3, 1)
    assert m.cmax == 3
    assert m.critical == frozenset({(1, 1), (1, 2)})
    assert m.completion_of(2) == 1


def test_metrics_on_empty_schedule():
    m = compute_metrics(Instance(2), Schedule())
    assert m.completion == (0, 0)
    assert m.cmax == 0
    assert m.critical == frozenset()


def test_metrics_three_machines():
    inst = Instance(3, (5, 3, 3, 2))
    m = compute_metrics(inst, Schedule({(1, 1), (2, 2), (2, 3), (3, 4)}))
    assert m.completion == (5, 6, 2)
    assert m.cmax == 6
    assert m.critical == frozenset({(2, 2), (2, 3)})


def test_metrics_total_on_infeasible_schedules():
    inst = Instance(2, (3, 1))
    m = compute_metrics(inst, Schedule({(1, 1), (2, 1)}))
    assert m.completion == (3, 3)
    assert m.critical == frozenset({(1, 1), (2, 1)})


def test_metrics_bounds_error():
    inst = Instance(2, (1,))
    with pytest.raises(BoundsError):
        compute_metrics(inst, Schedule({(3, 1)}))
    with pytest.raises(BoundsError):
        compute_metrics(inst, Schedule({(1, 2)}))
    with pytest.raises(BoundsError):
        compute_metrics(inst, Schedule({(0, 1)}))


def test_is_feasible():
    inst = Instance(2, (1, 1))
    assert is_feasible(inst, Schedule({(1, 1), (2, 2)}))
    assert not is_feasible(inst, Schedule({(1, 1), (2, 1)}))
    assert not is_feasible(inst, Schedule({(1, 1)}))
    assert is_feasible(Instance(2), Schedule())


def test_sep_violations_busy_schedule():
    inst = Instance(2, (1, 2, 1))
    assert sep_violations(inst, Schedule({(1, 1), (1, 2), (2, 3)})) == [(1, 2, 1)]


def test_sep_violations_single_machine():
    inst = Instance(1, (4, 2))
    assert sep_violations(inst, Schedule({(1, 1), (1, 2)})) == []


def test_sep_violations_sorted_pair():
    inst = Instance(2, (4, 1))
    assert sep_violations(inst, Schedule({(1, 1), (1, 2)})) == [(1, 2, 1), (1, 2, 2)]


def test_pep_violations_busy_schedule():
    inst = Instance(2, (1, 2, 1))
    assert pep_violations(inst, Schedule({(1, 1), (1, 2), (2, 3)})) == [(1, 2, 2, 3)]


def test_pep_violations_equal_durations():
    inst = Instance(2, (2, 2, 2))
    assert pep_violations(inst, Schedule({(1, 1), (1, 2), (2, 3)})) == []


def test_pep_violations_no_improving_swap():
    inst = Instance(2, (3, 1, 1))
    assert pep_violations(inst, Schedule({(1, 1), (2, 2), (2, 3)})) == []


def test_fixed_decisions_validation():
    with pytest.raises(ValueError):
        FixedDecisions({(1, 1)}, {(1, 1)})
    with pytest.raises(ValueError):
        FixedDecisions(set(), {(1, 1), (2, 1)})
    d = FixedDecisions({(2, 2)}, {(1, 1)})
    assert d.negative == frozenset({(2, 2)})
    assert d.positive == frozenset({(1, 1)})


def test_satisfies_fixed():
    d = FixedDecisions({(2, 2)}, {(1, 1)})
    assert satisfies_fixed(Schedule({(1, 1), (2, 2)}), d) == (frozenset({(2, 2)}), frozenset())
    assert satisfies_fixed(Schedule({(1, 2), (2, 1)}), d) == (frozenset(), frozenset({(1, 1)}))
    assert satisfies_fixed(Schedule({(1, 1), (1, 2)}), d) == (frozenset(), frozenset())
    empty = FixedDecisions()
    assert satisfies_fixed(Schedule({(1, 1)}), empty) == (frozenset(), frozenset())
