"""JSON document conversion for every value that crosses an API boundary.

Documents are plain dicts and lists, ready for json.dumps.  Loading is
strict about required fields, value types, duplicate pairs, and 1-based
indexing; unknown keys are ignored so documents can grow compatibly.
Errors always name the offending field.
"""
from __future__ import annotations

from typing import Any, Mapping, Sequence

from .af import AFKind, ArgFramework
from .explain import Certificate, Explanation, ExplanationReport
from .scheduling import FixedDecisions, Instance, Pair, Schedule


def _fail(what: str, name: str, problem: str) -> None:
    raise ValueError(f"{what}: field '{name}' {problem}")


def _get(doc: Any, what: str, name: str) -> Any:
    if not isinstance(doc, Mapping):
        raise ValueError(f"{what}: expected a JSON object, got {type(doc).__name__}")
    if name not in doc:
        _fail(what, name, "is missing")
    return doc[name]


def _as_int(value: Any, what: str, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        _fail(what, name, f"must be an integer, got {value!r}")
    return value


def _as_pair_list(value: Any, what: str, name: str) -> list[Pair]:
    if not isinstance(value, Sequence) or isinstance(value, (str, bytes)):
        _fail(what, name, "must be a list of [machine, job] pairs")
    pairs: list[Pair] = []
    seen: set[Pair] = set()
    for entry in value:
        if not isinstance(entry, Sequence) or isinstance(entry, (str, bytes)) or len(entry) != 2:
            _fail(what, name, f"must contain [machine, job] pairs, got {entry!r}")
        pair = (_as_int(entry[0], what, name), _as_int(entry[1], what, name))
        if pair in seen:
            _fail(what, name, f"contains duplicate pair {list(pair)}")
        seen.add(pair)
        pairs.append(pair)
    return pairs


def instance_to_doc(inst: Instance) -> dict[str, Any]:
    return {"machines": inst.machines, "processing_times": list(inst.processing_times)}


def instance_from_doc(doc: Any) -> Instance:
    machines = _as_int(_get(doc, "instance", "machines"), "instance", "machines")
    raw = _get(doc, "instance", "processing_times")
    if not isinstance(raw, Sequence) or isinstance(raw, (str, bytes)):
        _fail("instance", "processing_times", "must be a list of integers")
    times = tuple(_as_int(p, "instance", "processing_times") for p in raw)
    try:
        return Instance(machines, times)
    except ValueError as exc:
        raise ValueError(f"instance: {exc}") from None


def schedule_to_doc(s: Schedule) -> dict[str, Any]:
    return {"assignments": [list(pair) for pair in sorted(s.assigned)]}


def schedule_from_doc(doc: Any) -> Schedule:
    return Schedule(_as_pair_list(_get(doc, "schedule", "assignments"), "schedule", "assignments"))


def decisions_to_doc(d: FixedDecisions) -> dict[str, Any]:
    return {
        "negative": [list(pair) for pair in sorted(d.negative)],
        "positive": [list(pair) for pair in sorted(d.positive)],
    }


def decisions_from_doc(doc: Any) -> FixedDecisions:
    negative = _as_pair_list(_get(doc, "decisions", "negative"), "decisions", "negative")
    positive = _as_pair_list(_get(doc, "decisions", "positive"), "decisions", "positive")
    try:
        return FixedDecisions(frozenset(negative), frozenset(positive))
    except ValueError as exc:
        raise ValueError(f"decisions: {exc}") from None


def af_to_doc(af: ArgFramework) -> dict[str, Any]:
    return {
        "kind": af.kind.value,
        "arguments": [[a.machine, a.job] for a in sorted(af.args)],
        "attacks": [[[a.machine, a.job], [b.machine, b.job]] for a, b in sorted(af.attacks)],
    }


def explanation_to_doc(x: Explanation) -> dict[str, Any]:
    return {
        "dimension": x.dimension.value,
        "form": x.form.value,
        "attacker": None if x.attacker is None else [x.attacker.machine, x.attacker.job],
        "target": [x.target.machine, x.target.job],
        "detail": dict(x.detail),
        "text": x.text,
    }


def certificate_to_doc(c: Certificate) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "kind": c.kind.value,
        "extension": [[a.machine, a.job] for a in sorted(c.extension)],
        "text": c.text,
    }
    if c.kind is AFKind.FIXED:
        doc["satisfied_negative"] = [list(pair) for pair in c.satisfied_negative]
        doc["satisfied_positive"] = [list(pair) for pair in c.satisfied_positive]
    return doc


def report_to_doc(report: ExplanationReport) -> dict[str, Any]:
    doc: dict[str, Any] = {"feasible": report.feasible, "efficient": report.efficient}
    if report.fixed_ok is not None:
        doc["fixed_ok"] = report.fixed_ok
    doc["explanations"] = [explanation_to_doc(x) for x in report.explanations]
    doc["certificates"] = [certificate_to_doc(c) for c in report.certificates]
    return doc
