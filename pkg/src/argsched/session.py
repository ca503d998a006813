"""What-if sessions: a solver baseline, user proposals and decisions, the
reports they produce, and JSON persistence for all of it."""
from __future__ import annotations

import datetime as dt
import json
import re
import threading
import uuid
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from . import jsonio
from .af import AFKind
from .builders import build_feasibility_af, build_fixed_decision_af, build_optimality_af
from .errors import BoundsError
from .explain import ExplanationReport, explain_schedule
from .scheduling import FixedDecisions, Instance, Schedule, check_pairs, is_feasible
from .solvers import exact_optimal, lpt_schedule

SOLVERS = ("lpt", "exact")
DISTURBANCES = ("machine_ill", "job_cancelled")

_ID_PATTERN = re.compile(r"[A-Za-z0-9_-]{1,64}")


@dataclass(frozen=True)
class HistoryEntry:
    at: str
    event: str
    summary: dict[str, Any]


@dataclass
class Session:
    """One what-if conversation: instance, solver baseline, live proposal.

    History only ever grows; each evaluation appends one entry.
    """

    id: str
    instance: Instance
    solver: str
    baseline: Schedule
    proposal: Schedule | None = None
    decisions: FixedDecisions | None = None
    history: list[HistoryEntry] = field(default_factory=list)

    @property
    def current_schedule(self) -> Schedule:
        return self.baseline if self.proposal is None else self.proposal


def _now() -> str:
    return dt.datetime.now(dt.timezone.utc).isoformat(timespec="seconds")


def _summarize(report: ExplanationReport) -> dict[str, Any]:
    return {
        "feasible": report.feasible,
        "efficient": report.efficient,
        "fixed_ok": report.fixed_ok,
        "explanations": len(report.explanations),
    }


def create_session(instance: Instance, solver: str = "lpt", budget: int | None = None) -> Session:
    """New session around a solver baseline (lpt default, exact within budget)."""
    if solver not in SOLVERS:
        raise ValueError(f"unknown solver '{solver}'; expected one of: {', '.join(SOLVERS)}")
    if solver == "exact":
        baseline, _ = exact_optimal(instance, budget)
    else:
        baseline = lpt_schedule(instance)
    session = Session(uuid.uuid4().hex, instance, solver, baseline)
    report = explain_schedule(instance, baseline)
    session.history.append(HistoryEntry(_now(), "created", _summarize(report)))
    return session


def propose(
    session: Session,
    schedule: Schedule | None = None,
    decisions: FixedDecisions | None = None,
) -> ExplanationReport:
    """Store whatever was supplied, evaluate the current state, log it.

    With no proposal stored the baseline is evaluated.  Identical calls
    yield identical reports and one history entry each.
    """
    if schedule is not None:
        check_pairs(session.instance, schedule.assigned, "schedule")
    if decisions is not None:
        check_pairs(session.instance, decisions.negative, "negative decision")
        check_pairs(session.instance, decisions.positive, "positive decision")
    if schedule is not None:
        session.proposal = schedule
    if decisions is not None:
        session.decisions = decisions
    report = explain_schedule(session.instance, session.current_schedule, session.decisions)
    session.history.append(HistoryEntry(_now(), "propose", _summarize(report)))
    return report


def apply_disturbance(session: Session, kind: str, index: int) -> ExplanationReport:
    """Expand a disturbance into negative decisions and re-evaluate.

    machine_ill bans a whole machine row, job_cancelled a whole job column.
    The expansion merges into existing decisions; a clash with a positive
    decision surfaces as the usual disjointness error.
    """
    inst = session.instance
    if kind == "machine_ill":
        if index not in inst.machine_ids:
            raise BoundsError(f"machine {index} out of range 1..{inst.machines}")
        banned = {(index, j) for j in inst.job_ids}
    elif kind == "job_cancelled":
        if index not in inst.job_ids:
            raise BoundsError(f"job {index} out of range 1..{inst.jobs}")
        banned = {(i, index) for i in inst.machine_ids}
    else:
        raise ValueError(f"unknown disturbance '{kind}'; expected one of: {', '.join(DISTURBANCES)}")
    current = session.decisions if session.decisions is not None else FixedDecisions()
    merged = FixedDecisions(current.negative | banned, current.positive)
    session.decisions = merged
    report = explain_schedule(inst, session.current_schedule, merged)
    session.history.append(HistoryEntry(_now(), f"disturbance:{kind}", _summarize(report)))
    return report


def get_af(session: Session, kind: AFKind | str) -> dict[str, Any]:
    """The requested framework as a JSON-ready doc (for graph panels)."""
    try:
        resolved = AFKind(kind)
    except ValueError:
        raise ValueError(
            f"unknown AF kind '{kind}'; expected feasibility, optimality or fixed") from None
    if resolved is AFKind.FEASIBILITY:
        af = build_feasibility_af(session.instance)
    elif resolved is AFKind.OPTIMALITY:
        if session.proposal is None:
            raise ValueError("proposal required: the optimality framework is built from a proposed schedule")
        af = build_optimality_af(session.instance, session.proposal)
    else:
        if session.decisions is None:
            raise ValueError("decisions required: the fixed decision framework is built from fixed decisions")
        af = build_fixed_decision_af(session.instance, session.decisions)
    return jsonio.af_to_doc(af)


def export_session(session: Session) -> dict[str, Any]:
    """The whole session as one JSON-ready document."""
    return {
        "id": session.id,
        "solver": session.solver,
        "instance": jsonio.instance_to_doc(session.instance),
        "baseline": jsonio.schedule_to_doc(session.baseline),
        "proposal": None if session.proposal is None else jsonio.schedule_to_doc(session.proposal),
        "decisions": None if session.decisions is None else jsonio.decisions_to_doc(session.decisions),
        "history": [{"at": h.at, "event": h.event, "summary": dict(h.summary)} for h in session.history],
    }


def import_session(doc: Any) -> Session:
    """Rebuild a session from an exported document.

    export . import is the identity; documents that do not fit the schema
    are rejected with the offending field named.
    """
    if not isinstance(doc, Mapping):
        raise ValueError(f"session: expected a JSON object, got {type(doc).__name__}")
    sid = doc.get("id")
    if not isinstance(sid, str) or not _ID_PATTERN.fullmatch(sid):
        raise ValueError("session: field 'id' must be a short token of letters, digits, '-' or '_'")
    solver = doc.get("solver")
    if solver not in SOLVERS:
        raise ValueError(f"session: field 'solver' must be one of: {', '.join(SOLVERS)}")
    if "instance" not in doc:
        raise ValueError("session: field 'instance' is missing")
    instance = jsonio.instance_from_doc(doc["instance"])
    if "baseline" not in doc:
        raise ValueError("session: field 'baseline' is missing")
    baseline = jsonio.schedule_from_doc(doc["baseline"])
    check_pairs(instance, baseline.assigned, "baseline")
    if not is_feasible(instance, baseline):
        raise ValueError("session: field 'baseline' must be a feasible schedule")
    proposal = None
    if doc.get("proposal") is not None:
        proposal = jsonio.schedule_from_doc(doc["proposal"])
        check_pairs(instance, proposal.assigned, "proposal")
    decisions = None
    if doc.get("decisions") is not None:
        decisions = jsonio.decisions_from_doc(doc["decisions"])
        check_pairs(instance, decisions.negative, "negative decision")
        check_pairs(instance, decisions.positive, "positive decision")
    raw_history = doc.get("history", [])
    if not isinstance(raw_history, list):
        raise ValueError("session: field 'history' must be a list")
    history = []
    for entry in raw_history:
        if not isinstance(entry, Mapping) or not isinstance(entry.get("at"), str) \
                or not isinstance(entry.get("event"), str) \
                or not isinstance(entry.get("summary"), Mapping):
            raise ValueError("session: field 'history' entries need 'at', 'event' and 'summary'")
        history.append(HistoryEntry(entry["at"], entry["event"], dict(entry["summary"])))
    return Session(sid, instance, solver, baseline, proposal, decisions, history)


class SessionStore:
    """Session registry, optionally persisted one JSON file per session.

    Per-session locks let the server serialize work on the same id while
    distinct sessions proceed independently.
    """

    def __init__(self, directory: str | Path | None = None) -> None:
        self.directory = Path(directory) if directory is not None else None
        if self.directory is not None:
            self.directory.mkdir(parents=True, exist_ok=True)
        self._sessions: dict[str, Session] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def lock_for(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            return self._locks.setdefault(session_id, threading.Lock())

    def add(self, session: Session) -> None:
        self._sessions[session.id] = session
        self._persist(session)

    def save(self, session: Session) -> None:
        self._persist(session)

    def get(self, session_id: str) -> Session:
        if session_id in self._sessions:
            return self._sessions[session_id]
        path = self._path_for(session_id)
        if path is not None and path.exists():
            session = import_session(json.loads(path.read_text()))
            self._sessions[session_id] = session
            return session
        raise KeyError(f"no session with id '{session_id}'")

    def _path_for(self, session_id: str) -> Path | None:
        # The id doubles as the file name, so only plain tokens may touch disk.
        if self.directory is None or not _ID_PATTERN.fullmatch(session_id):
            return None
        return self.directory / f"{session_id}.json"

    def _persist(self, session: Session) -> None:
        path = self._path_for(session.id)
        if path is None:
            return
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(export_session(session), indent=2, sort_keys=True) + "\n")
        tmp.replace(path)
