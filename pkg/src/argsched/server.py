"""HTTP facade over the session service.

Handlers are plain sync functions (FastAPI runs them on a thread pool), so
the per-session locks in SessionStore serialize same-session requests as
promised while distinct sessions run concurrently.
"""
from __future__ import annotations

from pathlib import Path
from typing import Any

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware

from . import jsonio
from . import session as sessions
from .errors import BudgetExceededError


def create_app(data_dir: str | Path | None = None) -> FastAPI:
    store = sessions.SessionStore(data_dir)
    app = FastAPI(title="argsched what-if service")
    app.state.store = store
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])

    def _session(sid: str) -> sessions.Session:
        try:
            return store.get(sid)
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from None

    @app.post("/sessions")
    def create_session_route(doc: dict[str, Any]) -> dict[str, str]:
        solver = doc.get("solver", "lpt")
        if not isinstance(solver, str):
            raise HTTPException(status_code=400, detail="field 'solver' must be a string")
        try:
            instance = jsonio.instance_from_doc(doc)
            session = sessions.create_session(instance, solver=solver)
        except (ValueError, BudgetExceededError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        store.add(session)
        return {"id": session.id}

    @app.post("/sessions/{sid}/propose")
    def propose_route(sid: str, doc: dict[str, Any]) -> dict[str, Any]:
        session = _session(sid)
        with store.lock_for(sid):
            try:
                schedule = None if doc.get("schedule") is None \
                    else jsonio.schedule_from_doc(doc["schedule"])
                decisions = None if doc.get("decisions") is None \
                    else jsonio.decisions_from_doc(doc["decisions"])
                report = sessions.propose(session, schedule, decisions)
            except (ValueError, BudgetExceededError) as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None
            store.save(session)
        return jsonio.report_to_doc(report)

    @app.post("/sessions/{sid}/disturb")
    def disturb_route(sid: str, doc: dict[str, Any]) -> dict[str, Any]:
        session = _session(sid)
        with store.lock_for(sid):
            kind = doc.get("kind")
            index = doc.get("index")
            if not isinstance(kind, str):
                raise HTTPException(status_code=400, detail="field 'kind' must be a string")
            if isinstance(index, bool) or not isinstance(index, int):
                raise HTTPException(status_code=400, detail="field 'index' must be an integer")
            try:
                report = sessions.apply_disturbance(session, kind, index)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None
            store.save(session)
        return jsonio.report_to_doc(report)

    @app.get("/sessions/{sid}/af/{kind}")
    def af_route(sid: str, kind: str) -> dict[str, Any]:
        session = _session(sid)
        with store.lock_for(sid):
            try:
                return sessions.get_af(session, kind)
            except ValueError as exc:
                raise HTTPException(status_code=400, detail=str(exc)) from None

    @app.get("/sessions/{sid}")
    def session_route(sid: str) -> dict[str, Any]:
        session = _session(sid)
        with store.lock_for(sid):
            return sessions.export_session(session)

    @app.get("/sessions/{sid}/export")
    def export_route(sid: str) -> dict[str, Any]:
        session = _session(sid)
        with store.lock_for(sid):
            return sessions.export_session(session)

    @app.post("/import")
    def import_route(doc: dict[str, Any]) -> dict[str, str]:
        try:
            session = sessions.import_session(doc)
        except (ValueError, BudgetExceededError) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from None
        store.add(session)
        return {"id": session.id}

    return app


app = create_app()
