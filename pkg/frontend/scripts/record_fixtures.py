"""Record golden service flows for the UI test suite.

Drives the real HTTP service in-process and captures every request and
response body along two scripted flows.  The vitest suite replays the
responses through a stubbed fetch, so any report or certificate text the
UI shows in tests is byte-identical to genuine server output.

Run from this directory (the argsched package must be installed):

    python3 record_fixtures.py
"""
from __future__ import annotations

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from argsched.server import create_app

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


class Recorder:
    """TestClient wrapper that logs each exchange as one replayable step."""

    def __init__(self, client: TestClient):
        self.client = client
        self.steps: list[dict] = []

    def get(self, path: str) -> dict:
        r = self.client.get(path)
        assert r.status_code == 200, (path, r.text)
        self.steps.append({
            "method": "GET", "path": path, "body": None,
            "status": r.status_code, "response": r.json(),
        })
        return r.json()

    def post(self, path: str, body: dict) -> dict:
        r = self.client.post(path, json=body)
        assert r.status_code == 200, (path, r.text)
        self.steps.append({
            "method": "POST", "path": path, "body": body,
            "status": r.status_code, "response": r.json(),
        })
        return r.json()

    def get_error(self, path: str, status: int) -> dict:
        r = self.client.get(path)
        assert r.status_code == status, (path, r.status_code, r.text)
        self.steps.append({
            "method": "GET", "path": path, "body": None,
            "status": r.status_code, "response": r.json(),
        })
        return r.json()


def _rewrite_ids(steps: list[dict], sid: str, token: str) -> list[dict]:
    # Session ids are random per run; pin them so fixtures stay stable.
    text = json.dumps(steps).replace(sid, token)
    return json.loads(text)


def record_decisions_flow(client: TestClient) -> None:
    """A 2x2 instance steered to one required and one banned slot.

    Grid path: start from the solver baseline {(1,1),(2,2)}, unassign
    (2,2), assign (1,2), ban (2,2), require (1,1); four clicks total.
    """
    rec = Recorder(client)
    sid = rec.post("/sessions", {"machines": 2, "processing_times": [1, 1], "solver": "lpt"})["id"]
    exported = rec.get(f"/sessions/{sid}")
    assert exported["baseline"]["assignments"] == [[1, 1], [2, 2]]
    rec.get(f"/sessions/{sid}/af/feasibility")
    refused = rec.get_error(f"/sessions/{sid}/af/optimality", 400)
    assert "proposal required" in refused["detail"]
    report = rec.post(f"/sessions/{sid}/propose", {
        "schedule": {"assignments": [[1, 1], [1, 2]]},
        "decisions": {"negative": [[2, 2]], "positive": [[1, 1]]},
    })
    texts = [c["text"] for c in report["certificates"]]
    assert (
        "S satisfies the fixed decisions: its extension {a(1,1), a(1,2)} is stable "
        "in the fixed decision framework. Respected negative decisions: (2, 2). "
        "Respected positive decisions: (1, 1)."
    ) in texts
    rec.get(f"/sessions/{sid}")
    af = rec.get(f"/sessions/{sid}/af/fixed")
    assert [[2, 2], [2, 2]] in af["attacks"]  # the ban shows up as a self-attack
    out = FIXTURES / "decisions_flow.json"
    out.write_text(json.dumps(_rewrite_ids(rec.steps, sid, "fx-decisions"), indent=2) + "\n")
    print(f"wrote {out}")


def record_improvable_flow(client: TestClient) -> None:
    """A 2x3 instance proposed into a swap-and-move improvable state.

    First submits the untouched baseline (all-good banner), then two grid
    clicks later the schedule {(1,1),(1,2),(2,3)} whose report carries one
    attack and one non-attack finding.
    """
    rec = Recorder(client)
    sid = rec.post("/sessions", {"machines": 2, "processing_times": [1, 2, 1], "solver": "lpt"})["id"]
    exported = rec.get(f"/sessions/{sid}")
    assert exported["baseline"]["assignments"] == [[1, 2], [2, 1], [2, 3]]
    rec.get(f"/sessions/{sid}/af/feasibility")
    clean = rec.post(f"/sessions/{sid}/propose", {
        "schedule": {"assignments": [[1, 2], [2, 1], [2, 3]]},
        "decisions": None,
    })
    assert clean["feasible"] and clean["efficient"] and clean["explanations"] == []
    rec.get(f"/sessions/{sid}")
    report = rec.post(f"/sessions/{sid}/propose", {
        "schedule": {"assignments": [[1, 1], [1, 2], [2, 3]]},
        "decisions": None,
    })
    forms = [(x["form"], x["attacker"], x["target"]) for x in report["explanations"]]
    assert forms == [("attack", [2, 3], [1, 2]), ("non_attack", None, [2, 1])]
    rec.get(f"/sessions/{sid}")
    af = rec.get(f"/sessions/{sid}/af/optimality")
    assert [[2, 3], [1, 2]] in af["attacks"]
    assert [[1, 1], [2, 1]] not in af["attacks"]  # the improving move's missing edge
    out = FIXTURES / "improvable_flow.json"
    out.write_text(json.dumps(_rewrite_ids(rec.steps, sid, "fx-improvable"), indent=2) + "\n")
    print(f"wrote {out}")


def record_infeasible_flow(client: TestClient) -> None:
    """A 2x3 proposal that doubles job 1, drops job 3, and overloads machine 1.

    Its report spans both dimensions, so it pins down row ordering:
    feasibility findings must come first.
    """
    rec = Recorder(client)
    sid = rec.post("/sessions", {"machines": 2, "processing_times": [1, 2, 1], "solver": "lpt"})["id"]
    report = rec.post(f"/sessions/{sid}/propose", {
        "schedule": {"assignments": [[1, 1], [1, 2], [2, 1]]},
        "decisions": None,
    })
    assert not report["feasible"]
    dimensions = [x["dimension"] for x in report["explanations"]]
    assert dimensions == sorted(dimensions, key=["feasibility", "efficiency", "fixed"].index)
    assert dimensions[0] == "feasibility" and len(set(dimensions)) > 1
    out = FIXTURES / "infeasible_flow.json"
    out.write_text(json.dumps(_rewrite_ids(rec.steps, sid, "fx-infeasible"), indent=2) + "\n")
    print(f"wrote {out}")


def main() -> None:
    FIXTURES.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        client = TestClient(create_app(tmp))
        record_decisions_flow(client)
        record_improvable_flow(client)
        record_infeasible_flow(client)


if __name__ == "__main__":
    main()
