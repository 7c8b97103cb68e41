"""HTTP configurator backend: models in, guided decisions out.

Everything lives in process memory. Requests touching one session are
serialized by a per-session lock; the model store itself is read-mostly.
The client never reasons about constraints: every response carries the
full propagated state, and counts travel as decimal strings so no
client number type can corrupt them.
"""

import secrets
import threading

from fastapi import FastAPI, Query
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel, ConfigDict

from fam import settings
from fam.core.text import parse_fm
from fam.errors import FamError, SpannedError
from fam.reasoner import (
    DESELECTED, PROPAGATED, SELECTED, UNDECIDED, Bdd, TriState, propagate,
)

DEFAULT_LIMIT = 100


class ModelRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    source: str


class DecideRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    feature: str
    decision: str


class _ModelEntry:
    """Parsed model plus its reusable decision diagram."""

    def __init__(self, model):
        self.model = model
        self.bdd = Bdd.for_space(model)
        self.order = model.preorder()


class _Session:
    def __init__(self, entry: _ModelEntry):
        self.entry = entry
        self.stack = []  # (feature, selected?) in decision order
        self.lock = threading.Lock()
        self.state = propagate(entry.model, TriState.initial(entry.order))

    def effective(self) -> dict:
        decided = {}
        for feature, selected in self.stack:
            decided[feature] = selected
        return decided

    def repropagate(self) -> TriState:
        decisions = TriState.from_decisions(self.entry.order,
                                            self.effective())
        return propagate(self.entry.model, decisions)


def _tree_json(model, name, optionality=None):
    node = {"type": "feature", "name": name, "children": []}
    if optionality is not None:
        node["optionality"] = optionality
    for kind, element in model.elements(name):
        if kind == "feature":
            node["children"].append(
                _tree_json(model, element, model.optionality[element]))
        else:
            node["children"].append({
                "type": "group",
                "kind": element.kind,
                "members": [_tree_json(model, member)
                            for member in element.members],
            })
    return node


def _state_json(session: _Session, state: TriState) -> dict:
    entry = session.entry
    if state.conflict:
        count = 0
    else:
        count = entry.bdd.count_completions(entry.bdd.root,
                                            state.user_decisions())
    return {
        "features": [{"name": name,
                      "status": state.status[name],
                      "origin": state.origin[name]}
                     for name in entry.order],
        "count": str(count),
        "conflict": state.conflict,
        "undoDepth": len(session.stack),
    }


def _not_found(what: str) -> JSONResponse:
    return JSONResponse(status_code=404, content={"message": f"unknown {what}"})


def create_app(static_dir=None) -> FastAPI:
    app = FastAPI(title="fam configurator")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"],
        allow_methods=["*"], allow_headers=["*"])

    models: dict = {}
    sessions: dict = {}
    store_lock = threading.Lock()

    @app.exception_handler(RequestValidationError)
    async def reject_bad_request(request, exc):
        message = "; ".join(
            f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
            for error in exc.errors())
        return JSONResponse(status_code=400, content={"message": message})

    @app.post("/api/models")
    def create_model(body: ModelRequest):
        try:
            model = parse_fm(body.source)
            entry = _ModelEntry(model)
        except SpannedError as error:
            span = error.span
            return JSONResponse(status_code=400, content={
                "line": span.line if span else 1,
                "column": span.column if span else 1,
                "message": error.message,
            })
        except FamError as error:
            return JSONResponse(status_code=400, content={
                "line": 1, "column": 1, "message": str(error)})
        count = entry.bdd.sat_count()
        if count == 0:
            return JSONResponse(status_code=422, content={
                "message": "model is unsatisfiable", "count": "0"})
        model_id = secrets.token_hex(8)
        with store_lock:
            models[model_id] = entry
        return {
            "id": model_id,
            "root": model.root,
            "features": list(entry.order),
            "tree": _tree_json(model, model.root),
            "count": str(count),
        }

    @app.post("/api/models/{model_id}/sessions")
    def create_session(model_id: str):
        entry = models.get(model_id)
        if entry is None:
            return _not_found("model")
        session = _Session(entry)
        session_id = secrets.token_hex(8)
        with store_lock:
            sessions[session_id] = session
        return {"sessionId": session_id,
                "state": _state_json(session, session.state)}

    @app.post("/api/sessions/{session_id}/decide")
    def decide(session_id: str, body: DecideRequest):
        session = sessions.get(session_id)
        if session is None:
            return _not_found("session")
        if body.decision not in (SELECTED, DESELECTED, UNDECIDED):
            return JSONResponse(status_code=400, content={
                "message": f"unknown decision {body.decision!r}"})
        with session.lock:
            if body.feature not in session.entry.model.alphabet:
                return JSONResponse(status_code=400, content={
                    "message": f"unknown feature {body.feature!r}"})
            if body.decision in (SELECTED, DESELECTED):
                opposite = DESELECTED if body.decision == SELECTED else SELECTED
                if (session.state.status[body.feature] == opposite
                        and session.state.origin[body.feature] == PROPAGATED):
                    return JSONResponse(status_code=409, content={
                        "message": (f"{body.feature} is {opposite} by "
                                    "propagation"),
                        "feature": body.feature,
                        "status": opposite,
                        "origin": PROPAGATED,
                    })
                session.stack.append((body.feature,
                                      body.decision == SELECTED))
            else:
                for index in range(len(session.stack) - 1, -1, -1):
                    if session.stack[index][0] == body.feature:
                        del session.stack[index]
                        break
            state = session.repropagate()
            if state.conflict:
                # hand the conflicted view back, but keep the session sound
                payload = _state_json(session, state)
                if body.decision in (SELECTED, DESELECTED):
                    session.stack.pop()
                    payload["undoDepth"] = len(session.stack)
                return payload
            session.state = state
            return _state_json(session, state)

    @app.post("/api/sessions/{session_id}/undo")
    def undo(session_id: str):
        session = sessions.get(session_id)
        if session is None:
            return _not_found("session")
        with session.lock:
            if session.stack:
                session.stack.pop()
                session.state = session.repropagate()
            return _state_json(session, session.state)

    @app.post("/api/sessions/{session_id}/reset")
    def reset(session_id: str):
        session = sessions.get(session_id)
        if session is None:
            return _not_found("session")
        with session.lock:
            session.stack.clear()
            session.state = session.repropagate()
            return _state_json(session, session.state)

    @app.get("/api/sessions/{session_id}/configurations")
    def configurations(session_id: str,
                       limit: int = Query(DEFAULT_LIMIT, ge=0)):
        session = sessions.get(session_id)
        if session is None:
            return _not_found("session")
        with session.lock:
            entry = session.entry
            decided = session.state.user_decisions()
            count = entry.bdd.count_completions(entry.bdd.root, decided)
            if count <= settings.max_enum():
                found = entry.bdd.configurations(entry.bdd.root,
                                                 fixed=decided)[:limit]
            else:
                found = entry.bdd.configurations(entry.bdd.root,
                                                 fixed=decided, cap=limit)
            return {
                "configurations": [sorted(c.selected) for c in found],
                "truncated": count > limit,
            }

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles
        app.mount("/", StaticFiles(directory=static_dir, html=True),
                  name="static")

    return app
