"""Local HTTP facade over input sessions.

One session per client token; keystrokes for a session are serialized
behind a per-session lock, the lexicon is shared read-only.
"""
from __future__ import annotations

import threading
import time
import uuid
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, HTTPException
from fastapi.responses import PlainTextResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from .engine import (
    BpmfLayout,
    InputSession,
    KeyInput,
    KeyKind,
    Layout,
    Mode,
    _safe_render,
    new_session,
)
from .lexicon import LOWERCASE, Lexicon

DEFAULT_PORT = 8765
DEFAULT_IDLE_TIMEOUT = 30 * 60  # seconds


class CreateSessionRequest(BaseModel):
    mode: str = "phonetic"
    layout: str = "pinyin"


class KeyRequest(BaseModel):
    kind: str
    value: Optional[str] = None
    tone: Optional[int] = None
    index: Optional[int] = None


@dataclass
class _Slot:
    session: InputSession
    created_at: float
    last_access: float
    lock: threading.Lock = field(default_factory=threading.Lock)


class SessionStore:
    def __init__(self, idle_timeout: float = DEFAULT_IDLE_TIMEOUT):
        self.idle_timeout = idle_timeout
        self._slots: dict[str, _Slot] = {}
        self._lock = threading.Lock()

    def create(self, session: InputSession) -> str:
        sid = uuid.uuid4().hex
        now = time.monotonic()
        with self._lock:
            self._purge(now)
            self._slots[sid] = _Slot(session, created_at=now, last_access=now)
        return sid

    def get(self, sid: str) -> _Slot:
        now = time.monotonic()
        with self._lock:
            self._purge(now)
            slot = self._slots.get(sid)
            if slot is None:
                raise KeyError(sid)
            slot.last_access = now
            return slot

    def delete(self, sid: str) -> None:
        with self._lock:
            if sid not in self._slots:
                raise KeyError(sid)
            del self._slots[sid]

    def _purge(self, now: float) -> None:
        dead = [sid for sid, s in self._slots.items()
                if now - s.last_access > self.idle_timeout]
        for sid in dead:
            del self._slots[sid]


def _parse_key(req: KeyRequest) -> KeyInput:
    kind = req.kind
    try:
        if kind == "letter":
            if req.value is None or req.value not in LOWERCASE:
                raise ValueError(f"letter value must be a-z, got {req.value!r}")
            return KeyInput.letter_key(req.value)
        if kind == "tone":
            tone = req.tone if req.tone is not None else (
                int(req.value) if req.value else None)
            if tone is None:
                raise ValueError("tone key needs a tone in 1..5")
            return KeyInput.tone_key(tone)
        if kind == "delimiter":
            return KeyInput.delimiter()
        if kind == "backspace":
            return KeyInput.backspace()
        if kind == "select":
            if req.index is None:
                raise ValueError("select key needs an index")
            return KeyInput.select(req.index)
        if kind == "next":
            return KeyInput(KeyKind.NEXT)
        if kind == "prev":
            return KeyInput(KeyKind.PREV)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc))
    raise HTTPException(status_code=400, detail=f"unknown key kind {kind!r}")


def create_app(lexicon: Lexicon,
               bpmf_layout: Optional[BpmfLayout] = None,
               static_dir: Optional[str] = None,
               idle_timeout: float = DEFAULT_IDLE_TIMEOUT) -> FastAPI:
    app = FastAPI(title="hantype session service")
    store = SessionStore(idle_timeout=idle_timeout)
    app.state.store = store

    @app.get("/health", response_class=PlainTextResponse)
    def health():
        return "ok"

    @app.post("/sessions", status_code=201)
    def create_session(req: CreateSessionRequest):
        try:
            mode = Mode(req.mode)
            layout = Layout(req.layout)
        except ValueError:
            raise HTTPException(status_code=400,
                                detail=f"unknown mode/layout: {req.mode!r}/{req.layout!r}")
        if layout is Layout.BPMF and bpmf_layout is None:
            raise HTTPException(status_code=400, detail="server has no BPMF layout loaded")
        session = new_session(lexicon, mode=mode, layout=layout,
                              bpmf_layout=bpmf_layout)
        sid = store.create(session)
        return {"id": sid, "mode": mode.value, "layout": layout.value}

    def _slot_or_404(sid: str) -> _Slot:
        try:
            return store.get(sid)
        except KeyError:
            raise HTTPException(status_code=404, detail=f"no session {sid!r}")

    @app.post("/sessions/{sid}/keys")
    def send_key(sid: str, req: KeyRequest):
        slot = _slot_or_404(sid)
        key = _parse_key(req)
        with slot.lock:
            event = slot.session.process(key)
        return {
            "accepted": event.accepted,
            "buffer": event.buffer_echo,
            "validation": event.validation.value,
            "phonetic_portion": [
                {"base": s.base, "tone": s.tone, "display": _safe_render(s)}
                for s in event.phonetic_portion
            ],
            "candidates": list(event.candidates),
            "selected": event.selected,
            "committed_delta": event.committed_delta,
        }

    @app.get("/sessions/{sid}")
    def get_state(sid: str):
        slot = _slot_or_404(sid)
        with slot.lock:
            snap = slot.session.snapshot()
        snap["id"] = sid
        return snap

    @app.delete("/sessions/{sid}", status_code=204)
    def delete_session(sid: str):
        _slot_or_404(sid)
        store.delete(sid)

    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app


def run_server(app: FastAPI, port: int = DEFAULT_PORT, host: str = "127.0.0.1"):
    import uvicorn

    uvicorn.run(app, host=host, port=port, log_level="warning")
