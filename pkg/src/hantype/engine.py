"""Phonetic input pipeline: keystroke processing, tone rendering,
delimiter-free segmentation and batch pinyin-to-hanzi conversion.
"""
from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .lexicon import (
    LOWERCASE,
    Lexicon,
    LexiconError,
    SyllableTable,
    TonedSyllable,
    ValidationResult,
    _data_lines,
)

DEFAULT_TONE = 5  # neutral; applied when the user commits an untoned buffer


class Mode(enum.Enum):
    PHONETIC = "phonetic"
    STROKE = "stroke"


class Layout(enum.Enum):
    PINYIN_QWERTY = "pinyin"
    BPMF = "bpmf"


# ---------------------------------------------------------------------------
# Tone rendering

_TONE_COMBINING = {1: "̄", 2: "́", 3: "̌", 4: "̀"}
_VOWELS = "aeiouv"


def _mark_position(base: str) -> int:
    """Index of the vowel that carries the tone mark.

    Standard orthography: 'a' wins, then 'e', then 'o'; in 'iu' the 'u'
    is marked and in 'ui' the 'i'; otherwise the last vowel.
    """
    for v in "aeo":
        i = base.find(v)
        if i >= 0:
            return i
    i = base.find("iu")
    if i >= 0:
        return i + 1
    i = base.find("ui")
    if i >= 0:
        return i + 1
    for i in range(len(base) - 1, -1, -1):
        if base[i] in _VOWELS:
            return i
    raise ValueError(f"cannot place a tone mark on {base!r}: no vowel")


def render_toned(syll: TonedSyllable) -> str:
    """Display form of a toned syllable, e.g. (ma,1) -> 'mā'.

    The placeholder 'v' is shown as 'ü'; the neutral tone is unmarked.
    """
    base = syll.base
    pos = _mark_position(base)  # raises on vowel-less bases even for tone 5
    display = base.replace("v", "ü")
    if syll.tone == 5:
        return display
    marked = display[:pos + 1] + _TONE_COMBINING[syll.tone] + display[pos + 1:]
    return unicodedata.normalize("NFC", marked)


# ---------------------------------------------------------------------------
# Segmentation

_MAX_SYLLABLE_LEN = 6


def segment_phonetic(table: SyllableTable, text: str) -> Optional[list[str]]:
    """Split a delimiter-free lowercase string into base syllables.

    Picks the segmentation with the fewest segments; ties go to the
    longer first segment, recursively. Returns None when no split into
    table syllables exists.
    """
    n = len(text)
    bases = table.base_syllables
    INF = n + 1
    # cost[i] = minimal number of segments covering text[i:]
    cost = [INF] * (n + 1)
    cost[n] = 0
    for i in range(n - 1, -1, -1):
        limit = min(n, i + _MAX_SYLLABLE_LEN)
        best = INF
        for j in range(i + 1, limit + 1):
            if cost[j] < best and text[i:j] in bases:
                c = 1 + cost[j]
                if c < best:
                    best = c
        cost[i] = best
    if cost[0] >= INF:
        return None
    # Reconstruct greedily: the longest first segment that still achieves
    # the optimal count, applied at every position.
    out = []
    i = 0
    while i < n:
        limit = min(n, i + _MAX_SYLLABLE_LEN)
        for j in range(limit, i, -1):
            if cost[j] + 1 == cost[i] and text[i:j] in bases:
                out.append(text[i:j])
                i = j
                break
    return out


def match_abbreviation(table: SyllableTable, buffer: str) -> frozenset[str]:
    """Expansions of a registered abbreviation; empty set otherwise."""
    return table.expansions(buffer)


# ---------------------------------------------------------------------------
# BPMF layout

@dataclass(frozen=True)
class BpmfLayout:
    """Key-relabeling layer: letter key position -> pinyin letters."""

    by_key: dict[str, str]
    by_symbol: dict[str, str]

    def letters_for_key(self, key: str) -> Optional[str]:
        return self.by_key.get(key)


def load_bpmf_layout(path) -> BpmfLayout:
    """Parse `key<TAB>symbol<TAB>letters` lines."""
    path = Path(path)
    by_key: dict[str, str] = {}
    by_symbol: dict[str, str] = {}
    for lineno, line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) != 3:
            raise LexiconError(path, lineno, "expected key<TAB>symbol<TAB>letters")
        key, symbol, letters = (p.strip() for p in parts)
        if key in by_key:
            raise LexiconError(path, lineno, f"duplicate key {key!r}")
        if not letters or not set(letters) <= LOWERCASE:
            raise LexiconError(path, lineno, f"letters {letters!r} must be a-z")
        by_key[key] = letters
        by_symbol[symbol] = letters
    return BpmfLayout(by_key=by_key, by_symbol=by_symbol)


def bpmf_to_letters(layout: BpmfLayout, key: str) -> Optional[str]:
    """Pinyin letters contributed by a BPMF key position, or None."""
    return layout.letters_for_key(key)


# ---------------------------------------------------------------------------
# Keystroke protocol

class KeyKind(enum.Enum):
    LETTER = "letter"
    TONE = "tone"
    DELIMITER = "delimiter"
    BACKSPACE = "backspace"
    SELECT = "select"
    NEXT = "next"
    PREV = "prev"


@dataclass(frozen=True)
class KeyInput:
    kind: KeyKind
    letter: Optional[str] = None   # for LETTER
    tone: Optional[int] = None     # for TONE
    index: Optional[int] = None    # for SELECT

    def __post_init__(self):
        if self.kind is KeyKind.LETTER and (
                self.letter is None or self.letter not in LOWERCASE):
            raise ValueError(f"letter key needs a single a-z value, got {self.letter!r}")
        if self.kind is KeyKind.TONE and self.tone not in (1, 2, 3, 4, 5):
            raise ValueError(f"tone key needs a value in 1..5, got {self.tone}")
        if self.kind is KeyKind.SELECT and (self.index is None or self.index < 0):
            raise ValueError("select key needs a non-negative index")

    @staticmethod
    def letter_key(ch: str) -> "KeyInput":
        return KeyInput(KeyKind.LETTER, letter=ch)

    @staticmethod
    def tone_key(tone: int) -> "KeyInput":
        return KeyInput(KeyKind.TONE, tone=tone)

    @staticmethod
    def delimiter() -> "KeyInput":
        return KeyInput(KeyKind.DELIMITER)

    @staticmethod
    def backspace() -> "KeyInput":
        return KeyInput(KeyKind.BACKSPACE)

    @staticmethod
    def select(index: int) -> "KeyInput":
        return KeyInput(KeyKind.SELECT, index=index)


@dataclass(frozen=True)
class EngineEvent:
    accepted: bool
    buffer_echo: str
    validation: ValidationResult
    phonetic_portion: tuple[TonedSyllable, ...]
    candidates: tuple[str, ...]
    selected: Optional[int]
    committed_delta: str


def _bracket(syll: TonedSyllable) -> str:
    """Pass-through form for a syllable with no dictionary candidate."""
    return f"[{syll.base}]" if syll.tone == DEFAULT_TONE else f"[{syll.base}{syll.tone}]"


@dataclass
class InputSession:
    """Live composition state for one user; strictly single-writer."""

    lexicon: Lexicon
    mode: Mode = Mode.PHONETIC
    layout: Layout = Layout.PINYIN_QWERTY
    bpmf_layout: Optional[BpmfLayout] = None
    buffer: str = ""
    composed: list[TonedSyllable] = field(default_factory=list)
    candidates: list[str] = field(default_factory=list)
    selected: int = 0
    output: str = ""

    def __post_init__(self):
        if self.layout is Layout.BPMF and self.bpmf_layout is None:
            raise ValueError("BPMF layout requires a bpmf_layout map")

    # -- projections ------------------------------------------------------

    @property
    def validation(self) -> ValidationResult:
        return self.lexicon.syllables.status(self.buffer)

    def _event(self, accepted: bool, delta: str = "") -> EngineEvent:
        return EngineEvent(
            accepted=accepted,
            buffer_echo=self.buffer,
            validation=self.validation,
            phonetic_portion=tuple(self.composed),
            candidates=tuple(self.candidates),
            selected=self.selected if self.candidates else None,
            committed_delta=delta,
        )

    def _reject(self) -> EngineEvent:
        return self._event(False)

    @property
    def window_open(self) -> bool:
        return bool(self.candidates)

    # -- keystroke handling ----------------------------------------------

    def process(self, key: KeyInput) -> EngineEvent:
        handler = {
            KeyKind.LETTER: self._on_letter,
            KeyKind.TONE: self._on_tone,
            KeyKind.DELIMITER: self._on_delimiter,
            KeyKind.BACKSPACE: self._on_backspace,
            KeyKind.SELECT: self._on_select,
            KeyKind.NEXT: self._on_next,
            KeyKind.PREV: self._on_prev,
        }[key.kind]
        return handler(key)

    def _on_letter(self, key: KeyInput) -> EngineEvent:
        if self.window_open:
            return self._reject()
        letters = key.letter
        if self.layout is Layout.BPMF:
            letters = bpmf_to_letters(self.bpmf_layout, key.letter)
            if letters is None:
                return self._reject()
        if self.mode is Mode.STROKE:
            candidate = self.buffer + letters
            if len(candidate) > 4:
                return self._reject()
            self.buffer = candidate
            return self._event(True)
        candidate = self.buffer + letters
        if self.lexicon.syllables.status(candidate) is ValidationResult.INVALID:
            return self._reject()
        self.buffer = candidate
        return self._event(True)

    def _on_tone(self, key: KeyInput) -> EngineEvent:
        if self.mode is Mode.STROKE or self.window_open:
            return self._reject()
        if self.lexicon.syllables.status(self.buffer) is not ValidationResult.VALID:
            return self._reject()
        self.composed.append(TonedSyllable(self.buffer, key.tone))
        self.buffer = ""
        return self._event(True)

    def _on_delimiter(self, key: KeyInput) -> EngineEvent:
        if self.window_open:
            return self._reject()
        if self.mode is Mode.STROKE:
            return self._commit_stroke()
        status = self.lexicon.syllables.status(self.buffer)
        if self.buffer:
            if status is not ValidationResult.VALID:
                return self._reject()
            self.composed.append(TonedSyllable(self.buffer, DEFAULT_TONE))
            self.buffer = ""
        if not self.composed:
            self.output += " "
            return self._event(True, delta=" ")
        cands = self.lexicon.lookup_by_reading(self.composed)
        if len(cands) == 1:
            delta = cands[0]
            self.output += delta
            self.composed.clear()
            return self._event(True, delta=delta)
        if len(cands) > 1:
            self.candidates = cands
            self.selected = 0
            return self._event(True)
        # No candidate for the whole sequence: fall back to committing the
        # best candidate per syllable, bracketing dictionary misses.
        parts = []
        for syll in self.composed:
            per = self.lexicon.lookup_by_reading([syll])
            parts.append(per[0] if per else _bracket(syll))
        delta = "".join(parts)
        self.output += delta
        self.composed.clear()
        return self._event(True, delta=delta)

    def _commit_stroke(self) -> EngineEvent:
        if not self.buffer:
            self.output += " "
            return self._event(True, delta=" ")
        cands = sorted(self.lexicon.lookup_by_code(self.buffer))
        if not cands:
            return self._reject()
        if len(cands) == 1:
            delta = cands[0]
            self.output += delta
            self.buffer = ""
            return self._event(True, delta=delta)
        self.candidates = cands
        self.selected = 0
        return self._event(True)

    def _on_backspace(self, key: KeyInput) -> EngineEvent:
        if self.window_open:
            self.candidates = []
            self.selected = 0
            return self._event(True)
        if self.buffer:
            self.buffer = self.buffer[:-1]
            return self._event(True)
        if self.composed:
            self.composed.pop()
            return self._event(True)
        return self._reject()

    def _commit_candidate(self, index: int) -> EngineEvent:
        delta = self.candidates[index]
        self.output += delta
        self.candidates = []
        self.selected = 0
        self.composed.clear()
        self.buffer = ""
        return self._event(True, delta=delta)

    def _on_select(self, key: KeyInput) -> EngineEvent:
        if not self.window_open or key.index >= len(self.candidates):
            return self._reject()
        return self._commit_candidate(key.index)

    def _on_next(self, key: KeyInput) -> EngineEvent:
        if not self.window_open:
            return self._reject()
        self.selected = (self.selected + 1) % len(self.candidates)
        return self._event(True)

    def _on_prev(self, key: KeyInput) -> EngineEvent:
        if not self.window_open:
            return self._reject()
        self.selected = (self.selected - 1) % len(self.candidates)
        return self._event(True)

    def snapshot(self) -> dict:
        """JSON-ready projection of the visible state."""
        return {
            "mode": self.mode.value,
            "layout": self.layout.value,
            "buffer": self.buffer,
            "validation": self.validation.value,
            "phonetic_portion": [
                {"base": s.base, "tone": s.tone, "display": _safe_render(s)}
                for s in self.composed
            ],
            "candidates": list(self.candidates),
            "selected": self.selected if self.candidates else None,
            "output": self.output,
        }


def _safe_render(syll: TonedSyllable) -> str:
    try:
        return render_toned(syll)
    except ValueError:
        return str(syll)


def new_session(lexicon: Lexicon, mode: Mode = Mode.PHONETIC,
                layout: Layout = Layout.PINYIN_QWERTY,
                bpmf_layout: Optional[BpmfLayout] = None) -> InputSession:
    return InputSession(lexicon=lexicon, mode=mode, layout=layout,
                        bpmf_layout=bpmf_layout)


# ---------------------------------------------------------------------------
# Batch conversion

def _convert_chunk(lex: Lexicon, chunk: str) -> str:
    """Convert one space-free run of letters and tone digits."""
    # Split into (letters, tone) units: a digit closes the letters before it.
    units: list[tuple[str, Optional[int]]] = []
    letters = ""
    for ch in chunk:
        if ch in "12345":
            units.append((letters, int(ch)))
            letters = ""
        elif ch in LOWERCASE:
            letters += ch
        else:
            return f"[{chunk}]"
    if letters:
        units.append((letters, None))

    sylls: list[TonedSyllable] = []
    for letters, tone in units:
        if not letters:
            return f"[{chunk}]"
        segs = segment_phonetic(lex.syllables, letters)
        if segs is None:
            return f"[{chunk}]"
        for i, seg in enumerate(segs):
            is_last = i == len(segs) - 1
            sylls.append(TonedSyllable(
                seg, tone if (is_last and tone is not None) else DEFAULT_TONE))

    out = []
    for syll in sylls:
        cands = lex.lookup_by_reading([syll])
        out.append(cands[0] if cands else _bracket(syll))
    return "".join(out)


def convert_text(lex: Lexicon, pinyin_text: str) -> str:
    """Batch-convert a line of pinyin (letters, tone digits, spaces).

    Spaces act as delimiters: a space after content is consumed by the
    conversion; a space with nothing pending passes through literally.
    """
    chunks = pinyin_text.split(" ")
    out = []
    for i, chunk in enumerate(chunks):
        if chunk:
            out.append(_convert_chunk(lex, chunk))
        elif i < len(chunks) - 1:
            # Delimiter with empty composition emits a literal space; the
            # delimiter after a converted chunk is consumed.
            out.append(" ")
    return "".join(out)
