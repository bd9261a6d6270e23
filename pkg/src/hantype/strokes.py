"""Radical-based stroke coding: six stroke classes, radical-to-letter keys,
character encoding into 1-4 letter codes, decoding and collision stats.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .lexicon import (
    Lexicon,
    LexiconError,
    RadicalKeyMap,
    StrokeClass,
    _data_lines,
    is_cjk,
)


@dataclass(frozen=True)
class CharacterDecomposition:
    hanzi: str
    radicals: tuple[str, ...]


@dataclass(frozen=True)
class CollisionReport:
    total_codes: int
    colliding_codes: int
    worst: tuple[tuple[str, frozenset[str]], ...]

    def to_json(self) -> str:
        payload = {
            "total_codes": self.total_codes,
            "colliding_codes": self.colliding_codes,
            "worst": [
                {"code": code, "hanzi": sorted(chars)}
                for code, chars in self.worst
            ],
        }
        return json.dumps(payload, ensure_ascii=False, indent=2)


def load_stroke_varieties(path) -> dict[str, StrokeClass]:
    """Parse the `glyph<TAB>class` variety table."""
    path = Path(path)
    table: dict[str, StrokeClass] = {}
    for lineno, line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError(path, lineno, "expected glyph<TAB>class")
        glyph, cls = parts[0], parts[1].strip()
        if cls not in {"1", "2", "3", "4", "5", "6"}:
            raise LexiconError(path, lineno, f"stroke class {cls!r} not in 1..6")
        if glyph in table:
            raise LexiconError(path, lineno, f"duplicate glyph {glyph!r}")
        table[glyph] = StrokeClass(int(cls))
    return table


def classify_stroke(glyph: str, varieties: dict[str, StrokeClass]) -> StrokeClass:
    try:
        return varieties[glyph]
    except KeyError:
        raise KeyError(f"unknown stroke glyph: {glyph!r}") from None


def radical_key(radmap: RadicalKeyMap, radical: str) -> str:
    return radmap.letter(radical)


def encode_character(radmap: RadicalKeyMap, decomp: CharacterDecomposition) -> str:
    """Code for a decomposition: one letter per radical, capped at four.

    Longer decompositions keep the first three radicals plus the last
    one, so the final radical's letter always survives.
    """
    if not decomp.radicals:
        raise ValueError(f"empty decomposition for {decomp.hanzi!r}")
    letters = [radmap.letter(r) for r in decomp.radicals]
    if len(letters) > 4:
        letters = letters[:3] + [letters[-1]]
    return "".join(letters)


def decode_code(lex: Lexicon, code: str) -> frozenset[str]:
    return lex.lookup_by_code(code)


def load_decompositions(path) -> dict[str, CharacterDecomposition]:
    """Parse `hanzi<TAB>radical,radical,...` lines."""
    path = Path(path)
    out: dict[str, CharacterDecomposition] = {}
    for lineno, line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconError(path, lineno, "expected hanzi<TAB>radical list")
        hanzi, rads_s = parts[0], parts[1]
        if len(hanzi) != 1 or not is_cjk(hanzi):
            raise LexiconError(path, lineno, f"{hanzi!r} must be a single CJK character")
        radicals = tuple(r for r in rads_s.split(",") if r)
        if not radicals:
            raise LexiconError(path, lineno, f"{hanzi!r} has an empty radical list")
        if hanzi in out:
            raise LexiconError(path, lineno, f"duplicate decomposition for {hanzi!r}")
        out[hanzi] = CharacterDecomposition(hanzi, radicals)
    return out


def collision_report(lex: Lexicon) -> CollisionReport:
    """Exact synonym-code statistics over all coded lexicon entries."""
    groups = {code: chars for code, chars in lex.by_code.items()}
    colliding = {code: chars for code, chars in groups.items() if len(chars) >= 2}
    worst = tuple(sorted(
        colliding.items(),
        key=lambda kv: (-len(kv[1]), kv[0]),
    ))
    return CollisionReport(
        total_codes=len(groups),
        colliding_codes=len(colliding),
        worst=worst,
    )
