"""Dictionary, syllable table and radical map loading and indexing.

All structures are immutable after load and safe to share between any
number of sessions or threads.
"""
from __future__ import annotations

import enum
import string
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Optional, Sequence

LOWERCASE = frozenset(string.ascii_lowercase)

# CJK ranges accepted for dictionary entries.
_CJK_RANGES = (
    (0x3400, 0x4DBF),    # Extension A
    (0x4E00, 0x9FFF),    # Unified Ideographs
    (0xF900, 0xFAFF),    # Compatibility Ideographs
    (0x20000, 0x2EBEF),  # Extensions B..F
)


class LexiconError(ValueError):
    """Raised for malformed dictionary / syllable / radical files."""

    def __init__(self, path, lineno, message):
        self.path = str(path)
        self.lineno = lineno
        super().__init__(f"{path}:{lineno}: {message}")


class ValidationResult(enum.Enum):
    VALID = "valid"
    VALID_PREFIX = "valid_prefix"
    INVALID = "invalid"


class StrokeClass(enum.IntEnum):
    HORIZONTAL = 1
    VERTICAL = 2
    LEFT_SLANTING = 3
    RIGHT_SLANTING = 4
    UP_RIGHT_CURVING = 5
    LOWER_LEFT_CURVING = 6

    @property
    def label(self) -> str:
        return _CLASS_LABELS[self.value]


_CLASS_LABELS = {
    1: "horizontal",
    2: "vertical",
    3: "left-slanting",
    4: "right-slanting",
    5: "up-right-curving",
    6: "lower-left-curving",
}


@dataclass(frozen=True, order=True)
class TonedSyllable:
    """A base pinyin syllable plus a tone number (5 = neutral)."""

    base: str
    tone: int

    def __post_init__(self):
        if not self.base or not set(self.base) <= LOWERCASE:
            raise ValueError(f"bad syllable base {self.base!r}")
        if len(self.base) > 6:
            raise ValueError(f"syllable base too long: {self.base!r}")
        if self.tone not in (1, 2, 3, 4, 5):
            raise ValueError(f"tone out of range: {self.tone}")

    def __str__(self) -> str:
        return f"{self.base}{self.tone}"


@dataclass(frozen=True)
class LexiconEntry:
    hanzi: str
    readings: tuple[TonedSyllable, ...]
    frequency: int
    stroke_code: Optional[str] = None


def is_cjk(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in _CJK_RANGES)


def _data_lines(path: Path):
    """Yield (lineno, stripped line) skipping comments and blank lines."""
    text = path.read_text(encoding="utf-8")
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        yield lineno, line


@dataclass(frozen=True)
class SyllableTable:
    """Acceptable base syllables, their attested tones, and abbreviations."""

    base_syllables: frozenset[str]
    toned_syllables: frozenset[TonedSyllable]
    abbreviations: Mapping[str, frozenset[str]]
    _prefixes: frozenset[str] = field(repr=False, default=frozenset())

    @staticmethod
    def build(bases_with_tones: Mapping[str, Iterable[int]],
              abbreviations: Mapping[str, Iterable[str]] | None = None) -> "SyllableTable":
        abbreviations = abbreviations or {}
        bases = frozenset(bases_with_tones)
        toned = frozenset(TonedSyllable(b, t)
                          for b, ts in bases_with_tones.items() for t in ts)
        prefixes = set()
        for b in bases:
            for i in range(1, len(b) + 1):
                prefixes.add(b[:i])
        return SyllableTable(
            base_syllables=bases,
            toned_syllables=toned,
            abbreviations={a: frozenset(exp) for a, exp in abbreviations.items()},
            _prefixes=frozenset(prefixes),
        )

    def status(self, buffer: str) -> ValidationResult:
        """Classify a composition buffer against the table.

        Empty buffers count as a valid prefix; an abbreviation is as good
        as a full syllable.
        """
        if buffer in self.base_syllables or buffer in self.abbreviations:
            return ValidationResult.VALID
        if buffer == "":
            return ValidationResult.VALID_PREFIX
        # _prefixes contains every prefix of every base; a full base was
        # already answered above, so membership here means strict prefix.
        if buffer in self._prefixes:
            return ValidationResult.VALID_PREFIX
        return ValidationResult.INVALID

    def expansions(self, buffer: str) -> frozenset[str]:
        """Expansion set for a registered abbreviation, else empty."""
        return self.abbreviations.get(buffer, frozenset())


@dataclass(frozen=True)
class RadicalKeyMap:
    entries: Mapping[str, str]
    stroke_class_of: Mapping[str, StrokeClass]

    def letter(self, radical: str) -> str:
        try:
            return self.entries[radical]
        except KeyError:
            raise KeyError(f"unknown radical: {radical!r}") from None


@dataclass(frozen=True)
class Lexicon:
    entries: tuple[LexiconEntry, ...]
    syllables: SyllableTable
    radicals: RadicalKeyMap
    by_reading: Mapping[tuple[TonedSyllable, ...], tuple[str, ...]]
    by_code: Mapping[str, frozenset[str]]

    def lookup_by_reading(self, reading: Sequence[TonedSyllable]) -> list[str]:
        """All hanzi with the given reading, best candidate first."""
        return list(self.by_reading.get(tuple(reading), ()))

    def lookup_by_code(self, code: str) -> frozenset[str]:
        return self.by_code.get(code, frozenset())


def rank_candidates(rows: Iterable[tuple[str, int]]) -> tuple[str, ...]:
    """Order (hanzi, frequency) rows: frequency desc, then codepoint asc."""
    return tuple(h for h, _ in sorted(rows, key=lambda r: (-r[1], r[0])))


def _parse_reading(token: str, path, lineno) -> TonedSyllable:
    if len(token) < 2 or token[-1] not in "12345":
        raise LexiconError(path, lineno,
                           f"reading {token!r} must be base letters plus a tone digit 1-5")
    base = token[:-1]
    if not set(base) <= LOWERCASE:
        raise LexiconError(path, lineno, f"reading base {base!r} has non a-z characters")
    return TonedSyllable(base, int(token[-1]))


def load_syllable_table(path) -> SyllableTable:
    """Parse the syllable table file.

    Lines are either `base` (all five tones attested), `base:digits`
    (only the listed tones) or `abbrev=exp1,exp2,...`.
    """
    path = Path(path)
    bases: dict[str, list[int]] = {}
    abbrevs: dict[str, set[str]] = {}
    for lineno, line in _data_lines(path):
        line = line.strip()
        if "=" in line:
            abbrev, _, rest = line.partition("=")
            exps = [e for e in rest.split(",") if e]
            if not exps:
                raise LexiconError(path, lineno, f"abbreviation {abbrev!r} has no expansions")
            if not set(abbrev) <= LOWERCASE:
                raise LexiconError(path, lineno, f"abbreviation {abbrev!r} has non a-z characters")
            abbrevs.setdefault(abbrev, set()).update(exps)
            continue
        base, _, tones = line.partition(":")
        if not base or not set(base) <= LOWERCASE:
            raise LexiconError(path, lineno, f"syllable {base!r} has non a-z characters")
        if base in bases:
            raise LexiconError(path, lineno, f"duplicate syllable {base!r}")
        if tones:
            if not set(tones) <= set("12345"):
                raise LexiconError(path, lineno, f"bad tone list {tones!r}")
            bases[base] = sorted(int(t) for t in set(tones))
        else:
            bases[base] = [1, 2, 3, 4, 5]
    for abbrev, exps in abbrevs.items():
        if abbrev in bases:
            raise LexiconError(path, 0,
                               f"abbreviation {abbrev!r} collides with a full syllable")
        for exp in exps:
            if exp not in bases:
                raise LexiconError(path, 0,
                                   f"abbreviation {abbrev!r} expands to unknown syllable {exp!r}")
            if not exp.startswith(abbrev) or exp == abbrev:
                raise LexiconError(path, 0,
                                   f"abbreviation {abbrev!r} is not a strict prefix of {exp!r}")
    return SyllableTable.build(bases, abbrevs)


def load_radical_map(path) -> RadicalKeyMap:
    """Parse the radical map: `radical<TAB>letter<TAB>stroke_class`."""
    path = Path(path)
    entries: dict[str, str] = {}
    classes: dict[str, StrokeClass] = {}
    for lineno, line in _data_lines(path):
        parts = line.split("\t")
        if len(parts) != 3:
            raise LexiconError(path, lineno, "expected radical<TAB>letter<TAB>class")
        radical, letter, cls = (p.strip() for p in parts)
        if letter not in LOWERCASE:
            raise LexiconError(path, lineno, f"key {letter!r} is not a lowercase letter")
        if radical in entries:
            raise LexiconError(path, lineno, f"duplicate radical {radical!r}")
        if cls not in {"1", "2", "3", "4", "5", "6"}:
            raise LexiconError(path, lineno, f"stroke class {cls!r} not in 1..6")
        entries[radical] = letter
        classes[radical] = StrokeClass(int(cls))
    if len(entries) != 26 or set(entries.values()) != LOWERCASE:
        raise LexiconError(path, 0,
                           "radical map must assign exactly the 26 letters to 26 radicals")
    return RadicalKeyMap(entries=entries, stroke_class_of=classes)


def load_lexicon(dictionary_path, syllable_path, radical_map_path) -> Lexicon:
    """Load and index the three data files into an immutable Lexicon."""
    syllables = load_syllable_table(syllable_path)
    radicals = load_radical_map(radical_map_path)
    dictionary_path = Path(dictionary_path)

    entries: list[LexiconEntry] = []
    seen_pairs: set[tuple[str, TonedSyllable]] = set()
    for lineno, line in _data_lines(dictionary_path):
        parts = line.split("\t")
        if len(parts) not in (3, 4):
            raise LexiconError(dictionary_path, lineno,
                               "expected hanzi<TAB>readings<TAB>frequency[<TAB>code]")
        hanzi, readings_s, freq_s = parts[0], parts[1], parts[2]
        code = parts[3].strip() if len(parts) == 4 and parts[3].strip() else None
        if len(hanzi) != 1 or not is_cjk(hanzi):
            raise LexiconError(dictionary_path, lineno,
                               f"entry {hanzi!r} must be a single CJK character")
        readings = tuple(_parse_reading(t, dictionary_path, lineno)
                         for t in readings_s.split(",") if t)
        if not readings:
            raise LexiconError(dictionary_path, lineno, "entry has no readings")
        if len(set(readings)) != len(readings):
            raise LexiconError(dictionary_path, lineno, f"duplicate reading on {hanzi!r}")
        for r in readings:
            if (hanzi, r) in seen_pairs:
                raise LexiconError(dictionary_path, lineno,
                                   f"duplicate (hanzi, reading) pair ({hanzi!r}, {r})")
            seen_pairs.add((hanzi, r))
        try:
            frequency = int(freq_s)
        except ValueError:
            frequency = -1
        if frequency < 0:
            raise LexiconError(dictionary_path, lineno,
                               f"frequency {freq_s!r} must be a non-negative integer")
        if code is not None:
            if not (1 <= len(code) <= 4):
                raise LexiconError(dictionary_path, lineno,
                                   f"stroke code {code!r} must be 1 to 4 letters")
            if not set(code) <= LOWERCASE:
                raise LexiconError(dictionary_path, lineno,
                                   f"stroke code {code!r} has non a-z characters")
        entries.append(LexiconEntry(hanzi, readings, frequency, code))

    by_reading_rows: dict[tuple[TonedSyllable, ...], list[tuple[str, int]]] = {}
    by_code: dict[str, set[str]] = {}
    for e in entries:
        for r in e.readings:
            by_reading_rows.setdefault((r,), []).append((e.hanzi, e.frequency))
        if e.stroke_code is not None:
            by_code.setdefault(e.stroke_code, set()).add(e.hanzi)

    return Lexicon(
        entries=tuple(entries),
        syllables=syllables,
        radicals=radicals,
        by_reading={k: rank_candidates(v) for k, v in by_reading_rows.items()},
        by_code={k: frozenset(v) for k, v in by_code.items()},
    )
