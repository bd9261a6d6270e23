"""hantype: a Chinese input-method engine for the 26-key keyboard.

Two entry schemes: toned pinyin (with BPMF key relabeling) converted to
hanzi on a delimiter, and 1-4 letter radical stroke codes. Ships a batch
CLI, a local HTTP session service and bundled dictionary fixtures.
"""
from .engine import (
    BpmfLayout,
    EngineEvent,
    InputSession,
    KeyInput,
    KeyKind,
    Layout,
    Mode,
    bpmf_to_letters,
    convert_text,
    load_bpmf_layout,
    match_abbreviation,
    new_session,
    render_toned,
    segment_phonetic,
)
from .lexicon import (
    Lexicon,
    LexiconEntry,
    LexiconError,
    RadicalKeyMap,
    StrokeClass,
    SyllableTable,
    TonedSyllable,
    ValidationResult,
    load_lexicon,
    load_radical_map,
    load_syllable_table,
)
from .strokes import (
    CharacterDecomposition,
    CollisionReport,
    classify_stroke,
    collision_report,
    decode_code,
    encode_character,
    load_decompositions,
    load_stroke_varieties,
    radical_key,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
