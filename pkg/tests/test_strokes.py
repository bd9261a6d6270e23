import collections
import random
import string

import pytest

from hantype.lexicon import StrokeClass, load_radical_map
from hantype.strokes import (
    CharacterDecomposition,
    classify_stroke,
    collision_report,
    decode_code,
    encode_character,
    load_decompositions,
    load_stroke_varieties,
    radical_key,
)

from conftest import FIXTURES, scan_dictionary


@pytest.fixture(scope="module")
def radmap(fixture_paths):
    return load_radical_map(fixture_paths["radicals"])


@pytest.fixture(scope="module")
def decomps(fixture_paths):
    return load_decompositions(fixture_paths["decomp"])


@pytest.fixture(scope="module")
def varieties(bundled_paths):
    return load_stroke_varieties(bundled_paths["varieties"])


def test_classify_stroke_table_rows(varieties):
    assert classify_stroke("一", varieties) == StrokeClass.HORIZONTAL
    assert classify_stroke("丨", varieties) == StrokeClass.VERTICAL
    assert classify_stroke("㇆", varieties) == StrokeClass.LOWER_LEFT_CURVING


def test_classify_unknown_glyph(varieties):
    with pytest.raises(KeyError, match="unknown stroke glyph"):
        classify_stroke("龍", varieties)


def test_classification_totality(varieties):
    assert varieties
    for glyph, cls in varieties.items():
        assert 1 <= int(cls) <= 6


def test_radical_key_reads_file(radmap, fixture_paths):
    # independent read of the raw file
    rows = [l.split("\t") for l in fixture_paths["radicals"].read_text(
        encoding="utf-8").splitlines() if l and not l.startswith("#")]
    for radical, letter, _cls in rows:
        assert radical_key(radmap, radical) == letter


def test_radical_keys_bijective(radmap):
    letters = {radical_key(radmap, r) for r in radmap.entries}
    assert letters == set(string.ascii_lowercase)
    assert len(radmap.entries) == 26


def test_unknown_radical_errors(radmap):
    with pytest.raises(KeyError):
        radical_key(radmap, "r99")


def test_encode_concatenates(radmap):
    assert encode_character(radmap, CharacterDecomposition("好", ("r18", "r19"))) == "rs"


def test_encode_single_radical(radmap):
    assert encode_character(radmap, CharacterDecomposition("一", ("r01",))) == "a"


def test_encode_truncates_long_decomposition(radmap, decomps):
    d = decomps["樹"]
    assert len(d.radicals) == 6
    # by hand: first three keys h,g,a then the last radical's key s
    assert encode_character(radmap, d) == "hgas"


def test_encode_empty_errors(radmap):
    with pytest.raises(ValueError, match="empty"):
        encode_character(radmap, CharacterDecomposition("x", ()))


def test_encode_length_bound_fuzz(radmap):
    rng = random.Random(7)
    rads = sorted(radmap.entries)
    for _ in range(500):
        decomp = CharacterDecomposition(
            "字", tuple(rng.choice(rads) for _ in range(rng.randint(1, 10))))
        assert 1 <= len(encode_character(radmap, decomp)) <= 4


def test_decode_round_trip(lex, radmap, decomps):
    coded = {e.hanzi: e.stroke_code for e in lex.entries if e.stroke_code}
    assert coded
    for hanzi, code in coded.items():
        d = decomps[hanzi]
        assert encode_character(radmap, d) == code
        assert hanzi in decode_code(lex, code)


def test_decode_unused_code(lex):
    assert decode_code(lex, "qqqq") == frozenset()


def test_decode_collision(lex):
    assert decode_code(lex, "il") == {"汨", "沓"}


def test_collision_report_fixture(lex):
    report = collision_report(lex)
    assert report.colliding_codes == 1
    assert report.worst[0][0] == "il"
    assert len(report.worst[0][1]) == 2


def test_collision_report_collision_free(fixture_paths, tmp_path):
    from hantype.lexicon import load_lexicon

    clean = tmp_path / "clean.tsv"
    clean.write_text("好\thao3\t10\trs\n你\tni3\t20\tab\n", encoding="utf-8")
    lex = load_lexicon(clean, fixture_paths["syllables"], fixture_paths["radicals"])
    report = collision_report(lex)
    assert report.colliding_codes == 0 and report.worst == ()


def test_collision_report_matches_groupby_oracle(bundled_lex, bundled_paths):
    # independent group-by over the raw TSV
    groups = collections.defaultdict(set)
    for hanzi, _readings, _freq, code in scan_dictionary(bundled_paths["dict"]):
        if code:
            groups[code].add(hanzi)
    report = collision_report(bundled_lex)
    assert report.total_codes == len(groups)
    colliding = {c: hs for c, hs in groups.items() if len(hs) >= 2}
    assert report.colliding_codes == len(colliding)
    assert {c: set(hs) for c, hs in report.worst} == colliding


def test_report_json_shape(lex):
    import json

    payload = json.loads(collision_report(lex).to_json())
    assert set(payload) == {"total_codes", "colliding_codes", "worst"}
    assert payload["worst"][0]["code"] == "il"
