import itertools
import string

from hypothesis import given, strategies as st

from hantype.engine import segment_phonetic
from hantype.lexicon import load_syllable_table

from conftest import FIXTURES


def enumerate_segmentations(bases, text):
    """Brute force: every way to split text into table syllables."""
    if text == "":
        return [[]]
    out = []
    for i in range(1, len(text) + 1):
        head = text[:i]
        if head in bases:
            for rest in enumerate_segmentations(bases, text[i:]):
                out.append([head] + rest)
    return out


def policy_best(bases, text):
    """Policy optimum over the exhaustive enumeration: fewest segments,
    then lexicographically longest segment lengths from the front."""
    all_segs = enumerate_segmentations(bases, text)
    if not all_segs:
        return None
    return min(all_segs, key=lambda segs: (len(segs), [-len(s) for s in segs]))


TABLE = load_syllable_table(FIXTURES / "syllables.txt")


def test_whole_syllable_preferred():
    assert segment_phonetic(TABLE, "xian") == ["xian"]
    assert policy_best(TABLE.base_syllables, "xian") == ["xian"]


def test_single_syllable():
    assert segment_phonetic(TABLE, "ma") == ["ma"]


def test_no_segmentation():
    assert segment_phonetic(TABLE, "mq") is None
    assert policy_best(TABLE.base_syllables, "mq") is None


def test_nia_splits():
    # "nia" is not in the table but "ni" and "a" are
    assert segment_phonetic(TABLE, "nia") == ["ni", "a"]


def test_matches_bruteforce_short_strings():
    bases = TABLE.base_syllables
    for n in range(1, 6):
        for tup in itertools.product("ainx", repeat=n):
            text = "".join(tup)
            assert segment_phonetic(TABLE, text) == policy_best(bases, text), text


@given(st.text(alphabet=string.ascii_lowercase, min_size=1, max_size=10))
def test_soundness(text):
    segs = segment_phonetic(TABLE, text)
    if segs is not None:
        assert "".join(segs) == text
        assert all(s in TABLE.base_syllables for s in segs)


@given(st.lists(st.sampled_from(sorted(TABLE.base_syllables)), min_size=1, max_size=4))
def test_concatenations_always_segmentable(sylls):
    text = "".join(sylls)
    segs = segment_phonetic(TABLE, text)
    assert segs is not None
    assert "".join(segs) == text
