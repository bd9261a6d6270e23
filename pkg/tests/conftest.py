import pathlib

import pytest

from hantype import engine, lexicon

FIXTURES = pathlib.Path(__file__).parent / "fixtures"
BUNDLED = pathlib.Path(__file__).parent.parent / "src" / "hantype" / "data"


@pytest.fixture(scope="session")
def fixture_paths():
    return {
        "dict": FIXTURES / "dictionary.tsv",
        "syllables": FIXTURES / "syllables.txt",
        "radicals": FIXTURES / "radicals.tsv",
        "decomp": FIXTURES / "decompositions.tsv",
        "bpmf": FIXTURES / "bpmf_layout.tsv",
    }


@pytest.fixture(scope="session")
def lex(fixture_paths):
    return lexicon.load_lexicon(fixture_paths["dict"], fixture_paths["syllables"],
                                fixture_paths["radicals"])


@pytest.fixture(scope="session")
def table(lex):
    return lex.syllables


@pytest.fixture(scope="session")
def bpmf(fixture_paths):
    return engine.load_bpmf_layout(fixture_paths["bpmf"])


@pytest.fixture(scope="session")
def bundled_paths():
    return {
        "dict": BUNDLED / "dictionary.tsv",
        "syllables": BUNDLED / "syllables.txt",
        "radicals": BUNDLED / "radicals.tsv",
        "decomp": BUNDLED / "decompositions.tsv",
        "bpmf": BUNDLED / "bpmf_layout.tsv",
        "varieties": BUNDLED / "stroke_varieties.tsv",
    }


@pytest.fixture(scope="session")
def bundled_lex(bundled_paths):
    return lexicon.load_lexicon(bundled_paths["dict"], bundled_paths["syllables"],
                                bundled_paths["radicals"])


def scan_dictionary(path):
    """Independent TSV oracle: parse the raw dictionary file with no help
    from the lexicon module. Yields (hanzi, [(base, tone)...], freq, code).
    """
    for raw in pathlib.Path(path).read_text(encoding="utf-8").splitlines():
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        parts = raw.split("\t")
        hanzi, readings, freq = parts[0], parts[1], int(parts[2])
        code = parts[3] if len(parts) > 3 and parts[3] else None
        parsed = [(tok[:-1], int(tok[-1])) for tok in readings.split(",")]
        yield hanzi, parsed, freq, code


def reading_oracle(path, base, tone):
    """Linear-scan candidates for one reading: freq desc, codepoint asc."""
    rows = [(h, f) for h, rs, f, _ in scan_dictionary(path) if (base, tone) in rs]
    rows.sort(key=lambda r: (-r[1], r[0]))
    return [h for h, _ in rows]
