"""Command-line entry points: batch conversion, stroke encode/decode,
segmentation, collision stats and the session server.
"""
from __future__ import annotations

import argparse
import errno
import sys
from importlib import resources

from . import engine, lexicon, strokes

EXIT_OK = 0
EXIT_EMPTY = 1
EXIT_ERROR = 2


def _bundled(name: str) -> str:
    return str(resources.files("hantype").joinpath("data", name))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hantype",
        description="Chinese input-method engine: pinyin and stroke-code entry.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_data_flags(p, decomp=False):
        p.add_argument("--dict", dest="dict_path", default=_bundled("dictionary.tsv"),
                       help="dictionary TSV (default: bundled)")
        p.add_argument("--syllables", default=_bundled("syllables.txt"),
                       help="syllable table file (default: bundled)")
        p.add_argument("--radicals", default=_bundled("radicals.tsv"),
                       help="radical key map file (default: bundled)")
        if decomp:
            p.add_argument("--decomp", default=_bundled("decompositions.tsv"),
                           help="character decomposition file (default: bundled)")

    p = sub.add_parser("convert", help="convert pinyin lines on stdin to hanzi")
    add_data_flags(p)

    p = sub.add_parser("encode", help="print the stroke code of a character")
    add_data_flags(p, decomp=True)
    p.add_argument("hanzi")

    p = sub.add_parser("decode", help="print the characters for a stroke code")
    add_data_flags(p)
    p.add_argument("code")

    p = sub.add_parser("segment", help="split a letter string into syllables")
    add_data_flags(p)
    p.add_argument("text")

    p = sub.add_parser("stats", help="print collision statistics as JSON")
    add_data_flags(p)
    p.add_argument("--figure", default=None,
                   help="also render a collision bar chart to this file")

    p = sub.add_parser("serve", help="run the local session server")
    add_data_flags(p)
    p.add_argument("--bpmf", default=_bundled("bpmf_layout.tsv"),
                   help="BPMF key layout file (default: bundled)")
    p.add_argument("--port", type=int, default=8765)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", default=None,
                   help="directory of client assets served at /")

    return parser


def _load(args) -> lexicon.Lexicon:
    return lexicon.load_lexicon(args.dict_path, args.syllables, args.radicals)


def cmd_convert(args) -> int:
    lex = _load(args)
    for line in sys.stdin:
        print(engine.convert_text(lex, line.rstrip("\n")))
    return EXIT_OK


def cmd_encode(args) -> int:
    decomps = strokes.load_decompositions(args.decomp)
    radmap = lexicon.load_radical_map(args.radicals)
    decomp = decomps.get(args.hanzi)
    if decomp is None:
        return EXIT_EMPTY
    print(strokes.encode_character(radmap, decomp))
    return EXIT_OK


def cmd_decode(args) -> int:
    lex = _load(args)
    chars = sorted(strokes.decode_code(lex, args.code))
    if not chars:
        return EXIT_EMPTY
    for ch in chars:
        print(ch)
    return EXIT_OK


def cmd_segment(args) -> int:
    table = lexicon.load_syllable_table(args.syllables)
    segs = engine.segment_phonetic(table, args.text)
    if segs is None:
        return EXIT_EMPTY
    print(" ".join(segs))
    return EXIT_OK


def cmd_stats(args) -> int:
    lex = _load(args)
    report = strokes.collision_report(lex)
    print(report.to_json())
    if args.figure:
        from .report import render_collision_figure

        render_collision_figure(report, args.figure)
    return EXIT_OK


def cmd_serve(args) -> int:
    from .service import create_app, run_server

    lex = _load(args)
    bpmf = engine.load_bpmf_layout(args.bpmf)
    app = create_app(lex, bpmf_layout=bpmf, static_dir=args.static)
    try:
        run_server(app, port=args.port, host=args.host)
    except OSError as exc:
        if exc.errno == errno.EADDRINUSE:
            print(f"port {args.port} is already in use", file=sys.stderr)
            return EXIT_ERROR
        raise
    except SystemExit as exc:
        # uvicorn exits on startup failure (typically a busy port)
        if exc.code not in (None, 0):
            print(f"server failed to start on port {args.port}", file=sys.stderr)
            return EXIT_ERROR
    return EXIT_OK


_COMMANDS = {
    "convert": cmd_convert,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "segment": cmd_segment,
    "stats": cmd_stats,
    "serve": cmd_serve,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.subcommand](args)
    except (lexicon.LexiconError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
