"""Command-line pipeline: extract, train, bracket, evaluate.

Results go to standard output, logs and summaries to standard error.
Exit codes: 0 success, 1 usage error, 2 data or format error.

The environment variable CN_BRACKET_SEED is reserved but unused: no
subcommand has a stochastic step, so the pipeline is deterministic.
"""

import argparse
import logging
import sys
from collections import Counter
from dataclasses import dataclass

from . import __version__
from .association import build_freq, count_pairs, load_model, save_model
from .bracketer import (
    analyse_compound,
    analyse_triple,
    explain_nodes,
    format_tree,
)
from .errors import Error
from .evaluation import evaluate, load_test_set, report, write_records
from .extraction import extract_sequences, partition, read_sequences, write_sequences
from .lexicon import Lexicon
from .thesaurus import Thesaurus


@dataclass
class Config:
    """Resolved pipeline settings for one subcommand invocation."""

    lexicon_path: str = None
    thesaurus_path: str = None
    model_path: str = None
    left_bias: float = 1.0
    max_sequence_len: int = 8


class _Parser(argparse.ArgumentParser):
    # Usage problems exit 1; exit code 2 is reserved for data errors.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_float(text):
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _seq_cap(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 3:
        raise argparse.ArgumentTypeError("must be at least 3")
    return value


def build_parser():
    parser = _Parser(prog="cnbracket", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("extract", help="scan a corpus for noun runs")
    p.add_argument("--lexicon", required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--max-seq-len", type=_seq_cap, default=8,
                   help="drop runs longer than this (default 8)")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("train", help="build an association model from pairs")
    p.add_argument("--thesaurus", required=True)
    p.add_argument("--sequences", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("bracket", help="bracket one compound")
    p.add_argument("--model", required=True)
    p.add_argument("--thesaurus", required=True)
    p.add_argument("--explain", action="store_true",
                   help="print per-node category evidence")
    p.add_argument("--left-bias", type=_positive_float, default=1.0)
    p.add_argument("nouns", metavar="NOUNS", help="space-separated nouns, quoted")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("evaluate", help="score a labeled test set")
    p.add_argument("--model", required=True)
    p.add_argument("--thesaurus", required=True)
    p.add_argument("--test", required=True)
    p.add_argument("--records", help="write per-example TSV records here")
    p.add_argument("--left-bias", type=_positive_float, default=1.0)
    p.set_defaults(func=cmd_evaluate)
    return parser


def cmd_extract(args):
    config = Config(lexicon_path=args.lexicon, max_sequence_len=args.max_seq_len)
    lex = Lexicon.load(config.lexicon_path)
    with open(args.corpus, encoding="utf-8") as fh:
        text = fh.read()
    seqs = extract_sequences(text, lex, config.max_sequence_len)
    write_sequences(seqs, args.out)
    pairs, ambiguous = partition(seqs)
    print(
        f"extracted: sequences={len(seqs)} pairs={len(pairs)} ambiguous={len(ambiguous)}",
        file=sys.stderr,
    )
    return 0


def cmd_train(args):
    th = Thesaurus.load(args.thesaurus)
    seqs = read_sequences(args.sequences)
    pairs = [(s.nouns[0], s.nouns[1]) for s in seqs if len(s.nouns) == 2]
    ignored_long = len(seqs) - len(pairs)
    pc = count_pairs(pairs)
    model = build_freq(pc, th)
    save_model(model, args.out)
    print(
        f"trained: pairs={pc.total_pairs} skipped_pairs={model.skipped_pairs} "
        f"ignored_long={ignored_long} cells={len(model.freq)}",
        file=sys.stderr,
    )
    return 0


def cmd_bracket(args):
    model = load_model(args.model)
    th = Thesaurus.load(args.thesaurus)
    nouns = tuple(word.lower() for word in args.nouns.split())
    if len(nouns) < 2:
        print("error: need at least two nouns", file=sys.stderr)
        return 2
    if len(nouns) == 3:
        label, _ = analyse_triple(model, th, *nouns, left_bias=args.left_bias)
        if label == "L":
            tree = ((nouns[0], nouns[1]), nouns[2])
        else:
            tree = (nouns[0], (nouns[1], nouns[2]))
    else:
        tree, _, _ = analyse_compound(model, th, nouns, left_bias=args.left_bias)
    print(format_tree(tree))
    if args.explain:
        for lh, rh, pair in explain_nodes(model, th, tree):
            print(
                f"{lh} {rh} S={pair.s}:{th.name_of(pair.s)} "
                f"T={pair.t}:{th.name_of(pair.t)} CA={float(pair.value):.6g}"
            )
    return 0


def cmd_evaluate(args):
    model = load_model(args.model)
    th = Thesaurus.load(args.thesaurus)
    examples = load_test_set(args.test)
    matrix, records = evaluate(model, th, examples, left_bias=args.left_bias)
    histogram = Counter(ex.label for ex in examples)
    sys.stdout.write(report(matrix, histogram))
    if args.records:
        write_records(records, args.records)
    print(f"evaluated: examples={len(examples)} skipped={matrix.skipped}", file=sys.stderr)
    return 0


def run(argv=None):
    logging.basicConfig(stream=sys.stderr, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args)
    except (Error, OSError, UnicodeDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())
