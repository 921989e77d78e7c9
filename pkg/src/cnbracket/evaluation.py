"""Test-set evaluation: label distribution and a 2x2 outcome matrix.

Test files are TSV lines ``<space-separated nouns><TAB><label>`` with
labels L (left-branching), R (right-branching), I (indeterminate in
context) and E (not a compound noun).  Only L/R triples are scored; all
other examples are counted as skipped with a machine-readable reason.
"""

import math
from dataclasses import dataclass

from .bracketer import analyse_triple
from .errors import FormatError, UnknownLabel, WordNotInThesaurus

LABELS = ("L", "R", "I", "E")

INDETERMINATE = "INDETERMINATE"
NOT_CN = "NOT_CN"
NOT_TRIPLE = "NOT_TRIPLE"
WORD_NOT_IN_THESAURUS = "WORD_NOT_IN_THESAURUS"


@dataclass(frozen=True)
class EvalExample:
    nouns: tuple
    label: str


@dataclass
class ConfusionMatrix:
    """Actual-by-output counts over {L, R}, plus a skipped tally."""

    ll: int = 0
    lr: int = 0
    rl: int = 0
    rr: int = 0
    skipped: int = 0

    def add(self, actual, output):
        if actual == "L":
            if output == "L":
                self.ll += 1
            else:
                self.lr += 1
        else:
            if output == "L":
                self.rl += 1
            else:
                self.rr += 1

    @property
    def total(self):
        return self.ll + self.lr + self.rl + self.rr

    @property
    def correct(self):
        return self.ll + self.rr

    @property
    def accuracy(self):
        return self.correct / self.total


@dataclass
class EvalRecord:
    """Per-example outcome: either an output with its trace, or a skip."""

    example: EvalExample
    output: str = None
    correct: bool = None
    skip_reason: str = None
    trace: object = None


def load_test_set(path):
    """Read labeled examples; labels are validated against L/R/I/E."""
    examples = []
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise FormatError(path, line_no, "expected <nouns><TAB><label>")
            label = parts[1].strip()
            if label not in LABELS:
                raise UnknownLabel(path, line_no, f"unknown label {label!r}")
            nouns = tuple(parts[0].split())
            if len(nouns) < 3:
                raise FormatError(path, line_no, "need at least three nouns")
            examples.append(EvalExample(nouns, label))
    return examples


def evaluate(model, th, examples, left_bias=1.0):
    """Run the bracketer over the examples.

    I and E examples, non-triples, and examples with out-of-thesaurus
    words are skipped with a reason; every L/R triple lands in exactly
    one matrix cell.
    """
    matrix = ConfusionMatrix()
    records = []
    for ex in examples:
        rec = EvalRecord(ex)
        if ex.label == "I":
            rec.skip_reason = INDETERMINATE
        elif ex.label == "E":
            rec.skip_reason = NOT_CN
        elif len(ex.nouns) != 3:
            rec.skip_reason = NOT_TRIPLE
        else:
            try:
                output, trace = analyse_triple(model, th, *ex.nouns, left_bias=left_bias)
            except WordNotInThesaurus:
                rec.skip_reason = WORD_NOT_IN_THESAURUS
            else:
                rec.output = output
                rec.trace = trace
                rec.correct = output == ex.label
                matrix.add(ex.label, output)
        if rec.skip_reason:
            matrix.skipped += 1
        records.append(rec)
    return matrix, records


def _pct(count, total):
    # Integer percentage, rounding halves away from zero.
    if total == 0:
        return 0
    return math.floor(100 * count / total + 0.5)


def report(matrix, label_histogram):
    """Fixed-layout text report: label table, outcome matrix, accuracy."""
    total = sum(label_histogram.get(label, 0) for label in LABELS)
    lines = ["Label distribution:", "  label  count  fraction"]
    for label in LABELS:
        count = label_histogram.get(label, 0)
        lines.append(f"  {label:<5}  {count:>5}  {_pct(count, total):>7}%")
    lines.append(f"  {'total':<5}  {total:>5}  {100 if total else 0:>7}%")
    lines.append("")
    if matrix.total == 0:
        lines.append("no scorable examples")
    else:
        lines.append("Bracketing results:")
        lines.append("            output L  output R")
        lines.append(f"  actual L  {matrix.ll:>8}  {matrix.lr:>8}")
        lines.append(f"  actual R  {matrix.rl:>8}  {matrix.rr:>8}")
        lines.append("")
        lines.append(
            f"Accuracy: {matrix.correct}/{matrix.total} = {100 * matrix.accuracy:.1f}%"
        )
    lines.append(f"Skipped: {matrix.skipped}")
    return "\n".join(lines) + "\n"


def _trace_summary(trace):
    p2 = trace.attachments[2]
    p3 = trace.attachments[3]
    parts = [
        f"S2={p2.s} T2={p2.t} CA2={float(p2.value):.6g}",
        f"S3={p3.s} T3={p3.t} CA3={float(p3.value):.6g}",
        f"winner={trace.winner}",
    ]
    if trace.tie:
        parts.append("tie")
    return " ".join(parts)


def write_records(records, path):
    """Per-example TSV: nouns, label, output, correct?, skip reason, trace."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("# nouns\tlabel\toutput\tcorrect\tskip_reason\ttrace\n")
        for rec in records:
            correct = "" if rec.correct is None else ("yes" if rec.correct else "no")
            fh.write("\t".join([
                " ".join(rec.example.nouns),
                rec.example.label,
                rec.output or "",
                correct,
                rec.skip_reason or "",
                _trace_summary(rec.trace) if rec.trace else "",
            ]) + "\n")
