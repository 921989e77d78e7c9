"""Category-pair association statistics built from two-noun training pairs.

Each training pair (w1, w2) spreads one unit of mass over the cross
product of the categories holding w1 and w2, discounted by both words'
ambiguity.  The association of an ordered category pair is its mass
divided by the product of its row and column totals; the measure is
asymmetric.

Tables are kept as exact rationals: every cell is a sum of count/(a1*a2)
terms with small integers, and the bracketer compares association values
and their products, where float rounding would make tie handling depend
on corpus scale.  The model file stores cells as 17-significant-digit
decimals (exact for binary doubles), so a freshly built model snaps to
double precision on its first save; a saved model reloads bit for bit.
"""

import re
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ChecksumMismatch, FormatError

ZERO = Fraction(0)

_HEADER = re.compile(r"#cn-assoc v1 cells=(\d+) mass=(\S+)$")


@dataclass
class PairCounts:
    """Multiplicities of ordered (modifier, head) training pairs."""

    counts: Counter

    @property
    def total_pairs(self):
        return sum(self.counts.values())


def count_pairs(pairs):
    """Tally ordered (modifier, head) pairs; order is significant."""
    return PairCounts(Counter(pairs))


def _marginals(freq):
    row_sum = {}
    col_sum = {}
    mass = ZERO
    for (t1, t2), value in freq.items():
        row_sum[t1] = row_sum.get(t1, ZERO) + value
        col_sum[t2] = col_sum.get(t2, ZERO) + value
        mass += value
    return row_sum, col_sum, mass


@dataclass
class AssociationModel:
    """Sparse category-pair mass table with precomputed marginals."""

    freq: dict = field(default_factory=dict)  # (t1, t2) -> mass
    row_sum: dict = field(default_factory=dict)
    col_sum: dict = field(default_factory=dict)
    trained_mass: Fraction = ZERO
    skipped_pairs: int = 0

    def ca(self, t1, t2):
        """Association strength of t1 modifying t2; 0 for untrained pairs."""
        value = self.freq.get((t1, t2), ZERO)
        if value == 0:
            return ZERO
        return value / (self.row_sum[t1] * self.col_sum[t2])


def build_freq(pc, th):
    """Distribute pair counts over category pairs, discounting ambiguity.

    Pairs whose modifier or head appears in no category are skipped and
    tallied; every retained pair contributes total mass exactly 1 per
    occurrence, so trained_mass equals the non-skipped pair count.
    """
    freq = {}
    skipped = 0
    for (w1, w2), count in pc.counts.items():
        cats1 = th.categories_of(w1)
        cats2 = th.categories_of(w2)
        if not cats1 or not cats2:
            skipped += count
            continue
        weight = Fraction(count, len(cats1) * len(cats2))
        for t1 in cats1:
            for t2 in cats2:
                key = (t1, t2)
                freq[key] = freq.get(key, ZERO) + weight
    row_sum, col_sum, mass = _marginals(freq)
    return AssociationModel(freq, row_sum, col_sum, mass, skipped)


def save_model(model, path):
    """Write the model as TSV: header line, then cells sorted by (t1, t2)."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(
            f"#cn-assoc v1 cells={len(model.freq)} mass={float(model.trained_mass):.17g}\n"
        )
        for (t1, t2), value in sorted(model.freq.items()):
            fh.write(f"{t1}\t{t2}\t{float(value):.17g}\n")


def load_model(path):
    """Read a model file; marginals are recomputed from the cells."""
    freq = {}
    with open(path, encoding="utf-8") as fh:
        header = fh.readline().rstrip("\n")
        match = _HEADER.match(header)
        if not match:
            raise FormatError(path, 1, "bad model header")
        declared = int(match.group(1))
        try:
            mass = Fraction(float(match.group(2)))
        except (ValueError, OverflowError):
            raise FormatError(path, 1, f"bad mass {match.group(2)!r}") from None
        for line_no, raw in enumerate(fh, start=2):
            line = raw.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise FormatError(path, line_no, "expected <t1><TAB><t2><TAB><freq>")
            try:
                key = (int(parts[0]), int(parts[1]))
                value = Fraction(float(parts[2]))
            except (ValueError, OverflowError):
                raise FormatError(path, line_no, f"bad cell line {line!r}") from None
            if key in freq:
                raise FormatError(path, line_no, f"duplicate cell {key}")
            freq[key] = value
    if len(freq) != declared:
        raise ChecksumMismatch(path, declared, len(freq))
    row_sum, col_sum, _ = _marginals(freq)
    return AssociationModel(freq, row_sum, col_sum, mass)
