"""Noun-run extraction from raw corpus text.

A token is a maximal run of non-whitespace characters; tokens containing
any non-alphabetic character are never nouns, so commas and other
punctuation break candidate runs.  Runs also never cross a paragraph
boundary (whitespace containing two consecutive newlines).
"""

import logging
import re
from dataclasses import dataclass

from .errors import FormatError

logger = logging.getLogger(__name__)

DEFAULT_MAX_RUN = 8

_TOKEN = re.compile(r"\S+")


@dataclass(frozen=True)
class NounSequence:
    """A maximal run of unambiguous nouns, already normalized."""

    nouns: tuple
    source_offset: int

    def __len__(self):
        return len(self.nouns)


def _noun_lemma(lex, token):
    """Singular lemma when the token is an unambiguous noun, else None."""
    if not token.isalpha():
        return None
    lemma = lex.normalize(token.lower())
    if lex.is_unambiguous_noun(lemma):
        return lemma
    return None


def extract_sequences(text, lex, max_run=DEFAULT_MAX_RUN):
    """All maximal noun runs of length >= 2, in corpus order.

    Runs longer than max_run are usually extraction noise and are dropped
    with a warning rather than truncated.
    """
    sequences = []
    run = []  # [(lemma, token start offset)]

    def flush():
        if len(run) >= 2:
            if len(run) > max_run:
                logger.warning(
                    "dropping %d-noun run at offset %d (cap %d)",
                    len(run), run[0][1], max_run,
                )
            else:
                sequences.append(
                    NounSequence(tuple(lemma for lemma, _ in run), run[0][1])
                )
        run.clear()

    prev_end = None
    for match in _TOKEN.finditer(text):
        if prev_end is not None and "\n\n" in text[prev_end:match.start()]:
            flush()
        prev_end = match.end()
        lemma = _noun_lemma(lex, match.group())
        if lemma is None:
            flush()
        else:
            run.append((lemma, match.start()))
    flush()
    return sequences


def partition(seqs):
    """Split runs into training pairs (length 2) and ambiguous compounds.

    Pairs are (modifier, head) in surface order.  Sub-pairs of longer runs
    are never harvested; the two sides partition the input exactly.
    """
    pairs = []
    ambiguous = []
    for seq in seqs:
        if len(seq.nouns) == 2:
            pairs.append((seq.nouns[0], seq.nouns[1]))
        else:
            ambiguous.append(seq)
    return pairs, ambiguous


def write_sequences(seqs, path):
    """Write one run per line: space-joined nouns, TAB, source offset."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for seq in seqs:
            fh.write(f"{' '.join(seq.nouns)}\t{seq.source_offset}\n")


def read_sequences(path):
    """Read a sequence file back into NounSequence records."""
    seqs = []
    with open(path, encoding="utf-8") as fh:
        for line_no, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise FormatError(path, line_no, "expected <nouns><TAB><offset>")
            nouns = tuple(parts[0].split())
            if len(nouns) < 2:
                raise FormatError(path, line_no, "sequence shorter than two nouns")
            try:
                offset = int(parts[1])
            except ValueError:
                raise FormatError(path, line_no, f"bad offset {parts[1]!r}") from None
            seqs.append(NounSequence(nouns, offset))
    return seqs
