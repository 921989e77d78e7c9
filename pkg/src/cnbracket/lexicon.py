"""Part-of-speech lexicon with plural-to-singular noun normalization.

The lexicon file is a two-column TSV: ``<surface><TAB><tags>``, where tags
is a string of one-letter codes (N = noun; V, A, O all count as "other").
A word is an unambiguous noun only when its tag set is exactly {noun}.
"""

from .errors import FormatError

NOUN = "N"
OTHER = "O"

_TAG_MAP = {"N": NOUN, "V": OTHER, "A": OTHER, "O": OTHER}

# Suffixes whose -es is stripped whole ("branches" -> "branch").
_ES_SUFFIXES = ("ches", "shes", "ses", "xes", "zes")


def _plural_candidates(word):
    """Singular candidates for a surface form, most specific rule first."""
    if len(word) > 3 and word.endswith("ies"):
        yield word[:-3] + "y"
    if len(word) > 3 and word.endswith(_ES_SUFFIXES):
        yield word[:-2]
    if len(word) > 1 and word.endswith("s") and not word.endswith("ss"):
        yield word[:-1]


class Lexicon:
    """Maps lowercase surface forms to part-of-speech tag sets."""

    def __init__(self, entries=None):
        self.entries = dict(entries or {})

    def __len__(self):
        return len(self.entries)

    @classmethod
    def load(cls, path):
        """Read a lexicon file; duplicate surfaces merge their tag sets.

        Lines starting with ``#`` and blank lines are ignored.  Raises
        FormatError (with the line number) on anything else that does not
        parse, including non-alphabetic surfaces and unknown tag codes.
        """
        entries = {}
        with open(path, encoding="utf-8") as fh:
            for line_no, raw in enumerate(fh, start=1):
                line = raw.rstrip("\n")
                if not line.strip() or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 2:
                    raise FormatError(path, line_no, "expected <surface><TAB><tags>")
                surface = parts[0].strip().lower()
                tags = parts[1].strip()
                if not surface.isalpha():
                    raise FormatError(path, line_no, f"surface {surface!r} is not alphabetic")
                if not tags or any(c not in _TAG_MAP for c in tags):
                    raise FormatError(path, line_no, f"bad tag string {tags!r}")
                entries.setdefault(surface, set()).update(_TAG_MAP[c] for c in tags)
        return cls(entries)

    def tags(self, surface):
        """Tag set for a surface form, or None when the word is unknown."""
        return self.entries.get(surface.lower())

    def is_unambiguous_noun(self, surface):
        """True when the surface is alphabetic and tagged only as a noun."""
        key = surface.lower()
        return key.isalpha() and self.entries.get(key) == {NOUN}

    def normalize(self, surface):
        """Reduce a plural to the singular lemma the lexicon confirms.

        Suffix rules are tried in order and a candidate is accepted only
        if it is an unambiguous noun; reduction repeats until no rule
        applies, which keeps the operation idempotent.  If nothing is
        accepted the surface is returned unchanged.
        """
        lemma = surface.lower()
        if not lemma.isalpha():
            return surface
        reduced = True
        while reduced:
            reduced = False
            for candidate in _plural_candidates(lemma):
                if self.is_unambiguous_noun(candidate):
                    lemma = candidate
                    reduced = True
                    break
        return lemma if lemma != surface.lower() else surface
