"""Thesaurus category index: word-to-category lookup and ambiguity.

The thesaurus file has one category per line:
``<id><TAB><name><TAB><comma-separated member nouns>``.  Only single-word
entries are kept.  A converter for full Roget-style exports lives in
cnbracket.roget.
"""

import logging

from .errors import DuplicateCategory, FormatError

logger = logging.getLogger(__name__)


class Thesaurus:
    """Immutable category-to-members index with its word-level transpose."""

    def __init__(self, members, names=None):
        self.members = {cat: set(words) for cat, words in members.items()}
        self.names = dict(names or {})
        self.inverse = {}
        for cat, words in self.members.items():
            for word in words:
                self.inverse.setdefault(word, set()).add(cat)

    @property
    def category_count(self):
        return len(self.members)

    @classmethod
    def load(cls, path, lex=None):
        """Read a thesaurus file.

        Multi-word member entries are skipped with a warning.  When a
        lexicon is given, members are normalized through it so thesaurus
        forms and corpus forms meet in the same lemma space.
        """
        members = {}
        names = {}
        with open(path, encoding="utf-8") as fh:
            for line_no, raw in enumerate(fh, start=1):
                line = raw.rstrip("\n")
                if not line.strip() or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 3:
                    raise FormatError(path, line_no, "expected <id><TAB><name><TAB><members>")
                try:
                    cat = int(parts[0])
                except ValueError:
                    raise FormatError(path, line_no, f"bad category id {parts[0]!r}") from None
                if cat <= 0:
                    raise FormatError(path, line_no, f"category id must be positive: {cat}")
                if cat in members:
                    raise DuplicateCategory(path, line_no, f"category {cat} repeated")
                name = parts[1].strip()
                if not name:
                    raise FormatError(path, line_no, "empty category name")
                words = set()
                for entry in parts[2].split(","):
                    entry = entry.strip().lower()
                    if not entry:
                        continue
                    if " " in entry:
                        logger.warning("%s:%d: skipping multi-word entry %r", path, line_no, entry)
                        continue
                    words.add(lex.normalize(entry) if lex else entry)
                if not words:
                    raise FormatError(path, line_no, "category has no single-word members")
                members[cat] = words
                names[cat] = name
        return cls(members, names)

    def categories_of(self, word):
        """Categories containing the word; empty set when absent."""
        return self.inverse.get(word, set())

    def ambig(self, word):
        """Number of categories the word appears in (its ambiguity)."""
        return len(self.inverse.get(word, ()))

    def name_of(self, cat):
        return self.names.get(cat, "")
