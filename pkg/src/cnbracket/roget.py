"""Convert a plain-text Roget 1911 export into the thesaurus file format.

This is a best-effort converter documenting the shape such an export is
expected to have.  Each category starts a line like

    #103. Fewness.-- N. fewness, paucity, small number; ...

and its noun section runs from the "N." marker to the next part-of-speech
marker (V., Adj., Adv., Phr.) or the next category header.  Entries are
split on commas and semicolons; only single lowercase alphabetic words
are kept, matching the single-word-noun policy of the thesaurus loader.

The 1911 edition should yield 1043 categories averaging around 34 nouns
each; check those counts after converting, since the source text's
formatting varies between distributions.

Usage: python -m cnbracket.roget <roget-text-file> <output-tsv>
"""

import re
import sys

_HEADER = re.compile(r"^\s*#(\d+)\.?\s+([A-Za-z][A-Za-z' -]*?)\s*[.—-]")
_POS_MARKER = re.compile(r"(?:^|\s)(?:V\.|Adj\.|Adv\.|Phr\.|Int\.)")
_NOUN_MARKER = re.compile(r"(?:^|\s)N\.\s")


def parse_categories(text):
    """Yield (id, name, [nouns]) for each category block in the export."""
    blocks = []
    current = None
    for line in text.splitlines():
        match = _HEADER.match(line)
        if match:
            current = (int(match.group(1)), match.group(2).strip(), [])
            blocks.append(current)
            line = line[match.end():]
        if current is not None:
            current[2].append(line)
        # text before the first header is ignored
    for ident, name, body_lines in blocks:
        body = " ".join(body_lines)
        nouns = _noun_words(body)
        if nouns:
            yield ident, name, nouns


def _noun_words(body):
    start = _NOUN_MARKER.search(body)
    if not start:
        return []
    section = body[start.end():]
    stop = _POS_MARKER.search(section)
    if stop:
        section = section[:stop.start()]
    words = []
    seen = set()
    for chunk in re.split(r"[,;.]", section):
        word = chunk.strip().lower()
        if word and word.isalpha() and word not in seen:
            seen.add(word)
            words.append(word)
    return words


def convert(in_path, out_path):
    """Write the converted thesaurus TSV; returns the category count."""
    with open(in_path, encoding="utf-8", errors="replace") as fh:
        text = fh.read()
    count = 0
    with open(out_path, "w", encoding="utf-8", newline="\n") as out:
        for ident, name, nouns in parse_categories(text):
            out.write(f"{ident}\t{name}\t{','.join(nouns)}\n")
            count += 1
    return count


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    if len(argv) != 2:
        print(__doc__, file=sys.stderr)
        return 1
    count = convert(argv[0], argv[1])
    print(f"wrote {count} categories to {argv[1]}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
