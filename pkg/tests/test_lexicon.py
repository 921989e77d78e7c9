import random

import pytest

from cnbracket.errors import FormatError
from cnbracket.lexicon import NOUN, OTHER, Lexicon


def write_lexicon(tmp_path, body):
    path = tmp_path / "lex.tsv"
    path.write_text(body, encoding="utf-8")
    return path


class TestLoad:
    def test_basic_entries(self, tmp_path):
        lex = Lexicon.load(write_lexicon(tmp_path, "fruit\tN\ntree\tN\neat\tV\n"))
        assert len(lex) == 3
        assert lex.is_unambiguous_noun("fruit")
        assert lex.is_unambiguous_noun("tree")
        assert not lex.is_unambiguous_noun("eat")

    def test_duplicate_surface_merges_to_one_entry(self, tmp_path):
        lex = Lexicon.load(write_lexicon(tmp_path, "tree\tN\ntree\tN\n"))
        assert len(lex) == 1
        assert lex.tags("tree") == {NOUN}

    def test_noun_verb_duplicate_is_ambiguous(self, tmp_path):
        lex = Lexicon.load(write_lexicon(tmp_path, "tree\tN\ntree\tV\n"))
        assert len(lex) == 1
        assert lex.tags("tree") == {NOUN, OTHER}
        assert not lex.is_unambiguous_noun("tree")

    def test_comments_and_blank_lines_ignored(self, tmp_path):
        lex = Lexicon.load(write_lexicon(tmp_path, "# header\n\nfruit\tN\n"))
        assert len(lex) == 1

    def test_multi_letter_tags(self, tmp_path):
        lex = Lexicon.load(write_lexicon(tmp_path, "farm\tNV\n"))
        assert lex.tags("farm") == {NOUN, OTHER}

    def test_malformed_line_reports_line_number(self, tmp_path):
        path = write_lexicon(tmp_path, "fruit\tN\nbroken line\n")
        with pytest.raises(FormatError) as err:
            Lexicon.load(path)
        assert err.value.line_no == 2

    def test_non_alphabetic_surface_rejected(self, tmp_path):
        with pytest.raises(FormatError):
            Lexicon.load(write_lexicon(tmp_path, "tree-house\tN\n"))

    def test_unknown_tag_rejected(self, tmp_path):
        with pytest.raises(FormatError):
            Lexicon.load(write_lexicon(tmp_path, "fruit\tNX\n"))

    def test_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            Lexicon.load(tmp_path / "absent.tsv")


class TestIsUnambiguousNoun:
    def test_pure_noun(self, toy_lexicon):
        assert toy_lexicon.is_unambiguous_noun("fruit")

    def test_noun_verb_word_is_ambiguous(self, toy_lexicon):
        # "farm" carries both tags, so it never counts as a noun token
        assert toy_lexicon.tags("farm") == {NOUN, OTHER}
        assert not toy_lexicon.is_unambiguous_noun("farm")

    def test_punctuated_token_is_never_a_noun(self, toy_lexicon):
        assert not toy_lexicon.is_unambiguous_noun("tree,")

    def test_absent_word(self, toy_lexicon):
        assert not toy_lexicon.is_unambiguous_noun("zzzz")
        assert toy_lexicon.tags("zzzz") is None

    def test_case_insensitive(self, toy_lexicon):
        for word in ("fruit", "Fruit", "FRUIT", "farm", "Tree,"):
            assert (toy_lexicon.is_unambiguous_noun(word)
                    == toy_lexicon.is_unambiguous_noun(word.lower()))


class TestNormalize:
    @pytest.mark.parametrize("surface,lemma", [
        ("trees", "tree"),
        ("factories", "factory"),
        ("berries", "berry"),
        ("branches", "branch"),
        ("bushes", "bush"),
        ("glasses", "glass"),
        ("boxes", "box"),
        # the -ses strip gives "hors"/"hous", which the lexicon rejects,
        # so the plain -s strip wins
        ("horses", "horse"),
        ("houses", "house"),
        ("apples", "apple"),
    ])
    def test_plural_reduction(self, toy_lexicon, surface, lemma):
        assert toy_lexicon.normalize(surface) == lemma

    def test_double_s_is_not_stripped(self, toy_lexicon):
        assert toy_lexicon.normalize("glass") == "glass"

    def test_unknown_word_unchanged(self, toy_lexicon):
        assert toy_lexicon.normalize("qs") == "qs"

    def test_non_alphabetic_unchanged(self, toy_lexicon):
        assert toy_lexicon.normalize("trees,") == "trees,"

    def test_verb_plural_not_reduced_to_verb(self, toy_lexicon):
        # "grows" -> "grow" is a verb, so the candidate is rejected
        assert toy_lexicon.normalize("grows") == "grows"

    def test_uppercase_input_resolves_to_lowercase_lemma(self, toy_lexicon):
        assert toy_lexicon.normalize("Trees") == "tree"

    def test_idempotent_on_toy_vocabulary(self, toy_lexicon):
        surfaces = list(toy_lexicon.entries)
        surfaces += [s + "s" for s in surfaces] + ["berries", "boxes", "Trees"]
        for s in surfaces:
            once = toy_lexicon.normalize(s)
            assert toy_lexicon.normalize(once) == once

    def test_idempotent_and_closed_on_random_lexicons(self):
        rng = random.Random(20240917)
        alphabet = "abcdefghijklmnopqrstuvwxyz"
        for _ in range(200):
            words = {
                "".join(rng.choice(alphabet) for _ in range(rng.randint(2, 8)))
                for _ in range(rng.randint(5, 40))
            }
            entries = {w: ({NOUN} if rng.random() < 0.7 else {OTHER}) for w in words}
            lex = Lexicon(entries)
            probes = list(words)
            probes += [w + suffix for w in list(words)[:10]
                       for suffix in ("s", "es", "ies")]
            for surface in probes:
                once = lex.normalize(surface)
                assert lex.normalize(once) == once
                if once != surface:
                    # any changed result must be a lexicon noun
                    assert lex.is_unambiguous_noun(once)
