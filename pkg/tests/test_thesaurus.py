import random

import pytest

from cnbracket.errors import DuplicateCategory, FormatError
from cnbracket.thesaurus import Thesaurus

from randgen import make_instance


def write_thesaurus(tmp_path, body):
    path = tmp_path / "th.tsv"
    path.write_text(body, encoding="utf-8")
    return path


class TestLoad:
    def test_two_categories_shared_word(self, tmp_path):
        path = write_thesaurus(
            tmp_path,
            "103\tFewness\tminority,handful\n34\tInferiority\tminority,shortcoming\n",
        )
        th = Thesaurus.load(path)
        assert th.category_count == 2
        assert th.categories_of("minority") == {103, 34}
        assert th.name_of(103) == "Fewness"

    def test_empty_member_list_rejected(self, tmp_path):
        with pytest.raises(FormatError):
            Thesaurus.load(write_thesaurus(tmp_path, "1\tPlants\t\n"))

    def test_duplicate_id_rejected(self, tmp_path):
        with pytest.raises(DuplicateCategory):
            Thesaurus.load(write_thesaurus(tmp_path, "1\tA\tx\n1\tB\ty\n"))

    def test_bad_id_rejected(self, tmp_path):
        with pytest.raises(FormatError):
            Thesaurus.load(write_thesaurus(tmp_path, "one\tA\tx\n"))

    def test_nonpositive_id_rejected(self, tmp_path):
        with pytest.raises(FormatError):
            Thesaurus.load(write_thesaurus(tmp_path, "0\tA\tx\n"))

    def test_multiword_entries_skipped_with_warning(self, tmp_path, caplog):
        path = write_thesaurus(tmp_path, "1\tA\tapple,winter apple,pear\n")
        with caplog.at_level("WARNING"):
            th = Thesaurus.load(path)
        assert th.members[1] == {"apple", "pear"}
        assert "winter apple" in caplog.text

    def test_all_members_multiword_rejected(self, tmp_path):
        with pytest.raises(FormatError):
            Thesaurus.load(write_thesaurus(tmp_path, "1\tA\twinter apple\n"))

    def test_members_normalized_through_lexicon(self, tmp_path, toy_lexicon):
        path = write_thesaurus(tmp_path, "1\tA\ttrees,berries\n")
        th = Thesaurus.load(path, toy_lexicon)
        assert th.members[1] == {"tree", "berry"}

    def test_format_error_carries_line_number(self, tmp_path):
        path = write_thesaurus(tmp_path, "1\tA\tx\nnot a line\n")
        with pytest.raises(FormatError) as err:
            Thesaurus.load(path)
        assert err.value.line_no == 2


class TestQueries:
    def test_toy_fixture_lookup(self, toy_thesaurus):
        assert toy_thesaurus.categories_of("market") == {14, 16}
        assert toy_thesaurus.categories_of("tree") == {11}
        assert toy_thesaurus.categories_of("wagon") == set()

    def test_ambig_matches_category_count(self, toy_thesaurus):
        assert toy_thesaurus.ambig("tree") == 1
        assert toy_thesaurus.ambig("market") == 2
        assert toy_thesaurus.ambig("wagon") == 0

    def test_ambig_equals_len_categories_everywhere(self, toy_thesaurus):
        for word in toy_thesaurus.inverse:
            assert toy_thesaurus.ambig(word) == len(toy_thesaurus.categories_of(word))

    def test_transpose_consistency(self, toy_thesaurus):
        th = toy_thesaurus
        for cat, words in th.members.items():
            for w in words:
                assert cat in th.categories_of(w)
        for w, cats in th.inverse.items():
            for cat in cats:
                assert w in th.members[cat]

    def test_transpose_consistency_random(self):
        rng = random.Random(7)
        for _ in range(50):
            th, _ = make_instance(rng)
            for cat, words in th.members.items():
                assert words, "loader invariant: member sets are non-empty"
                for w in words:
                    assert cat in th.categories_of(w)
            for w, cats in th.inverse.items():
                for cat in cats:
                    assert w in th.members[cat]
