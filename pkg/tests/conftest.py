import sys
from pathlib import Path

import pytest

from cnbracket.lexicon import Lexicon
from cnbracket.thesaurus import Thesaurus

sys.path.insert(0, str(Path(__file__).resolve().parent))

DATA = Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def toy_lexicon():
    return Lexicon.load(DATA / "toy_lexicon.tsv")


@pytest.fixture(scope="session")
def toy_thesaurus(toy_lexicon):
    return Thesaurus.load(DATA / "toy_thesaurus.tsv", toy_lexicon)
