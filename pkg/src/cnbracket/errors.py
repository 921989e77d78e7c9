"""Exception types shared across the package."""


class Error(Exception):
    """Base class for data errors raised by this package."""


class FormatError(Error):
    """A data file line could not be parsed."""

    def __init__(self, path, line_no, message):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = path
        self.line_no = line_no


class DuplicateCategory(FormatError):
    """A thesaurus category id occurred more than once."""


class UnknownLabel(FormatError):
    """A test-set label was not one of L, R, I, E."""


class ChecksumMismatch(Error):
    """A model file body disagrees with its header cell count."""

    def __init__(self, path, declared, actual):
        super().__init__(f"{path}: header declares {declared} cells, found {actual}")
        self.declared = declared
        self.actual = actual


class WordNotInThesaurus(Error):
    """A query word belongs to no thesaurus category."""

    def __init__(self, word):
        super().__init__(f"word not in thesaurus: {word!r}")
        self.word = word


class SequenceTooLong(Error):
    """A noun sequence exceeds the configured length cap."""

    def __init__(self, length, cap):
        super().__init__(f"sequence of {length} nouns exceeds cap of {cap}")
        self.length = length
        self.cap = cap
