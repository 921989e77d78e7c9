"""Compound noun bracketing from thesaurus-category corpus statistics."""

__version__ = "0.1.0"
