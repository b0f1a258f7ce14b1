"""Reduced words over the group generators, and bounded enumeration.

The enumeration kernel (compiled when the extension built, pure Python
otherwise) walks all freely reduced words over A, A^-1, B, B^-1 up to a
length bound and returns their matrices, optionally conjugating a fixed
element.  Letters are encoded 0..3 in that order; letter ^ 1 is the inverse.
"""

from __future__ import annotations

import os

import numpy as np

from . import _wordkernel_py
from .halfplane import MoebiusMap

try:
    from . import _wordkernel
except ImportError:
    _wordkernel = None

LETTER_NAMES = ("A", "A^-1", "B", "B^-1")
MAX_WORD_LEN = 14  # 2*(3^14 - 1) rows is ~0.5 GB; larger budgets are a bug


def _forced_backend():
    return os.environ.get("ORBIGEO_BACKEND", "").strip().lower()


def select_backend():
    forced = _forced_backend()
    if forced in ("py", "python", "pure"):
        return _wordkernel_py, "python"
    if forced in ("c", "compiled", "cython"):
        if _wordkernel is None:
            raise RuntimeError(
                "ORBIGEO_BACKEND requests the compiled kernel but the "
                "extension is not built"
            )
        return _wordkernel, "compiled"
    if _wordkernel is not None:
        return _wordkernel, "compiled"
    return _wordkernel_py, "python"


def backend_name():
    return select_backend()[1]


class GroupWord:
    """Freely reduced word over A, A^-1, B, B^-1."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        self.letters = self._reduce(tuple(int(l) for l in letters))

    @staticmethod
    def _reduce(letters):
        out = []
        for l in letters:
            if not 0 <= l <= 3:
                raise ValueError(f"letters must be 0..3, got {l}")
            if out and out[-1] == l ^ 1:
                out.pop()
            else:
                out.append(l)
        return tuple(out)

    @classmethod
    def from_code(cls, code, length):
        code = int(code)
        return cls((code >> (2 * i)) & 3 for i in range(int(length)))

    @classmethod
    def parse(cls, text):
        """Parse tokens like "A B^-1 A" (also the compact "a" = A^-1, "b" = B^-1)."""
        letters = []
        for tok in str(text).replace("*", " ").split():
            try:
                letters.append(
                    {"A": 0, "A^-1": 1, "a": 1, "B": 2, "B^-1": 3, "b": 3}[tok]
                )
            except KeyError:
                raise ValueError(f"bad word token {tok!r}") from None
        return cls(letters)

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        return isinstance(other, GroupWord) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        return GroupWord(self.letters + other.letters)

    def inverse(self):
        return GroupWord(l ^ 1 for l in reversed(self.letters))

    def evaluate(self, group):
        """Matrix of the word: the product of letter matrices left to right."""
        gens = group.generators()
        out = MoebiusMap.identity()
        for l in self.letters:
            out = out @ gens[l]
        return out

    def __str__(self):
        if not self.letters:
            return "<empty>"
        return " ".join(LETTER_NAMES[l] for l in self.letters)

    def __repr__(self):
        return f"GroupWord({list(self.letters)!r})"


def generator_rows(group):
    """(4, 4) array of the letter matrices as rows [a, b, c, d]."""
    return np.array([m.entries() for m in group.generators()], float)


def word_count(max_len):
    """Number of nonempty freely reduced words of length <= max_len."""
    return 2 * (3**max_len - 1)


def enumerate_reduced_words(group, max_len, conjugate=None, impl=None):
    """Matrices of every nonempty freely reduced word of length <= max_len.

    Returns (codes, lengths, mats).  mats rows are [a, b, c, d] of the word
    matrix W, or of W g W^-1 when conjugate is the MoebiusMap g.  The codes
    decode through GroupWord.from_code.
    """
    if not 1 <= max_len <= MAX_WORD_LEN:
        raise ValueError(f"max_len must be in 1..{MAX_WORD_LEN}, got {max_len}")
    kernel = impl if impl is not None else select_backend()[0]
    conj = np.array(conjugate.entries(), float) if conjugate is not None else None
    return kernel.enumerate_words(generator_rows(group), int(max_len), conj)
