"""Cyclically reduced words in the free group on two generators.

Letters are coded as small integers so that whole batches of words can be
held in ``int8`` arrays::

    a -> 0,  A -> 1,  b -> 2,  B -> 3       (A = a^-1, B = b^-1)

With this coding the inverse of a letter is ``code ^ 1`` and the integer
order is the fixed canonical order a < A < b < B.

A word of length L is also encoded as a base-4 integer, most significant
digit first. For words of equal length, integer order of these codes is
lexicographic order of the words, which is what the enumerator relies on.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .errors import EmptyWordError, GuardExceededError, NonReducedWordError

ENUMERATION_GUARD = 16
# 2 bits per letter in a signed 64-bit code
_MAX_CODE_LENGTH = 31
# largest suffix expanded in one vectorized block during enumeration
_BLOCK_DEPTH = 12


class Letter(enum.IntEnum):
    a = 0
    A = 1
    b = 2
    B = 3

    def inverse(self) -> "Letter":
        return Letter(self ^ 1)

    def __str__(self) -> str:
        return self.name


ALPHABET = "aAbB"


@dataclass(frozen=True)
class CyclicWord:
    """One concrete rotation of a cyclically reduced word.

    Construction validates the cyclic reduction condition, so every instance
    in circulation satisfies it. Two instances name the same free homotopy
    class iff their :func:`canonical_form` agree.
    """

    letters: tuple[Letter, ...]

    def __post_init__(self):
        letters = tuple(Letter(x) for x in self.letters)
        if not letters:
            raise EmptyWordError("a cyclic word needs at least one letter")
        n = len(letters)
        for i, x in enumerate(letters):
            if letters[(i + 1) % n] == x ^ 1:
                raise NonReducedWordError(i, letters)
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_string(cls, text: str) -> "CyclicWord":
        return parse_word(text)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return "".join(x.name for x in self.letters)

    def __repr__(self) -> str:
        return f"CyclicWord('{self}')"

    def rotate(self, k: int) -> "CyclicWord":
        k %= len(self.letters)
        return CyclicWord(self.letters[k:] + self.letters[:k])

    def inverse(self) -> "CyclicWord":
        return CyclicWord(tuple(x.inverse() for x in reversed(self.letters)))

    def power(self, n: int) -> "CyclicWord":
        if n < 1:
            raise ValueError("power must be >= 1")
        return CyclicWord(self.letters * n)

    def codes(self) -> np.ndarray:
        return np.fromiter((int(x) for x in self.letters), dtype=np.int8)


def validate(letters: Sequence) -> CyclicWord:
    """Return ``letters`` as a :class:`CyclicWord` or raise.

    Accepts :class:`Letter` members, integer codes or one-character strings.
    Raises :class:`EmptyWordError` for an empty sequence and
    :class:`NonReducedWordError` (carrying the first offending index, where
    index ``L-1`` means the wrap-around pair) otherwise.
    """
    return CyclicWord(tuple(_as_letter(x) for x in letters))


def _as_letter(x) -> Letter:
    if isinstance(x, str):
        if len(x) != 1 or x not in ALPHABET:
            raise ValueError(f"unknown letter {x!r}; alphabet is {ALPHABET!r}")
        return Letter(ALPHABET.index(x))
    return Letter(int(x))


def parse_word(text: str) -> CyclicWord:
    """Parse the text format, e.g. ``"abAB"``. Only ``a A b B`` are accepted."""
    bad = set(text) - set(ALPHABET)
    if bad:
        raise ValueError(f"unknown letters {sorted(bad)!r}; alphabet is {ALPHABET!r}")
    return validate(text)


def format_codes(row: np.ndarray) -> str:
    return "".join(ALPHABET[int(c)] for c in row)


def canonical_form(w: CyclicWord) -> CyclicWord:
    """Lexicographically least rotation under a < A < b < B."""
    n = len(w.letters)
    best = min(w.letters[k:] + w.letters[:k] for k in range(n))
    return CyclicWord(best)


def period(w: CyclicWord) -> int:
    """Smallest p > 0 with rotate(w, p) == w; it divides len(w)."""
    n = len(w.letters)
    for p in _divisors(n):
        if w.letters[p:] + w.letters[:p] == w.letters:
            return p
    return n  # pragma: no cover


# ---------------------------------------------------------------------------
# counting

_TRANSFER = (
    (1, 0, 1, 1),
    (0, 1, 1, 1),
    (1, 1, 1, 0),
    (1, 1, 0, 1),
)


def _matmul(x, y):
    n = len(x)
    return tuple(
        tuple(sum(x[i][k] * y[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def transfer_power(L: int):
    """Exact L-th power of the 4x4 letter transfer matrix (T[i][j] = 1 iff j != i^-1)."""
    result = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
    base = _TRANSFER
    while L:
        if L & 1:
            result = _matmul(result, base)
        base = _matmul(base, base)
        L >>= 1
    return result


def count_strings(L: int) -> int:
    """Number of cyclically reduced sequences of length L, as trace(T^L).

    Python integers are unbounded, so this is exact for every L
    (it equals 3^L + 2 + (-1)^L).
    """
    _check_length(L)
    m = transfer_power(L)
    return sum(m[i][i] for i in range(4))


def _divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def totient(n: int) -> int:
    result = n
    p, m = 2, n
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def count_classes(L: int) -> int:
    """Number of free homotopy classes of word length L (Burnside over rotations)."""
    _check_length(L)
    total = sum(totient(L // d) * count_strings(d) for d in _divisors(L))
    q, r = divmod(total, L)
    assert r == 0, "Burnside sum not divisible by L"
    return q


def _check_length(L) -> None:
    if isinstance(L, bool) or not isinstance(L, (int, np.integer)) or L < 1:
        raise ValueError(f"word length must be a positive integer, got {L!r}")


@dataclass(frozen=True)
class WordPopulation:
    """All cyclically reduced words of length ``L``, counted as strings or classes."""

    L: int
    mode: str = "classes"

    def __post_init__(self):
        _check_length(self.L)
        if self.mode not in ("strings", "classes"):
            raise ValueError("mode must be 'strings' or 'classes'")

    def count(self) -> int:
        return count_strings(self.L) if self.mode == "strings" else count_classes(self.L)


# ---------------------------------------------------------------------------
# enumeration

def _children(codes: np.ndarray) -> np.ndarray:
    """Append every non-cancelling letter to each code, preserving lex order."""
    excluded = (codes & 3) ^ 1
    out = np.empty((codes.size, 3), dtype=np.int64)
    for k in range(3):
        letter = k + (k >= excluded)
        out[:, k] = codes * 4 + letter
    return out.ravel()


def _canonical_mask(codes: np.ndarray, L: int) -> np.ndarray:
    """True where a code is cyclically reduced and is its own least rotation."""
    first = codes >> (2 * (L - 1))
    keep = (codes & 3) != (first ^ 1)
    mask = (1 << (2 * L)) - 1
    for k in range(1, L):
        rot = ((codes << (2 * k)) & mask) | (codes >> (2 * (L - k)))
        keep &= codes <= rot
    return keep


def decode(codes: np.ndarray, L: int) -> np.ndarray:
    """Base-4 codes -> ``(n, L)`` int8 letter array."""
    shifts = 2 * np.arange(L - 1, -1, -1, dtype=np.int64)
    return ((np.asarray(codes, dtype=np.int64)[:, None] >> shifts) & 3).astype(np.int8)


def enumerate_class_codes(L: int, max_length: int = ENUMERATION_GUARD) -> np.ndarray:
    """Canonical representatives of every class of length L as an ``(n, L)`` int8 array.

    Rows are in lexicographic order and there are exactly ``count_classes(L)``
    of them. Cost is ~3^L, hence the guard; pass a larger ``max_length`` to
    override it (never beyond 31).
    """
    _check_length(L)
    if L > max_length or L > _MAX_CODE_LENGTH:
        raise GuardExceededError(
            f"enumerating L={L} traverses ~3^{L} strings; guard is L <= {max_length}"
        )
    prefix_len = max(1, L - _BLOCK_DEPTH)
    prefixes = np.arange(4, dtype=np.int64)
    for _ in range(prefix_len - 1):
        prefixes = _children(prefixes)
    found = []
    for p in prefixes:
        block = np.array([p], dtype=np.int64)
        for _ in range(L - prefix_len):
            block = _children(block)
        found.append(block[_canonical_mask(block, L)])
    return decode(np.concatenate(found), L)


def enumerate_classes(L: int, max_length: int = ENUMERATION_GUARD) -> Iterator[CyclicWord]:
    """Yield each free homotopy class of length L once, canonical form, lex order."""
    for row in enumerate_class_codes(L, max_length):
        yield CyclicWord(tuple(Letter(int(c)) for c in row))


# ---------------------------------------------------------------------------
# sampling

def sample_codes(L: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """Draw ``n`` independent uniform cyclically reduced strings of length L.

    First letter uniform over four, each later letter uniform over the three
    letters that do not cancel its predecessor; rows whose last letter cancels
    the first are redrawn whole. Returns an ``(n, L)`` int8 array. The stream
    of draws from ``rng`` is fully determined by ``(L, n)``.
    """
    _check_length(L)
    out = np.empty((n, L), dtype=np.int8)
    todo = np.arange(n)
    while todo.size:
        m = todo.size
        rows = np.empty((m, L), dtype=np.int8)
        rows[:, 0] = rng.integers(0, 4, size=m)
        if L > 1:
            steps = rng.integers(0, 3, size=(m, L - 1), dtype=np.int8)
            for i in range(1, L):
                excluded = rows[:, i - 1] ^ 1
                k = steps[:, i - 1]
                rows[:, i] = k + (k >= excluded)
            ok = rows[:, -1] != (rows[:, 0] ^ 1)
        else:
            ok = np.ones(m, dtype=bool)
        out[todo[ok]] = rows[ok]
        todo = todo[~ok]
    return out


def sample_word(L: int, rng: np.random.Generator) -> CyclicWord:
    """One uniform random cyclically reduced string of length L."""
    row = sample_codes(L, 1, rng)[0]
    return CyclicWord(tuple(Letter(int(c)) for c in row))
