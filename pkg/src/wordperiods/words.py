"""Words over small indexed alphabets: periods, borders, single-mismatch comparison.

Letters are stored as alphabet indices ``0..k-1``; ``'a', 'b', 'c', ...`` only
appear when a word is parsed or printed.  Positions reported to callers are
1-based.

Every function here accepts either a :class:`Word` or a plain sequence of
letter indices, so the exhaustive sweeps can run on bare tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, NamedTuple, Sequence, Union

from .errors import InvalidArgument
from .periodset import PeriodSet

__all__ = [
    "Word",
    "MAX_ALPHABET",
    "Coincidence",
    "has_period",
    "failure_function",
    "border_lengths",
    "periods",
    "periods_by_scan",
    "periods_by_borders",
    "period_mask",
    "min_period",
    "coincide_except_one",
    "reverse",
    "canonical",
    "iter_words",
]

MAX_ALPHABET = 8
LETTERS = "abcdefgh"
EMPTY = "ε"


@dataclass(frozen=True, order=True)
class Word:
    letters: tuple[int, ...]
    alphabet_size: int = 2

    def __post_init__(self) -> None:
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if not 1 <= self.alphabet_size <= MAX_ALPHABET:
            raise InvalidArgument(f"alphabet size {self.alphabet_size} outside [1, {MAX_ALPHABET}]")
        for a in letters:
            if not 0 <= a < self.alphabet_size:
                raise InvalidArgument(f"letter index {a} outside alphabet of size {self.alphabet_size}")

    @classmethod
    def parse(cls, text: str, alphabet_size: int | None = None) -> Word:
        """Parse ``"abaaab"``.  The alphabet defaults to the smallest covering one (at least binary)."""
        letters = []
        if text == EMPTY:
            text = ""
        for i, ch in enumerate(text):
            idx = LETTERS.find(ch)
            if idx < 0:
                raise InvalidArgument(f"malformed word {text!r}: bad letter {ch!r} at position {i + 1}")
            letters.append(idx)
        if alphabet_size is None:
            alphabet_size = max(2, max(letters, default=0) + 1)
        return cls(tuple(letters), alphabet_size)

    @property
    def n(self) -> int:
        return len(self.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return "".join(LETTERS[a] for a in self.letters) or EMPTY


WordLike = Union[Word, Sequence[int]]


def _letters(w: WordLike) -> Sequence[int]:
    return w.letters if isinstance(w, Word) else w


def _like(template: WordLike, letters: tuple[int, ...]) -> WordLike:
    if isinstance(template, Word):
        return Word(letters, template.alphabet_size)
    return letters


def has_period(w: WordLike, p: int) -> bool:
    """True iff ``a_i = a_(i+p)`` for ``1 <= i <= n - p``.  0 and n always qualify."""
    a = _letters(w)
    n = len(a)
    if not 0 <= p <= n:
        raise InvalidArgument(f"period {p} outside [0, {n}]")
    return all(a[i] == a[i + p] for i in range(n - p))


def failure_function(w: WordLike) -> list[int]:
    """``f[i]`` = length of the longest proper border of the prefix of length ``i + 1``."""
    a = _letters(w)
    f = [0] * len(a)
    k = 0
    for i in range(1, len(a)):
        while k and a[i] != a[k]:
            k = f[k - 1]
        if a[i] == a[k]:
            k += 1
        f[i] = k
    return f


def _border_chain(a: Sequence[int]) -> list[int]:
    if not a:
        return []
    f = failure_function(a)
    chain = []
    b = f[-1]
    while b:
        chain.append(b)
        b = f[b - 1]
    chain.append(0)
    return chain


def border_lengths(w: WordLike) -> tuple[int, ...]:
    """Lengths ``b < n`` whose prefix equals the suffix; includes 0 for non-empty words."""
    return tuple(sorted(_border_chain(_letters(w))))


def periods_by_scan(w: WordLike) -> PeriodSet:
    """Definitional O(n^2) scan of every candidate period."""
    a = _letters(w)
    n = len(a)
    return PeriodSet(n, tuple(p for p in range(n + 1) if has_period(a, p)))


def periods_by_borders(w: WordLike) -> PeriodSet:
    """O(n) route: periods are ``n - b`` over the border chain, plus 0."""
    a = _letters(w)
    n = len(a)
    return PeriodSet(n, tuple(sorted({0} | {n - b for b in _border_chain(a)})))


def periods(w: WordLike) -> PeriodSet:
    return periods_by_borders(w)


def period_mask(w: WordLike) -> int:
    """Membership mask of the period set, bit ``i`` set iff ``i`` is a period."""
    a = _letters(w)
    n = len(a)
    mask = 1
    for b in _border_chain(a):
        mask |= 1 << (n - b)
    return mask


def min_period(w: WordLike) -> int:
    """Smallest period ``>= 1``; 0 for the empty word."""
    a = _letters(w)
    if not a:
        return 0
    return len(a) - failure_function(a)[-1]


class Coincidence(NamedTuple):
    kind: str  # "equal", "single-mismatch" or "multiple-mismatch"
    position: int | None = None

    def __str__(self) -> str:
        return f"single-mismatch({self.position})" if self.position else self.kind


def coincide_except_one(w: WordLike, v: WordLike) -> Coincidence:
    a, b = _letters(w), _letters(v)
    if len(a) != len(b):
        raise InvalidArgument(f"length mismatch: {len(a)} vs {len(b)}")
    diff = [i + 1 for i in range(len(a)) if a[i] != b[i]]
    if not diff:
        return Coincidence("equal")
    if len(diff) == 1:
        return Coincidence("single-mismatch", diff[0])
    return Coincidence("multiple-mismatch")


def reverse(w: WordLike) -> WordLike:
    return _like(w, tuple(reversed(_letters(w))))


def canonical(*words: WordLike) -> tuple[WordLike, ...]:
    """Jointly rename letters so first occurrences (across all words, in order) get 0, 1, 2, ..."""
    table: dict[int, int] = {}
    for w in words:
        for a in _letters(w):
            table.setdefault(a, len(table))
    return tuple(_like(w, tuple(table[a] for a in _letters(w))) for w in words)


def iter_words(n: int, alphabet_size: int, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """All words of length ``n`` starting with ``prefix``, in lexicographic order."""
    prefix = tuple(prefix)
    if len(prefix) > n:
        return
    for tail in product(range(alphabet_size), repeat=n - len(prefix)):
        yield prefix + tail
