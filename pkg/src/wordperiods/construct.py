"""Build a binary word with a prescribed period set.

The recursion runs from the empty word up: ``w_s = ε`` and, for ``h = s..1``,

* if ``delta_h <= |w_h|``: ``w_(h-1) = w_h[:delta_h] + w_h`` (periodic extension);
* otherwise ``w_(h-1) = w_h + fill + w_h`` with ``|fill| = delta_h - |w_h|``, where the
  fill is chosen so the result has no period below ``delta_h``.

The fill grows one letter at a time, each new letter going into the middle of
the current fill.  At every step one of the two letters leaves the word with no
period ``<= L // 2`` (``L`` = current length), because two words differing in
one place cannot both have such short periods.  Each step is checked directly;
an exhaustive search backs up the greedy choice.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Sequence

from ._parallel import run_partitions
from .errors import ConstructionImpossible, ConstructionMismatch, InvalidArgument
from .periodset import PeriodSet, candidate_sets, check_condition_iv, deltas, pi_h
from .words import Word, canonical, iter_words, min_period, periods

__all__ = [
    "FillStats",
    "Lemma1Task",
    "lemma1_fill",
    "construct_word",
    "ConstructionSweep",
    "construction_sweep",
    "FillSweep",
    "fill_sweep",
]


@dataclass
class FillStats:
    fills: int = 0
    fallbacks: int = 0


@dataclass(frozen=True)
class Lemma1Task:
    u: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        if self.m < 1:
            raise InvalidArgument(f"fill length m={self.m} must be >= 1")
        if any(a not in (0, 1) for a in self.u):
            raise InvalidArgument(f"u must be binary, got letters {set(self.u)}")

    @property
    def length(self) -> int:
        return 2 * len(self.u) + self.m

    @property
    def target(self) -> int:
        """Smallest period the filled word may have."""
        return len(self.u) + self.m


def _greedy_fill(u: tuple[int, ...], m: int) -> tuple[int, ...] | None:
    fill: list[int] = []
    for size in range(1, m + 1):
        at = -(-(size - 1) // 2)  # between a_ceil(m'/2) and a_(ceil(m'/2)+1), m' = size - 1
        half = (2 * len(u) + size) // 2
        for b in (0, 1):
            cand = fill[:at] + [b] + fill[at:]
            if min_period(u + tuple(cand) + u) > half:
                fill = cand
                break
        else:
            return None
    return tuple(fill)


def lemma1_fill(u: Sequence[int] | Word, m: int, stats: FillStats | None = None) -> Word:
    """Return ``u + fill + u`` (``|fill| = m``) with minimal period at least ``|u| + m``.

    Ties between the two letters go to letter 0.  If the greedy middle insertion
    fails (it should not), every fill is tried in lexicographic order and the
    event is counted in ``stats.fallbacks``.
    """
    u = tuple(u.letters if isinstance(u, Word) else u)
    task = Lemma1Task(u, m)
    if stats is not None:
        stats.fills += 1
    fill = _greedy_fill(u, m)
    if fill is None or min_period(u + fill + u) < task.target:
        if stats is not None:
            stats.fallbacks += 1
        fill = next(
            (f for f in product((0, 1), repeat=m) if min_period(u + f + u) >= task.target),
            None,
        )
        if fill is None:
            raise ConstructionImpossible(Word(u, 2), m)
    return Word(u + fill + u, 2)


def construct_word(pi: PeriodSet, stats: FillStats | None = None) -> Word:
    """Binary word whose period set is exactly ``pi``; ``pi`` must satisfy condition (iv)."""
    report = check_condition_iv(pi)
    if not report.satisfied:
        raise InvalidArgument(
            f"{pi} fails condition iv: " + "; ".join(str(v) for v in report.violations)
        )
    d = deltas(pi)
    w: tuple[int, ...] = ()
    for h in range(pi.s, 0, -1):
        dh = d[h - 1]
        if dh <= len(w):
            prev = w[:dh] + w
        else:
            prev = lemma1_fill(w, dh - len(w), stats).letters
        expected = pi_h(pi, h - 1)
        actual = periods(prev)
        if actual != expected:
            raise ConstructionMismatch(h, Word(w, 2), Word(prev, 2), expected, actual)
        w = prev
    return Word(canonical(w)[0], 2)


@dataclass
class ConstructionSweep:
    n_max: int
    sets_checked: int = 0
    fills: int = 0
    fallbacks: int = 0
    words: list = field(default_factory=list)  # (n, mask, word text), sorted
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        return [f"{PeriodSet.from_mask(mask, n)} {word}" for n, mask, word in self.words]


def _construct_partition(n: int) -> ConstructionSweep:
    part = ConstructionSweep(n)
    stats = FillStats()
    for pi in candidate_sets(n):
        if not check_condition_iv(pi).satisfied:
            continue
        part.sets_checked += 1
        try:
            word = construct_word(pi, stats)
        except (ConstructionMismatch, ConstructionImpossible) as exc:
            part.failures.append((n, pi.mask, str(exc)))
            continue
        if periods(word) != pi:
            part.failures.append((n, pi.mask, f"final word {word} has periods {periods(word)}"))
        part.words.append((n, pi.mask, str(word)))
    part.fills, part.fallbacks = stats.fills, stats.fallbacks
    return part


def construction_sweep(n_max: int, workers: int = 1) -> ConstructionSweep:
    """Construct a word for every (iv)-satisfying set with ``1 <= n <= n_max`` and re-check it."""
    total = ConstructionSweep(n_max)
    for part in run_partitions(_construct_partition, range(1, n_max + 1), workers):
        total.sets_checked += part.sets_checked
        total.fills += part.fills
        total.fallbacks += part.fallbacks
        total.words += part.words
        total.failures += part.failures
    total.words.sort()
    total.failures.sort()
    return total


@dataclass
class FillSweep:
    fills: int = 0
    fallbacks: int = 0
    failures: list = field(default_factory=list)


def fill_sweep(u_max: int = 8, m_max: int = 8) -> FillSweep:
    """Fill every binary ``u`` with ``|u| <= u_max`` for every ``1 <= m <= m_max``."""
    report = FillSweep()
    stats = FillStats()
    for size in range(u_max + 1):
        for u in iter_words(size, 2):
            for m in range(1, m_max + 1):
                try:
                    word = lemma1_fill(u, m, stats)
                except ConstructionImpossible as exc:
                    report.failures.append((u, m, str(exc)))
                    continue
                if len(word) != 2 * size + m or min_period(word) < size + m:
                    report.failures.append((u, m, f"bad fill {word}"))
    report.fills, report.fallbacks = stats.fills, stats.fallbacks
    return report
