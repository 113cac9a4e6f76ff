"""Exhaustive ground truth for period-set realizability at small lengths.

A catalog maps every period set that occurs among words of length ``n`` to its
lexicographically least witness.  Only words starting with letter 0 are
enumerated; renaming letters never changes a period set.  The word space is
split by prefix, partitions may run in separate processes, and partial
catalogs merge by taking the smaller witness per key, so the result does not
depend on how the work was split.

Cache file layout::

    n=<n> alphabet=<k> words=<count>
    <mask-hex> <witness>
    ...

one entry per line, sorted by mask, where bit ``i`` of the mask is set iff
``i`` is a period.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

from ._parallel import prefixes, run_partitions
from .construct import FillStats, construct_word
from .errors import ConstructionImpossible, ConstructionMismatch, InvalidArgument, ResourceLimit
from .periodset import PeriodSet, candidate_sets, check_condition_iii, check_condition_iv
from .words import Word, iter_words, period_mask, periods

__all__ = [
    "Catalog",
    "default_cap",
    "enumerate_catalog",
    "save_catalog",
    "load_catalog",
    "cached_catalog",
    "CACHE_ENV",
    "TheoremReport",
    "verify_theorem_equivalence",
]

CACHE_ENV = "WORDPERIODS_CACHE_DIR"
_MAX_WORDS = 1 << 19
PREFIX_LEN = 3


def default_cap(alphabet_size: int) -> int:
    """Largest n whose enumeration stays within 2**19 words (20 for binary, 12 for ternary)."""
    n = 1
    while alphabet_size ** n <= _MAX_WORDS:
        n += 1
    return n


@dataclass
class Catalog:
    n: int
    alphabet_size: int
    entries: dict[int, tuple[int, ...]] = field(default_factory=dict)
    word_count: int = 0

    def __contains__(self, pi: PeriodSet) -> bool:
        return pi.n == self.n and pi.mask in self.entries

    def witness(self, pi: PeriodSet) -> Word:
        return Word(self.entries[pi.mask], self.alphabet_size)

    def keys(self) -> list[PeriodSet]:
        return [PeriodSet.from_mask(m, self.n) for m in sorted(self.entries)]

    def merge(self, other: Catalog) -> Catalog:
        entries = dict(self.entries)
        for mask, w in other.entries.items():
            if mask not in entries or w < entries[mask]:
                entries[mask] = w
        return Catalog(self.n, self.alphabet_size, entries, self.word_count + other.word_count)

    def to_text(self) -> str:
        lines = [f"n={self.n} alphabet={self.alphabet_size} words={self.word_count}"]
        for pi in self.keys():
            lines.append(f"{pi.to_hex()} {self.witness(pi)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> Catalog:
        """Parse a cache file and re-verify every witness against its key."""
        header, *rows = text.strip().splitlines()
        try:
            fields = dict(part.split("=", 1) for part in header.split())
            n, k, count = int(fields["n"]), int(fields["alphabet"]), int(fields["words"])
        except (KeyError, ValueError) as exc:
            raise InvalidArgument(f"malformed catalog header {header!r}") from exc
        entries = {}
        for row in rows:
            hex_mask, text_word = row.split()
            pi = PeriodSet.from_hex(hex_mask, n)
            w = Word.parse(text_word, k)
            if len(w) != n or periods(w) != pi:
                raise InvalidArgument(f"catalog witness {w} does not realize {pi}")
            entries[pi.mask] = w.letters
        return cls(n, k, entries, count)


def _catalog_partition(task: tuple[int, int, tuple[int, ...]]) -> Catalog:
    n, k, prefix = task
    part = Catalog(n, k)
    entries = part.entries
    for w in iter_words(n, k, prefix):
        part.word_count += 1
        mask = period_mask(w)
        # lexicographic enumeration: the first hit is the least witness in this partition
        if mask not in entries:
            entries[mask] = w
    return part


def enumerate_catalog(n: int, alphabet_size: int = 2, workers: int = 1, cap: int | None = None) -> Catalog:
    if cap is None:
        cap = default_cap(alphabet_size)
    if not 2 <= alphabet_size <= 8:
        raise InvalidArgument(f"alphabet size {alphabet_size} outside [2, 8]")
    if n < 1:
        raise InvalidArgument(f"n={n} must be >= 1")
    if n > cap:
        raise ResourceLimit(f"n={n} exceeds the enumeration cap {cap} for alphabet {alphabet_size}")
    tasks = [(n, alphabet_size, pre) for pre in prefixes(alphabet_size, min(n - 1, PREFIX_LEN), (0,))]
    total = Catalog(n, alphabet_size)
    for part in run_partitions(_catalog_partition, tasks, workers):
        total = total.merge(part)
    return total


def save_catalog(catalog: Catalog, path: str | os.PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(catalog.to_text(), encoding="utf-8")
    return path


def load_catalog(path: str | os.PathLike) -> Catalog:
    return Catalog.from_text(Path(path).read_text(encoding="utf-8"))


def cached_catalog(
    n: int,
    alphabet_size: int = 2,
    cache_dir: str | os.PathLike | None = None,
    workers: int = 1,
) -> Catalog:
    """Load ``catalog-n<n>-k<k>.txt`` from the cache directory, building it if absent.

    ``cache_dir`` falls back to ``$WORDPERIODS_CACHE_DIR``; with neither set, nothing is cached.
    """
    cache_dir = cache_dir or os.environ.get(CACHE_ENV)
    if not cache_dir:
        return enumerate_catalog(n, alphabet_size, workers)
    path = Path(cache_dir) / f"catalog-n{n}-k{alphabet_size}.txt"
    if path.exists():
        return load_catalog(path)
    catalog = enumerate_catalog(n, alphabet_size, workers)
    save_catalog(catalog, path)
    return catalog


@dataclass
class TheoremReport:
    n: int
    sets_checked: int = 0
    realizable: int = 0
    constructed: int = 0
    fallbacks: int = 0
    mismatches: list = field(default_factory=list)  # (set text, i, iii, iv, constructed)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "sets_checked": self.sets_checked,
            "realizable": self.realizable,
            "constructed": self.constructed,
            "fallbacks": self.fallbacks,
            "mismatches": [
                {"set": s, "i": i, "iii": iii, "iv": iv, "construct": c}
                for s, i, iii, iv, c in self.mismatches
            ],
        }


def verify_theorem_equivalence(
    n: int,
    workers: int = 1,
    catalog: Catalog | None = None,
    construct: bool = True,
) -> TheoremReport:
    """Compare binary realizability, condition (iii), condition (iv), and (optionally)
    construction success on every candidate set of length ``n``."""
    if catalog is None:
        catalog = enumerate_catalog(n, 2, workers)
    if catalog.n != n or catalog.alphabet_size != 2:
        raise InvalidArgument("theorem check needs the binary catalog at the same n")
    report = TheoremReport(n)
    stats = FillStats()
    for pi in candidate_sets(n):
        report.sets_checked += 1
        real = pi in catalog
        iii = check_condition_iii(pi).satisfied
        iv = check_condition_iv(pi).satisfied
        report.realizable += real
        built = None
        if construct and iv:
            try:
                built = periods(construct_word(pi, stats)) == pi
            except (ConstructionMismatch, ConstructionImpossible):
                built = False
            report.constructed += built
        if not (real == iii == iv) or built is False:
            report.mismatches.append((str(pi), real, iii, iv, built))
    report.fallbacks = stats.fallbacks
    return report
