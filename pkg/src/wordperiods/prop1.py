"""One-mismatch periodicity: if two words of length n differ in at most one
position and have periods p and q with ``max(p, q) <= n // 2``, they are equal.

Besides the instance checker and the exhaustive sweeps, this module simulates
the greedy "stockpile walk" that underlies the argument: from the mismatch
position ``t``, alternately take as many length-``p`` steps left and length-``q``
steps right as the bounds ``[1, n]`` allow, with step budgets fixed by a Bezout
identity ``k' p + k q = -gcd(p, q)``.  The walk always ends at ``t - gcd(p, q)``.

The module also hosts the searches around the weaker ``p + q <= n`` statement
that the bound above replaces: counterexamples to it and tightness witnesses
for ``n // 2``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, NamedTuple

from ._parallel import prefixes, run_partitions
from .errors import InvalidArgument, WalkStalled
from .words import (
    Word,
    canonical,
    coincide_except_one,
    has_period,
    iter_words,
    min_period,
)

__all__ = [
    "MismatchInstance",
    "WalkSpec",
    "WalkTrace",
    "bezout_stockpiles",
    "stockpile_walk",
    "sweep_walks",
    "WalkSweepReport",
    "check_prop1_instance",
    "verify_prop1_exhaustive",
    "Prop1Report",
    "MismatchPair",
    "find_exercise_counterexamples",
    "find_tightness_witnesses",
    "check_fine_wilf",
    "verify_fine_wilf_exhaustive",
]


@dataclass(frozen=True)
class MismatchInstance:
    """Words ``w`` (period ``q``) and ``v`` (period ``p``) agreeing everywhere except maybe at ``t``."""

    w: Word
    v: Word
    t: int
    q: int
    p: int

    def __post_init__(self) -> None:
        n = len(self.w)
        if len(self.v) != n:
            raise InvalidArgument(f"length mismatch: |w|={n}, |v|={len(self.v)}")
        if not 1 <= self.t <= n:
            raise InvalidArgument(f"t={self.t} outside [1, {n}]")
        verdict = coincide_except_one(self.w, self.v)
        if verdict.kind == "multiple-mismatch" or (verdict.position not in (None, self.t)):
            raise InvalidArgument(f"{self.w} and {self.v} do not coincide outside position {self.t}")
        if not (1 <= self.q <= n and 1 <= self.p <= n):
            raise InvalidArgument(f"periods must lie in [1, {n}]: q={self.q}, p={self.p}")
        if not has_period(self.w, self.q):
            raise InvalidArgument(f"{self.w} does not have period {self.q}")
        if not has_period(self.v, self.p):
            raise InvalidArgument(f"{self.v} does not have period {self.p}")

    @property
    def n(self) -> int:
        return len(self.w)


# --- stockpile walk -------------------------------------------------------


def bezout_stockpiles(p: int, q: int, k: int | None = None) -> tuple[int, int]:
    """Return ``(k_left, k)`` with ``k_left * p + k * q == -gcd(p, q)``, ``k > 0 > k_left``.

    ``k`` defaults to the least positive solution of ``k q = -c (mod p)``.
    A caller-supplied ``k`` must satisfy the same congruence.
    """
    c = gcd(p, q)
    if k is None:
        pp, qq = p // c, q // c
        k = (-pow(qq, -1, pp)) % pp if pp > 1 else 1
        if k == 0:
            k = pp
    if k <= 0 or (k * q + c) % p:
        raise InvalidArgument(f"k={k} does not satisfy k*{q} = -{c} (mod {p}) with k > 0")
    k_left = (-c - k * q) // p
    if k_left >= 0:
        raise InvalidArgument(f"k={k} gives non-negative left stockpile {k_left}")
    return k_left, k


@dataclass(frozen=True)
class WalkSpec:
    n: int
    p: int
    q: int
    t: int
    side: str = "y"
    stockpile_left: int = field(default=0)
    stockpile_right: int = field(default=0)

    @classmethod
    def build(cls, n: int, p: int, q: int, t: int, side: str = "y", k: int | None = None) -> WalkSpec:
        if side not in ("y", "x"):
            raise InvalidArgument(f"side must be 'y' or 'x', got {side!r}")
        if not 1 <= q < p:
            raise InvalidArgument(f"need 1 <= q < p, got p={p}, q={q}")
        k_left, k = bezout_stockpiles(p, q, k)
        return cls(n, p, q, t, side, -k_left, k)

    def __post_init__(self) -> None:
        n, p, q, t = self.n, self.p, self.q, self.t
        if self.side not in ("y", "x"):
            raise InvalidArgument(f"side must be 'y' or 'x', got {self.side!r}")
        if not 1 <= q < p:
            raise InvalidArgument(f"need 1 <= q < p, got p={p}, q={q}")
        if q == self.c:
            raise InvalidArgument(f"q={q} divides p={p}; that case needs no walk")
        if p + q > n:
            raise InvalidArgument(f"p + q = {p + q} exceeds n={n}")
        frame_t = t if self.side == "y" else n + 1 - t
        if not p < frame_t <= n:
            raise InvalidArgument(f"start t={t} not admissible for the {self.side}-side walk (n={n}, p={p})")
        if -self.stockpile_left * p + self.stockpile_right * q != -self.c or self.stockpile_right <= 0:
            raise InvalidArgument(
                f"stockpiles ({self.stockpile_left}, {self.stockpile_right}) violate the Bezout identity"
            )

    @property
    def c(self) -> int:
        return gcd(self.p, self.q)

    @property
    def expected_final(self) -> int:
        return self.t - self.c if self.side == "y" else self.t + self.c

    def mirrored(self) -> WalkSpec:
        other = "x" if self.side == "y" else "y"
        return WalkSpec(self.n, self.p, self.q, self.n + 1 - self.t, other, self.stockpile_left, self.stockpile_right)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "q": self.q,
            "t": self.t,
            "side": self.side,
            "c": self.c,
            "stockpile_left": self.stockpile_left,
            "stockpile_right": self.stockpile_right,
        }


_MIRROR_MOVE = {"left-p": "right-p", "right-q": "left-q"}


@dataclass(frozen=True)
class WalkTrace:
    spec: WalkSpec
    visited: tuple[int, ...]
    moves: tuple[str, ...]

    @property
    def final(self) -> int:
        return self.visited[-1]

    def ledger(self) -> list[tuple[int, str, int, int]]:
        """``(position, move, stockpile_p, stockpile_q)`` after each move; the p-stockpile is signed."""
        left, right = -self.spec.stockpile_left, self.spec.stockpile_right
        rows = []
        for pos, move in zip(self.visited[1:], self.moves):
            if move.endswith("-p"):
                left += 1
            else:
                right -= 1
            rows.append((pos, move, left, right))
        return rows

    def to_text(self) -> str:
        s = self.spec
        lines = [f"start pos={s.t} stockpile_p={-s.stockpile_left} stockpile_q={s.stockpile_right}"]
        lines += [f"pos={pos} move={m} stockpile_p={a} stockpile_q={b}" for pos, m, a, b in self.ledger()]
        lines.append(f"final={self.final}")
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {
            "spec": self.spec.as_dict(),
            "visited": list(self.visited),
            "moves": list(self.moves),
            "ledger": [
                {"pos": pos, "move": m, "stockpile_p": a, "stockpile_q": b} for pos, m, a, b in self.ledger()
            ],
            "final": self.final,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())


def _walk_frame(n: int, p: int, q: int, t: int, left: int, right: int) -> tuple[list[int], list[str], bool]:
    # y-side frame: left by p, right by q, leftward phase first
    pos = t
    visited = [pos]
    moves: list[str] = []
    going_left = True
    idle = 0
    while left or right:
        moved = False
        if going_left:
            while left and pos - p >= 1:
                pos -= p
                left -= 1
                visited.append(pos)
                moves.append("left-p")
                moved = True
        else:
            while right and pos + q <= n:
                pos += q
                right -= 1
                visited.append(pos)
                moves.append("right-q")
                moved = True
        idle = 0 if moved else idle + 1
        if idle >= 2:
            return visited, moves, False
        going_left = not going_left
    return visited, moves, True


def stockpile_walk(spec: WalkSpec) -> WalkTrace:
    """Run the greedy alternating walk; raise :class:`WalkStalled` if it gets stuck.

    The x-side walk is the y-side walk in the mirrored frame ``i -> n + 1 - i``,
    so its recorded moves read ``right-p`` / ``left-q`` in real coordinates.
    """
    n = spec.n
    frame = spec if spec.side == "y" else spec.mirrored()
    visited, moves, done = _walk_frame(n, spec.p, spec.q, frame.t, spec.stockpile_left, spec.stockpile_right)
    if spec.side == "x":
        visited = [n + 1 - i for i in visited]
        moves = [_MIRROR_MOVE[m] for m in moves]
    trace = WalkTrace(spec, tuple(visited), tuple(moves))
    if not done:
        raise WalkStalled(f"walk stalled at position {trace.final} with stockpiles remaining", trace)
    assert trace.final == spec.expected_final, trace
    return trace


@dataclass
class WalkSweepReport:
    walks: int = 0
    stalls: list = field(default_factory=list)
    wrong_final: list = field(default_factory=list)
    out_of_range: list = field(default_factory=list)
    max_length: int = 0

    @property
    def ok(self) -> bool:
        return not (self.stalls or self.wrong_final or self.out_of_range)


def _legal_walk_params(n_max: int) -> Iterator[tuple[int, int, int, int]]:
    for n in range(3, n_max + 1):
        for p in range(2, n):
            for q in range(1, min(p, n - p + 1)):
                if gcd(p, q) == q:
                    continue
                for t in range(p + 1, n + 1):
                    yield n, p, q, t


def sweep_walks(n_max: int = 60) -> WalkSweepReport:
    """Walk every legal ``(n, p, q, t)`` with ``n <= n_max`` and record any failure."""
    report = WalkSweepReport()
    bez: dict[tuple[int, int], tuple[int, int]] = {}
    for n, p, q, t in _legal_walk_params(n_max):
        if (p, q) not in bez:
            bez[p, q] = bezout_stockpiles(p, q)
        k_left, k = bez[p, q]
        report.walks += 1
        visited, moves, done = _walk_frame(n, p, q, t, -k_left, k)
        report.max_length = max(report.max_length, len(moves))
        if not done:
            report.stalls.append((n, p, q, t))
        elif visited[-1] != t - gcd(p, q):
            report.wrong_final.append((n, p, q, t))
        if min(visited) < 1 or max(visited) > n:
            report.out_of_range.append((n, p, q, t))
    return report


# --- the one-mismatch statement --------------------------------------------


def check_prop1_instance(inst: MismatchInstance) -> bool:
    """False only if the instance meets ``max(p, q) <= n // 2`` and still ``w != v``.

    When the bound holds and the periods differ without one dividing the other,
    the corresponding walk is also run (in whichever orientation has ``t`` past
    the larger period), so a stall surfaces as :class:`WalkStalled`.
    """
    n = inst.n
    if max(inst.p, inst.q) > n // 2:
        return True
    big, small = max(inst.p, inst.q), min(inst.p, inst.q)
    if big != small and gcd(big, small) != small:
        side = "y" if inst.t > big else "x"
        stockpile_walk(WalkSpec.build(n, big, small, inst.t, side))
    return inst.w == inst.v


@dataclass
class Prop1Report:
    n_max: int
    alphabet_size: int
    words: int = 0
    pairs: int = 0
    bounded_pairs: int = 0  # pairs whose w has min-period <= n // 2
    violations: list = field(default_factory=list)

    def merge(self, other: Prop1Report) -> Prop1Report:
        return Prop1Report(
            self.n_max,
            self.alphabet_size,
            self.words + other.words,
            self.pairs + other.pairs,
            self.bounded_pairs + other.bounded_pairs,
            sorted(self.violations + other.violations),
        )

    def as_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "alphabet_size": self.alphabet_size,
            "words": self.words,
            "pairs": self.pairs,
            "bounded_pairs": self.bounded_pairs,
            "violations": [
                {"w": str(Word(w, self.alphabet_size)), "v": str(Word(v, self.alphabet_size)), "t": t}
                for w, v, t in self.violations
            ],
        }


def _prop1_partition(task: tuple[int, int, int, tuple[int, ...]]) -> Prop1Report:
    n_max, n, k, prefix = task
    report = Prop1Report(n_max, k)
    half = n // 2
    per_word = n * (k - 1)
    for w in iter_words(n, k, prefix):
        report.words += 1
        report.pairs += per_word
        if min_period(w) > half:
            continue
        report.bounded_pairs += per_word
        for i in range(n):
            for b in range(k):
                if b == w[i]:
                    continue
                v = w[:i] + (b,) + w[i + 1 :]
                if min_period(v) <= half:
                    report.violations.append((w, v, i + 1))
    return report


def _sweep_tasks(n_values, k: int, n_max: int, prefix_len: int = 2):
    for n in n_values:
        for pre in prefixes(k, min(n, prefix_len)):
            yield (n_max, n, k, pre)


def verify_prop1_exhaustive(n_max: int, alphabet_size: int = 2, workers: int = 1) -> Prop1Report:
    """Flip every letter of every word of length ``<= n_max``; a violation is a flip
    where both words have minimal period ``<= n // 2``.

    Minimal periods suffice: any admissible pair of periods bounds the minimal ones.
    """
    if n_max < 1:
        raise InvalidArgument(f"n_max={n_max} must be >= 1")
    if alphabet_size not in (2, 3):
        raise InvalidArgument(f"alphabet size must be 2 or 3, got {alphabet_size}")
    tasks = list(_sweep_tasks(range(1, n_max + 1), alphabet_size, n_max))
    total = Prop1Report(n_max, alphabet_size)
    for part in run_partitions(_prop1_partition, tasks, workers):
        total = total.merge(part)
    return total


class MismatchPair(NamedTuple):
    w: Word
    v: Word
    p: int  # minimal period of v
    q: int  # minimal period of w
    t: int

    def as_dict(self) -> dict:
        return {"w": str(self.w), "v": str(self.v), "p": self.p, "q": self.q, "t": self.t}


def _canonical_pairs(n: int, k: int) -> Iterator[MismatchPair]:
    """Single-mismatch pairs with ``w != v``, one per joint letter renaming, sorted."""
    seen = set()
    for w in iter_words(n, k, (0,)):
        if canonical(w)[0] != w:
            continue
        q = min_period(w)
        for i in range(n):
            for b in range(k):
                if b == w[i]:
                    continue
                v = w[:i] + (b,) + w[i + 1 :]
                key = canonical(w, v)
                if key in seen:
                    continue
                seen.add(key)
                cw, cv = key
                yield MismatchPair(Word(cw, k), Word(cv, k), min_period(cv), q, i + 1)


def find_exercise_counterexamples(n: int, alphabet_size: int = 2) -> list[MismatchPair]:
    """Pairs refuting the ``p != q, p + q <= n`` version of the statement.

    Each kept pair is re-checked: it must fail "both have period gcd(p, q) and w = v".
    """
    if n < 2:
        raise InvalidArgument(f"n={n} must be >= 2")
    found = []
    for pair in _canonical_pairs(n, alphabet_size):
        if pair.p == pair.q or pair.p + pair.q > n:
            continue
        g = gcd(pair.p, pair.q)
        holds = has_period(pair.w, g) and has_period(pair.v, g) and pair.w == pair.v
        if holds:
            raise AssertionError(f"{pair} satisfies the conclusion yet was flagged")
        found.append(pair)
    return sorted(found)


def find_tightness_witnesses(n: int, alphabet_size: int = 2) -> list[MismatchPair]:
    """Distinct single-mismatch pairs with ``max(p, q) = n // 2 + 1`` and ``p + q <= n``."""
    if n < 2:
        raise InvalidArgument(f"n={n} must be >= 2")
    bound = n // 2 + 1
    return sorted(
        pair
        for pair in _canonical_pairs(n, alphabet_size)
        if max(pair.p, pair.q) == bound and pair.p + pair.q <= n
    )


def check_fine_wilf(w, p: int, q: int) -> bool:
    """True iff ``n < p + q`` or ``gcd(p, q)`` is a period of ``w``."""
    if not (has_period(w, p) and has_period(w, q)):
        raise InvalidArgument(f"{w} does not have both periods {p} and {q}")
    return len(w) < p + q or has_period(w, gcd(p, q))


def verify_fine_wilf_exhaustive(n_max: int, alphabet_size: int = 2) -> tuple[int, list]:
    """Check every pair of periods of every word up to ``n_max``; returns (checks, failures)."""
    checks, failures = 0, []
    for n in range(1, n_max + 1):
        for w in iter_words(n, alphabet_size, (0,)):
            ps = [p for p in range(1, n + 1) if has_period(w, p)]
            for i, p in enumerate(ps):
                for q in ps[i:]:
                    checks += 1
                    if not check_fine_wilf(w, p, q):
                        failures.append((w, p, q))
    return checks, failures
