"""Period sets, their gap sequences, and the arithmetic realizability conditions.

A period set of length ``n`` is a strictly increasing sequence
``0 = p_0 < p_1 < ... < p_s = n``.  The gaps ``delta_h = p_h - p_(h-1)`` drive
both checkers below: condition (iii) (multiples of each qualifying gap stay in
the set, plus a gcd inequality when the next gap is smaller) and condition (iv)
(the next multiple is present and no gap is a proper multiple of its successor).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator

from .errors import InvalidArgument

__all__ = [
    "PeriodSet",
    "Violation",
    "ConditionReport",
    "deltas",
    "pi_h",
    "check_condition_iii",
    "check_condition_iv",
    "candidate_sets",
]


@dataclass(frozen=True)
class PeriodSet:
    n: int
    members: tuple[int, ...]
    mask: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        m = tuple(self.members)
        if not m or m[0] != 0 or m[-1] != self.n:
            raise InvalidArgument(f"period set must start at 0 and end at n={self.n}: {m}")
        if any(a >= b for a, b in zip(m, m[1:])):
            raise InvalidArgument(f"period set members must be strictly increasing: {m}")
        object.__setattr__(self, "members", m)
        mask = 0
        for p in m:
            mask |= 1 << p
        object.__setattr__(self, "mask", mask)

    @classmethod
    def from_members(cls, members: Iterable[int]) -> PeriodSet:
        m = tuple(sorted(set(members)))
        if not m:
            raise InvalidArgument("empty period set")
        return cls(m[-1], m)

    @classmethod
    def from_mask(cls, mask: int, n: int) -> PeriodSet:
        if mask < 0 or mask >> (n + 1):
            raise InvalidArgument(f"mask {mask:#x} has bits beyond n={n}")
        return cls(n, tuple(i for i in range(n + 1) if mask >> i & 1))

    @classmethod
    def parse(cls, text: str) -> PeriodSet:
        """Parse ``"{0,2,4,6}"`` or ``"0,2,4,6"``; ``n`` is the last member."""
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        tokens = [tok.strip() for tok in body.split(",")]
        members = []
        for tok in tokens:
            if not re.fullmatch(r"\d+", tok):
                raise InvalidArgument(f"malformed period set member {tok!r} in {text!r}")
            members.append(int(tok))
        if members != sorted(set(members)):
            raise InvalidArgument(f"period set {text!r} is not strictly increasing")
        return cls(members[-1], tuple(members))

    @property
    def s(self) -> int:
        return len(self.members) - 1

    def __contains__(self, p: object) -> bool:
        return isinstance(p, int) and 0 <= p <= self.n and bool(self.mask >> p & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"

    def to_hex(self) -> str:
        """Lowercase hex of the (n+1)-bit membership mask, zero-padded to a fixed width."""
        width = (self.n + 1 + 3) // 4
        return format(self.mask, f"0{width}x")

    @classmethod
    def from_hex(cls, text: str, n: int) -> PeriodSet:
        return cls.from_mask(int(text, 16), n)


@dataclass(frozen=True)
class Violation:
    tag: str  # iii-a, iii-b, iv-a, iv-b
    h: int
    value: int

    def __str__(self) -> str:
        return f"{self.tag} h={self.h} value={self.value}"


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    violations: tuple[Violation, ...] = ()

    @property
    def satisfied(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "condition": self.condition,
            "satisfied": self.satisfied,
            "violations": [{"tag": v.tag, "h": v.h, "value": v.value} for v in self.violations],
        }


def deltas(pi: PeriodSet) -> tuple[int, ...]:
    """Gaps ``(delta_1, ..., delta_s)`` between consecutive members."""
    m = pi.members
    return tuple(b - a for a, b in zip(m, m[1:]))


def pi_h(pi: PeriodSet, h: int) -> PeriodSet:
    """Shift the members ``>= p_h`` down by ``p_h``: the period set of the length ``n - p_h`` tail."""
    if not 0 <= h <= pi.s:
        raise InvalidArgument(f"h={h} outside [0, {pi.s}]")
    ph = pi.members[h]
    return PeriodSet(pi.n - ph, tuple(p - ph for p in pi.members[h:]))


def _qualifying(pi: PeriodSet) -> Iterator[tuple[int, int, int, int]]:
    # yields (h, p_h, delta_h, delta_(h+1)) for every h with delta_h <= n - p_h
    d = deltas(pi)
    n = pi.n
    for h in range(1, pi.s + 1):
        ph, dh = pi.members[h], d[h - 1]
        if dh <= n - ph:
            # p_h < n, so h < s and the next gap exists
            assert h < pi.s
            yield h, ph, dh, d[h]


def check_condition_iii(pi: PeriodSet) -> ConditionReport:
    found = []
    n = pi.n
    for h, ph, dh, dn in _qualifying(pi):
        for k in range(1, (n - ph) // dh + 1):
            if ph + k * dh not in pi:
                found.append(Violation("iii-a", h, ph + k * dh))
        if dn < dh and not dh + dn > n - ph + gcd(dh, dn):
            found.append(Violation("iii-b", h, dn))
    return ConditionReport("iii", tuple(found))


def check_condition_iv(pi: PeriodSet) -> ConditionReport:
    found = []
    for h, ph, dh, dn in _qualifying(pi):
        if ph + dh not in pi:
            found.append(Violation("iv-a", h, ph + dh))
        if dh % dn == 0 and dh // dn >= 2:
            found.append(Violation("iv-b", h, dh // dn))
    return ConditionReport("iv", tuple(found))


def candidate_sets(n: int) -> Iterator[PeriodSet]:
    """Every subset of ``{0..n}`` containing 0 and n, in increasing mask order."""
    if n < 0:
        raise InvalidArgument(f"n={n} must be non-negative")
    if n == 0:
        yield PeriodSet(0, (0,))
        return
    top = 1 | (1 << n)
    for inner in range(1 << (n - 1)):
        yield PeriodSet.from_mask(top | (inner << 1), n)
