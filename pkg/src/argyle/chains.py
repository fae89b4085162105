"""Labelled A-type chains, slopes, and enumeration of fixed-point labellings."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import floor, ceil, gcd
from typing import Iterator

log = logging.getLogger(__name__)

Slope = Fraction


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


@dataclass(frozen=True)
class ChainLabel:
    """Ranks and degrees of the nodes of an A-type chain, plus twist and genus."""

    ranks: tuple[int, ...]
    degrees: tuple[int, ...]
    twist: int = 0
    genus: int = 0

    def __post_init__(self):
        object.__setattr__(self, "ranks", tuple(int(r) for r in self.ranks))
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if not self.ranks:
            raise DomainError("a chain needs at least one node")
        if len(self.ranks) != len(self.degrees):
            raise DomainError(f"{len(self.ranks)} ranks but {len(self.degrees)} degrees")
        if any(r < 1 for r in self.ranks):
            raise DomainError(f"ranks must be positive: {self.ranks}")
        if self.twist < 0 or self.genus < 0:
            raise DomainError("twist and genus must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.ranks)

    @property
    def rank(self) -> int:
        return sum(self.ranks)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    def shifted(self, c: int) -> "ChainLabel":
        """Tensor every node by a degree-c line bundle."""
        return ChainLabel(self.ranks, tuple(d + r * c for r, d in zip(self.ranks, self.degrees)),
                          self.twist, self.genus)

    def sort_key(self):
        return (self.n, self.ranks, self.degrees)

    def __str__(self):
        return f"ranks={list(self.ranks)} degrees={list(self.degrees)} t={self.twist}"


def total_slope(c: ChainLabel) -> Slope:
    return Fraction(c.degree, c.rank)


def label_admissible(c: ChainLabel) -> bool:
    """Whether a stable representation with this labelling exists on P^1."""
    if c.genus != 0:
        raise DomainError("admissibility is only decided on the projective line (genus 0)")
    from .splittings import admissible_strata

    return bool(admissible_strata(c))


def compositions(r: int, min_parts: int = 1) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of r, shortest first, lexicographic within a length."""
    def rec(rest, k):
        if k == 1:
            yield (rest,)
            return
        for first in range(1, rest - k + 2):
            for tail in rec(rest - first, k - 1):
                yield (first,) + tail

    for k in range(max(min_parts, 1), r + 1):
        yield from sorted(rec(r, k))


def _degree_ranges(ranks, d, r, width):
    mu = Fraction(d, r)
    out = []
    for ri in ranks:
        lo = ceil(ri * (mu - width))
        hi = floor(ri * (mu + width))
        out.append((lo, hi))
    return out


def _scan(ranks, d, t, width):
    ranges = _degree_ranges(ranks, d, sum(ranks), width)
    found, on_boundary = [], False
    free = ranges[:-1]
    lo_last, hi_last = ranges[-1]
    for head in product(*(range(lo, hi + 1) for lo, hi in free)):
        last = d - sum(head)
        if not lo_last <= last <= hi_last:
            continue
        degs = head + (last,)
        label = ChainLabel(ranks, degs, t)
        if label_admissible(label):
            found.append(label)
            if any(x in (lo, hi) for x, (lo, hi) in zip(degs, ranges)):
                on_boundary = True
    return found, on_boundary


def enumerate_labellings(r: int, d: int, t: int) -> list[ChainLabel]:
    """All admissible fixed-point labellings for rank r, degree d, twist t.

    Chains of length 1 are only included when r == 1.  Degrees are searched in
    the window |d_i/r_i - d/r| <= r(t+1); an admissible labelling on the window
    edge triggers one widening, and a second hit is an error.
    """
    if r < 1:
        raise DomainError("rank must be positive")
    if t < 0:
        raise DomainError("twist must be nonnegative")
    if gcd(r, d) != 1:
        raise DomainError(f"rank {r} and degree {d} are not coprime")
    if r == 1:
        return [ChainLabel((1,), (d,), t)]
    result = []
    for ranks in compositions(r, min_parts=2):
        width = r * (t + 1)
        found, edge = _scan(ranks, d, t, width)
        if edge:
            log.warning("admissible labelling on search window edge for ranks %s; widening", ranks)
            found, edge = _scan(ranks, d, t, 2 * width)
            if edge:
                raise RuntimeError(f"enumeration window not conservative for ranks {ranks}")
        result.extend(found)
    result.sort(key=ChainLabel.sort_key)
    return result
