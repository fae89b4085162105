"""Closures of fixed-splitting strata for argyle blocks.

A block is a middle node (a bundle on P^1 with a fixed splitting) together
with the rank-one neighbours it is joined to.  With both neighbours present the
closure of the collision-free stratum is a projective space times a product of
Grassmannians; with one neighbour missing it is a product of Grassmannians.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .chains import ChainLabel, DomainError, total_slope
from .series import MotivicClass, grassmannian_class, projective_class, multiply


class EmptyStratum(ValueError):
    """The stratum has no stable points."""


class NonArgyleError(DomainError):
    """The labelling has two adjacent nodes of rank > 1."""


@dataclass(frozen=True)
class StratumGeometry:
    proj_dim: Optional[int]
    gr_factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "gr_factors", tuple((int(s), int(n)) for s, n in self.gr_factors))
        for s, n in self.gr_factors:
            if not 1 <= s <= n:
                raise EmptyStratum(f"Gr({s},{n}) is empty")
        if self.proj_dim is not None and self.proj_dim < 0:
            raise EmptyStratum(f"projective factor of dimension {self.proj_dim}")

    @property
    def dimension(self) -> int:
        return (self.proj_dim or 0) + sum(s * (n - s) for s, n in self.gr_factors)

    def motivic_class(self) -> MotivicClass:
        parts = [grassmannian_class(s, n) for s, n in self.gr_factors]
        if self.proj_dim is not None:
            parts.append(projective_class(self.proj_dim))
        return multiply(*parts)

    def describe(self) -> str:
        bits = []
        if self.proj_dim is not None:
            bits.append(f"P^{self.proj_dim}")
        for s, n in self.gr_factors:
            if s == n:
                bits.append("pt")
            else:
                bits.append(f"P^{n - 1}" if s == 1 else f"Gr({s},{n})")
        return " x ".join(bits) if bits else "pt"


@dataclass(frozen=True)
class ArgyleBlock:
    """A middle node with optional rank-one neighbours, under the global slope."""

    middle_rank: int
    middle_degree: int
    left_degree: Optional[int]
    right_degree: Optional[int]
    twist: int
    global_slope: Fraction
    middle_index: int = 0

    def __post_init__(self):
        if self.left_degree is None and self.right_degree is None:
            raise DomainError("a block needs at least one neighbour")

    @property
    def shape(self) -> str:
        if self.left_degree is not None and self.right_degree is not None:
            return "1k1"
        return "k1" if self.left_degree is None else "1k"


def _parts(s) -> list[tuple[int, int]]:
    parts = list(getattr(s, "parts", s))
    if any(parts[i][0] <= parts[i + 1][0] for i in range(len(parts) - 1)):
        raise DomainError(f"splitting parts must be strictly decreasing: {parts}")
    return parts


def i_prime(s, mu: Fraction) -> int:
    """Number of summand groups whose degree lies above mu."""
    parts = _parts(s)
    if any(a == mu for a, _ in parts):
        raise DomainError(f"summand degree equals the slope {mu}")
    return sum(1 for a, _ in parts if a > mu)


def closure_geometry(block: ArgyleBlock, s, convention: str = "corrected") -> StratumGeometry:
    """Closure of the collision-free stratum of ``block`` with splitting ``s``.

    ``convention="printed"`` reproduces the uncorrected index conventions for
    documentation only; it disagrees with direct map counting.
    """
    parts = _parts(s)
    if sum(m for _, m in parts) != block.middle_rank:
        raise DomainError("splitting rank does not match the block")
    if sum(a * m for a, m in parts) != block.middle_degree:
        raise DomainError("splitting degree does not match the block")
    t, d1, d3 = block.twist, block.left_degree, block.right_degree
    m = len(parts)

    def phi_side(j):  # forced maps into the right node, reduced by larger summands
        a, _ = parts[j]
        return d3 - a + t + 1 - sum(sk * (ak - a + 1) for ak, sk in parts[:j])

    def xi_side(j):  # forced maps from the left node, reduced by smaller summands
        a, _ = parts[j]
        if convention == "printed":
            return a - d1 + t + 1 - sum(sk * (ak - a + 1) for ak, sk in parts[j:m - 1])
        return a - d1 + t + 1 - sum(sk * (a - ak + 1) for ak, sk in parts[j + 1:])

    try:
        if block.shape == "k1":
            return StratumGeometry(None, [(parts[j][1], phi_side(j)) for j in range(m)])
        if block.shape == "1k":
            return StratumGeometry(None, [(parts[j][1], xi_side(j)) for j in range(m)])
        ip = i_prime(parts, block.global_slope)
        upper, lower = parts[:ip], parts[ip:]
        if convention == "printed":
            q = (sum(sj * (d3 - a + t + 1) for a, sj in upper)
                 + sum(sj * (a - d1 + t + 1) for a, sj in lower))
        else:
            q = (sum(sj * (a - d1 + t + 1) for a, sj in upper)
                 + sum(sj * (d3 - a + t + 1) for a, sj in lower))
        q -= 1 + sum(sj * sk * (aj - ak + 1) for aj, sj in upper for ak, sk in lower)
        grs = [(parts[j][1], phi_side(j)) for j in range(ip)]
        grs += [(parts[j][1], xi_side(j)) for j in range(ip, m)]
        return StratumGeometry(q, grs)
    except EmptyStratum as exc:
        raise EmptyStratum(f"{block.shape} block, splitting {parts}: {exc}") from None


def block_decompose(c: ChainLabel) -> list[ArgyleBlock]:
    """Split an argyle labelling into blocks sharing the global slope.

    Every node of rank > 1 is a middle node.  Runs of rank-one nodes are cut
    into blocks with rank-one middles so that every arrow is owned by exactly
    one block.
    """
    ranks, degs, n = c.ranks, c.degrees, c.n
    for i in range(n - 1):
        if ranks[i] > 1 and ranks[i + 1] > 1:
            raise NonArgyleError(
                f"nodes {i + 1} and {i + 2} both have rank > 1 ({ranks[i]},{ranks[i + 1]}); "
                "the labelling is not argyle")
    mu = total_slope(c)
    owner: dict[int, tuple[bool, bool]] = {}
    covered = [False] * (n - 1)
    for i in range(n):
        if ranks[i] > 1:
            owner[i] = (i > 0, i < n - 1)
            if i > 0:
                covered[i - 1] = True
            if i < n - 1:
                covered[i] = True
    i = 0
    while i < n - 1:
        if covered[i]:
            i += 1
            continue
        if i + 1 < n - 1 and not covered[i + 1]:
            owner[i + 1] = (True, True)
            covered[i] = covered[i + 1] = True
            i += 2
        else:
            owner[i + 1] = (True, False)
            covered[i] = True
            i += 1
    blocks = []
    for mid in sorted(owner):
        has_left, has_right = owner[mid]
        blocks.append(ArgyleBlock(
            middle_rank=ranks[mid], middle_degree=degs[mid],
            left_degree=degs[mid - 1] if has_left else None,
            right_degree=degs[mid + 1] if has_right else None,
            twist=c.twist, global_slope=mu, middle_index=mid))
    return blocks


def _atoms(s) -> list[int]:
    return [a for a, m in _parts(s) for _ in range(m)]


def h0_end(s) -> int:
    """h^0(End U) on P^1 for U split as ``s``."""
    atoms = _atoms(s)
    return sum(max(0, ai - aj + 1) for ai in atoms for aj in atoms)


def h1_end(s) -> int:
    """h^1(End U) on P^1 for U split as ``s``."""
    atoms = _atoms(s)
    return sum(max(0, aj - ai - 1) for ai in atoms for aj in atoms)
