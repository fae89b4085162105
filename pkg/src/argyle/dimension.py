"""Expected dimension of moduli of twisted chain representations."""

from __future__ import annotations

from typing import Sequence

from .chains import ChainLabel, DomainError


def moduli_dimension(c: ChainLabel, h0_end_values: Sequence[int]) -> int:
    """Dimension at a stable point, given h^0(End U_i) for every node.

    The arrow terms telescope to chi of the deformation complex; the automorphism
    correction keeps only the smallest h^0 among the nodes.
    """
    h0 = list(h0_end_values)
    if len(h0) != c.n:
        raise DomainError(f"need {c.n} h^0(End) values, got {len(h0)}")
    if any(int(v) != v or v < 1 for v in h0):
        raise DomainError(f"h^0(End) values must be positive integers: {h0}")
    r, d, t, g = c.ranks, c.degrees, c.twist, c.genus
    arrows = sum(r[i] * d[i + 1] - r[i + 1] * d[i] + r[i] * r[i + 1] * t for i in range(c.n - 1))
    endo = sum(r[i] * r[i + 1] for i in range(c.n - 1)) - sum(x * x for x in r)
    return arrows + (1 - g) * endo + min(h0)


def higgs_moduli_dimension(r: int, t: int) -> int:
    """Dimension of the moduli of O(t)-twisted Higgs bundles of rank r on P^1."""
    if r < 1 or t < 1:
        raise DomainError(f"need r >= 1 and t >= 1, got r={r}, t={t}")
    return t * r * r + 1
