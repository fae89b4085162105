"""Morse index of a fixed component, computed from its labelling."""

from __future__ import annotations

from .chains import ChainLabel, DomainError


def _chi_hom(ri, di, rj, dj, twist_power):
    """Euler characteristic of Hom(U_i, U_j) (x) O(twist_power) on P^1."""
    return ri * dj - rj * di + ri * rj * (twist_power + 1)


def _chi_weight(c: ChainLabel, k: int, twist_power: int) -> int:
    """chi of W_k (x) O(twist_power), W_k = sum_i Hom(U_i, U_{i+k})."""
    r, d = c.ranks, c.degrees
    return sum(_chi_hom(r[i], d[i], r[i + k], d[i + k], twist_power) for i in range(c.n - k))


def morse_index(c: ChainLabel) -> int:
    """Twice the total h^1 of the positive-weight deformation complexes.

    For each weight k >= 1 the complex W_k -> W_{k+1} (x) L has no H^0 and no
    H^2, so its H^1 has dimension chi(W_{k+1} (x) L) - chi(W_k).
    """
    if c.genus != 0:
        raise DomainError("Morse indices are only implemented on the projective line")
    t = c.twist
    beta = 0
    for k in range(1, c.n):
        beta += _chi_weight(c, k + 1, t) - _chi_weight(c, k, 0)
    beta *= 2
    if beta < 0:
        raise DomainError(f"negative Morse index {beta} for {c}: labelling is not admissible")
    return beta
