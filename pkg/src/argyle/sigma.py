"""Stability parameters matching argyle chains with tuples of bundles.

An argyle chain 1, r_2, 1, r_4, ..., 1 of length 2q+1 maps to the 4q-tuple
V_i = U_i^* U_{i+1} L, V_{i+1} = U_i^* U_{i+2} L^2 (i odd).  The parameter
sigma in Q^{2q} is fixed by asking that both kinds of line-subbundle test
objects destabilise at the same threshold on both sides, which gives 2q
linear equations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import sympy

from .chains import ChainLabel, DomainError
from .geometry import NonArgyleError


class SingularSigmaSystem(ArithmeticError):
    pass


def _check_argyle(ranks: Sequence[int]) -> int:
    n = len(ranks)
    if n < 3 or n % 2 == 0:
        raise DomainError(f"need an odd-length chain of length >= 3, got {n}")
    if any(ranks[i] != 1 for i in range(0, n, 2)):
        raise NonArgyleError(f"odd-position nodes must have rank 1: {tuple(ranks)}")
    if any(ranks[i] < 1 for i in range(1, n, 2)):
        raise DomainError(f"ranks must be positive: {tuple(ranks)}")
    return (n - 1) // 2


@dataclass(frozen=True)
class SigmaSystem:
    matrix: tuple[tuple[Fraction, ...], ...]
    rhs: tuple[Fraction, ...]
    ranks: tuple[int, ...]
    degrees: tuple[int, ...]  # after the d_1 = 0 normalisation
    twist: int
    genus: int
    e: int
    shift: int  # d_1 of the input labelling

    @property
    def q(self) -> int:
        return (len(self.ranks) - 1) // 2


def tuple_degree(ranks: Sequence[int], degrees: Sequence[int], t: int) -> int:
    """Total degree e of the associated tuple."""
    n = len(ranks)
    e = sum(degrees)
    for i in range(0, n - 1, 2):
        e += (ranks[i + 1] + 2) * t - (ranks[i + 1] + 1) * degrees[i]
    return e


def tuple_bundle_degrees(ranks: Sequence[int], degrees: Sequence[int], t: int) -> list[int]:
    """deg V_1, ..., deg V_2q."""
    out = []
    for i in range(0, len(ranks) - 1, 2):
        out.append(ranks[i + 1] * (t - degrees[i]) + degrees[i + 1])
        out.append(degrees[i + 2] - degrees[i] + 2 * t)
    return out


def sigma_matrix(ranks: Sequence[int]) -> list[list[Fraction]]:
    """Rows of the first family for j = 2, 4, ..., 2q, then rows of the second family."""
    q = _check_argyle(ranks)
    r = sum(ranks)
    first, second = [], []
    for j in range(2, 2 * q + 1, 2):
        rj = ranks[j - 1]
        row = [Fraction(1)] * (2 * q)
        row[j - 2] = 1 - Fraction(r, rj)
        first.append(row)
        row = [Fraction(2)] * (2 * q)
        row[j - 2] = 2 - Fraction(r, rj)
        row[j - 1] = Fraction(2 - r)
        second.append(row)
    return first + second


def build_sigma_system(c: ChainLabel, normalize: bool = True) -> SigmaSystem:
    """The 2q x 2q system for sigma.  Degrees are shifted so that d_1 = 0 unless
    ``normalize`` is false."""
    q = _check_argyle(c.ranks)
    shift = c.degrees[0] if normalize else 0
    degs = tuple(d - r * shift for r, d in zip(c.ranks, c.degrees))
    ranks, t = c.ranks, c.twist
    r, d = sum(ranks), sum(degs)
    e = tuple_degree(ranks, degs, t)
    mu = Fraction(d, r)
    rhs1, rhs2 = [], []
    for j in range(2, 2 * q + 1, 2):
        dprev, dnext = degs[j - 2], degs[j]
        rj, rnext = ranks[j - 1], ranks[j]
        rhs1.append(-dprev + mu + t - Fraction(e, 2 * q * rj))
        rhs2.append(-2 * dprev + mu + dnext + 3 * t - Fraction(e, 2 * q) * (Fraction(1, rj) + Fraction(1, rnext)))
    matrix = tuple(tuple(row) for row in sigma_matrix(ranks))
    return SigmaSystem(matrix, tuple(rhs1 + rhs2), tuple(ranks), degs, t, c.genus, e, shift)


def _residual(system: SigmaSystem, sigma: Sequence[Fraction]) -> list[Fraction]:
    return [sum(a * s for a, s in zip(row, sigma)) - b for row, b in zip(system.matrix, system.rhs)]


def solve_sigma(system: SigmaSystem) -> list[Fraction]:
    """The unique exact solution; the residual is re-checked in plain rationals."""
    A = sympy.Matrix(system.matrix)
    det = A.det(method="bareiss")
    if det == 0:
        raise SingularSigmaSystem(
            f"sigma matrix is singular for ranks {system.ranks}: {A.tolist()}")
    sol = A.LUsolve(sympy.Matrix(system.rhs))
    sigma = [Fraction(int(x.p), int(x.q)) for x in sol]
    res = _residual(system, sigma)
    if any(res):
        raise SingularSigmaSystem(f"nonzero residual {res} for ranks {system.ranks}")
    return sigma


def reduced_sigma_matrix(ranks: Sequence[int]) -> list[list[Fraction]]:
    """Subtract each first-family row from its second-family partner and interleave."""
    q = _check_argyle(ranks)
    rows = sigma_matrix(ranks)
    out = []
    for k in range(q):
        first, second = rows[k], rows[q + k]
        out.append(first)
        out.append([b - a for a, b in zip(first, second)])
    return out


def sigma_determinant_closed_form(ranks: Sequence[int]) -> Fraction:
    """det of the reduced matrix from the determinant lemma.

    It is diag(-r/r_2, -r, -r/r_4, -r, ...) plus the all-ones matrix, so the
    determinant is (1 + sum of reciprocal diagonal entries) * product of the
    diagonal, i.e. (r - q - sum r_j) * r^(2q-1) / prod r_j.
    """
    q = _check_argyle(ranks)
    mids = [ranks[j] for j in range(1, 2 * q, 2)]
    r = sum(ranks)
    prod = 1
    for m in mids:
        prod *= m
    return Fraction((r - q - sum(mids)) * r ** (2 * q - 1), prod)


def sigma_determinant_check(ranks: Sequence[int]) -> tuple[Fraction, Fraction]:
    """(row-reduced determinant, closed form); raises if they differ or vanish."""
    reduced = sympy.Matrix(reduced_sigma_matrix(ranks))
    det = reduced.det(method="bareiss")
    computed = Fraction(int(sympy.fraction(det)[0]), int(sympy.fraction(det)[1]))
    closed = sigma_determinant_closed_form(ranks)
    if computed != closed:
        raise AssertionError(f"determinant {computed} != closed form {closed} for ranks {tuple(ranks)}")
    if computed == 0:
        raise SingularSigmaSystem(f"reduced sigma matrix is singular for ranks {tuple(ranks)}")
    return computed, closed


def tuple_stability_check(sub_ranks: Sequence[int], sub_degree, phi1_in_sub: bool,
                          ranks: Sequence[int], degree, sigma: Sequence) -> bool:
    """Stability inequality of a subtuple with ranks k'_i and degree e'.

    ``ranks`` are the k_i of the ambient tuple, ``degree`` its e.  The ambient
    rank k + 1 counts the trivial line that phi_1 starts from.
    """
    if len(sub_ranks) != len(ranks) or len(sigma) != len(ranks):
        raise DomainError("subtuple, tuple and sigma lengths differ")
    if any(not 0 <= a <= b for a, b in zip(sub_ranks, ranks)):
        raise DomainError(f"need 0 <= k'_i <= k_i, got {tuple(sub_ranks)} in {tuple(ranks)}")
    m = len(ranks)
    k, kp = sum(ranks), sum(sub_ranks) + (1 if phi1_in_sub else 0)
    bound = Fraction(degree) / m * sum(Fraction(a, b) for a, b in zip(sub_ranks, ranks))
    bound += sum(Fraction(s) * (kp - (k + 1) * Fraction(a, b)) for s, a, b in zip(sigma, sub_ranks, ranks))
    return Fraction(sub_degree) < bound


def pullback_degrees(c: ChainLabel) -> list[int]:
    """Degrees b_0, ..., b_q of the line bundles in the image of h.

    Entry m multiplies det V_i over the first q - m odd i and det(V_i V_{i+1}^*)
    over the last m.
    """
    q = _check_argyle(c.ranks)
    v = tuple_bundle_degrees(c.ranks, c.degrees, c.twist)
    plain = [v[2 * k] for k in range(q)]
    twisted = [v[2 * k] - c.ranks[2 * k + 1] * v[2 * k + 1] for k in range(q)]
    return [sum(plain[:q - m]) + sum(twisted[q - m:]) for m in range(q + 1)]


def pi_prime_first_degree(c: ChainLabel) -> int:
    """Degree of P L^(sum r_even) (U_1^*)^(r_2+1) ... (U_(2q-1)^*)^(r_2q+1) U_(2q+1)^*."""
    _check_argyle(c.ranks)
    r, d, t = c.ranks, c.degrees, c.twist
    out = sum(d) + t * sum(r[1::2]) - d[-1]
    for i in range(0, len(r) - 1, 2):
        out -= (r[i + 1] + 1) * d[i]
    return out


def alpha_from_sigma(c: ChainLabel, sigma: Sequence, normalization: str = "n-1") -> list[Fraction]:
    """alpha_i = (r / r_(i+1)) (sigma_i - mu / N) with N = n - 1 or N = 2q.

    For odd-length argyle chains n - 1 = 2q, so the two readings agree; both
    are accepted so callers can state which one they mean.
    """
    q = _check_argyle(c.ranks)
    if normalization == "n-1":
        N = c.n - 1
    elif normalization == "2q":
        N = 2 * q
    else:
        raise DomainError(f"unknown normalization {normalization!r}")
    r = sum(c.ranks)
    mu = Fraction(sum(d - rk * c.degrees[0] for rk, d in zip(c.ranks, c.degrees)), r)
    return [Fraction(r, c.ranks[i + 1]) * (Fraction(s) - mu / N) for i, s in enumerate(sigma)]
