"""Classes of collision loci of binary forms, with a finite-field counting oracle.

A collision locus is the set of tuples of binary forms (or of linear spaces of
binary forms) sharing a common zero on P^1.  Classes come from stratifying by
the degree g of the common divisor: a tuple with a common divisor of degree g
is that divisor (a point of Sym^g P^1 = P^g) times a base-point-free tuple of
forms of degrees lowered by g.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .chains import DomainError
from .series import MotivicClass, ZERO, grassmannian_class, multiply, projective_class

DEFAULT_BUDGET = int(os.environ.get("ARGYLE_ORACLE_BUDGET", 10**8))


class OracleBudgetExceeded(RuntimeError):
    pass


class NonPolynomialCount(ValueError):
    """Point counts are not interpolated by an integer polynomial."""


def sym_class(g: int) -> MotivicClass:
    """Class of effective divisors of degree g on P^1."""
    if g < 0:
        raise DomainError("negative divisor degree")
    return projective_class(g)


@lru_cache(maxsize=None)
def _bpf(factors: tuple[tuple[int, int], ...]) -> MotivicClass:
    if any(s > e + 1 for s, e in factors):
        return ZERO
    total = multiply(*(grassmannian_class(s, e + 1) for s, e in factors))
    gmax = min(e + 1 - s for s, e in factors)
    for g in range(1, gmax + 1):
        total = total - sym_class(g) * _bpf(tuple((s, e - g) for s, e in factors))
    return total


def bpf_tuple_class(factors: Iterable[tuple[int, int]]) -> MotivicClass:
    """Tuples of subspaces (dimension s_i inside forms of degree e_i) with no common zero."""
    factors = tuple(sorted((int(s), int(e)) for s, e in factors))
    if not factors:
        raise DomainError("empty tuple of forms")
    for s, e in factors:
        if s < 1 or e < 0:
            raise DomainError(f"bad factor (s={s}, e={e})")
    return _bpf(factors)


def coprime_tuple_class(degrees: Sequence[int]) -> MotivicClass:
    """Tuples of projectivised forms of the given degrees without a common divisor."""
    if not degrees:
        raise DomainError("empty tuple of forms")
    return bpf_tuple_class((1, e) for e in degrees)


def common_zero_class(degrees: Sequence[int]) -> MotivicClass:
    """Tuples of projectivised forms of the given degrees sharing a zero."""
    if not degrees:
        raise DomainError("empty tuple of forms")
    full = multiply(*(projective_class(e) for e in degrees))
    return full - coprime_tuple_class(degrees)


def bpf_grassmannian_class(s: int, e: int) -> MotivicClass:
    """s-dimensional spaces of degree-e forms with no common zero."""
    if not 1 <= s <= e + 1:
        raise DomainError(f"need 1 <= s <= e+1, got s={s}, e={e}")
    return bpf_tuple_class([(s, e)])


# --- finite-field oracle -----------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_mod(f, g, p):
    """Remainder of f by g over F_p; coefficient lists are low degree first."""
    f, g = _trim(f), _trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(g[-1], p - 2, p)
    while len(f) >= len(g):
        c = f[-1] * inv % p
        shift = len(f) - len(g)
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        f = _trim(f)
    return f


def poly_gcd(f, g, p):
    f, g = _trim(x % p for x in f), _trim(x % p for x in g)
    while g:
        f, g = g, poly_mod(f, g, p)
    return f


@dataclass(frozen=True)
class FormSpaceSpec:
    """Product of spaces of binary forms: each factor is Gr(s, forms of degree e)."""

    factors: tuple[tuple[int, int], ...]

    @classmethod
    def projective(cls, degrees: Iterable[int]) -> "FormSpaceSpec":
        return cls(tuple((1, int(e)) for e in degrees))

    def __post_init__(self):
        for s, e in self.factors:
            if e < 0 or not 1 <= s <= e + 1:
                raise DomainError(f"bad factor (s={s}, e={e})")


def _gaussian_count(s, n, q):
    return grassmannian_class(s, n).evaluate(q)


def _rref_points(s: int, n: int, p: int):
    """All s x n reduced row echelon matrices of rank s over F_p."""
    from itertools import combinations

    for pivots in combinations(range(n), s):
        free = [(r, c) for r in range(s) for c in range(pivots[r] + 1, n) if c not in pivots]
        for vals in product(range(p), repeat=len(free)):
            rows = [[0] * n for _ in range(s)]
            for r, c in enumerate(pivots):
                rows[r][c] = 1
            for (r, c), v in zip(free, vals):
                rows[r][c] = v
            yield rows


def _has_common_zero(forms, degrees, p) -> bool:
    # common zero at infinity: every form has vanishing top coefficient
    if all(f[e] == 0 for f, e in zip(forms, degrees)):
        return True
    g = []
    for f in forms:
        g = poly_gcd(g, f, p) if g else _trim(f)
        if len(g) == 1:
            return False
    return len(g) > 1


PREDICATES = ("coprime", "common_zero", "true")


def _count_with_common_zero(spec: FormSpaceSpec, q: int) -> int:
    """Depth-first over the factors carrying the running gcd.

    Once the gcd of a prefix is constant and some form so far is nonzero at
    infinity, no completion has a common zero, so the completions are counted
    by size without being visited.
    """
    points = [list(_rref_points(s, e + 1, q)) for s, e in spec.factors]
    degrees = [e for _, e in spec.factors]
    sizes = [len(p) for p in points]
    tail = [1] * (len(sizes) + 1)
    for i in range(len(sizes) - 1, -1, -1):
        tail[i] = tail[i + 1] * sizes[i]

    def dfs(level, g, top_zero):
        if level == len(points):
            return 1 if (len(g) > 1 or top_zero) else 0
        e = degrees[level]
        hits = 0
        for rows in points[level]:
            h, tz = g, top_zero
            for f in rows:
                h = poly_gcd(h, f, q) if h else _trim(f)
                tz = tz and f[e] == 0
            if len(h) == 1 and not tz:
                continue
            hits += dfs(level + 1, h, tz)
        return hits

    return dfs(0, [], True)


def fq_counts(spec: FormSpaceSpec, q: int, budget: int | None = None) -> dict[str, int]:
    """All three predicate counts from one enumeration."""
    if not is_prime(q):
        raise DomainError(f"oracle field size must be prime, got {q}")
    budget = DEFAULT_BUDGET if budget is None else budget
    size = 1
    for s, e in spec.factors:
        size *= _gaussian_count(s, e + 1, q)
    if size > budget:
        raise OracleBudgetExceeded(f"{size} tuples exceeds oracle budget {budget}")
    total = 1
    for s, e in spec.factors:
        total *= sum(1 for _ in _rref_points(s, e + 1, q))
    hits = _count_with_common_zero(spec, q)
    return {"true": total, "common_zero": hits, "coprime": total - hits}


def fq_count_oracle(spec: FormSpaceSpec, predicate: str, q: int,
                    budget: int | None = None) -> int:
    """Count F_q-points of the form space satisfying ``predicate`` by enumeration."""
    if predicate not in PREDICATES:
        raise DomainError(f"unknown predicate {predicate!r}; choose from {PREDICATES}")
    return fq_counts(spec, q, budget)[predicate]


def interpolate_class(samples: Mapping[int, int], degree_bound: int) -> MotivicClass:
    """The integer polynomial of degree <= degree_bound through (q, count) samples."""
    pts = sorted(samples.items())
    if len(pts) < degree_bound + 1:
        raise DomainError(f"need {degree_bound + 1} samples, got {len(pts)}")
    use = pts[:degree_bound + 1]
    coeffs = [Fraction(0)] * (degree_bound + 1)
    for i, (xi, yi) in enumerate(use):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(use):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xj * basis[k + 1]
            denom *= xi - xj
        for k, b in enumerate(basis):
            coeffs[k] += yi * b / denom
    if any(c.denominator != 1 for c in coeffs):
        raise NonPolynomialCount(f"non-integral interpolation coefficients {coeffs}")
    result = MotivicClass(int(c) for c in coeffs)
    for x, y in pts[degree_bound + 1:]:
        if result.evaluate(x) != y:
            raise NonPolynomialCount(f"sample at q={x} disagrees with interpolant {result}")
    return result


def euclidean_reduce(f: Sequence, g: Sequence, p: int | None = None):
    """f + g*psi with deg < deg g, psi built coefficient by coefficient from the top.

    Coefficient lists are low degree first.  Works over F_p when ``p`` is given,
    otherwise over the rationals.  Returns ``(reduced, psi)``.
    """
    if p is None:
        f = [Fraction(x) for x in f]
        g = [Fraction(x) for x in g]
        inv = lambda x: 1 / x
        norm = lambda x: x
    else:
        f = [x % p for x in f]
        g = [x % p for x in g]
        inv = lambda x: pow(x, p - 2, p)
        norm = lambda x: x % p
    f, g = _trim(f), _trim(g)
    if not g:
        if f:
            raise DomainError("cannot reduce a nonzero form by the zero form")
        return [], []
    deg_f, deg_g = len(f) - 1, len(g) - 1
    if deg_f < deg_g:
        return f, []
    A, B, bq = f, g, g[-1]
    r = deg_f - deg_g
    C = [0] * (r + 1)
    ib = inv(bq)
    C[r] = norm(-A[deg_f] * ib)
    for i in range(1, r + 1):
        acc = A[deg_f - i]
        for j in range(i):
            k = deg_g - i + j
            if 0 <= k:
                acc += C[r - j] * B[k]
        C[r - i] = norm(-ib * acc)
    out = list(A) + [0] * max(0, r + deg_g + 1 - len(A))
    for i, c in enumerate(C):
        for j, b in enumerate(B):
            out[i + j] = norm(out[i + j] + c * b)
    return _trim(out), C
