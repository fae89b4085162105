"""Integer polynomials in q (motivic classes) and in x (Poincaré polynomials).

A motivic class is stored as its coefficient tuple, ``coeffs[k]`` being the
coefficient of ``q**k``.  Trailing zeros are stripped so equal classes compare
equal; the zero class is the empty tuple.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import zip_longest
from typing import Iterable, Sequence


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(int(x) for x in c)


class IntPoly:
    """Univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)
    var = "q"

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    @classmethod
    def monomial(cls, k: int, c: int = 1):
        if k < 0:
            raise ValueError("negative exponent")
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def _coerce(self, other):
        if isinstance(other, IntPoly):
            if type(other) is not type(self):
                raise TypeError(f"cannot mix {type(self).__name__} and {type(other).__name__}")
            return other
        if isinstance(other, int):
            return type(self)([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return type(self)(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return type(self)(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return type(self)()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return type(self)(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = type(self)([1])
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            return self.coeffs == _strip([other])
        if isinstance(other, IntPoly) and type(other) is type(self):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def shift(self, k: int):
        """Multiply by ``var**k``."""
        if k < 0:
            raise ValueError("negative shift")
        if not self.coeffs:
            return self
        return type(self)([0] * k + list(self.coeffs))

    def evaluate(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __repr__(self):
        return f"{type(self).__name__}({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self.coeffs, self.var)


class MotivicClass(IntPoly):
    """Point-count / motivic class as a polynomial in q."""

    var = "q"


class PoincarePoly(IntPoly):
    """Poincaré polynomial in x."""

    var = "x"

    def to_motivic(self) -> MotivicClass:
        """Substitute x**2 -> q; only valid when every odd coefficient vanishes."""
        if any(self.coeffs[1::2]):
            raise ValueError("Poincaré polynomial has odd-degree terms")
        return MotivicClass(self.coeffs[0::2])

    def euler_characteristic(self) -> int:
        return self.evaluate(-1)


def format_poly(coeffs: Sequence[int], var: str = "q") -> str:
    """Render like ``1+x^2+3x^4``; the zero polynomial renders as ``0``."""
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            body = str(abs(c))
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += sign + body
    return out


ZERO = MotivicClass()
ONE = MotivicClass([1])
Q = MotivicClass([0, 1])


@lru_cache(maxsize=None)
def projective_class(n: int) -> MotivicClass:
    """[P^n] = 1 + q + ... + q^n."""
    if n < 0:
        raise ValueError(f"projective dimension must be >= 0, got {n}")
    return MotivicClass([1] * (n + 1))


@lru_cache(maxsize=None)
def grassmannian_class(s: int, n: int) -> MotivicClass:
    """Gaussian binomial [n choose s]_q, the class of Gr(s, n)."""
    if n < 0 or s < 0:
        raise ValueError(f"Gr({s},{n}) needs nonnegative arguments")
    if s > n:
        raise ValueError(f"Gr({s},{n}) is empty: s > n")
    if s == 0 or s == n:
        return ONE
    # q-Pascal: [n,s] = [n-1,s-1] + q^s [n-1,s]
    return grassmannian_class(s - 1, n - 1) + grassmannian_class(s, n - 1).shift(s)


def add(*classes: MotivicClass) -> MotivicClass:
    out = ZERO
    for c in classes:
        out = out + c
    return out


def subtract(a: MotivicClass, b: MotivicClass) -> MotivicClass:
    return a - b


def multiply(*classes: MotivicClass) -> MotivicClass:
    out = ONE
    for c in classes:
        out = out * c
    return out


def scale_by_q_power(c: MotivicClass, k: int) -> MotivicClass:
    return c.shift(k)


def to_poincare(c: MotivicClass, morse_index: int) -> PoincarePoly:
    """x**morse_index * c(x**2)."""
    if morse_index < 0 or morse_index % 2:
        raise ValueError(f"Morse index must be even and nonnegative, got {morse_index}")
    if c.is_zero():
        return PoincarePoly()
    out = [0] * (morse_index + 2 * len(c.coeffs) - 1)
    for k, a in enumerate(c.coeffs):
        out[morse_index + 2 * k] = a
    return PoincarePoly(out)


def is_palindromic(c: IntPoly) -> bool:
    n = len(c.coeffs)
    return all(c.coeffs[k] == c.coeffs[n - 1 - k] for k in range(n))
