"""Published values for low-rank cases, used to flag discrepancies at run time.

Varieties are written as tuples of factors: ``("P", n)`` for P^n and
``("Gr", s, n)`` for Gr(s, n).
"""

from __future__ import annotations

from .series import MotivicClass, grassmannian_class, multiply, projective_class

Variety = tuple


def variety_class(factors: Variety) -> MotivicClass:
    parts = []
    for f in factors:
        if f[0] == "P":
            parts.append(projective_class(f[1]))
        elif f[0] == "Gr":
            parts.append(grassmannian_class(f[1], f[2]))
        elif f[0] == "pt":
            continue
        else:
            raise ValueError(f"unknown factor {f!r}")
    return multiply(*parts)


def variety_str(factors: Variety) -> str:
    bits = []
    for f in factors:
        if f[0] == "P":
            bits.append(f"P^{f[1]}")
        elif f[0] == "Gr":
            bits.append(f"Gr({f[1]},{f[2]})")
        else:
            bits.append("pt")
    return " x ".join(bits)


def _P(*dims):
    return tuple(("P", n) for n in dims)


_T6_LINE_LABELS = [
    (0, 0, -1), (0, 1, -2), (1, -1, -1), (0, 2, -3), (1, 0, -2), (2, -2, -1), (1, 1, -3),
    (2, -1, -2), (3, -3, -1), (1, 2, -4), (2, 0, -3), (3, -2, -2), (2, 1, -4), (3, -1, -3),
    (3, 0, -4), (4, -2, -3), (3, 1, -5), (4, -1, -4), (4, 0, -5), (5, -1, -5), (5, 0, -6),
]
_T6_LINE_INDICES = [10, 12, 12, 14, 14, 14, 16, 16, 16, 18, 18, 18, 20, 20, 22, 22, 24, 24, 26, 28, 30]
_T6_LINE_VARIETIES = [
    _P(6, 5), _P(7, 3), _P(4, 6), _P(8, 1), _P(5, 4), _P(2, 7), _P(6, 2),
    _P(3, 5), _P(8), _P(7), _P(4, 3), _P(1, 6), _P(5, 5), _P(2, 4),
    _P(3, 2), _P(5), _P(4), _P(1, 3), _P(2, 1), _P(2), _P(1),
]

# (rank, degree, twist) -> {(ranks, degrees): (variety, Morse index)}
PUBLISHED_COMPONENTS: dict[tuple[int, int, int], dict[tuple, tuple[Variety, int]]] = {
    (3, -1, 2): {
        ((1, 1, 1), (1, 0, -2)): (_P(1, 0), 6),
        ((1, 1, 1), (1, -1, -1)): (_P(0, 2), 4),
        ((1, 1, 1), (0, 0, -1)): (_P(2, 1), 2),
        ((2, 1), (0, -1)): ((("pt",),), 0),
    },
    (3, -1, 6): {
        ((2, 1), (0, -1)): ((("Gr", 2, 6),), 0),
        ((2, 1), (1, -2)): (_P(3, 2), 4),
        ((2, 1), (2, -3)): (_P(2), 12),
        ((1, 2), (1, -2)): ((("Gr", 2, 4),), 4),
        ((1, 2), (2, -3)): (_P(2, 1), 10),
        **{((1, 1, 1), d): (v, b) for d, v, b in zip(_T6_LINE_LABELS, _T6_LINE_VARIETIES, _T6_LINE_INDICES)},
    },
}

# Published Poincaré polynomials, coefficients of x^0, x^1, ...  The x^22
# coefficient of the t=6 series is illegible in print; 45 is the value the
# component sum produces.
PUBLISHED_SERIES: dict[tuple[int, int, int], list[int]] = {
    (3, -1, 2): [1, 0, 1, 0, 3, 0, 4, 0, 3],
    (3, -1, 6): [c for k in [1, 1, 3, 4, 7, 9, 14, 17, 24, 29, 38, 45, 49, 49, 45, 36, 21]
                 for c in (k, 0)][:-1],
}

# (block degrees left, middle, right), middle rank, twist, global slope (num, den), splitting atoms
# -> published closure of the collision-free stratum
PUBLISHED_STRATA: dict[tuple, Variety] = {
    ((2, -1, -2), 2, 5, (-1, 4), (0, -1)): _P(2, 3, 6),
    ((2, -1, -2), 2, 5, (-1, 4), (1, -2)): _P(1, 2, 6),
    ((2, 0, -3), 2, 6, (-1, 4), (0, 0)): (("P", 9), ("Gr", 2, 4)),
    ((2, 0, -3), 2, 6, (-1, 4), (1, -1)): _P(2, 3, 9),
    ((0, 0, 3), 2, 5, (-1, 8), (0, 0)): (("P", 11), ("Gr", 2, 9)),
    ((3, -2, -2), 3, 5, (-1, 8), (0, -1, -1)): (("pt",), ("P", 3), ("P", 8)),
    ((0, 0, 3), 2, 6, (-1, 8), (0, 0)): (("P", 13), ("Gr", 2, 10)),
    ((3, -2, -2), 3, 6, (-1, 8), (0, -1, -1)): (("P", 4), ("P", 11), ("Gr", 2, 3)),
    ((3, -2, -2), 3, 6, (-1, 8), (1, -1, -2)): _P(1, 3, 10),
    ((3, -2, -2), 3, 6, (-1, 8), (0, 0, -2)): (("P", 1), ("P", 8), ("Gr", 2, 5)),
}


def published_stratum(block, splitting) -> Variety | None:
    if block.left_degree is None or block.right_degree is None:
        return None
    mu = block.global_slope
    key = ((block.left_degree, block.middle_degree, block.right_degree), block.middle_rank,
           block.twist, (mu.numerator, mu.denominator), tuple(splitting.atoms))
    return PUBLISHED_STRATA.get(key)
