"""Classes of C*-fixed components and the localization sum for twisted Higgs bundles on P^1.

A fixed component is labelled by a holomorphic chain.  Its class is a sum over
the admissible joint splittings of the middle nodes.  Within one block, the
regular part of a stratum is the closure of its collision-free locus minus the
collision loci that degenerate into another admissible stratum; blocks multiply.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Optional

from .chains import ChainLabel, DomainError, enumerate_labellings
from .collision import bpf_tuple_class
from .geometry import ArgyleBlock, StratumGeometry, block_decompose, closure_geometry, i_prime
from .morse import morse_index
from .reference import PUBLISHED_COMPONENTS, PUBLISHED_SERIES, variety_class, variety_str
from .series import (ONE, ZERO, MotivicClass, PoincarePoly, grassmannian_class, is_palindromic,
                     multiply, projective_class, to_poincare)
from .splittings import SplittingType, admissible_strata

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CollisionLocus:
    """Part of a stratum closure where the listed forms acquire a common zero."""

    block: int
    phi_groups: tuple[int, ...]
    xi_groups: tuple[int, ...]
    children: tuple[SplittingType, ...]
    motivic_class: MotivicClass

    def describe(self) -> str:
        forms = [f"phi{j + 1}" for j in self.phi_groups] + [f"xi{j + 1}" for j in self.xi_groups]
        kids = ",".join(str(c) for c in self.children)
        return f"block {self.block + 1}: common zero of {'+'.join(forms)} -> {kids}"


@dataclass(frozen=True)
class StratumRecord:
    splittings: tuple[SplittingType, ...]
    geometries: tuple[StratumGeometry, ...]
    closure_class: MotivicClass
    stratum_class: MotivicClass
    removed: tuple[CollisionLocus, ...] = ()


@dataclass
class FixedComponent:
    label: ChainLabel
    strata: list[StratumRecord]
    total_class: MotivicClass
    beta: int
    flags: dict = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    candidates: dict = field(default_factory=dict)

    @property
    def verified(self) -> bool:
        return (self.flags.get("palindromic", False) and not self.flags.get("surgery_ambiguous")
                and self.flags.get("nonnegative", False))

    @property
    def has_type_change(self) -> bool:
        return len(self.strata) > 1

    def poincare(self) -> PoincarePoly:
        return to_poincare(self.total_class, self.beta)


def _group_of_atom(s: SplittingType) -> list[int]:
    return [g for g, (_, m) in enumerate(s.parts) for _ in range(m)]


def _moves(s: SplittingType):
    """(group raised, group lowered, child) for every type-change move from ``s``."""
    atoms, groups = s.atoms, _group_of_atom(s)
    seen = set()
    for i in range(len(atoms)):
        for j in range(i + 1, len(atoms)):
            new = list(atoms)
            new[i] += 1
            new[j] -= 1
            child = SplittingType.from_degrees(new)
            key = (groups[i], groups[j], child)
            if child != s and key not in seen:
                seen.add(key)
                yield key


def _involved_groups(block: ArgyleBlock, s: SplittingType, gi: int, gj: int):
    """Forms (phi on groups, xi on groups) whose common zero produces the move, or None."""
    m = len(s.parts)
    if block.shape == "k1":
        return tuple(range(gi + 1)), ()
    if block.shape == "1k":
        return (), tuple(range(gj, m))
    ip = i_prime(s, block.global_slope)
    if not gi < ip <= gj:
        return None
    return tuple(range(gi + 1)), tuple(range(gj, m))


def _locus_class(geom: StratumGeometry, block: ArgyleBlock, phi, xi) -> MotivicClass:
    """Class inside the closure of the locus where the chosen forms share a zero."""
    involved = set(phi) | set(xi)
    factors = geom.gr_factors
    inside = multiply(*(grassmannian_class(s, n) for j, (s, n) in enumerate(factors) if j in involved))
    inside = inside - bpf_tuple_class((s, n - 1) for j, (s, n) in enumerate(factors) if j in involved)
    rest = [grassmannian_class(s, n) for j, (s, n) in enumerate(factors) if j not in involved]
    if geom.proj_dim is not None:
        rest.append(projective_class(geom.proj_dim))
    return multiply(inside, *rest)


def _block_regular_class(bi, block, s, geom, is_stable_child, warnings):
    """Closure class of one block minus collisions that land in admissible strata."""
    loci: dict[tuple, list] = {}
    unexpressible = False
    for gi, gj, child in _moves(s):
        if not is_stable_child(child):
            continue
        inv = _involved_groups(block, s, gi, gj)
        if inv is None:
            unexpressible = True
            warnings.append(
                f"block {bi + 1}: move {s} -> {child} is not a common zero of the "
                "stratum's forms; its collision locus was not removed")
            continue
        loci.setdefault(inv, []).append(child)
    removed = []
    cls = geom.motivic_class()
    for (phi, xi), kids in sorted(loci.items()):
        loc = _locus_class(geom, block, phi, xi)
        removed.append(CollisionLocus(bi, phi, xi, tuple(kids), loc))
        cls = cls - loc
    return cls, removed, unexpressible


def component_class(label: ChainLabel, t: Optional[int] = None) -> FixedComponent:
    """Assemble the class of the fixed component labelled by ``label``."""
    if t is not None and t != label.twist:
        label = replace(label, twist=t)
    beta = morse_index(label)
    blocks = block_decompose(label) if label.n > 1 else []
    mids = [b.middle_index for b in blocks]
    strata_maps = admissible_strata(label)
    if not strata_maps:
        raise DomainError(f"{label} has no admissible splitting stratum")
    admissible = {tuple(sp[m] for m in mids) for sp in strata_maps}

    records, warnings = [], []
    unexpressible = False
    for sp in strata_maps:
        key = tuple(sp[m] for m in mids)
        geoms = tuple(closure_geometry(b, s) for b, s in zip(blocks, key))
        block_classes, removed = [], []
        for bi, (b, s, g) in enumerate(zip(blocks, key, geoms)):
            stable = lambda child, bi=bi: key[:bi] + (child,) + key[bi + 1:] in admissible
            cls, rem, bad = _block_regular_class(bi, b, s, g, stable, warnings)
            block_classes.append(cls)
            removed.extend(rem)
            unexpressible |= bad
        closure = multiply(*(g.motivic_class() for g in geoms)) if geoms else ONE
        records.append(StratumRecord(key, geoms, closure, multiply(*block_classes) if block_classes else ONE,
                                     tuple(removed)))

    total = ZERO
    for rec in records:
        total = total + rec.stratum_class
    palindromic = is_palindromic(total)
    nonneg = total.is_nonnegative()
    type_change = len(records) > 1
    ambiguous = unexpressible or (type_change and not palindromic)
    comp = FixedComponent(
        label=label, strata=records, total_class=total, beta=beta,
        flags={"palindromic": palindromic, "surgery_ambiguous": ambiguous,
               "type_change": type_change, "nonnegative": nonneg},
        warnings=warnings)
    if not nonneg:
        comp.warnings.append(f"class {total} has negative coefficients")
    if ambiguous:
        # the most special stratum's closure is what a blow-down would leave
        comp.candidates = {"additive": total, "blow_down": records[-1].closure_class}
        comp.warnings.append(
            f"UNVERIFIED: class {total} of {label} depends on how the strata glue; "
            f"blow-down reading gives {records[-1].closure_class}")
    elif not palindromic:
        comp.warnings.append(f"UNVERIFIED: class {total} of {label} is not palindromic")
    return comp


@dataclass
class SeriesReport:
    rank: int
    degree: int
    twist: int
    components: list[FixedComponent]
    series: PoincarePoly
    warnings: list[str]

    @property
    def unverified(self) -> list[FixedComponent]:
        return [c for c in self.components if not c.verified]


def _compare_published(r, d, t, comps, series) -> list[str]:
    out = []
    table = PUBLISHED_COMPONENTS.get((r, d, t), {})
    for c in comps:
        entry = table.get((c.label.ranks, c.label.degrees))
        if entry is None:
            continue
        variety, beta = entry
        if variety_class(variety) != c.total_class:
            out.append(f"{c.label}: published variety {variety_str(variety)} has class "
                       f"{variety_class(variety)}, computed {c.total_class}")
        if beta != c.beta:
            out.append(f"{c.label}: published Morse index {beta}, computed {c.beta}")
    known = {(c.label.ranks, c.label.degrees) for c in comps}
    for key in table:
        if key not in known:
            out.append(f"published component {key} is not admissible here")
    printed = PUBLISHED_SERIES.get((r, d, t))
    if printed is not None and list(series.coeffs) != printed:
        out.append(f"published series {printed} differs from computed {list(series.coeffs)}")
    return out


def series_report(r: int, d: int, t: int) -> SeriesReport:
    """Every fixed component of the moduli of rank r, degree d, O(t)-twisted Higgs bundles."""
    labels = enumerate_labellings(r, d, t)
    for lab in labels:
        block_decompose(lab)  # names the composition that blocks the computation
    comps = [component_class(lab) for lab in labels]
    series = PoincarePoly()
    for c in comps:
        series = series + c.poincare()
    warnings = [w for c in comps for w in c.warnings]
    warnings += _compare_published(r, d, t, comps, series)
    for w in warnings:
        log.warning(w)
    return SeriesReport(r, d, t, comps, PoincarePoly(series.coeffs), warnings)


def poincare_series(r: int, d: int, t: int) -> PoincarePoly:
    """Rational Poincaré polynomial of the moduli space, via the Morse localization sum."""
    return series_report(r, d, t).series


def _check_rank2_input(t: int, d: int):
    if d % 2 == 0:
        raise DomainError(f"rank-2 formula needs odd degree, got {d}")
    if t < 1:
        raise DomainError(f"need t >= 1, got {t}")


def rank2_closed_form(t: int, d: int = -1) -> PoincarePoly:
    """Closed Poincaré polynomial in rank 2: coefficients 1,1,2,2,3,3,... on even powers."""
    _check_rank2_input(t, d)
    coeffs = [0] * (2 * t - 1)
    for k in range(t):
        coeffs[2 * k] = (2 * k + 4 - (2 * k) % 4) // 4
    return PoincarePoly(coeffs)


def rank2_generating_function(t: int, d: int = -1) -> PoincarePoly:
    """The same polynomial, expanded from its rational generating function.

    1/((1-x^2)(1-x^4)) - ((floor(t/2)+1) x^{2t}/(1-x^2) + x^{4 floor(t/2)+4}/((1-x^2)(1-x^4))),
    expanded far enough to see that the tail cancels.
    """
    _check_rank2_input(t, d)
    h = t // 2
    top = 4 * h + 8 + 2 * t

    def both(n):  # coefficient of x^n in 1/((1-x^2)(1-x^4))
        return n // 4 + 1 if n >= 0 and n % 2 == 0 else 0

    def first(n):  # coefficient of x^n in 1/(1-x^2)
        return 1 if n >= 0 and n % 2 == 0 else 0

    coeffs = [both(n) - (h + 1) * first(n - 2 * t) - both(n - 4 * h - 4) for n in range(top + 1)]
    if any(coeffs[2 * t - 1:]):
        raise AssertionError("generating function tail does not cancel")
    return PoincarePoly(coeffs)
