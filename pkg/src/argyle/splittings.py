"""Splitting types on P^1, the type-change moves, and admissible strata."""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import floor, ceil
from typing import Iterable, Optional, Sequence

from .chains import ChainLabel, DomainError, total_slope
from .geometry import ArgyleBlock, EmptyStratum, block_decompose, closure_geometry


@dataclass(frozen=True, order=True)
class SplittingType:
    """O(a_1)^{s_1} + ... + O(a_m)^{s_m} with a_1 > ... > a_m."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        parts = tuple((int(a), int(s)) for a, s in self.parts)
        if not parts:
            raise DomainError("empty splitting")
        if any(s < 1 for _, s in parts):
            raise DomainError(f"multiplicities must be positive: {parts}")
        if any(parts[i][0] <= parts[i + 1][0] for i in range(len(parts) - 1)):
            raise DomainError(f"degrees must be strictly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> "SplittingType":
        counts = Counter(degrees)
        return cls(tuple(sorted(counts.items(), reverse=True)))

    @property
    def atoms(self) -> tuple[int, ...]:
        """Summand degrees with multiplicity, largest first."""
        return tuple(a for a, s in self.parts for _ in range(s))

    @property
    def rank(self) -> int:
        return sum(s for _, s in self.parts)

    @property
    def degree(self) -> int:
        return sum(a * s for a, s in self.parts)

    @property
    def spread(self) -> int:
        return sum(a * a for a in self.atoms)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.atoms) + ")"


def generic_splitting(k: int, d: int) -> SplittingType:
    """The balanced splitting: summand degrees differ by at most one."""
    if k < 1:
        raise DomainError("rank must be positive")
    a, s = divmod(d, k)  # d = s(a+1) + (k-s)a
    return SplittingType.from_degrees([a + 1] * s + [a] * (k - s))


def type_change_children(s: SplittingType) -> list[SplittingType]:
    """Splittings reached by raising one summand by 1 and lowering a later one by 1."""
    atoms = s.atoms
    out = set()
    for i in range(len(atoms)):
        for j in range(i + 1, len(atoms)):
            new = list(atoms)
            new[i] += 1
            new[j] -= 1
            child = SplittingType.from_degrees(new)
            if child != s:
                assert child.spread > s.spread
                out.add(child)
    return sorted(out, key=lambda x: (x.spread, x.atoms))


def _partitions_in_box(k: int, total: int, lo: int, hi: int):
    """Non-increasing k-tuples in [lo, hi] summing to total."""
    def rec(k, total, cap):
        if k == 0:
            if total == 0:
                yield ()
            return
        top = min(cap, total - lo * (k - 1))
        bottom = max(lo, -(-total // k))
        for a in range(top, bottom - 1, -1):
            for rest in rec(k - 1, total - a, a):
                yield (a,) + rest

    yield from rec(k, total, hi)


def candidate_splittings(block: ArgyleBlock) -> list[SplittingType]:
    """Every splitting that could carry a stable point; a superset of the admissible ones.

    A summand whose map to the right neighbour vanishes identically spans an
    invariant line subbundle, so its degree is below the slope; dually for
    summands with no incoming map.  That caps the summand degrees.
    """
    k, d, t, mu = block.middle_rank, block.middle_degree, block.twist, block.global_slope
    if k == 1:
        return [SplittingType(((d, 1),))]
    hi = floor(mu) if block.right_degree is None else max(floor(mu), block.right_degree + t)
    lo = ceil(mu) if block.left_degree is None else min(ceil(mu), block.left_degree - t)
    return [SplittingType.from_degrees(p) for p in _partitions_in_box(k, d, lo, hi)]


def _node_groups(label: ChainLabel, splittings: dict[int, SplittingType]):
    groups = []
    for i, (r, d) in enumerate(zip(label.ranks, label.degrees)):
        if i in splittings:
            groups.append(list(splittings[i].parts))
        elif r == 1:
            groups.append([(d, 1)])
        else:
            raise DomainError(f"node {i + 1} of rank {r} needs a splitting")
    return groups


def slope_admissible(label: ChainLabel, splittings: dict[int, SplittingType]) -> bool:
    """Slope test on the generic map pattern between summands.

    Summand groups at consecutive nodes are joined when the twisted Hom space is
    nonzero.  Besides sub-multiplicities of the summand groups, two kinds of
    line subsheaves are tracked: the saturated image of a rank-one node in a
    next node with at least two target summands (degree c - t for generic maps),
    and the kernel of the generic map from at least two summands onto a rank-one
    node.  Every proper nonempty invariant choice must have slope strictly below
    the total slope.
    """
    mu = total_slope(label)
    t = label.twist
    groups = _node_groups(label, splittings)
    flat = [(i, a, s) for i, gs in enumerate(groups) for a, s in gs]
    succ = {idx: [j for j, (i2, b, _) in enumerate(flat) if i2 == i + 1 and b - a + t >= 0]
            for idx, (i, a, _) in enumerate(flat)}

    # virtual lines: (kind, rank-one group, rank, degree, groups required in full, related groups)
    virtual = []
    for idx, (i, a, _) in enumerate(flat):
        if label.ranks[i] != 1:
            continue
        targets = succ[idx]
        if sum(flat[j][2] for j in targets) >= 2:
            onward = sorted({k for j in targets for k in succ[j]})
            virtual.append(("image", idx, 1, a - t, onward, targets))
        if i == 0 or label.ranks[i - 1] == 1:
            continue
        sources = [j for j, (i2, _, _) in enumerate(flat) if i2 == i - 1 and idx in succ[j]]
        p = sum(flat[j][2] for j in sources)
        if p >= 2:
            deg = sum(flat[j][1] * flat[j][2] for j in sources) - (a + t)
            virtual.append(("kernel", idx, p - 1, deg, [], sources))

    total_rank = label.rank
    for counts in product(*(range(s + 1) for _, _, s in flat)):
        base_ok = True
        for idx, c in enumerate(counts):
            if c and any(counts[j] != flat[j][2] for j in succ[idx]):
                # allowed only if an image line absorbs the unmet targets
                if not any(v[0] == "image" and v[1] == idx for v in virtual):
                    base_ok = False
                    break
        if not base_ok:
            continue
        for vchoice in product((0, 1), repeat=len(virtual)):
            ok = True
            rk = sum(counts)
            deg = sum(c * a for c, (_, a, _) in zip(counts, flat))
            for on, (kind, idx, vr, vd, onward, rel) in zip(vchoice, virtual):
                if kind == "image":
                    need = counts[idx] and any(counts[j] != flat[j][2] for j in rel)
                    if bool(on) != bool(need):
                        ok = False
                        break
                    if on:
                        if any(counts[k] != flat[k][2] for k in onward):
                            ok = False
                            break
                else:
                    if on and any(counts[j] for j in rel):
                        ok = False
                        break
                if on:
                    rk += vr
                    deg += vd
            if not ok or rk == 0 or rk >= total_rank:
                continue
            if Fraction(deg, rk) >= mu:
                return False
    return True


def _geometry_nonempty(blocks: Sequence[ArgyleBlock], splittings: dict[int, SplittingType]) -> bool:
    try:
        for b in blocks:
            closure_geometry(b, splittings[b.middle_index])
    except EmptyStratum:
        return False
    return True


def stratum_admissible(label: ChainLabel, splittings: dict[int, SplittingType],
                       blocks: Optional[Sequence[ArgyleBlock]] = None) -> bool:
    if blocks is None:
        blocks = block_decompose(label)
    return slope_admissible(label, splittings) and _geometry_nonempty(blocks, splittings)


def admissible_strata(label: ChainLabel) -> list[dict[int, SplittingType]]:
    """All joint splittings of the middle nodes that carry stable points.

    Returns a list of ``{middle node index: SplittingType}`` maps, generic
    stratum first when present.
    """
    if label.genus != 0:
        raise DomainError("splitting types only exist on the projective line")
    if label.n == 1:
        return [{}] if label.ranks[0] == 1 else []
    blocks = block_decompose(label)
    mids = [b.middle_index for b in blocks]
    cands = [candidate_splittings(b) for b in blocks]
    out = []
    for combo in product(*cands):
        sp = dict(zip(mids, combo))
        if stratum_admissible(label, sp, blocks):
            out.append(sp)
    out.sort(key=lambda sp: tuple((sp[m].spread, sp[m].atoms) for m in mids))
    return out


def admissible_splittings(block: ArgyleBlock) -> list[SplittingType]:
    """Admissible splittings of a standalone block under its (global) slope.

    The block is tested as a chain of its own nodes; the slope test uses the
    block's global slope, so blocks cut from a longer chain should be tested
    through :func:`admissible_strata` instead.
    """
    out = []
    generic = generic_splitting(block.middle_rank, block.middle_degree)
    seen = {generic}
    queue = deque([generic])
    allowed = set(candidate_splittings(block))
    while queue:
        s = queue.popleft()
        if s not in allowed:
            continue
        if _block_slope_ok(block, s) and _geometry_nonempty([block], {block.middle_index: s}):
            out.append(s)
        for child in type_change_children(s):
            if child not in seen:
                seen.add(child)
                queue.append(child)
    return sorted(out, key=lambda x: (x.spread, x.atoms))


def _block_slope_ok(block: ArgyleBlock, s: SplittingType) -> bool:
    """Prefix and lone-summand slope conditions of a block against its global slope."""
    mu, t = block.global_slope, block.twist
    atoms = s.atoms
    if any(a == mu for a in atoms):
        raise DomainError("summand degree equals the slope")
    if block.right_degree is not None:
        d3 = block.right_degree
        if d3 >= mu:
            return False
        acc = d3
        for count, a in enumerate(atoms, start=1):
            acc += a
            if count < len(atoms) or block.left_degree is not None:
                if Fraction(acc, count + 1) >= mu:
                    return False
        # a summand with no map to the right node is itself invariant
        if any(d3 - a + t < 0 and a > mu for a in atoms):
            return False
    else:
        if atoms[0] > mu:
            return False
    if block.left_degree is not None:
        d1 = block.left_degree
        # a quotient summand not reached from the left node destabilises
        if any(a - d1 + t < 0 and a < mu for a in atoms):
            return False
    return True
