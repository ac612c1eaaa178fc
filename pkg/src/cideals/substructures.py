"""Ideals, filters, and their classification on finite (complemented) posets.

An ideal is a nonempty, downward-closed set in which every pair of members
has an upper bound inside the set; a filter is the dual.  The empty set is
neither.  Enumeration is definition-level on purpose: it walks all downward
closed subsets and keeps the directed ones, so it can serve as the oracle
for the principality and classification statements checked elsewhere.

All enumerations and witness searches use one deterministic order: subsets
sorted by size, then lexicographically by membership.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complement import ComplementedPoset
from .errors import ScaleLimit
from .poset import Poset, iter_bits, sort_key

#: cap on the number of downward-closed candidate subsets visited per
#: enumeration before giving up with ScaleLimit
DEFAULT_BUDGET = 1 << 20


@dataclass(frozen=True)
class SubsetClassification:
    """Every ideal/filter-theoretic flag of one subset, with witnesses.

    ``c_ideal_witness`` is the first filter F (deterministic order) whose
    preimage under the complement map equals the subject, when the subject
    is an ideal; ``c_filter_witness`` is the dual.  ``None`` means absent.
    """

    subject: int
    is_ideal: bool
    is_filter: bool
    proper: bool
    principal_generator: int | None
    maximal_ideal: bool
    prime_ideal: bool
    ultrafilter: bool
    prime_filter: bool
    c_ideal_witness: int | None
    c_filter_witness: int | None
    c_condition: bool


def is_downset(p: Poset, mask: int) -> bool:
    return all(not p.down[x] & ~mask for x in iter_bits(mask))


def is_upset(p: Poset, mask: int) -> bool:
    return all(not p.up[x] & ~mask for x in iter_bits(mask))


def is_ideal(p: Poset, mask: int) -> bool:
    p.check_mask(mask)
    if not mask or not is_downset(p, mask):
        return False
    members = list(iter_bits(mask))
    for i, x in enumerate(members):
        for y in members[i:]:
            if not p.up[x] & p.up[y] & mask:
                return False
    return True


def is_filter(p: Poset, mask: int) -> bool:
    p.check_mask(mask)
    if not mask or not is_upset(p, mask):
        return False
    members = list(iter_bits(mask))
    for i, x in enumerate(members):
        for y in members[i:]:
            if not p.down[x] & p.down[y] & mask:
                return False
    return True


def subset_role(p: Poset, mask: int) -> tuple[bool, bool]:
    """(is_ideal, is_filter); the empty set is neither."""
    return is_ideal(p, mask), is_filter(p, mask)


def _enumerate_downsets(p: Poset, budget: int) -> list[int]:
    """All downward-closed subsets (including the empty one), DFS order.

    Elements are decided along a linear extension; a candidate may be added
    only once everything below it is in, which visits each downset exactly
    once.  Raises ScaleLimit as soon as the count of visited downsets
    passes ``budget``.
    """
    order = sorted(range(p.n), key=lambda i: (p.down[i].bit_count(), i))
    out: list[int] = []

    def walk(k: int, current: int) -> None:
        if k == len(order):
            if len(out) >= budget:
                raise ScaleLimit(
                    f"more than {budget} downward-closed candidate subsets; "
                    "raise the enumeration budget to proceed"
                )
            out.append(current)
            return
        e = order[k]
        walk(k + 1, current)
        if not p.down[e] & ~current & ~(1 << e):
            walk(k + 1, current | (1 << e))

    walk(0, 0)
    return out


def enumerate_ideals(p: Poset, budget: int = DEFAULT_BUDGET) -> list[int]:
    """All ideals, sorted by size then lexicographic membership."""
    found = [d for d in _enumerate_downsets(p, budget) if d and is_ideal(p, d)]
    found.sort(key=sort_key)
    return found


def enumerate_filters(p: Poset, budget: int = DEFAULT_BUDGET) -> list[int]:
    """All filters, in the same deterministic order (dual enumeration)."""
    dual = p.dual()
    found = [d for d in _enumerate_downsets(dual, budget) if d and is_filter(p, d)]
    found.sort(key=sort_key)
    return found


def principal_generator(p: Poset, mask: int) -> int | None:
    """Generator of a principal ideal or filter: its greatest (resp. least)
    element, preferring the ideal reading when both apply."""
    if is_ideal(p, mask):
        g = p.greatest(mask)
        if g is not None and p.down[g] == mask:
            return g
    if is_filter(p, mask):
        g = p.least(mask)
        if g is not None and p.up[g] == mask:
            return g
    return None


def is_prime_ideal(p: Poset, mask: int) -> bool:
    """Proper ideal I with {x,y} meeting I whenever L(x,y) is inside I."""
    if mask == p.all_mask or not is_ideal(p, mask):
        return False
    for x in range(p.n):
        for y in range(x, p.n):
            if not (p.down[x] & p.down[y]) & ~mask and not ((1 << x) | (1 << y)) & mask:
                return False
    return True


def is_prime_filter(p: Poset, mask: int) -> bool:
    if mask == p.all_mask or not is_filter(p, mask):
        return False
    for x in range(p.n):
        for y in range(x, p.n):
            if not (p.up[x] & p.up[y]) & ~mask and not ((1 << x) | (1 << y)) & mask:
                return False
    return True


def is_maximal_ideal(p: Poset, mask: int, ideals: list[int]) -> bool:
    """Maximal proper ideal, by pairwise inclusion over all enumerated ideals."""
    if mask == p.all_mask or not is_ideal(p, mask):
        return False
    return not any(i != p.all_mask and i != mask and not mask & ~i for i in ideals)


def is_ultrafilter(p: Poset, mask: int, filters: list[int]) -> bool:
    if mask == p.all_mask or not is_filter(p, mask):
        return False
    return not any(f != p.all_mask and f != mask and not mask & ~f for f in filters)


def find_c_ideal_witness(cp: ComplementedPoset, mask: int, filters: list[int]) -> int | None:
    """First filter F with F_0 equal to ``mask``, or None.  Exhaustive search
    over the enumerated filters is the correctness oracle here."""
    for f in filters:
        if cp.comp_preimage(f) == mask:
            return f
    return None


def find_c_filter_witness(cp: ComplementedPoset, mask: int, ideals: list[int]) -> int | None:
    for i in ideals:
        if cp.comp_preimage(i) == mask:
            return i
    return None


def classify(
    cp: ComplementedPoset,
    mask: int,
    ideals: list[int] | None = None,
    filters: list[int] | None = None,
    budget: int = DEFAULT_BUDGET,
) -> SubsetClassification:
    """Compute every classification flag of one subset.

    ``ideals``/``filters`` may be passed in to avoid re-enumeration when
    classifying many subsets of the same poset.
    """
    p = cp.poset
    p.check_mask(mask)
    if ideals is None:
        ideals = enumerate_ideals(p, budget)
    if filters is None:
        filters = enumerate_filters(p, budget)
    ideal_flag = mask in ideals if mask else False
    filter_flag = mask in filters if mask else False
    proper = (ideal_flag or filter_flag) and mask != p.all_mask
    return SubsetClassification(
        subject=mask,
        is_ideal=ideal_flag,
        is_filter=filter_flag,
        proper=proper,
        principal_generator=principal_generator(p, mask),
        maximal_ideal=ideal_flag and is_maximal_ideal(p, mask, ideals),
        prime_ideal=ideal_flag and is_prime_ideal(p, mask),
        ultrafilter=filter_flag and is_ultrafilter(p, mask, filters),
        prime_filter=filter_flag and is_prime_filter(p, mask),
        c_ideal_witness=find_c_ideal_witness(cp, mask, filters) if ideal_flag else None,
        c_filter_witness=find_c_filter_witness(cp, mask, ideals) if filter_flag else None,
        c_condition=cp.c_condition(mask),
    )


def lu_union(p: Poset, a: int, ideal_mask: int) -> tuple[int, bool]:
    """Union of the cones LU({a, i}) over i in the ideal, plus ideal status."""
    p.check_mask(ideal_mask)
    union = 0
    for i in iter_bits(ideal_mask):
        union |= p.lower_cone(p.up[a] & p.up[i])
    return union, is_ideal(p, union)


def ul_union(p: Poset, a: int, filter_mask: int) -> tuple[int, bool]:
    """Dual construction for filters: union of UL({a, f}) over f in the filter."""
    p.check_mask(filter_mask)
    union = 0
    for f in iter_bits(filter_mask):
        union |= p.upper_cone(p.down[a] & p.down[f])
    return union, is_filter(p, union)


def complement_pairing(p: Poset, mask: int) -> int:
    """The set complement P minus the given subset."""
    p.check_mask(mask)
    return p.all_mask & ~mask
