"""Complementations on bounded posets and their derived properties.

A complementation is a total unary map x -> x' with join(x, x') = top and
meet(x, x') = bottom for every x; the bounds must genuinely exist as the
join/meet of the pair.  The map need not be antitone nor an involution;
the property flags record which of the usual extras actually hold, and
everything downstream (ideal classification, theorem checks) branches on
them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import AxiomViolation, DuplicateName, NotBounded, PartialMap
from .poset import Poset, iter_bits


@dataclass(frozen=True)
class ComplementProperties:
    """Exhaustively verified flags of a validated complementation.

    ``involution`` implies ``x_le_xdd``, ``xdd_le_x`` and ``triple_identity``;
    ``antitone and involution`` implies ``de_morgan``.  The flags are still
    all computed independently so the implications can be cross-checked.
    """

    antitone: bool
    involution: bool
    x_le_xdd: bool
    xdd_le_x: bool
    triple_identity: bool
    de_morgan: bool


class ComplementedPoset:
    """A bounded poset together with a validated complementation."""

    __slots__ = ("poset", "comp", "props")

    def __init__(self, poset: Poset, comp: Sequence[int]):
        if not poset.bounded:
            raise NotBounded("complementation requires both bottom and top")
        comp = tuple(comp)
        if len(comp) != poset.n:
            raise PartialMap("complement table must cover every element")
        for x in range(poset.n):
            cx = comp[x]
            if poset.join(x, cx) != poset.top:
                raise AxiomViolation(
                    poset.names[x],
                    f"join({poset.names[x]}, {poset.names[cx]}) is not the top element",
                )
            if poset.meet(x, cx) != poset.bottom:
                raise AxiomViolation(
                    poset.names[x],
                    f"meet({poset.names[x]}, {poset.names[cx]}) is not the bottom element",
                )
        self.poset = poset
        self.comp = comp
        self.props = self._compute_properties()

    def __repr__(self) -> str:
        table = " ".join(
            f"{self.poset.names[x]}->{self.poset.names[self.comp[x]]}" for x in range(self.poset.n)
        )
        return f"ComplementedPoset({table})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ComplementedPoset)
            and self.poset == other.poset
            and self.comp == other.comp
        )

    def __hash__(self) -> int:
        return hash((self.poset, self.comp))

    # -- the complement map on elements and sets -----------------------------

    def comp_of(self, x: int) -> int:
        return self.comp[x]

    def comp_image(self, mask: int) -> int:
        """A' = {x' | x in A}, the pointwise image."""
        self.poset.check_mask(mask)
        out = 0
        for x in iter_bits(mask):
            out |= 1 << self.comp[x]
        return out

    def comp_preimage(self, mask: int) -> int:
        """A_0 = {x | x' in A}; monotone in A."""
        self.poset.check_mask(mask)
        out = 0
        for x in range(self.poset.n):
            if (mask >> self.comp[x]) & 1:
                out |= 1 << x
        return out

    def boolean_elements(self) -> int:
        """Elements with x'' = x; always contains bottom and top."""
        out = 0
        for x in range(self.poset.n):
            if self.comp[self.comp[x]] == x:
                out |= 1 << x
        return out

    def c_condition(self, mask: int) -> bool:
        """Does ``mask`` contain exactly one of x and x' for every x?"""
        self.poset.check_mask(mask)
        for x in range(self.poset.n):
            pair = (1 << x) | (1 << self.comp[x])
            if (mask & pair).bit_count() != 1:
                return False
        return True

    def dual(self) -> "ComplementedPoset":
        """Order-dual with the complement map unchanged (axioms dualize)."""
        return ComplementedPoset(self.poset.dual(), self.comp)

    # -- property computation -------------------------------------------------

    def _compute_properties(self) -> ComplementProperties:
        p, comp = self.poset, self.comp
        n = p.n
        antitone = all(
            p.le(comp[y], comp[x])
            for y in range(n)
            for x in iter_bits(p.down[y])
        )
        involution = all(comp[comp[x]] == x for x in range(n))
        x_le_xdd = all(p.le(x, comp[comp[x]]) for x in range(n))
        xdd_le_x = all(p.le(comp[comp[x]], x) for x in range(n))
        triple_identity = all(comp[comp[comp[x]]] == comp[x] for x in range(n))
        de_morgan = True
        for x in range(n):
            for y in range(n):
                cx, cy = comp[x], comp[y]
                if self.comp_image(p.down[x] & p.down[y]) != (p.up[cx] & p.up[cy]):
                    de_morgan = False
                    break
                if self.comp_image(p.up[x] & p.up[y]) != (p.down[cx] & p.down[cy]):
                    de_morgan = False
                    break
            if not de_morgan:
                break
        return ComplementProperties(
            antitone=antitone,
            involution=involution,
            x_le_xdd=x_le_xdd,
            xdd_le_x=xdd_le_x,
            triple_identity=triple_identity,
            de_morgan=de_morgan,
        )


def attach_complementation(
    poset: Poset, mapping: Mapping[str, str] | Sequence[tuple[str, str]]
) -> ComplementedPoset:
    """Validate a complement table given by element names.

    Raises ``NotBounded``, ``PartialMap``, or ``AxiomViolation`` naming the
    lowest-indexed failing element.
    """
    if not poset.bounded:
        raise NotBounded("complementation requires both bottom and top")
    items = mapping.items() if isinstance(mapping, Mapping) else mapping
    table: dict[int, int] = {}
    for a, b in items:
        key = poset.index(a)
        if key in table:
            raise DuplicateName(f"duplicate complement entry for {a!r}")
        table[key] = poset.index(b)
    missing = [poset.names[x] for x in range(poset.n) if x not in table]
    if missing:
        raise PartialMap(f"complement table misses {', '.join(missing)}")
    return ComplementedPoset(poset, [table[x] for x in range(poset.n)])


def complement_properties(cp: ComplementedPoset) -> ComplementProperties:
    """The cached property flags of a validated complementation."""
    return cp.props
