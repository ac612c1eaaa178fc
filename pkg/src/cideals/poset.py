"""Finite posets with cached cones, covers, bounds, meets and joins.

Elements are dense indices ``0..n-1`` with unique display names.  Subsets are
plain ``int`` bitmasks over those indices, which keeps every cone and ideal
computation a handful of word operations at the target scale (n <= 24).

A poset is immutable after construction; every operation here is a pure
function of its arguments and is safe for concurrent reads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CycleDetected, DuplicateName, PosetError, UnknownName

#: characters that would make the instance-file / report / DOT grammars
#: ambiguous; display names may not contain them (nor any whitespace)
FORBIDDEN_NAME_CHARS = set("{},()=#<>")
RESERVED_NAMES = frozenset({"none", "true", "false"})


def _validate_names(names: Sequence[str]) -> None:
    seen = set()
    for name in names:
        if not name or any(ch.isspace() for ch in name):
            raise PosetError(f"invalid element name {name!r}: empty or has whitespace")
        if any(ch in FORBIDDEN_NAME_CHARS for ch in name):
            raise PosetError(f"invalid element name {name!r}: reserved character")
        if name in RESERVED_NAMES:
            raise PosetError(f"invalid element name {name!r}: reserved word")
        if name in seen:
            raise DuplicateName(f"duplicate element name {name!r}")
        seen.add(name)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Deterministic ordering of subsets: by size, then lexicographic."""
    return (mask.bit_count(), tuple(iter_bits(mask)))


@dataclass(frozen=True)
class DistributivityReport:
    """Outcome of the triple scan for L(U(x,y),z) = LU(L(x,z),L(y,z)).

    ``witness`` is the lexicographically first violating triple of element
    indices, or ``None`` when the identity holds everywhere; ``lhs``/``rhs``
    are the two computed sides for that triple.
    """

    holds: bool
    witness: tuple[int, int, int] | None = None
    lhs: int | None = None
    rhs: int | None = None


class Poset:
    """A finite poset over named elements.

    ``down[i]`` is the bitmask of elements <= i, ``up[i]`` of elements >= i.
    ``covers`` is the transitive reduction of the strict order.  ``bottom``
    and ``top`` are element indices or ``None``; they are detected, never
    required.
    """

    __slots__ = ("n", "names", "down", "up", "covers", "bottom", "top", "all_mask", "_index")

    def __init__(self, names: Sequence[str], down: Sequence[int]):
        _validate_names(names)
        n = len(names)
        if n < 1:
            raise PosetError("a poset needs at least one element")
        all_mask = (1 << n) - 1
        down = tuple(down)
        # reflexivity, antisymmetry, transitivity are all machine-checked here
        for i in range(n):
            if not (down[i] >> i) & 1:
                raise PosetError(f"relation not reflexive at {names[i]!r}")
        for j in range(n):
            for i in iter_bits(down[j]):
                if i != j and (down[i] >> j) & 1:
                    raise CycleDetected(f"{names[i]!r} <= {names[j]!r} <= {names[i]!r}")
                if down[i] & ~down[j]:
                    raise PosetError(f"relation not transitive below {names[j]!r}")
        up = [0] * n
        for j in range(n):
            for i in iter_bits(down[j]):
                up[i] |= 1 << j
        self.n = n
        self.names = tuple(names)
        self.down = down
        self.up = tuple(up)
        self._index = {name: i for i, name in enumerate(self.names)}
        covers = []
        for j in range(n):
            for i in iter_bits(down[j]):
                if i == j:
                    continue
                between = down[j] & self.up[i] & ~(1 << i) & ~(1 << j)
                if not between:
                    covers.append((i, j))
        self.covers = tuple(sorted(covers))
        self.all_mask = all_mask
        self.bottom = next((i for i in range(n) if self.up[i] == all_mask), None)
        self.top = next((i for i in range(n) if down[i] == all_mask), None)

    # -- basics ------------------------------------------------------------

    def __repr__(self) -> str:
        return f"Poset({self.n} elements: {' '.join(self.names)})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poset)
            and self.names == other.names
            and self.down == other.down
        )

    def __hash__(self) -> int:
        return hash((self.names, self.down))

    @property
    def bounded(self) -> bool:
        return self.bottom is not None and self.top is not None

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownName(f"unknown element name {name!r}") from None

    def le(self, i: int, j: int) -> bool:
        return bool((self.down[j] >> i) & 1)

    def mask_of(self, names: Iterable[str]) -> int:
        mask = 0
        for name in names:
            mask |= 1 << self.index(name)
        return mask

    def names_of(self, mask: int) -> tuple[str, ...]:
        self.check_mask(mask)
        return tuple(self.names[i] for i in iter_bits(mask))

    def format_set(self, mask: int) -> str:
        return "{" + ",".join(self.names_of(mask)) + "}"

    def check_mask(self, mask: int) -> None:
        if mask < 0 or mask & ~self.all_mask:
            raise PosetError("element set is outside this poset's universe")

    # -- cones and bounds ----------------------------------------------------

    def lower_cone(self, mask: int) -> int:
        """All elements below every member of ``mask``; the whole poset for {}."""
        self.check_mask(mask)
        result = self.all_mask
        for y in iter_bits(mask):
            result &= self.down[y]
        return result

    def upper_cone(self, mask: int) -> int:
        self.check_mask(mask)
        result = self.all_mask
        for y in iter_bits(mask):
            result &= self.up[y]
        return result

    def principal_down(self, i: int) -> int:
        return self.down[i]

    def principal_up(self, i: int) -> int:
        return self.up[i]

    def greatest(self, mask: int) -> int | None:
        """The maximum element of ``mask``, if it has one."""
        for g in iter_bits(mask):
            if not mask & ~self.down[g]:
                return g
        return None

    def least(self, mask: int) -> int | None:
        for g in iter_bits(mask):
            if not mask & ~self.up[g]:
                return g
        return None

    def meet(self, x: int, y: int) -> int | None:
        """Greatest element of L(x,y), or ``None``; absence is a value."""
        return self.greatest(self.down[x] & self.down[y])

    def join(self, x: int, y: int) -> int | None:
        return self.least(self.up[x] & self.up[y])

    # -- global structure ----------------------------------------------------

    def is_distributive(self) -> DistributivityReport:
        """Scan all ordered triples for the cone distributivity identity."""
        for x in range(self.n):
            for y in range(self.n):
                uxy = self.up[x] & self.up[y]
                for z in range(self.n):
                    lhs = self.lower_cone(uxy) & self.down[z]
                    rhs = self.lower_cone(
                        self.upper_cone((self.down[x] & self.down[z]) | (self.down[y] & self.down[z]))
                    )
                    if lhs != rhs:
                        return DistributivityReport(False, (x, y, z), lhs, rhs)
        return DistributivityReport(True)

    def is_dual_distributive(self) -> DistributivityReport:
        """The dual identity U(L(x,y),z) = UL(U(x,z),U(y,z)); equivalent globally."""
        return self.dual().is_distributive()

    def semilattice_flags(self) -> tuple[bool, bool]:
        """(is_join_semilattice, is_meet_semilattice)."""
        has_join = all(
            self.join(x, y) is not None for x in range(self.n) for y in range(x, self.n)
        )
        has_meet = all(
            self.meet(x, y) is not None for x in range(self.n) for y in range(x, self.n)
        )
        return has_join, has_meet

    def dual(self) -> "Poset":
        """The order-dual poset over the same named elements."""
        return Poset(self.names, self.up)

    def le_pairs(self) -> list[tuple[str, str]]:
        """All strict related name pairs (a, b) with a < b."""
        return [
            (self.names[i], self.names[j])
            for j in range(self.n)
            for i in iter_bits(self.down[j])
            if i != j
        ]

    def cover_pairs(self) -> list[tuple[str, str]]:
        return [(self.names[i], self.names[j]) for i, j in self.covers]


def build_poset(names: Sequence[str], pairs: Iterable[tuple[str, str]]) -> Poset:
    """Build a poset from element names and any subset of its order.

    ``pairs`` are (lower, upper) name pairs; the reflexive-transitive closure
    is always taken, so inputs may mix covers with longer relations.  Raises
    ``CycleDetected`` when the closure would violate antisymmetry.
    """
    _validate_names(names)
    index = {name: i for i, name in enumerate(names)}
    n = len(names)
    down = [1 << i for i in range(n)]
    for a, b in pairs:
        for name in (a, b):
            if name not in index:
                raise UnknownName(f"unknown element name {name!r}")
        down[index[b]] |= 1 << index[a]
    changed = True
    while changed:
        changed = False
        for j in range(n):
            merged = down[j]
            for i in iter_bits(down[j]):
                merged |= down[i]
            if merged != down[j]:
                down[j] = merged
                changed = True
    return Poset(names, down)
