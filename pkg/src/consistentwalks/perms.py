"""Finite permutation group engine.

Permutations act on the right throughout: ``v ** (g*h) == (v ** g) ** h``
in exponent notation, i.e. ``(g*h)[v] == h[g[v]]``.  Groups are fully
materialized by breadth-first closure; everything here is immutable and
safe to share.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence

from .errors import (
    BadParameters,
    CapExceeded,
    DegreeMismatch,
    DomainNotInvariant,
    InvalidPermutation,
)

DEFAULT_GROUP_CAP = 2_000_000


class Perm(tuple):
    """A permutation of {0..n-1} stored as its tuple of images.

    ``p[v]`` is the image of point ``v``; ``p * q`` applies ``p`` first.
    Construction does not validate; use :meth:`from_images` for raw input.
    """

    __slots__ = ()

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_images(cls, images: Iterable[int]) -> "Perm":
        p = cls(int(i) for i in images)
        if sorted(p) != list(range(len(p))):
            raise InvalidPermutation(f"not a bijection on 0..{len(p) - 1}: {list(p)}")
        return p

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Perm":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + type(cyc)((cyc[0],))):
                images[a] = b
        return cls.from_images(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other):  # type: ignore[override]
        if len(self) != len(other):
            raise DegreeMismatch(f"degrees {len(self)} and {len(other)} differ")
        return Perm(other[i] for i in self)

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for v, image in enumerate(self):
            inv[image] = v
        return Perm(inv)

    def conjugate(self, x: "Perm") -> "Perm":
        """x^-1 * self * x."""
        return x.inverse() * self * x

    def is_identity(self) -> bool:
        return all(i == v for v, i in enumerate(self))

    def order(self) -> int:
        k, q = 1, self
        while not q.is_identity():
            q = q * self
            k += 1
        return k

    def cycle_string(self) -> str:
        seen, parts = set(), []
        for v in range(len(self)):
            if v in seen or self[v] == v:
                continue
            cyc, w = [v], self[v]
            while w != v:
                seen.add(w)
                cyc.append(w)
                w = self[w]
            parts.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(parts) or "()"

    def __repr__(self) -> str:
        return f"Perm{tuple(self)!r}"


def compose(p: Perm, q: Perm) -> Perm:
    """Apply ``p`` then ``q`` (right action)."""
    return p * q


def _as_perms(generators: Iterable[Sequence[int]]) -> list[Perm]:
    return [g if isinstance(g, Perm) else Perm.from_images(g) for g in generators]


class PermutationGroup:
    """A finite permutation group with a materialized element set.

    Instances are built by :func:`close_group` or by filtering an existing
    group; `elements` is lexicographically sorted, so every iteration order
    downstream is deterministic.
    """

    __slots__ = ("degree", "elements", "_eset", "_generators", "_small_gens")

    def __init__(self, degree: int, elements: Iterable[Perm], generators=None):
        self.degree = degree
        self.elements: tuple[Perm, ...] = tuple(sorted(elements))
        self._eset = frozenset(self.elements)
        self._generators = tuple(generators) if generators is not None else None
        self._small_gens = None
        ident = Perm.identity(degree)
        if ident not in self._eset:
            raise BadParameters("identity missing from element set")
        for p in self.elements:
            if p.inverse() not in self._eset:
                raise BadParameters(f"inverse of {p} missing from element set")

    # -- construction ------------------------------------------------------

    @classmethod
    def close(cls, generators, degree: int | None = None,
              cap: int = DEFAULT_GROUP_CAP) -> "PermutationGroup":
        gens = _as_perms(generators)
        if cap < 1:
            raise BadParameters("cap must be >= 1")
        if degree is None:
            if not gens:
                raise BadParameters("degree required for an empty generator list")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(f"generator degree {g.degree} != {degree}")
        ident = Perm.identity(degree)
        elements = {ident}
        frontier = [ident]
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    b = a * g
                    if b not in elements:
                        elements.add(b)
                        if len(elements) > cap:
                            raise CapExceeded(f"group closure exceeded cap {cap}")
                        new.append(b)
            frontier = new
        return cls(degree, elements, generators=gens)

    def to_json(self) -> dict:
        return {"degree": self.degree,
                "generators": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, data: dict, cap: int = DEFAULT_GROUP_CAP) -> "PermutationGroup":
        return cls.close(data["generators"], degree=int(data["degree"]), cap=cap)

    # -- basic queries -----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    @property
    def generators(self) -> tuple[Perm, ...]:
        if self._generators is not None:
            return self._generators
        return self.small_generating_set()

    def __contains__(self, p) -> bool:
        return p in self._eset

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"<PermutationGroup degree={self.degree} order={self.order}>"

    def small_generating_set(self) -> tuple[Perm, ...]:
        """A short (greedy, not necessarily minimal) generating sequence."""
        if self._small_gens is None:
            gens: list[Perm] = []
            closure = {Perm.identity(self.degree)}
            for p in self.elements:
                if p not in closure:
                    gens.append(p)
                    frontier = list(closure)
                    while frontier:
                        new = []
                        for a in frontier:
                            for g in gens:
                                b = a * g
                                if b not in closure:
                                    closure.add(b)
                                    new.append(b)
                        frontier = new
                if len(closure) == len(self.elements):
                    break
            self._small_gens = tuple(gens)
        return self._small_gens

    # -- actions -----------------------------------------------------------

    def orbit(self, point: int) -> frozenset[int]:
        """Smallest generator-closed set of points containing ``point``."""
        if not 0 <= point < self.degree:
            raise BadParameters(f"point {point} outside degree {self.degree}")
        gens = self.generators
        seen = {point}
        frontier = [point]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = g[x]
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return frozenset(seen)

    def tuple_orbit(self, tup: Sequence[int], cap: int | None = None) -> set[tuple[int, ...]]:
        """Orbit of a point tuple under the coordinatewise action."""
        start = tuple(tup)
        gens = self.generators
        seen = {start}
        frontier = [start]
        while frontier:
            new = []
            for t in frontier:
                for g in gens:
                    s = tuple(g[v] for v in t)
                    if s not in seen:
                        seen.add(s)
                        if cap is not None and len(seen) > cap:
                            raise CapExceeded(f"tuple orbit exceeded cap {cap}")
                        new.append(s)
            frontier = new
        return seen

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermutationGroup":
        """Subgroup fixing every listed point; the empty tuple gives the group itself."""
        pts = tuple(points)
        for p in pts:
            if not 0 <= p < self.degree:
                raise BadParameters(f"point {p} outside degree {self.degree}")
        if not pts:
            return self
        kept = self.elements
        for p in pts:
            kept = [g for g in kept if g[p] == p]
        return PermutationGroup(self.degree, kept)

    def is_transitive(self, domain: Iterable[int] | None = None) -> bool:
        """True iff one orbit covers ``domain`` (default: all points)."""
        dom = frozenset(range(self.degree) if domain is None else domain)
        if not dom:
            raise BadParameters("empty domain")
        gens = self.generators
        for g in gens:
            for x in dom:
                if g[x] not in dom:
                    raise DomainNotInvariant(f"generator moves {x} to {g[x]} outside domain")
        start = min(dom)
        seen = {start}
        frontier = [start]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = g[x]
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return seen == set(dom)

    def subgroup_equals(self, other: "PermutationGroup") -> bool:
        """True iff the element sets coincide."""
        if self.degree != other.degree:
            raise DegreeMismatch(f"degrees {self.degree} and {other.degree} differ")
        if self.order != other.order:
            return False
        return (all(g in other._eset for g in self.generators)
                and all(g in self._eset for g in other.generators))

    # -- generation --------------------------------------------------------

    def min_generating_size(self, search_cap: int = 4) -> int | None:
        """Exact size of a smallest generating set, or None if the cap was hit.

        Searches subsets of the full element set of size 1..search_cap.
        """
        if self.order == 1:
            return 0
        nontrivial = [p for p in self.elements if not p.is_identity()]
        for p in nontrivial:
            if p.order() == self.order:
                return 1
        for size in range(2, search_cap + 1):
            for combo in itertools.combinations(nontrivial, size):
                if self._closure_size(combo) == self.order:
                    return size
        return None

    def _closure_size(self, gens: Sequence[Perm]) -> int:
        ident = Perm.identity(self.degree)
        elements = {ident}
        frontier = [ident]
        target = self.order
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    b = a * g
                    if b not in elements:
                        elements.add(b)
                        if len(elements) == target:
                            return target
                        new.append(b)
            frontier = new
        return len(elements)


def close_group(generators, degree: int | None = None,
                cap: int = DEFAULT_GROUP_CAP) -> PermutationGroup:
    """Breadth-first closure of ``generators`` into a materialized group."""
    return PermutationGroup.close(generators, degree=degree, cap=cap)
