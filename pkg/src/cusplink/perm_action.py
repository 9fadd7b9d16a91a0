"""Permutation groups presented by generators, with exact decision of
k-transitivity and of the transitivity degree of an action.

Points are bare indices 0..d-1; callers bind them to whatever is being
permuted (field labels, link components, map faces).  Composition is
function-style: (p * q)(x) = p(q(x)), the right factor acts first.

k-transitivity is decided from the orbit of a single ordered k-tuple:
the action on distinct k-tuples is transitive exactly when that orbit
has full size d*(d-1)*...*(d-k+1).  A literal all-pairs checker is kept
alongside for cross-validation on small groups.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import cached_property
from math import factorial

DEFAULT_MAX_GROUP = 10 ** 6
_ENV_MAX_GROUP = "CSL_MAX_GROUP"


def _group_cap(explicit: int | None) -> int:
    if explicit is not None:
        return explicit
    return int(os.environ.get(_ENV_MAX_GROUP, DEFAULT_MAX_GROUP))


@dataclass(frozen=True)
class Permutation:
    """A bijection of {0, ..., d-1} stored as its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a bijection of 0..{len(images) - 1}: {images}")

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> Permutation:
        """Build from disjoint cycles of point indices."""
        images = list(range(degree))
        for cycle in cycles:
            for i, point in enumerate(cycle):
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        if self.degree != other.degree:
            raise ValueError("degree mismatch in composition")
        return Permutation(tuple(self.images[other.images[x]] for x in range(self.degree)))

    def inverse(self) -> Permutation:
        images = [0] * self.degree
        for x, y in enumerate(self.images):
            images[y] = x
        return Permutation(tuple(images))

    def __pow__(self, exponent: int) -> Permutation:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result, base, e = Permutation.identity(self.degree), self, exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for x, i in enumerate(self.images))

    def order(self) -> int:
        power, n = self, 1
        while not power.is_identity():
            power = power * self
            n += 1
        return n

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its least point, sorted."""
        seen, out = set(), []
        for start in range(self.degree):
            if start in seen:
                continue
            cycle = [start]
            seen.add(start)
            point = self.images[start]
            while point != start:
                cycle.append(point)
                seen.add(point)
                point = self.images[point]
            if len(cycle) > 1 or include_fixed:
                out.append(tuple(cycle))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(p) for p in c) + ")" for c in cycles)

    def __str__(self):
        return self.cycle_string()


class PermGroup:
    """The group generated by a nonempty list of same-degree permutations.

    The element set is computed lazily by breadth-first products of the
    generators; a cap (default 10**6, overridable via the CSL_MAX_GROUP
    environment variable or the max_order argument) guards runaway
    closures.  Completed groups are immutable.
    """

    def __init__(self, generators, max_order: int | None = None):
        generators = tuple(generators)
        if not generators:
            raise ValueError("at least one generator is required")
        degree = generators[0].degree
        if any(g.degree != degree for g in generators):
            raise ValueError("generators must share one degree")
        self.degree = degree
        self.generators = generators
        self._max_order = _group_cap(max_order)

    @cached_property
    def elements(self) -> frozenset[Permutation]:
        identity = Permutation.identity(self.degree)
        seen = {identity}
        frontier = [identity]
        while frontier:
            new = []
            for g in self.generators:
                for h in frontier:
                    product = g * h
                    if product not in seen:
                        seen.add(product)
                        new.append(product)
                        if len(seen) > self._max_order:
                            raise RuntimeError(
                                f"group closure exceeded the cap {self._max_order}")
            frontier = new
        return frozenset(seen)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, perm: Permutation) -> bool:
        return perm in self.elements

    def __iter__(self):
        return iter(sorted(self.elements, key=lambda p: p.images))

    def __len__(self):
        return self.order

    def orbit(self, point: int) -> frozenset[int]:
        seen = {point}
        frontier = [point]
        while frontier:
            new = []
            for g in self.generators:
                for x in frontier:
                    y = g(x)
                    if y not in seen:
                        seen.add(y)
                        new.append(y)
            frontier = new
        return frozenset(seen)

    def orbits(self) -> list[frozenset[int]]:
        remaining = set(range(self.degree))
        out = []
        while remaining:
            orbit = self.orbit(min(remaining))
            out.append(orbit)
            remaining -= orbit
        return out

    def to_json_dict(self) -> dict:
        return {
            "degree": self.degree,
            "generators": [list(g.images) for g in self.generators],
            "order": self.order,
            "transitivity_degree": transitivity_degree(self),
        }

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, generators={len(self.generators)})"


def group_closure(generators, max_order: int | None = None) -> PermGroup:
    """Close a generator list into a PermGroup, forcing the element set."""
    group = PermGroup(generators, max_order=max_order)
    group.elements  # noqa: B018  (force the closure now)
    return group


def _tuple_orbit_size(group: PermGroup, start: tuple[int, ...], cap: int) -> int:
    seen = {start}
    frontier = [start]
    while frontier:
        new = []
        for g in group.generators:
            for tup in frontier:
                image = tuple(g(x) for x in tup)
                if image not in seen:
                    seen.add(image)
                    new.append(image)
        frontier = new
        if len(seen) > cap:
            break
    return len(seen)


def is_k_transitive(group: PermGroup, k: int) -> bool:
    """Can the group map every ordered k-tuple of distinct points onto
    every other?  Decided by the orbit size of one fixed k-tuple."""
    d = group.degree
    if not 1 <= k <= d:
        raise ValueError(f"k must satisfy 1 <= k <= degree, got {k}")
    target = 1
    for i in range(k):
        target *= d - i
    return _tuple_orbit_size(group, tuple(range(k)), target) == target


def is_k_transitive_literal(group: PermGroup, k: int) -> bool:
    """The definition verbatim: every source tuple reaches every target
    tuple under some element.  Exponential; for cross-checks only."""
    from itertools import permutations as distinct_tuples

    d = group.degree
    if not 1 <= k <= d:
        raise ValueError(f"k must satisfy 1 <= k <= degree, got {k}")
    tuples = list(distinct_tuples(range(d), k))
    elements = group.elements
    for source in tuples:
        images = {tuple(g(x) for x in source) for g in elements}
        if len(images) != len(tuples):
            return False
    return True


def transitivity_degree(group: PermGroup) -> int:
    """Largest k for which the action is k-transitive (0 if not even
    transitive).  Consistent with is_k_transitive for all smaller k,
    by the inclusive hierarchy of transitivity."""
    degree = 0
    for k in range(1, group.degree + 1):
        if not is_k_transitive(group, k):
            break
        degree = k
    return degree


def orbit_sizes_divide_order(group: PermGroup) -> bool:
    """Orbit-stabilizer sanity check, used by the property suites."""
    order = group.order
    return all(order % len(orbit) == 0 for orbit in group.orbits())


def order_divides_symmetric(group: PermGroup) -> bool:
    return factorial(group.degree) % group.order == 0


# ---------------------------------------------------------------------------
# the affine action x -> s*x + t on a finite field


def affine_permutation(spec, s, t) -> Permutation:
    """The map x -> s*x + t as a permutation of the canonical element
    order of the field; s must be nonzero."""
    s = spec.element(s)
    t = spec.element(t)
    if s.is_zero():
        raise ValueError("scale factor s must be nonzero")
    return Permutation(tuple((s * e + t).index for e in spec.elements()))


def affine_group(spec, max_order: int | None = None) -> PermGroup:
    """The full affine group of the field as a permutation group on the
    n field labels: generated by translations along an additive basis
    together with scaling by a generator of the multiplicative group.
    Its order is n*(n-1) and the action is sharply 2-transitive."""
    one = spec.one
    zero = spec.zero
    generators = []
    for i in range(spec.k):
        basis_vector = spec.element([0] * i + [1])
        generators.append(affine_permutation(spec, one, basis_vector))
    generators.append(affine_permutation(spec, spec.primitive(), zero))
    return group_closure(generators, max_order=max_order)
