"""Permutation groups on 5 letters acting on exact projective coordinates.

Index convention, used everywhere: the classical permutation letter
j in {1,...,5} acts on coordinate x_{j-1}, and a permutation moves entries,
new[p(j)] = old[j].  Under this convention the classical point lists for the
orbit calculus on the diagonal cubic come out verbatim; the convention is
pinned by the acceptance tests.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cyclo import FieldElement, ONE, ZERO
from .linalg import eigenspaces_of_permutation, intersect_spans, kernel_basis, rref
from .projgeo import ProjPoint


@dataclass(frozen=True)
class Permutation:
    """Bijection of {0,...,4} (coordinate indices)."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection: {self.images}")

    @staticmethod
    def identity(n: int = 5) -> "Permutation":
        return Permutation(tuple(range(n)))

    @staticmethod
    def from_cycles(text: str, n: int = 5) -> "Permutation":
        """Parse cycle notation on letters 1..n, e.g. "(12345)" or "(25)(34)"."""
        images = list(range(n))
        body = text.strip()
        if body in ("()", "e", ""):
            return Permutation(tuple(images))
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"bad cycle string {text!r}")
        for cyc in body[1:-1].split(")("):
            letters = [int(ch) - 1 for ch in cyc]
            if len(set(letters)) != len(letters):
                raise ValueError(f"repeated letter in {text!r}")
            for a, b in zip(letters, letters[1:] + letters[:1]):
                images[a] = b
        return Permutation(tuple(images))

    def to_cycles(self) -> str:
        """Canonical cycle string; identity prints as "()"."""
        seen = [False] * len(self.images)
        cycles = []
        for start in range(len(self.images)):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.images[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = self.images[j]
            if len(cyc) > 1:
                cycles.append(cyc)
        if not cycles:
            return "()"
        return "".join("(" + "".join(str(k + 1) for k in cyc) + ")" for cyc in cycles)

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(j) = self(other(j)): other applied first
        return Permutation(tuple(self.images[other.images[j]] for j in range(len(self.images))))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for j, i in enumerate(self.images):
            inv[i] = j
        return Permutation(tuple(inv))

    def order(self) -> int:
        n = 1
        p = self
        e = Permutation.identity(len(self.images))
        while p != e:
            p = p * self
            n += 1
        return n

    def apply_point(self, p: ProjPoint) -> ProjPoint:
        new = [ZERO] * len(self.images)
        for j, c in enumerate(p.coords):
            new[self.images[j]] = c
        return ProjPoint.of(new)

    def apply_vector(self, v: Sequence[FieldElement]) -> list[FieldElement]:
        new = [ZERO] * len(self.images)
        for j, c in enumerate(v):
            new[self.images[j]] = c
        return new

    def sort_key(self) -> tuple[int, ...]:
        return self.images


@dataclass(frozen=True)
class FiniteGroup:
    """Closure of a generating set, element list sorted canonically."""

    generators: tuple[Permutation, ...]
    elements: tuple[Permutation, ...]

    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p in set(self.elements)

    def element_set(self) -> frozenset[Permutation]:
        return frozenset(self.elements)

    def serialize(self) -> dict:
        return {
            "generators": [g.to_cycles() for g in self.generators],
            "order": self.order(),
        }


def subgroup_closure(gens: Iterable[Permutation], n: int = 5) -> FiniteGroup:
    """Breadth-first closure of the generated subgroup."""
    gens = tuple(gens)
    identity = Permutation.identity(n)
    elements = {identity}
    boundary = [identity]
    while boundary:
        new_boundary = []
        for g in gens:
            for b in boundary:
                c = g * b
                if c not in elements:
                    elements.add(c)
                    new_boundary.append(c)
        boundary = new_boundary
    return FiniteGroup(gens, tuple(sorted(elements, key=Permutation.sort_key)))


def group_from_cycles(*texts: str) -> FiniteGroup:
    return subgroup_closure(Permutation.from_cycles(t) for t in texts)


def standard_groups() -> dict[str, FiniteGroup]:
    """The subgroup chain used throughout: C4, C5, D10, G20, S5."""
    return {
        "C4": group_from_cycles("(2354)"),
        "C5": group_from_cycles("(12345)"),
        "D10": group_from_cycles("(12345)", "(25)(34)"),
        "G20": group_from_cycles("(12345)", "(2354)"),
        "S5": group_from_cycles("(12345)", "(12)"),
    }


def conjugate_subgroup(g: Permutation, h: FiniteGroup) -> FiniteGroup:
    gi = g.inverse()
    gens = tuple(g * x * gi for x in h.generators)
    return subgroup_closure(gens)


def subgroups_of_order(g: FiniteGroup, n: int) -> list[list[FiniteGroup]]:
    """All order-n subgroups, grouped into conjugacy classes.

    Found by closing generator subsets of size <= 2; every subgroup of the
    symmetric group on 5 letters is 2-generated, so this is exhaustive here.
    """
    if n <= 0 or g.order() % n != 0:
        return []
    found: dict[frozenset[Permutation], FiniteGroup] = {}
    candidates = [e for e in g.elements if n % e.order() == 0]
    if n == 1:
        found[frozenset([Permutation.identity()])] = subgroup_closure([])
    for a in candidates:
        h = subgroup_closure([a])
        if h.order() == n:
            found.setdefault(h.element_set(), h)
    for a, b in itertools.combinations(candidates, 2):
        h = subgroup_closure([a, b])
        if h.order() == n:
            found.setdefault(h.element_set(), h)
    classes: list[list[FiniteGroup]] = []
    assigned: set[frozenset[Permutation]] = set()
    for key in sorted(found, key=lambda k: sorted(p.sort_key() for p in k)):
        if key in assigned:
            continue
        h = found[key]
        cls = []
        for g_el in g.elements:
            conj = conjugate_subgroup(g_el, h)
            ck = conj.element_set()
            if ck not in assigned:
                assigned.add(ck)
                cls.append(found.get(ck, conj))
        classes.append(sorted(cls, key=lambda s: sorted(p.sort_key() for p in s.elements)))
    return classes


def orbit_and_stabilizer(g: FiniteGroup, p: ProjPoint) -> tuple[list[ProjPoint], FiniteGroup]:
    """Orbit (sorted) and stabilizer under the coordinate-permutation action."""
    orbit = {p}
    for el in g.elements:
        orbit.add(el.apply_point(p))
    stab_elements = [el for el in g.elements if el.apply_point(p) == p]
    stab = FiniteGroup(tuple(stab_elements), tuple(sorted(stab_elements, key=Permutation.sort_key)))
    assert len(orbit) * stab.order() == g.order(), "orbit-stabilizer identity violated"
    return sorted(orbit, key=ProjPoint.sort_key), stab


@dataclass(frozen=True)
class FixedLocusComponent:
    """Simultaneous eigenspace of a subgroup, with per-generator scalars."""

    character: tuple[FieldElement, ...]
    basis: tuple[tuple[FieldElement, ...], ...]
    projective_dimension: int
    positive_dimensional: bool

    def point(self) -> ProjPoint:
        if self.projective_dimension != 0:
            raise ValueError("component is not a single point")
        return ProjPoint.of(list(self.basis[0]))


def fixed_locus(h: FiniteGroup, restrict_to_hyperplane: bool = True
                ) -> list[FixedLocusComponent]:
    """Fixed points of h in P^4 as projectivized simultaneous eigenspaces.

    A vector fixed projectively by every element of h is a common eigenvector
    of the generators, so it suffices to intersect per-generator eigenspaces
    over all tuples of candidate eigenvalues.  With the hyperplane restriction
    the spaces are intersected with {sum x_i = 0}.
    """
    n = 5
    gens = h.generators
    if not gens:
        spaces = [([tuple([ONE if i == j else ZERO for j in range(n)]) for i in range(n)], ())]
    else:
        per_gen = [eigenspaces_of_permutation(g) for g in gens]
        spaces = []
        keys = [sorted(d.keys(), key=lambda lam: tuple(lam.coeffs)) for d in per_gen]
        for combo in itertools.product(*keys):
            basis = per_gen[0][combo[0]]
            for k in range(1, len(gens)):
                basis = intersect_spans(basis, per_gen[k][combo[k]])
                if not basis:
                    break
            if basis:
                spaces.append(([tuple(v) for v in basis], tuple(combo)))
    hyper_kernel = None
    if restrict_to_hyperplane:
        hyper_kernel = kernel_basis([[ONE] * n])
    components = []
    for basis, character in spaces:
        vecs = [list(v) for v in basis]
        if restrict_to_hyperplane:
            vecs = intersect_spans(vecs, hyper_kernel)
            if not vecs:
                continue
        red, pivots = rref(vecs)
        vecs = [tuple(red[i]) for i in range(len(pivots))]
        dim = len(vecs) - 1
        components.append(FixedLocusComponent(
            character=character,
            basis=tuple(vecs),
            projective_dimension=dim,
            positive_dimensional=dim >= 1,
        ))
    components.sort(key=lambda c: tuple(tuple(x.coeffs for x in row) for row in c.basis))
    return components
