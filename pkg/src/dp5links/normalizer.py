"""The birational automorphism group as a projective normalizer computation.

The group of order 20 acts on the hyperplane {sum x_i = 0} through the
restriction of the permutation representation, a 4-dimensional irreducible.
Every projective transformation normalizing the represented group while
fixing each group element's class is an intertwiner T with

    T rho(h) = lambda(h) rho(h) T        for a linear character lambda,

and since the group is its own automorphism group, the full projective
normalizer is generated by the representation together with these
intertwiners.  Averaging a seed matrix against each of the four characters
produces the intertwiners exactly; the ones preserving the quadratic form
(up to scalar) generate, together with the represented group, the
quadric-preserving normalizer.  Its order and structure are certified by
finite closure over canonicalized projective matrix classes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclo import FieldElement, I_UNIT, ONE, ZERO, rational
from .groups import FiniteGroup, Permutation, subgroups_of_order
from .linalg import MatrixK, determinant, identity_grid, mat_mul, mat_vec, solve
from .projgeo import ProjPoint

Grid = list[list[FieldElement]]


class WrongGroup(ValueError):
    """Expected the order-20 subgroup with a normal cyclic 5-part."""


class ClosureExplosion(RuntimeError):
    """Projective closure exceeded the hard cap; should never happen."""


# hyperplane basis: columns of B span {sum x_i = 0} in K^5
HYPERPLANE_BASIS: tuple[tuple[int, ...], ...] = (
    (1, 0, 0, 0),
    (-1, 1, 0, 0),
    (0, -1, 1, 0),
    (0, 0, -1, 1),
    (0, 0, 0, -1),
)


def _basis_grid() -> Grid:
    return [[rational(x) for x in row] for row in HYPERPLANE_BASIS]


def restricted_representation(g: FiniteGroup) -> dict[Permutation, Grid]:
    """4x4 matrices of the permutation action on the hyperplane basis."""
    b = _basis_grid()
    rep = {}
    for h in g.elements:
        cols = []
        for j in range(4):
            col5 = [b[i][j] for i in range(5)]
            image = h.apply_vector(col5)
            coords = solve(b, image)
            assert coords is not None
            cols.append(coords)
        rep[h] = [[cols[j][i] for j in range(4)] for i in range(4)]
    return rep


def quadratic_gram_on_hyperplane() -> Grid:
    """Gram matrix of sum x_i^2 restricted to the hyperplane basis."""
    b = _basis_grid()
    return [
        [sum((b[r][i] * b[r][j] for r in range(5)), ZERO) for j in range(4)]
        for i in range(4)
    ]


def canonical_projective(m: Grid) -> tuple:
    """Scale so the first nonzero entry (row-major) is 1; hashable key."""
    flat = [m[i][j] for i in range(len(m)) for j in range(len(m[0]))]
    lead = next(x for x in flat if not x.is_zero())
    inv = lead.inverse()
    return tuple(tuple((x * inv).coeffs for x in row) for row in m)


@dataclass(frozen=True)
class Character:
    """Linear character of the order-20 group, values in {1, i, -1, -i}."""

    label: str
    values: dict

    def __call__(self, h: Permutation) -> FieldElement:
        return self.values[h]

    def order(self) -> int:
        imgs = {tuple(v.coeffs) for v in self.values.values()}
        return len(imgs)


def characters_of_g20(g: FiniteGroup) -> list[Character]:
    """The four linear characters, factoring through the C4 quotient."""
    if g.order() != 20:
        raise WrongGroup(f"group has order {g.order()}, expected 20")
    cls5 = subgroups_of_order(g, 5)
    if len(cls5) != 1 or len(cls5[0]) != 1:
        raise WrongGroup("no unique (normal) subgroup of order 5")
    c5 = cls5[0][0].element_set()
    t = next(h for h in g.elements if h.order() == 4)
    cosets = {}
    for a in range(4):
        ta = Permutation.identity()
        for _ in range(a):
            ta = t * ta
        for h in c5:
            cosets[ta * h] = a
    if len(cosets) != 20:
        raise WrongGroup("coset decomposition by the 5-part failed")
    chars = []
    for k in range(4):
        values = {h: I_UNIT ** (k * a) for h, a in cosets.items()}
        chars.append(Character(label=f"chi{k}", values=values))
    return chars


@dataclass(frozen=True)
class Intertwiner:
    character: str
    matrix: MatrixK
    invertible: bool
    quadric_preserving: bool
    square_in_group: bool

    def grid(self) -> Grid:
        return self.matrix.to_grid()

    def serialize(self) -> dict:
        return {
            "character": self.character,
            "matrix": self.matrix.serialize(),
            "invertible": self.invertible,
            "quadric_preserving": self.quadric_preserving,
            "square_in_group": self.square_in_group,
        }


def _seed_matrices():
    for r in range(4):
        for c in range(4):
            seed = [[ZERO] * 4 for _ in range(4)]
            seed[r][c] = ONE
            yield seed


def intertwiner(lam: Character, rep: dict[Permutation, Grid],
                g: FiniteGroup) -> Intertwiner | None:
    """Nonzero T with T rho(h) = lambda(h) rho(h) T, by seed averaging."""
    inverses = {h: rep[h.inverse()] for h in g.elements}
    group_classes = {canonical_projective(rep[h]) for h in g.elements}
    gram = quadratic_gram_on_hyperplane()
    for seed in _seed_matrices():
        total = [[ZERO] * 4 for _ in range(4)]
        for h in g.elements:
            term = mat_mul(mat_mul(rep[h], seed), inverses[h])
            w = lam(h)
            for i in range(4):
                for j in range(4):
                    total[i][j] = total[i][j] + w * term[i][j]
        if all(x.is_zero() for row in total for x in row):
            continue
        for h in g.elements:
            lhs = mat_mul(total, rep[h])
            rhs = [[lam(h) * x for x in row] for row in mat_mul(rep[h], total)]
            assert lhs == rhs, "intertwining identity must hold exactly"
        det = determinant(total)
        invertible = not det.is_zero()
        transported = mat_mul(mat_mul(_transpose(total), gram), total)
        scale = None
        preserving = True
        for i in range(4):
            for j in range(4):
                if gram[i][j].is_zero():
                    if not transported[i][j].is_zero():
                        preserving = False
                else:
                    ratio = transported[i][j] / gram[i][j]
                    if scale is None:
                        scale = ratio
                    elif ratio != scale:
                        preserving = False
        preserving = preserving and scale is not None and not scale.is_zero()
        square = mat_mul(total, total)
        square_in_group = (
            not all(x.is_zero() for row in square for x in row)
            and canonical_projective(square) in group_classes
        )
        return Intertwiner(
            character=lam.label,
            matrix=MatrixK.from_rows(total),
            invertible=invertible,
            quadric_preserving=preserving,
            square_in_group=square_in_group,
        )
    return None


def _transpose(m: Grid) -> Grid:
    return [list(r) for r in zip(*m)]


@dataclass(frozen=True)
class NormalizerResult:
    order: int
    generator_matrices: tuple[MatrixK, ...]
    structure: dict
    involution: MatrixK
    intertwiners: tuple[Intertwiner, ...]

    def serialize(self) -> dict:
        return {
            "order": self.order,
            "hyperplane_basis": [list(r) for r in HYPERPLANE_BASIS],
            "generators": [m.serialize() for m in self.generator_matrices],
            "structure": self.structure,
            "involution": self.involution.serialize(),
            "intertwiners": [t.serialize() for t in self.intertwiners],
        }


def _hyperplane_coords(p: ProjPoint) -> list[FieldElement]:
    b = _basis_grid()
    coords = solve(b, list(p.coords))
    if coords is None:
        raise ValueError(f"point {p!r} is not on the hyperplane")
    return coords


def apply_on_hyperplane(m: Grid, p: ProjPoint) -> ProjPoint:
    """Image of a hyperplane point of P^4 under a 4x4 matrix in basis coords."""
    c = mat_vec(m, _hyperplane_coords(p))
    b = _basis_grid()
    out = [sum((b[i][j] * c[j] for j in range(4)), ZERO) for i in range(5)]
    return ProjPoint.of(out)


def assemble_normalizer(g: FiniteGroup, cap: int = 400) -> NormalizerResult:
    """Quadric-preserving projective normalizer, with structure certificate."""
    rep = restricted_representation(g)
    chars = characters_of_g20(g)
    tws = []
    for lam in chars:
        t = intertwiner(lam, rep, g)
        if t is not None:
            tws.append(t)
    preserving = [t for t in tws if t.quadric_preserving and t.invertible]
    generators: list[Grid] = [rep[h] for h in g.generators]
    generators += [t.grid() for t in preserving]
    elements: dict[tuple, Grid] = {}
    ident = identity_grid(4)
    elements[canonical_projective(ident)] = ident
    boundary = [ident]
    while boundary:
        new_boundary = []
        for gen in generators:
            for b in boundary:
                prod = mat_mul(gen, b)
                key = canonical_projective(prod)
                if key not in elements:
                    if len(elements) >= cap:
                        raise ClosureExplosion(f"projective closure exceeded {cap} classes")
                    elements[key] = prod
                    new_boundary.append(prod)
        boundary = new_boundary
    order = len(elements)
    group_classes = {canonical_projective(rep[h]) for h in g.elements}
    # central involution: projectively order 2, commutes with the whole
    # represented group, not itself a represented element
    involution = None
    for key, m in sorted(elements.items()):
        if key in group_classes:
            continue
        sq = canonical_projective(mat_mul(m, m))
        if sq != canonical_projective(ident):
            continue
        if all(
            canonical_projective(mat_mul(m, rep[h])) == canonical_projective(mat_mul(rep[h], m))
            for h in g.elements
        ):
            involution = m
            break
    structure: dict = {
        "represented_group_classes": len(group_classes),
        "index": order // len(group_classes) if order % len(group_classes) == 0 else None,
        "quadric_preserving_characters": sorted(t.character for t in preserving),
    }
    if involution is not None:
        structure["central_involution"] = True
        structure["direct_product_c2_x_g20"] = (
            order == 2 * len(group_classes) and len(group_classes) == 20
        )
    else:
        structure["central_involution"] = False
        structure["direct_product_c2_x_g20"] = False
    inv_matrix = MatrixK.from_rows(involution if involution is not None else ident)
    return NormalizerResult(
        order=order,
        generator_matrices=tuple(MatrixK.from_rows(m) for m in generators),
        structure=structure,
        involution=inv_matrix,
        intertwiners=tuple(tws),
    )


def involution_swaps_orbits(result: NormalizerResult,
                            orbit_a: list[ProjPoint],
                            orbit_b: list[ProjPoint]) -> bool:
    """Does the extra involution map the first point set onto the second?"""
    m = result.involution.to_grid()
    images = {apply_on_hyperplane(m, p) for p in orbit_a}
    return images == set(orbit_b)
