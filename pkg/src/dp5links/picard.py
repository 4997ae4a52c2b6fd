"""Lattice models of the surfaces in the link diagram.

The Picard lattice of the cubic is rebuilt from pure line incidence: a sixer
of pairwise disjoint lines gives an exceptional basis e_1..e_6, the class of
any line is forced by its incidence vector with the sixer, and the group
action matrices are forced by the induced permutation of the 27 lines.
Everything downstream of that - invariant ranks, the two equivariant
contractions, the divisor relations of the link, the (-2)-obstruction on the
quadric side and the degree of the composite self-map - is integer matrix
arithmetic against the reconstructed intersection form.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .census import (
    LineConfiguration,
    Surface,
    induced_line_permutation,
    length4_orbit_points,
)
from .cyclo import FieldElement, ZERO, rational
from .groups import FiniteGroup
from .linalg import (
    IntLattice,
    coordinates_in_basis,
    hyperbolic_basis,
    int_rank,
    inverse_grid,
    orthogonal_complement,
)
from .projgeo import ProjPoint, line_in_surface, line_through

IntVec = tuple[int, ...]
IntMat = tuple[IntVec, ...]


class NoSixer(RuntimeError):
    """No six pairwise disjoint lines found; the configuration is corrupt."""


class InconsistentIncidence(RuntimeError):
    """Assigned classes fail to reproduce the incidence matrix."""


class NotContractible(ValueError):
    """Family is not a disjoint g-stable set of (-1)-classes."""


class RelationFailed(AssertionError):
    """A divisor relation failed as an exact vector identity."""


class OrbitsNotDisjoint(ValueError):
    """The two length-5 orbits were expected to be disjoint."""


@dataclass(frozen=True)
class DivisorClass:
    label: str
    vector: IntVec


@dataclass(frozen=True)
class PicardLattice:
    lattice: IntLattice
    anticanonical: IntVec
    marked: tuple[DivisorClass, ...]
    actions: tuple[IntMat, ...]
    action_names: tuple[str, ...]

    @property
    def rank(self) -> int:
        return self.lattice.rank

    def pair(self, u, v) -> int:
        return self.lattice.pair(list(u), list(v))

    def degree(self) -> int:
        return self.pair(self.anticanonical, self.anticanonical)

    def marked_vector(self, label: str) -> IntVec:
        for dc in self.marked:
            if dc.label == label:
                return dc.vector
        raise KeyError(label)

    def check_action_invariants(self) -> None:
        g = self.lattice.gram
        n = self.rank
        for m in self.actions:
            for i in range(n):
                for j in range(n):
                    lhs = sum(m[a][i] * g[a][b] * m[b][j] for a in range(n) for b in range(n))
                    if lhs != g[i][j]:
                        raise InconsistentIncidence("action matrix is not a gram isometry")
            img = apply_matrix(m, self.anticanonical)
            if img != tuple(self.anticanonical):
                raise InconsistentIncidence("action matrix moves the anticanonical class")

    def serialize(self) -> dict:
        return {
            "lattice": self.lattice.serialize(),
            "anticanonical": [str(x) for x in self.anticanonical],
            "marked": {dc.label: [str(x) for x in dc.vector] for dc in self.marked},
            "actions": {
                name: [[str(x) for x in row] for row in m]
                for name, m in zip(self.action_names, self.actions)
            },
        }


@dataclass(frozen=True)
class LatticeMorphism:
    kind: str  # pullback | pushforward | contraction-complement
    matrix: IntMat  # maps target coordinates into source coordinates (columns)

    def apply(self, v) -> IntVec:
        return apply_matrix(self.matrix, v)


def apply_matrix(m, v) -> IntVec:
    return tuple(sum(m[i][j] * v[j] for j in range(len(v))) for i in range(len(m)))


def mat_mul_int(a, b) -> IntMat:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0])))
        for i in range(len(a))
    )


# -- reconstruction -----------------------------------------------------------


def find_sixers(cfg: LineConfiguration, limit: int = 1) -> list[tuple[int, ...]]:
    """Pairwise disjoint sextuples of line indices, deterministic order."""
    n = len(cfg.lines)
    inc = cfg.incidence
    found: list[tuple[int, ...]] = []

    def extend(partial: list[int], start: int):
        if len(found) >= limit:
            return
        if len(partial) == 6:
            found.append(tuple(partial))
            return
        for k in range(start, n):
            if all(inc[k][p] == 0 for p in partial):
                extend(partial + [k], k + 1)
                if len(found) >= limit:
                    return

    extend([], 0)
    return found


def reconstruct_picard(cfg: LineConfiguration, g: FiniteGroup,
                       sixer: tuple[int, ...] | None = None) -> PicardLattice:
    """Rank-7 Picard lattice with line classes and group action matrices."""
    if sixer is None:
        sixers = find_sixers(cfg, limit=1)
        if not sixers:
            raise NoSixer("no six pairwise disjoint lines in the configuration")
        sixer = sixers[0]
    n = len(cfg.lines)
    gram = [[0] * 7 for _ in range(7)]
    gram[0][0] = 1
    for i in range(1, 7):
        gram[i][i] = -1
    labels = ("h",) + tuple(f"e{i}" for i in range(1, 7))
    lattice = IntLattice.from_gram(gram, labels)
    classes: list[IntVec] = []
    for idx in range(n):
        if idx in sixer:
            v = [0] * 7
            v[1 + sixer.index(idx)] = 1
            classes.append(tuple(v))
            continue
        meets = [k for k, s in enumerate(sixer) if cfg.incidence[idx][s] == 1]
        if len(meets) == 2:
            v = [0] * 7
            v[0] = 1
            v[1 + meets[0]] = -1
            v[1 + meets[1]] = -1
            classes.append(tuple(v))
        elif len(meets) == 5:
            v = [0] * 7
            v[0] = 2
            for k in meets:
                v[1 + k] = -1
            classes.append(tuple(v))
        else:
            raise InconsistentIncidence(
                f"line {cfg.labels[idx]} meets the sixer in {len(meets)} members"
            )
    anticanonical = (3, -1, -1, -1, -1, -1, -1)
    for i in range(n):
        if lattice.pair(classes[i], classes[i]) != -1:
            raise InconsistentIncidence("line class with self-intersection != -1")
        if lattice.pair(classes[i], anticanonical) != 1:
            raise InconsistentIncidence("line class with anticanonical degree != 1")
        for j in range(i + 1, n):
            if lattice.pair(classes[i], classes[j]) != cfg.incidence[i][j]:
                raise InconsistentIncidence(
                    f"classes of {cfg.labels[i]}, {cfg.labels[j]} disagree with incidence"
                )
    # a basis of the lattice among the line classes: the sixer plus one line
    # meeting exactly two sixer members (h = that class + e_i + e_j)
    basis_idx = list(sixer)
    for idx in range(n):
        if idx not in sixer:
            meets = [k for k, s in enumerate(sixer) if cfg.incidence[idx][s] == 1]
            if len(meets) == 2:
                basis_idx.append(idx)
                break
    v_cols = [[rational(classes[idx][r]) for idx in basis_idx] for r in range(7)]
    v_inv = inverse_grid(v_cols)
    actions = []
    names = []
    for gen in g.generators:
        perm = induced_line_permutation(cfg, gen)
        w_cols = [[rational(classes[perm[idx]][r]) for idx in basis_idx] for r in range(7)]
        m_field = [
            [
                sum((w_cols[i][k] * v_inv[k][j] for k in range(7)), ZERO)
                for j in range(7)
            ]
            for i in range(7)
        ]
        m = tuple(
            tuple(_to_int(m_field[i][j]) for j in range(7)) for i in range(7)
        )
        for idx in range(n):
            if apply_matrix(m, classes[idx]) != classes[perm[idx]]:
                raise InconsistentIncidence("action matrix fails on a line class")
        actions.append(m)
        names.append(gen.to_cycles())
    marked = tuple(DivisorClass(cfg.labels[i], classes[i]) for i in range(n))
    pic = PicardLattice(lattice, anticanonical, marked, tuple(actions), tuple(names))
    pic.check_action_invariants()
    return pic


def _to_int(x: FieldElement) -> int:
    q = x.as_rational()
    if q.denominator != 1:
        raise InconsistentIncidence(f"expected an integer, got {q}")
    return int(q)


# -- invariant rank and contraction --------------------------------------------


def invariant_rank(pic: PicardLattice) -> int:
    """Rank over Q of the common fixed space of all action matrices."""
    n = pic.rank
    if not pic.actions:
        return n
    stacked = []
    for m in pic.actions:
        for i in range(n):
            stacked.append([m[i][j] - (1 if i == j else 0) for j in range(n)])
    return n - int_rank(stacked)


def contract(pic: PicardLattice, family: list[str]) -> tuple[PicardLattice, LatticeMorphism]:
    """Blow down a g-stable orthogonal family of marked (-1)-classes."""
    vectors = [pic.marked_vector(lab) for lab in family]
    for v in vectors:
        if pic.pair(v, v) != -1:
            raise NotContractible("family member with self-intersection != -1")
    for u, v in itertools.combinations(vectors, 2):
        if pic.pair(u, v) != 0:
            raise NotContractible("family members meet")
    family_set = set(vectors)
    for m in pic.actions:
        for v in vectors:
            if apply_matrix(m, v) not in family_set:
                raise NotContractible("family is not stable under the group action")
    comp_labels = [f"c{i}" for i in range(pic.rank - len(vectors))]
    target_lattice, basis = orthogonal_complement(pic.lattice, vectors, comp_labels)
    src_k = list(pic.anticanonical)
    shifted = [a + sum(v[i] for v in vectors) for i, a in enumerate(src_k)]
    k_coords = coordinates_in_basis(basis, shifted)
    assert k_coords is not None, "-K + sum(family) must lie in the complement"
    target_actions = []
    for m in pic.actions:
        cols = []
        for b in basis:
            img = apply_matrix(m, b)
            c = coordinates_in_basis(basis, list(img))
            assert c is not None, "action must preserve the complement"
            cols.append(c)
        target_actions.append(tuple(
            tuple(cols[j][i] for j in range(len(basis))) for i in range(len(basis))
        ))
    target = PicardLattice(
        target_lattice,
        tuple(k_coords),
        (),
        tuple(target_actions),
        pic.action_names,
    )
    target.check_action_invariants()
    embedding = LatticeMorphism(
        "contraction-complement",
        tuple(tuple(b[i] for b in basis) for i in range(pic.rank)),
    )
    # the embedding must be an isometry onto the complement
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            if pic.pair(u, v) != target_lattice.gram[i][j]:
                raise NotContractible("complement embedding is not isometric")
    return target, embedding


def pushforward(pic: PicardLattice, family: list[str], basis: IntMat, vector) -> IntVec:
    """Image of a class under the blow-down: project along the family."""
    vectors = [pic.marked_vector(lab) for lab in family]
    v = list(vector)
    for c in vectors:
        t = pic.pair(v, c)
        v = [x + t * y for x, y in zip(v, c)]
    coords = coordinates_in_basis([list(b) for b in basis], v)
    assert coords is not None
    return tuple(coords)


# -- link calculus ---------------------------------------------------------------


def divisor_relation_check(cfg: LineConfiguration, g: FiniteGroup,
                           pic: PicardLattice | None = None) -> dict:
    """The two exact divisor identities of the link, plus pushforward data."""
    if pic is None:
        pic = reconstruct_picard(cfg, g)
    e_labels = ["E1", "E2"]
    f_labels = ["L1", "L2", "L3", "L4", "L5"]
    rank2, emb = contract(pic, f_labels)
    hb = hyperbolic_basis(rank2.lattice, positive_against=list(rank2.anticanonical))
    assert hb is not None, "rank-2 contraction target must be hyperbolic"
    f1, f2 = hb
    minus_k2 = tuple(2 * a + 2 * b for a, b in zip(f1, f2))
    if minus_k2 != tuple(rank2.anticanonical):
        raise RelationFailed("anticanonical class is not 2f1 + 2f2 in the ruling basis")
    h_down = [a + b for a, b in zip(f1, f2)]
    sigma_h = emb.apply(h_down)
    e1 = pic.marked_vector("E1")
    e2 = pic.marked_vector("E2")
    e_sum = tuple(a + b for a, b in zip(e1, e2))
    pullback_k5 = tuple(a + b for a, b in zip(pic.anticanonical, e_sum))
    rhs1 = tuple(2 * a - 3 * b for a, b in zip(pullback_k5, e_sum))
    if tuple(sigma_h) != rhs1:
        raise RelationFailed(
            f"sigma*(H) relation failed, difference {tuple(x - y for x, y in zip(sigma_h, rhs1))}"
        )
    f_sum = tuple(
        sum(pic.marked_vector(lab)[i] for lab in f_labels) for i in range(pic.rank)
    )
    rhs2 = tuple(3 * a - 5 * b for a, b in zip(pullback_k5, e_sum))
    if f_sum != rhs2:
        raise RelationFailed(
            f"sum(F) relation failed, difference {tuple(x - y for x, y in zip(f_sum, rhs2))}"
        )
    basis_rows = tuple(tuple(emb.matrix[i][j] for i in range(pic.rank))
                       for j in range(rank2.rank))
    push_e = {}
    for lab in e_labels:
        coords = pushforward(pic, f_labels, basis_rows, pic.marked_vector(lab))
        a = rank2.pair(coords, f2)  # coefficient of f1
        b = rank2.pair(coords, f1)  # coefficient of f2
        push_e[lab] = (a, b)
    bidegrees = sorted(push_e.values())
    if bidegrees != [(1, 2), (2, 1)]:
        raise RelationFailed(f"pushforward bidegrees {bidegrees} != {{(1,2),(2,1)}}")
    f_degrees = [pic.pair(pic.marked_vector(lab), pullback_k5) for lab in f_labels]
    if f_degrees != [3, 3, 3, 3, 3]:
        raise RelationFailed(f"F_i . pullback(-K) = {f_degrees}, expected all 3")
    return {
        "pullback_anticanonical": [str(x) for x in pullback_k5],
        "sigma_star_H": [str(x) for x in sigma_h],
        "relation_sigma_H": "sigma*(H) = 2 pi*(-K) - 3(E1+E2)",
        "relation_sum_F": "F1+...+F5 = 3 pi*(-K) - 5(E1+E2)",
        "sum_F": [str(x) for x in f_sum],
        "pushforward_bidegrees": {lab: list(v) for lab, v in push_e.items()},
        "F_degree_downstairs": f_degrees,
        "ruling_convention": "f1, f2 are the isotropic classes pairing to 1, "
                             "signs fixed by positivity against -K; the swap is conventional",
    }


# -- quadric-side lattices ---------------------------------------------------------


def _ruling_data(quadric: Surface) -> tuple[list[ProjPoint], list[dict]]:
    """The length-4 orbit on the quadric and its on-quadric pair lines."""
    pts = length4_orbit_points()
    rulings = []
    for i, j in itertools.combinations(range(4), 2):
        line = line_through(pts[i], pts[j])
        if line_in_surface(line, quadric.form):
            rulings.append({"points": (i, j), "line": line})
    return pts, rulings


def ruling_blowup_check(quadric: Surface) -> dict:
    """Blowing up the length-4 orbit creates four (-2)-classes.

    The four on-quadric pair lines are the rulings through two of the four
    points; in the rank-6 lattice (hyperbolic plane + four exceptional
    classes) each proper transform f - g_i - g_j has square -2, which kills
    ampleness of the anticanonical class.  Blowing up a length-5 orbit
    instead gives a lattice carrying exactly 27 (-1)-classes of degree 1.
    """
    pts, rulings = _ruling_data(quadric)
    if len(rulings) != 4:
        raise InconsistentIncidence(f"expected 4 on-quadric pair lines, found {len(rulings)}")
    gram = [[0] * 6 for _ in range(6)]
    gram[0][1] = gram[1][0] = 1
    for i in range(2, 6):
        gram[i][i] = -1
    lattice = IntLattice.from_gram(gram, ("f1", "f2", "g1", "g2", "g3", "g4"))
    # split the rulings into the two families: same family iff disjoint
    first = rulings[0]
    family_of = []
    for r in rulings:
        if r is first:
            family_of.append(0)
        else:
            family_of.append(1 if first["line"].meets(r["line"]) else 0)
    minus_k = (2, 2, -1, -1, -1, -1)
    transforms = []
    for r, fam in zip(rulings, family_of):
        v = [0] * 6
        v[fam] = 1
        i, j = r["points"]
        v[2 + i] = -1
        v[2 + j] = -1
        transforms.append({
            "ruling_points": [i, j],
            "family": "f1" if fam == 0 else "f2",
            "class": v,
            "square": lattice.pair(v, v),
            "anticanonical_degree": lattice.pair(v, minus_k),
        })
    squares = [t["square"] for t in transforms]
    if squares != [-2, -2, -2, -2]:
        raise RelationFailed(f"proper transform squares {squares} != all -2")
    del_pezzo = blowup5_minus_one_classes()
    return {
        "orbit_points": [p.serialize() for p in pts],
        "on_quadric_pairs": [list(r["points"]) for r in rulings],
        "proper_transforms": transforms,
        "minus_two_count": len(transforms),
        "five_point_blowup_minus_one_classes": len(del_pezzo),
        "lattice": lattice.serialize(),
    }


def cubic_minus_one_classes() -> list[IntVec]:
    """All c with c^2 = -1, c.(-K) = 1 in the rank-7 cubic lattice.

    Hodge index bounds the h-coefficient to {0, 1, 2} and the exceptional
    coefficients to {-1, 0, 1}; the box is padded beyond that.  The 27 line
    classes of a smooth cubic exhaust this set, which certifies that the 27
    geometric lines realize every numerical (-1)-class.
    """
    gram = [[0] * 7 for _ in range(7)]
    gram[0][0] = 1
    for i in range(1, 7):
        gram[i][i] = -1
    lattice = IntLattice.from_gram(gram)
    minus_k = [3, -1, -1, -1, -1, -1, -1]
    out = []
    for a in range(-1, 4):
        for bs in itertools.product(range(-2, 3), repeat=6):
            v = [a] + list(bs)
            if lattice.pair(v, v) == -1 and lattice.pair(v, minus_k) == 1:
                out.append(tuple(v))
    return sorted(out)


def blowup5_minus_one_classes() -> list[IntVec]:
    """All c with c^2 = -1, c.(-K) = 1 in the 5-point quadric blow-up lattice.

    Coefficient bounds follow from the Hodge index theorem: the component of
    c orthogonal to -K has square -4/3, which pins a, b in [0, 2] and each
    exceptional coefficient in [-1, 1]; the search box is padded beyond that.
    """
    gram = [[0] * 7 for _ in range(7)]
    gram[0][1] = gram[1][0] = 1
    for i in range(2, 7):
        gram[i][i] = -1
    lattice = IntLattice.from_gram(gram, ("f1", "f2", "g1", "g2", "g3", "g4", "g5"))
    minus_k = [2, 2, -1, -1, -1, -1, -1]
    assert lattice.pair(minus_k, minus_k) == 3
    out = []
    for a in range(-1, 4):
        for b in range(-1, 4):
            for cs in itertools.product(range(-2, 3), repeat=5):
                v = [a, b] + list(cs)
                if lattice.pair(v, v) == -1 and lattice.pair(v, minus_k) == 1:
                    out.append(tuple(v))
    return sorted(out)


def selfmap_degree(quadric: Surface, g: FiniteGroup,
                   orbit_k1: list[ProjPoint], orbit_k2: list[ProjPoint],
                   d10: FiniteGroup) -> dict:
    """Degree of the composite self-map on the common resolution lattice.

    The resolution blows up both length-5 orbits on the quadric; the two
    pullbacks of the degree-5 anticanonical class pair to 50, so the composite
    acts on the anticanonical system with degree 10 > 1: not biregular.
    """
    if set(orbit_k1) & set(orbit_k2):
        raise OrbitsNotDisjoint("the two length-5 orbits intersect")
    rank = 12
    gram = [[0] * rank for _ in range(rank)]
    gram[0][1] = gram[1][0] = 1
    for i in range(2, rank):
        gram[i][i] = -1
    labels = ("f1", "f2") + tuple(f"g{i}" for i in range(1, 6)) + tuple(f"g'{i}" for i in range(1, 6))
    lattice = IntLattice.from_gram(gram, labels)
    _, rulings = _ruling_data(quadric)
    first_line = rulings[0]["line"]
    partition = [0 if (r is rulings[0] or not first_line.meets(r["line"])) else 1
                 for r in rulings]
    actions = []
    swap_flags = []
    for gen in g.generators:
        # does the generator preserve the two ruling families?
        images = []
        for r in rulings:
            img = line_through(gen.apply_point(length4_orbit_points()[r["points"][0]]),
                               gen.apply_point(length4_orbit_points()[r["points"][1]]))
            images.append(img)
        img_partition = [0 if (img == rulings[0]["line"] or not rulings[0]["line"].meets(img)) else 1
                         for img in images]
        swaps = img_partition != partition
        in_d10 = gen in d10
        if swaps == in_d10:
            raise InconsistentIncidence(
                "ruling swap disagrees with membership in the index-2 subgroup"
            )
        tau1 = [orbit_k1.index(gen.apply_point(p)) for p in orbit_k1]
        tau2 = [orbit_k2.index(gen.apply_point(p)) for p in orbit_k2]
        m = [[0] * rank for _ in range(rank)]
        if swaps:
            m[0][1] = m[1][0] = 1
        else:
            m[0][0] = m[1][1] = 1
        for i, j in enumerate(tau1):
            m[2 + j][2 + i] = 1
        for i, j in enumerate(tau2):
            m[7 + j][7 + i] = 1
        actions.append(tuple(tuple(row) for row in m))
        swap_flags.append(swaps)
    minus_k_res = (2, 2) + (-1,) * 10
    pic = PicardLattice(lattice, minus_k_res, (), tuple(actions),
                        tuple(gen.to_cycles() for gen in g.generators))
    pic.check_action_invariants()
    # E-classes over each orbit: the unique pair f_a + 2 f_b - sum(g)
    e_block = [(1, 2, -1, -1, -1, -1, -1, 0, 0, 0, 0, 0),
               (2, 1, -1, -1, -1, -1, -1, 0, 0, 0, 0, 0)]
    for v in e_block:
        assert lattice.pair(v, v) == -1
    for m, swaps in zip(actions, swap_flags):
        imgs = {apply_matrix(m, v) for v in e_block}
        assert imgs == set(e_block), "E-classes must form a size-2 orbit in the lattice"
    minus_k_cubic_left = (2, 2, -1, -1, -1, -1, -1, 0, 0, 0, 0, 0)
    left = tuple(
        k + e_block[0][i] + e_block[1][i]
        for i, k in enumerate(minus_k_cubic_left)
    )
    assert left == (5, 5, -3, -3, -3, -3, -3, 0, 0, 0, 0, 0)
    right = (5, 5, 0, 0, 0, 0, 0, -3, -3, -3, -3, -3)
    pairing = lattice.pair(left, right)
    identity_pairing = lattice.pair(left, left)
    if pairing % 5 != 0:
        raise RelationFailed("pairing must be divisible by the degree 5")
    degree = pairing // 5
    for m in actions:
        if apply_matrix(m, left) != left or apply_matrix(m, right) != right:
            raise RelationFailed("pullback classes must be fixed by the group action")
        # block embeddings commute with the action: the (f, g) block is preserved
        for row in range(2, 7):
            if any(m[row][col] for col in range(7, 12)):
                raise RelationFailed("action mixes the two exceptional blocks")
    return {
        "lattice": lattice.serialize(),
        "left_pullback": [str(x) for x in left],
        "right_pullback": [str(x) for x in right],
        "pairing": pairing,
        "degree": degree,
        "identity_pairing": identity_pairing,
        "identity_degree": identity_pairing // 5,
        "non_biregular": degree > 1,
        "ruling_swap_by_generator": {
            gen.to_cycles(): bool(flag)
            for gen, flag in zip(g.generators, swap_flags)
        },
        "orbit_assignment_note": "blowing up K2 first instead of K1 gives the mirror "
                                 "certificate; the two assignments differ by the "
                                 "normalizer involution exchanging the orbits",
    }
