import random

import pytest

from dp5links.cyclo import I_UNIT, ONE, ZERO, ZETA5
from dp5links.groups import (
    Permutation,
    conjugate_subgroup,
    fixed_locus,
    group_from_cycles,
    orbit_and_stabilizer,
    standard_groups,
    subgroup_closure,
    subgroups_of_order,
)
from dp5links.projgeo import ProjPoint


def test_cycle_notation_round_trips():
    assert Permutation.from_cycles("(12345)").images == (1, 2, 3, 4, 0)
    assert Permutation.from_cycles("(2354)").images == (0, 2, 4, 1, 3)
    assert Permutation.from_cycles("(25)(34)").to_cycles() == "(25)(34)"
    assert Permutation.identity().to_cycles() == "()"
    assert Permutation.from_cycles("()") == Permutation.identity()
    with pytest.raises(ValueError):
        Permutation.from_cycles("(11)")


def test_composition_applies_right_factor_first():
    a = Permutation.from_cycles("(12)")
    b = Permutation.from_cycles("(23)")
    assert (a * b).to_cycles() == "(123)"
    assert (b * a).to_cycles() == "(132)"


def test_closure_orders():
    assert group_from_cycles("(12345)", "(2354)").order() == 20
    assert group_from_cycles("(12345)", "(25)(34)").order() == 10
    assert subgroup_closure([]).order() == 1
    gs = standard_groups()
    assert gs["S5"].order() == 120
    assert all(gs["G20"].order() % h.order() == 0 for h in (gs["C4"], gs["C5"], gs["D10"]))


def test_subgroups_of_g20_by_order():
    g20 = standard_groups()["G20"]
    by4 = subgroups_of_order(g20, 4)
    assert len(by4) == 1 and len(by4[0]) == 5  # one conjugacy class of five C4s
    by5 = subgroups_of_order(g20, 5)
    assert len(by5) == 1 and len(by5[0]) == 1
    assert subgroups_of_order(g20, 3) == []
    nonempty = [n for n in range(1, 21) if subgroups_of_order(g20, n)]
    assert nonempty == [1, 2, 4, 5, 10, 20]


def test_orbit_and_stabilizer_examples():
    g20 = standard_groups()["G20"]
    p = ProjPoint.of([ZETA5 ** j for j in range(5)])
    orbit, stab = orbit_and_stabilizer(g20, p)
    assert len(orbit) == 4 and stab.order() == 5
    u1 = ProjPoint.of([0, -I_UNIT, -ONE, ONE, I_UNIT])
    orbit, stab = orbit_and_stabilizer(g20, u1)
    assert len(orbit) == 5 and stab.order() == 4
    generic = ProjPoint.of([1, 2, 3, 4, -10])
    orbit, stab = orbit_and_stabilizer(g20, generic)
    assert len(orbit) == 20 and stab.order() == 1


def test_orbit_stabilizer_product_on_random_points():
    g20 = standard_groups()["G20"]
    rnd = random.Random(17)
    for _ in range(20):
        coords = [rnd.randint(-3, 3) for _ in range(5)]
        if all(c == 0 for c in coords):
            coords[0] = 1
        orbit, stab = orbit_and_stabilizer(g20, ProjPoint.of(coords))
        assert len(orbit) * stab.order() == 20


def test_classical_point_lists_come_out_verbatim():
    """Pins the index convention: letter j acts on x_{j-1}, new[p(j)] = old[j]."""
    g20 = standard_groups()["G20"]
    i = I_UNIT
    u_list = [
        [0, -i, -ONE, ONE, i], [i, 0, -i, -ONE, ONE], [ONE, i, 0, -i, -ONE],
        [-ONE, ONE, i, 0, -i], [-i, -ONE, ONE, i, 0],
    ]
    u_points = [ProjPoint.of(c) for c in u_list]
    orbit, _ = orbit_and_stabilizer(g20, u_points[0])
    assert sorted(orbit, key=ProjPoint.sort_key) == sorted(u_points, key=ProjPoint.sort_key)
    # the 5-cycle must shift U_1 to U_2 exactly
    five = Permutation.from_cycles("(12345)")
    assert five.apply_point(u_points[0]) == u_points[1]


def test_fixed_locus_of_the_order4_subgroup_is_r1_to_r4():
    c4 = standard_groups()["C4"]
    comps = fixed_locus(c4, restrict_to_hyperplane=True)
    assert len(comps) == 4
    assert all(c.projective_dimension == 0 for c in comps)
    points = sorted((c.point() for c in comps), key=ProjPoint.sort_key)
    i = I_UNIT
    expected = sorted(
        (ProjPoint.of(c) for c in (
            [0, -1, 1, 1, -1], [0, -i, -ONE, ONE, i], [0, i, -ONE, ONE, -i], [-4, 1, 1, 1, 1],
        )),
        key=ProjPoint.sort_key,
    )
    assert points == expected


def test_fixed_locus_d10_empty_and_trivial_group_full():
    gs = standard_groups()
    assert fixed_locus(gs["D10"], restrict_to_hyperplane=True) == []
    comps = fixed_locus(subgroup_closure([]), restrict_to_hyperplane=True)
    assert len(comps) == 1
    assert comps[0].projective_dimension == 3
    assert comps[0].positive_dimensional


def test_fixed_locus_points_are_genuinely_fixed():
    gs = standard_groups()
    for name in ("C4", "C5"):
        h = gs[name]
        for comp in fixed_locus(h, restrict_to_hyperplane=True):
            vectors = [list(v) for v in comp.basis]
            generic = [sum(col, ZERO) for col in zip(*vectors)]
            for v in vectors + [generic]:
                p = ProjPoint.of(v)
                for gen in h.generators:
                    assert gen.apply_point(p) == p


def test_conjugation_permutes_fixed_loci():
    gs = standard_groups()
    g20, c4 = gs["G20"], gs["C4"]
    base_points = {c.point() for c in fixed_locus(c4, True)}
    for el in g20.elements:
        conj = conjugate_subgroup(el, c4)
        conj_points = {c.point() for c in fixed_locus(conj, True)}
        assert conj_points == {el.apply_point(p) for p in base_points}


def test_unrestricted_fixed_locus_of_five_cycle():
    c5 = standard_groups()["C5"]
    comps = fixed_locus(c5, restrict_to_hyperplane=False)
    assert len(comps) == 5
    assert all(c.projective_dimension == 0 for c in comps)
    restricted = fixed_locus(c5, restrict_to_hyperplane=True)
    assert len(restricted) == 4  # the all-ones eigenvector is cut away


def test_group_serialization():
    g20 = standard_groups()["G20"]
    data = g20.serialize()
    assert data == {"generators": ["(12345)", "(2354)"], "order": 20}
