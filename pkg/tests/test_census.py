import itertools

import pytest

from dp5links.census import (
    DuplicatePoints,
    EnumerationIncomplete,
    PositiveDimensionalFixedLocus,
    Surface,
    UnsupportedShape,
    general_position_on_quadric,
    induced_line_permutation,
    length4_orbit_points,
    line_orbits,
    lines27,
    orbit_census,
    smoothness_check,
)
from dp5links.cyclo import I_UNIT, ONE, rational
from dp5links.groups import fixed_locus, orbit_and_stabilizer, subgroups_of_order
from dp5links.projgeo import (
    HomogeneousForm,
    ProjPoint,
    line_in_surface,
    membership,
    power_sum_form,
)


def test_clebsch_census_lengths(clebsch_census):
    lengths = {r: len(v) for r, v in clebsch_census.orbits_by_length.items()}
    assert lengths == {4: 1, 5: 3}


def test_quadric_census_lengths(quadric_census):
    lengths = {r: len(v) for r, v in quadric_census.orbits_by_length.items()}
    assert lengths == {4: 1, 5: 2}


def test_census_with_low_bound_is_empty(clebsch, g20):
    assert orbit_census(clebsch, g20, 4).orbits_by_length == {}


def test_census_rejects_bound_above_group_order(clebsch, g20):
    with pytest.raises(ValueError):
        orbit_census(clebsch, g20, 21)


def test_census_positive_dimensional_guard(clebsch, g20):
    # bound 11 reaches stabilizer order 2, whose fixed locus has positive
    # dimension in the hyperplane
    with pytest.raises(PositiveDimensionalFixedLocus):
        orbit_census(clebsch, g20, 11)
    relaxed = orbit_census(clebsch, g20, 11, strict=False)
    assert relaxed.incidents
    lengths = {r: len(v) for r, v in relaxed.orbits_by_length.items()}
    assert lengths[4] == 1 and lengths[5] == 3


def test_census_orbits_lie_on_surface_and_lengths_divide(clebsch_census, clebsch, g20):
    for r, orbits in clebsch_census.orbits_by_length.items():
        assert g20.order() % r == 0
        for orbit in orbits:
            assert len(orbit) == r
            for p in orbit:
                assert clebsch.contains(p)


def test_census_orbits_are_pairwise_disjoint_and_stable(clebsch_census, g20):
    all_orbits = [orbit for orbits in clebsch_census.orbits_by_length.values()
                  for orbit in orbits]
    for a, b in itertools.combinations(all_orbits, 2):
        assert not (set(a) & set(b))
    for orbit in all_orbits:
        pts = set(orbit)
        for el in g20.generators:
            assert {el.apply_point(p) for p in pts} == pts


def test_census_completeness_against_raw_fixed_loci(clebsch, clebsch_census, g20):
    """Union of census orbits = all surface points with stabilizer order > 20/8."""
    census_points = {p for orbits in clebsch_census.orbits_by_length.values()
                     for orbit in orbits for p in orbit}
    raw = set()
    for q in (4, 5, 10, 20):
        for cls in subgroups_of_order(g20, q):
            for h in cls:
                for comp in fixed_locus(h, restrict_to_hyperplane=True):
                    if comp.projective_dimension != 0:
                        continue
                    p = comp.point()
                    if not clebsch.contains(p):
                        continue
                    _, stab = orbit_and_stabilizer(g20, p)
                    if stab.order() > 20 // 8:
                        raw.add(p)
    assert raw == census_points


def test_lines27_basics(cfg, clebsch):
    assert len(cfg.lines) == 27
    assert len(set(cfg.lines)) == 27
    assert all(sum(row) == 10 for row in cfg.incidence)
    for i in range(27):
        for j in range(27):
            assert cfg.incidence[i][j] == cfg.incidence[j][i]
        assert cfg.incidence[i][i] == 0
    for line in cfg.lines:
        assert line_in_surface(line, clebsch.form)
        assert line_in_surface(line, clebsch.hyperplane)
    assert cfg.tags.count("coordinate") == 15
    assert cfg.tags.count("pair-line") == 2
    assert cfg.tags.count("residuation") == 10


def test_lines27_group_action_closes(cfg, g20):
    for el in g20.elements:
        perm = induced_line_permutation(cfg, el)
        assert sorted(perm) == list(range(27))


def test_line_orbit_sizes(cfg, g20):
    sizes = sorted(len(o) for o in line_orbits(cfg, g20))
    assert sizes == [2, 5, 10, 10]
    assert sum(sizes) == 27
    assert all(20 % s == 0 for s in sizes)


def test_skew_families(families, cfg):
    maximal = [f for f in families if f.maximal]
    assert sorted(f.size() for f in maximal) == [2, 5]
    by_size = {f.size(): f for f in maximal}
    assert list(by_size[2].labels) == ["E1", "E2"]
    assert list(by_size[5].labels) == ["L1", "L2", "L3", "L4", "L5"]
    # E1.E2 = 0 and each E meets each L exactly once
    e1, e2 = cfg.labels.index("E1"), cfg.labels.index("E2")
    assert cfg.incidence[e1][e2] == 0
    for k in range(1, 6):
        lk = cfg.labels.index(f"L{k}")
        assert cfg.incidence[e1][lk] == 1
        assert cfg.incidence[e2][lk] == 1


def test_lines27_closure_failure_reports():
    # x0^3 + x1^3 + x2^3 + x3^3 + 2 x4^3: only three coordinate lines survive,
    # they are coplanar, and residuation cannot escape the plane
    terms = {tuple(3 if i == j else 0 for i in range(5)): (rational(2) if j == 4 else ONE)
             for j in range(5)}
    lopsided = Surface("lopsided", power_sum_form(5, 1), HomogeneousForm.of(5, 3, terms))
    with pytest.raises(EnumerationIncomplete):
        lines27(lopsided)


def test_general_position_of_k1(quadric, quadric_census):
    k1 = list(quadric_census.orbits_by_length[5][0])
    cert = general_position_on_quadric(k1, quadric)
    assert cert["pass"]
    assert cert["pair_violations"] == []
    assert cert["coplanar_violations"] == []


def test_general_position_fails_for_length4_orbit(quadric):
    cert = general_position_on_quadric(length4_orbit_points(), quadric)
    assert not cert["pass"]
    assert len(cert["pair_violations"]) == 4  # the four rulings
    assert cert["coplanar_violations"] == []


def test_general_position_detects_coplanar_points(quadric):
    i = I_UNIT
    coplanar = [
        ProjPoint.of([0, ONE, i, -ONE, -i]),
        ProjPoint.of([0, ONE, -i, -ONE, i]),
        ProjPoint.of([0, ONE, -ONE, i, -i]),
        ProjPoint.of([0, ONE, -ONE, -i, i]),
    ]
    for p in coplanar:
        assert membership(p, [quadric.hyperplane, quadric.form])
    cert = general_position_on_quadric(coplanar, quadric)
    assert not cert["pass"]
    assert cert["coplanar_violations"] == [[0, 1, 2, 3]]


def test_general_position_rejects_duplicates(quadric):
    p = length4_orbit_points()[0]
    with pytest.raises(DuplicatePoints):
        general_position_on_quadric([p, p], quadric)


def test_smoothness_certificates(clebsch, quadric):
    cert = smoothness_check(clebsch)
    assert cert["smooth"]
    assert cert["norm"][0] == "-1215/1"
    assert sorted(cert["sign_pattern_sums"]) == sorted(
        [5] + [3] * 4 + [1] * 6 + [-1] * 4 + [-3]
    )
    cert_q = smoothness_check(quadric)
    assert cert_q["smooth"] and cert_q["rank"] == 4


def test_smoothness_detects_singular_diagonal_cubic():
    # x0^3+x1^3+x2^3+4x3^3+4x4^3 is singular at (1:-1:-1:1/2:1/2)
    coeffs = [1, 1, 1, 4, 4]
    terms = {tuple(3 if i == j else 0 for i in range(5)): rational(coeffs[j])
             for j in range(5)}
    singular = Surface("singular-cubic", power_sum_form(5, 1),
                       HomogeneousForm.of(5, 3, terms))
    cert = smoothness_check(singular)
    assert not cert["smooth"]
    witness = ProjPoint.of([rational(1), rational(-1), rational(-1),
                            rational(1) / 2, rational(1) / 2])
    assert membership(witness, [singular.hyperplane, singular.form])


def test_smoothness_unsupported_shapes():
    quartic = Surface("quartic", power_sum_form(5, 1), power_sum_form(5, 4))
    with pytest.raises(UnsupportedShape):
        smoothness_check(quartic)
    mixed = HomogeneousForm.of(5, 3, {(2, 1, 0, 0, 0): ONE, (0, 0, 3, 0, 0): ONE})
    with pytest.raises(UnsupportedShape):
        smoothness_check(Surface("mixed", power_sum_form(5, 1), mixed))


def test_length4_orbit_lies_on_both_surfaces(clebsch, quadric):
    for p in length4_orbit_points():
        assert clebsch.contains(p)
        assert quadric.contains(p)
