import random

import pytest

from dp5links.cyclo import I_UNIT, ONE, ZERO, ZETA5, rational
from dp5links.groups import Permutation
from dp5links.linalg import (
    DependentClasses,
    IntLattice,
    MatrixK,
    UnsupportedEigenvalue,
    coordinates_in_basis,
    determinant,
    eigenspaces_of_permutation,
    hyperbolic_basis,
    int_kernel,
    int_rank,
    intersect_spans,
    inverse_grid,
    kernel_basis,
    orthogonal_complement,
    permutation_matrix,
    rank,
    smith_normal_form,
)

CUBIC_GRAM = [
    [1, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0],
    [0, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 0, -1, 0],
    [0, 0, 0, 0, 0, 0, -1],
]


def unit(i, n=7):
    return [1 if j == i else 0 for j in range(n)]


def test_kernel_of_shifted_five_cycle_is_the_stated_eigenvector():
    p = permutation_matrix([1, 2, 3, 4, 0])
    shifted = [[p[i][j] - (ZETA5 if i == j else ZERO) for j in range(5)] for i in range(5)]
    ker = kernel_basis(shifted)
    assert len(ker) == 1
    expected = [ONE, ZETA5 ** 4, ZETA5 ** 3, ZETA5 ** 2, ZETA5]
    scale = ker[0][0] / expected[0]
    assert all(a == scale * b for a, b in zip(ker[0], expected))


def test_kernel_of_zero_and_invertible_matrices():
    zero = [[ZERO] * 5 for _ in range(5)]
    assert len(kernel_basis(zero)) == 5
    invertible = [[rational(1 if i == j else 0) + (rational(1) if j == i + 1 else ZERO)
                   for j in range(4)] for i in range(4)]
    assert kernel_basis(invertible) == []


def test_rank_plus_nullity_on_random_matrices():
    rnd = random.Random(7)
    for _ in range(50):
        rows, cols = rnd.randint(1, 5), rnd.randint(1, 5)
        m = [[rational(rnd.randint(-3, 3)) + ZETA5 * rnd.randint(-1, 1)
              for _ in range(cols)] for _ in range(rows)]
        assert rank(m) + len(kernel_basis(m)) == cols


def test_eigenspaces_five_cycle_and_four_cycle():
    spaces = eigenspaces_of_permutation(Permutation.from_cycles("(12345)"))
    assert len(spaces) == 5
    assert all(len(v) == 1 for v in spaces.values())
    eigenvalues = {tuple(lam.coeffs) for lam in spaces}
    assert eigenvalues == {tuple((ZETA5 ** k).coeffs) for k in range(5)}

    spaces4 = eigenspaces_of_permutation(Permutation.from_cycles("(2354)"))
    dims = {}
    for lam, basis in spaces4.items():
        dims[lam] = len(basis)
    assert dims[ONE] == 2
    assert dims[I_UNIT] == 1 and dims[-ONE] == 1 and dims[-I_UNIT] == 1


def test_eigenspaces_identity_and_unsupported_order_three():
    spaces = eigenspaces_of_permutation(Permutation.identity())
    assert list(spaces) == [ONE] and len(spaces[ONE]) == 5
    with pytest.raises(UnsupportedEigenvalue):
        eigenspaces_of_permutation(Permutation.from_cycles("(123)"))
    with pytest.raises(UnsupportedEigenvalue):
        eigenspaces_of_permutation(Permutation.from_cycles("(123)(45)"))


def test_eigenspace_dimensions_match_cycle_structure():
    rnd = random.Random(3)
    for _ in range(30):
        images = list(range(5))
        rnd.shuffle(images)
        p = Permutation(tuple(images))
        lengths = []
        seen = set()
        for s in range(5):
            if s in seen:
                continue
            n, j = 0, s
            while j not in seen:
                seen.add(j)
                j = images[j]
                n += 1
            lengths.append(n)
        if any(m % 3 == 0 for m in lengths):
            with pytest.raises(UnsupportedEigenvalue):
                eigenspaces_of_permutation(p)
            continue
        spaces = eigenspaces_of_permutation(p)
        assert sum(len(v) for v in spaces.values()) == 5
        # multiplicity of eigenvalue 1 is the number of cycles
        assert len(spaces[ONE]) == len(lengths)


def test_smith_normal_form_properties():
    rnd = random.Random(12)
    for _ in range(40):
        nr, nc = rnd.randint(1, 5), rnd.randint(1, 5)
        m = [[rnd.randint(-8, 8) for _ in range(nc)] for _ in range(nr)]
        u, d, v = smith_normal_form(m)

        def mm(a, b):
            return [[sum(a[i][k] * b[k][j] for k in range(len(b)))
                     for j in range(len(b[0]))] for i in range(len(a))]

        assert mm(mm(u, m), v) == d
        for i in range(len(d)):
            for j in range(len(d[0])):
                if i != j:
                    assert d[i][j] == 0
        diag = [d[i][i] for i in range(min(nr, nc))]
        for a, b in zip(diag, diag[1:]):
            if a and b:
                assert b % a == 0
        # unimodularity via exact rational determinant
        for sq in (u, v):
            g = [[rational(x) for x in row] for row in sq]
            assert determinant(g).as_rational() in (1, -1)
        for k in int_kernel(m):
            assert all(sum(m[i][j] * k[j] for j in range(nc)) == 0 for i in range(nr))


def test_orthogonal_complement_rank_counts():
    lat = IntLattice.from_gram(CUBIC_GRAM)
    comp2, _ = orthogonal_complement(lat, [unit(1), unit(2)])
    assert comp2.rank == 5
    comp0, _ = orthogonal_complement(lat, [unit(i) for i in range(7)])
    assert comp0.rank == 0
    with pytest.raises(DependentClasses):
        orthogonal_complement(lat, [unit(1), [0, 2, 0, 0, 0, 0, 0]])


def test_orthogonal_complement_of_quintuple_is_hyperbolic():
    # e1..e4 and h - e5 - e6: five disjoint (-1)-classes in the cubic lattice
    classes = [unit(1), unit(2), unit(3), unit(4), [1, 0, 0, 0, 0, -1, -1]]
    lat = IntLattice.from_gram(CUBIC_GRAM)
    comp, basis = orthogonal_complement(lat, classes)
    assert comp.rank == 2
    minus_k = [3, -1, -1, -1, -1, -1, -1]
    shifted = [k + sum(c[i] for c in classes) for i, k in enumerate(minus_k)]
    coords = coordinates_in_basis(basis, shifted)
    assert coords is not None
    assert comp.pair(coords, coords) == 8
    hb = hyperbolic_basis(comp, positive_against=coords)
    assert hb is not None
    f1, f2 = hb
    assert comp.pair(f1, f1) == 0 and comp.pair(f2, f2) == 0 and comp.pair(f1, f2) == 1


def test_complement_of_complement_restores_the_span():
    lat = IntLattice.from_gram(CUBIC_GRAM)
    rnd = random.Random(9)
    for _ in range(20):
        k = rnd.randint(1, 3)
        vs = []
        while int_rank(vs) < k:
            vs = [[rnd.randint(-2, 2) for _ in range(7)] for _ in range(k)]
        comp, basis = orthogonal_complement(lat, vs)
        comp2, basis2 = orthogonal_complement(lat, basis)
        assert comp2.rank == k
        assert int_rank(basis2 + vs) == k  # same span over Q


def test_gram_of_complement_is_restriction():
    lat = IntLattice.from_gram(CUBIC_GRAM)
    comp, basis = orthogonal_complement(lat, [unit(1)])
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            assert comp.gram[i][j] == lat.pair(u, v)


def test_intlattice_serialization_round_trip():
    lat = IntLattice.from_gram([[0, 1], [1, 0]], ["f1", "f2"])
    data = lat.serialize()
    assert data == {"rank": 2, "gram": [["0", "1"], ["1", "0"]], "labels": ["f1", "f2"]}
    assert IntLattice.deserialize(data) == lat
    with pytest.raises(ValueError):
        IntLattice.from_gram([[0, 1], [2, 0]])


def test_matrixk_round_trip_and_inverse():
    m = MatrixK.from_rows([[ONE, ZETA5], [ZERO, ONE]])
    grid = m.to_grid()
    inv = inverse_grid(grid)
    prod = [[sum((grid[i][k] * inv[k][j] for k in range(2)), ZERO) for j in range(2)]
            for i in range(2)]
    assert prod == [[ONE, ZERO], [ZERO, ONE]]


def test_intersect_spans():
    a = [[ONE, ZERO, ZERO], [ZERO, ONE, ZERO]]
    b = [[ZERO, ONE, ZERO], [ZERO, ZERO, ONE]]
    meet = intersect_spans(a, b)
    assert len(meet) == 1
    assert meet[0][0].is_zero() and not meet[0][1].is_zero() and meet[0][2].is_zero()
