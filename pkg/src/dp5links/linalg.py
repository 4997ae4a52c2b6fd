"""Exact dense linear algebra over Q(zeta_20) and integer-lattice routines.

Matrices here are tiny (at most 12x12), so everything is fraction-preserving
Gaussian elimination with first-nonzero pivoting: deterministic, no pivot
heuristics.  Integer lattice work (kernels, saturation, orthogonal
complements) goes through Smith normal form with arbitrary-precision ints.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cyclo import FieldElement, ONE, ZERO, root_of_unity

Vector = list[FieldElement]
Grid = list[Vector]


class UnsupportedEigenvalue(ValueError):
    """Eigenvalue is a root of unity that does not lie in Q(zeta_20)."""


class DependentClasses(ValueError):
    """Input classes were expected to be linearly independent."""


@dataclass(frozen=True)
class MatrixK:
    """Rectangular matrix over K, entries row-major."""

    rows: int
    cols: int
    entries: tuple[FieldElement, ...]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[FieldElement]]) -> "MatrixK":
        r = len(rows)
        c = len(rows[0]) if r else 0
        flat = []
        for row in rows:
            if len(row) != c:
                raise ValueError("ragged matrix")
            flat.extend(row)
        return MatrixK(r, c, tuple(flat))

    def row(self, i: int) -> Vector:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def to_grid(self) -> Grid:
        return [self.row(i) for i in range(self.rows)]

    def serialize(self) -> list[list[list[str]]]:
        return [[e.serialize() for e in self.row(i)] for i in range(self.rows)]


def _as_grid(m) -> Grid:
    if isinstance(m, MatrixK):
        return m.to_grid()
    return [list(row) for row in m]


# -- elimination over K -----------------------------------------------------

def rref(m) -> tuple[Grid, list[int]]:
    """Reduced row echelon form and pivot column indices.

    Pivoting takes the first row with a nonzero entry in the current column;
    exact arithmetic makes this deterministic and safe.
    """
    a = _as_grid(m)
    if not a:
        return [], []
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, nrows) if not a[i][c].is_zero()), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def rank(m) -> int:
    return len(rref(m)[1])


def kernel_basis(m) -> list[Vector]:
    """Basis of the right kernel; empty list iff the matrix is injective."""
    a = _as_grid(m)
    if not a:
        return []
    ncols = len(a[0])
    red, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for i, p in enumerate(pivots):
            v[p] = -red[i][f]
        basis.append(v)
    return basis


def solve(a, b: Sequence[FieldElement]) -> Vector | None:
    """One solution of A x = b, or None if inconsistent."""
    grid = _as_grid(a)
    nrows = len(grid)
    ncols = len(grid[0]) if nrows else 0
    aug = [row + [bv] for row, bv in zip(grid, b)]
    red, pivots = rref(aug)
    for i in range(len(pivots)):
        if pivots[i] == ncols:
            return None
    x = [ZERO] * ncols
    for i, p in enumerate(pivots):
        x[p] = red[i][ncols]
    return x


def mat_mul(a, b) -> Grid:
    ga, gb = _as_grid(a), _as_grid(b)
    n, k = len(ga), len(gb)
    m = len(gb[0]) if k else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = ZERO
            for t in range(k):
                if not ga[i][t].is_zero() and not gb[t][j].is_zero():
                    s = s + ga[i][t] * gb[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(a, v: Sequence[FieldElement]) -> Vector:
    return [col[0] for col in mat_mul(a, [[x] for x in v])]


def identity_grid(n: int) -> Grid:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def transpose(a) -> Grid:
    g = _as_grid(a)
    return [list(col) for col in zip(*g)]


def determinant(a) -> FieldElement:
    g = _as_grid(a)
    n = len(g)
    det = ONE
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if not g[i][c].is_zero()), None)
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            g[c], g[pivot_row] = g[pivot_row], g[c]
            det = -det
        det = det * g[c][c]
        inv = g[c][c].inverse()
        for i in range(c + 1, n):
            if not g[i][c].is_zero():
                f = g[i][c] * inv
                g[i] = [x - f * y for x, y in zip(g[i], g[c])]
    return det


def inverse_grid(a) -> Grid:
    g = _as_grid(a)
    n = len(g)
    aug = [row + ident_row for row, ident_row in zip(g, identity_grid(n))]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in red]


def intersect_spans(basis_a: list[Vector], basis_b: list[Vector]) -> list[Vector]:
    """Basis of the intersection of two row-span subspaces of K^n."""
    if not basis_a or not basis_b:
        return []
    # x in both spans: x = sum u_i a_i = sum v_j b_j; solve [A^T | -B^T] kernel.
    n = len(basis_a[0])
    stacked = [
        [basis_a[i][r] for i in range(len(basis_a))]
        + [-basis_b[j][r] for j in range(len(basis_b))]
        for r in range(n)
    ]
    out = []
    for ker in kernel_basis(stacked):
        coeffs = ker[: len(basis_a)]
        vec = [ZERO] * n
        for c, a_row in zip(coeffs, basis_a):
            if not c.is_zero():
                vec = [x + c * y for x, y in zip(vec, a_row)]
        if any(not x.is_zero() for x in vec):
            out.append(vec)
    red, pivots = rref(out) if out else ([], [])
    return [red[i] for i in range(len(pivots))]


# -- permutation eigenspaces -------------------------------------------------

def permutation_matrix(images: Sequence[int]) -> Grid:
    """Matrix P with P e_j = e_{images[j]} (columns permuted onto rows)."""
    n = len(images)
    return [
        [ONE if images[j] == i else ZERO for j in range(n)]
        for i in range(n)
    ]


def _permutation_images(p) -> list[int]:
    if hasattr(p, "images"):
        return list(p.images)
    return list(p)


def _cycle_lengths(images: Sequence[int]) -> list[int]:
    seen = [False] * len(images)
    out = []
    for start in range(len(images)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = images[j]
            length += 1
        out.append(length)
    return out


def eigenspaces_of_permutation(p) -> dict[FieldElement, list[Vector]]:
    """Eigenvalue -> kernel basis for a coordinate permutation matrix.

    Candidate eigenvalues are m-th roots of unity for the cycle lengths m of
    the permutation.  Cycle lengths divisible by 3 would need cube roots of
    unity, which do not lie in Q(zeta_20).
    """
    images = _permutation_images(p)
    n = len(images)
    lengths = _cycle_lengths(images)
    if any(m % 3 == 0 for m in lengths):
        raise UnsupportedEigenvalue(
            "cycle of length divisible by 3: primitive cube roots of unity "
            "are not elements of Q(zeta_20)"
        )
    candidates: list[FieldElement] = []
    for m in sorted(set(lengths)):
        for j in range(m):
            lam = root_of_unity(m, j)
            if lam not in candidates:
                candidates.append(lam)
    mat = permutation_matrix(images)
    spaces: dict[FieldElement, list[Vector]] = {}
    total = 0
    for lam in candidates:
        shifted = [
            [mat[i][j] - (lam if i == j else ZERO) for j in range(n)]
            for i in range(n)
        ]
        ker = kernel_basis(shifted)
        if ker:
            spaces[lam] = ker
            total += len(ker)
    assert total == n, "eigenspace dimensions must sum to the matrix size"
    return spaces


# -- integer lattices ---------------------------------------------------------

IntGrid = list[list[int]]


@dataclass(frozen=True)
class IntLattice:
    """Free abelian group with an integer symmetric pairing."""

    rank: int
    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        g = self.gram
        if len(g) != self.rank or any(len(r) != self.rank for r in g):
            raise ValueError("gram matrix shape mismatch")
        for i in range(self.rank):
            for j in range(self.rank):
                if g[i][j] != g[j][i]:
                    raise ValueError("gram matrix not symmetric")
        if len(self.labels) != self.rank:
            raise ValueError("label count mismatch")

    @staticmethod
    def from_gram(gram: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> "IntLattice":
        n = len(gram)
        if labels is None:
            labels = [f"b{i}" for i in range(n)]
        return IntLattice(n, tuple(tuple(int(x) for x in row) for row in gram), tuple(labels))

    def pair(self, u: Sequence[int], v: Sequence[int]) -> int:
        return sum(u[i] * self.gram[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def serialize(self) -> dict:
        return {
            "rank": self.rank,
            "gram": [[str(x) for x in row] for row in self.gram],
            "labels": list(self.labels),
        }

    @staticmethod
    def deserialize(data: dict) -> "IntLattice":
        return IntLattice.from_gram(
            [[int(x) for x in row] for row in data["gram"]],
            data["labels"],
        )


def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[IntGrid, IntGrid, IntGrid]:
    """U, D, V with U m V = D diagonal, U and V unimodular."""
    a: IntGrid = [[int(x) for x in row] for row in m]
    nr = len(a)
    nc = len(a[0]) if nr else 0
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_op(i, j, f):  # row_i -= f * row_j
        a[i] = [x - f * y for x, y in zip(a[i], a[j])]
        u[i] = [x - f * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, f):  # col_i -= f * col_j
        for row in a:
            row[i] -= f * row[j]
        for row in v:
            row[i] -= f * row[j]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(nr, nc):
        # find nonzero pivot
        pivot = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            # clear column t with row ops
            done = True
            for i in range(t + 1, nr):
                if a[i][t] != 0:
                    if a[i][t] % a[t][t] == 0:
                        row_op(i, t, a[i][t] // a[t][t])
                    else:
                        q = a[i][t] // a[t][t]
                        row_op(i, t, q)
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, nc):
                if a[t][j] != 0:
                    if a[t][j] % a[t][t] == 0:
                        col_op(j, t, a[t][j] // a[t][t])
                    else:
                        q = a[t][j] // a[t][t]
                        col_op(j, t, q)
                        swap_cols(t, j)
                        done = False
            if done and all(a[i][t] == 0 for i in range(t + 1, nr)) and all(
                a[t][j] == 0 for j in range(t + 1, nc)
            ):
                break
        t += 1
    # normalize signs and enforce divisibility chain
    for i in range(min(nr, nc)):
        if a[i][i] < 0:
            for j in range(nc):
                a[i][j] = -a[i][j]
            for j in range(nr):
                u[i][j] = -u[i][j]
    changed = True
    while changed:
        changed = False
        for i in range(min(nr, nc) - 1):
            d1, d2 = a[i][i], a[i + 1][i + 1]
            if d1 and d2 and d2 % d1 != 0:
                # standard fixup: fold the pair to (gcd, lcm)
                col_op(i, i + 1, -1)
                for _ in range(64):
                    if a[i + 1][i] == 0 and a[i][i + 1] == 0:
                        break
                    if a[i + 1][i] != 0:
                        q = a[i + 1][i] // a[i][i] if a[i][i] else 0
                        if a[i][i] and a[i + 1][i] % a[i][i] == 0:
                            row_op(i + 1, i, q)
                        else:
                            row_op(i + 1, i, q)
                            swap_rows(i, i + 1)
                    if a[i][i + 1] != 0:
                        q = a[i][i + 1] // a[i][i] if a[i][i] else 0
                        if a[i][i] and a[i][i + 1] % a[i][i] == 0:
                            col_op(i + 1, i, q)
                        else:
                            col_op(i + 1, i, q)
                            swap_cols(i, i + 1)
                if a[i][i] < 0:
                    for j in range(nc):
                        a[i][j] = -a[i][j]
                    for j in range(nr):
                        u[i][j] = -u[i][j]
                if a[i + 1][i + 1] < 0:
                    for j in range(nc):
                        a[i + 1][j] = -a[i + 1][j]
                    for j in range(nr):
                        u[i + 1][j] = -u[i + 1][j]
                changed = True
    return u, a, v


def int_kernel(m: Sequence[Sequence[int]]) -> IntGrid:
    """Saturated basis of {x : m x = 0} over Z (columns of V past the rank)."""
    if not m:
        return []
    nc = len(m[0])
    _, d, v = smith_normal_form(m)
    r = sum(1 for i in range(min(len(d), nc)) if i < len(d) and d[i][i] != 0)
    return [[v[row][col] for row in range(nc)] for col in range(r, nc)]


def int_rank(m: Sequence[Sequence[int]]) -> int:
    if not m:
        return 0
    _, d, _ = smith_normal_form(m)
    return sum(1 for i in range(min(len(d), len(d[0]))) if d[i][i] != 0)


def orthogonal_complement(
    lattice: IntLattice, classes: Sequence[Sequence[int]], labels: Sequence[str] | None = None
) -> tuple[IntLattice, IntGrid]:
    """Saturated sublattice orthogonal to the given classes, with induced gram.

    Returns the complement lattice and its basis written in ambient
    coordinates (one row per basis vector).
    """
    classes = [list(map(int, c)) for c in classes]
    if classes and int_rank(classes) < len(classes):
        raise DependentClasses("input classes are linearly dependent")
    pairing_rows = [
        [sum(c[i] * lattice.gram[i][j] for i in range(lattice.rank)) for j in range(lattice.rank)]
        for c in classes
    ]
    basis = int_kernel(pairing_rows) if pairing_rows else [
        [1 if i == j else 0 for j in range(lattice.rank)] for i in range(lattice.rank)
    ]
    gram = [[lattice.pair(u, v) for v in basis] for u in basis]
    if labels is None:
        labels = [f"c{i}" for i in range(len(basis))]
    return IntLattice.from_gram(gram, labels), basis


def coordinates_in_basis(basis: Sequence[Sequence[int]], vector: Sequence[int]) -> list[int] | None:
    """Integer coordinates of vector in the given saturated basis, else None."""
    cols = [[Fraction(b[i]) for b in basis] for i in range(len(vector))]
    sol = _solve_rational(cols, [Fraction(x) for x in vector])
    if sol is None:
        return None
    if any(s.denominator != 1 for s in sol):
        return None
    return [int(s) for s in sol]


def _solve_rational(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [row[:] + [bv] for row, bv in zip(a, b)]
    r = 0
    pivots = []
    for c in range(ncols + 1):
        pr = next((i for i in range(r, nrows) if aug[i][c] != 0), None)
        if pr is None:
            continue
        if c == ncols:
            return None
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    x = [Fraction(0)] * ncols
    for i, p in enumerate(pivots):
        x[p] = aug[i][ncols]
    return x


def hyperbolic_basis(lattice: IntLattice, positive_against: Sequence[int] | None = None
                     ) -> tuple[list[int], list[int]] | None:
    """Isotropic vectors u, v with <u,v> = 1 in a rank-2 lattice, if any.

    When positive_against is given, both returned vectors pair positively
    with it (fixes the sign ambiguity; the swap ambiguity remains).
    """
    if lattice.rank != 2:
        raise ValueError("hyperbolic reduction expects a rank-2 lattice")
    bound = 12
    isotropic = []
    for a, b in itertools.product(range(-bound, bound + 1), repeat=2):
        if (a, b) == (0, 0):
            continue
        v = [a, b]
        if lattice.pair(v, v) == 0:
            from math import gcd
            if gcd(a, b) == 1:
                isotropic.append(v)
    for u in isotropic:
        for v in isotropic:
            if lattice.pair(u, v) == 1:
                if positive_against is not None:
                    if lattice.pair(u, positive_against) <= 0 or lattice.pair(v, positive_against) <= 0:
                        continue
                return u, v
    return None
