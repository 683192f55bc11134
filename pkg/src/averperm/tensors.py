"""Tensors, linear maps and bilinear forms over an exact field.

Conventions, fixed once for the whole workbench:

* a space of dimension n has basis e_1..e_n; the dual basis e*_1..e*_n
  satisfies <e*_i, e_j> = delta_ij; direct sums A (+) V order A's basis
  first;
* tau(x (x) y) = y (x) x and xi(x (x) y (x) z) = y (x) z (x) x;
* a 2-tensor r = sum r_ij e_i (x) e_j is identified with the linear map
  r# sending the i-th dual basis vector to sum_j r_ij e_j, so the matrix
  of r# has column i equal to row i of r;
* a bilinear form B is identified with B\\: x -> sum_j B(x, e_j) e*_j,
  and phi_B is the 2-tensor with <phi_B, a* (x) b*> = <B\\^-1(a*), b*>.

Indices are 0-based everywhere in code; the file formats convert to the
1-based convention at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from . import linalg
from .errors import DimensionMismatch, SingularForm, SingularMatrix

Matrix = Tuple[Tuple[object, ...], ...]


def _square(entries, what):
    entries = tuple(tuple(r) for r in entries)
    n = len(entries)
    if any(len(r) != n for r in entries):
        raise DimensionMismatch("%s must be square" % what)
    return entries


@dataclass(frozen=True)
class LinearMap:
    """Matrix of a linear map; column j is the image of e_j."""

    field: object
    entries: Matrix

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(r) for r in self.entries))

    @property
    def dim_out(self):
        return len(self.entries)

    @property
    def dim_in(self):
        return len(self.entries[0]) if self.entries else 0

    def apply(self, vec):
        return linalg.mat_vec(self.entries, vec)

    def compose(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.field, linalg.mat_mul(self.entries, other.entries))

    def is_zero(self):
        return linalg.is_zero_mat(self.entries)


@dataclass(frozen=True)
class Tensor2:
    """r = sum r[i][j] e_i (x) e_j."""

    field: object
    entries: Matrix

    def __post_init__(self):
        object.__setattr__(self, "entries", _square(self.entries, "Tensor2"))

    @property
    def dim(self):
        return len(self.entries)

    def is_zero(self):
        return linalg.is_zero_mat(self.entries)

    def __add__(self, other):
        return Tensor2(self.field, linalg.mat_add(self.entries, other.entries))

    def __sub__(self, other):
        return Tensor2(self.field, linalg.mat_sub(self.entries, other.entries))

    def __neg__(self):
        return Tensor2(self.field, linalg.mat_neg(self.entries))


@dataclass(frozen=True)
class Tensor3:
    """t = sum t[i][j][k] e_i (x) e_j (x) e_k."""

    field: object
    entries: tuple

    def __post_init__(self):
        e = tuple(tuple(tuple(r) for r in s) for s in self.entries)
        n = len(e)
        if any(len(s) != n or any(len(r) != n for r in s) for s in e):
            raise DimensionMismatch("Tensor3 must be cubical")
        object.__setattr__(self, "entries", e)

    @property
    def dim(self):
        return len(self.entries)

    def is_zero(self):
        return all(not x for s in self.entries for r in s for x in r)

    def __add__(self, other):
        return Tensor3(self.field, tuple(
            tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(sa, sb))
            for sa, sb in zip(self.entries, other.entries)))

    def __sub__(self, other):
        return Tensor3(self.field, tuple(
            tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(sa, sb))
            for sa, sb in zip(self.entries, other.entries)))


@dataclass(frozen=True)
class BilinearForm:
    """B[i][j] = B(e_i, e_j).  Symmetry and nondegeneracy are checked
    by the consumers, never assumed."""

    field: object
    entries: Matrix

    def __post_init__(self):
        object.__setattr__(self, "entries", _square(self.entries, "BilinearForm"))

    @property
    def dim(self):
        return len(self.entries)

    def value(self, u, v):
        return linalg.sum_prod(linalg.mat_vec(self.entries, v), u)

    def is_symmetric(self):
        return self.entries == linalg.transpose(self.entries)

    def is_nondegenerate(self):
        return linalg.rank(self.field, self.entries) == self.dim


def t2_zero(field, dim):
    return Tensor2(field, linalg.zeros(field, dim, dim))


def t3_zero(field, dim):
    z = field.zero
    return Tensor3(field, tuple(tuple(tuple(z for _ in range(dim))
                                      for _ in range(dim)) for _ in range(dim)))


def t2_from_entries(field, dim, triples):
    """Build a Tensor2 from sparse 0-based (i, j, coeff) triples."""
    rows = [[field.zero] * dim for _ in range(dim)]
    for i, j, c in triples:
        rows[i][j] = rows[i][j] + c
    return Tensor2(field, rows)


def basis_vector(field, dim, k):
    return tuple(field.one if i == k else field.zero for i in range(dim))


def tau(r: Tensor2) -> Tensor2:
    """tau(x (x) y) = y (x) x: entrywise transpose."""
    return Tensor2(r.field, linalg.transpose(r.entries))


def xi(t: Tensor3) -> Tensor3:
    """xi(x (x) y (x) z) = y (x) z (x) x: result[i][j][k] = t[k][i][j]."""
    n = t.dim
    return Tensor3(t.field, tuple(
        tuple(tuple(t.entries[k][i][j] for k in range(n)) for j in range(n))
        for i in range(n)))


def sharp(r: Tensor2) -> LinearMap:
    """r#: column i of the matrix is row i of r."""
    return LinearMap(r.field, linalg.transpose(r.entries))


def tensor_from_map(m: LinearMap) -> Tensor2:
    """Inverse of sharp: the 2-tensor T# in V* (x) A of a map T: V -> A."""
    return Tensor2(m.field, linalg.transpose(m.entries))


def natural(b: BilinearForm) -> LinearMap:
    """B\\ sending e_i to sum_j B(e_i, e_j) e*_j; matrix is B transposed."""
    return LinearMap(b.field, linalg.transpose(b.entries))


def phi_from_form(b: BilinearForm) -> Tensor2:
    """phi_B, the 2-tensor of B\\^-1; equals the inverse matrix of B."""
    try:
        inv = linalg.inverse(b.field, b.entries)
    except SingularMatrix:
        raise SingularForm("form has a nontrivial kernel") from None
    return Tensor2(b.field, inv)


def adjoint_wrt_form(p: LinearMap, b: BilinearForm) -> LinearMap:
    """P^ with B(P^(x), y) = B(x, P(y)); requires B symmetric nondegenerate."""
    if not b.is_symmetric():
        raise SingularForm("adjoint requires a symmetric form")
    try:
        binv = linalg.inverse(b.field, b.entries)
    except SingularMatrix:
        raise SingularForm("form has a nontrivial kernel") from None
    pt = linalg.transpose(p.entries)
    return LinearMap(p.field, linalg.mat_mul(binv, linalg.mat_mul(pt, b.entries)))


def dual_map(p: LinearMap) -> LinearMap:
    """P* with <P*(a*), x> = <a*, P(x)>: the transpose in dual bases."""
    if p.dim_in != p.dim_out:
        raise DimensionMismatch("dual_map expects a square map")
    return LinearMap(p.field, linalg.transpose(p.entries))


def apply_map_tensor(maps, t):
    """Slotwise contraction (M1 (x) M2 (x) ...) t for a Tensor2 or Tensor3."""
    n = t.dim
    mats = [m.entries if isinstance(m, LinearMap) else tuple(tuple(r) for r in m)
            for m in maps]
    for m in mats:
        if len(m) != n or len(m[0]) != n:
            raise DimensionMismatch("map/tensor dimension mismatch")
    if isinstance(t, Tensor2):
        if len(mats) != 2:
            raise DimensionMismatch("Tensor2 needs exactly two maps")
        a, b = mats
        # result = A t B^T entrywise: res[i][j] = sum A[i][x] t[x][y] B[j][y]
        mid = linalg.mat_mul(a, t.entries)
        return Tensor2(t.field, linalg.mat_mul(mid, linalg.transpose(b)))
    if isinstance(t, Tensor3):
        if len(mats) != 3:
            raise DimensionMismatch("Tensor3 needs exactly three maps")
        a, b, c = mats
        z = t.field.zero
        res = [[[z] * n for _ in range(n)] for _ in range(n)]
        for x in range(n):
            for y in range(n):
                for w in range(n):
                    v = t.entries[x][y][w]
                    if not v:
                        continue
                    for i in range(n):
                        ax = a[i][x]
                        if not ax:
                            continue
                        for j in range(n):
                            bx = b[j][y]
                            if not bx:
                                continue
                            axbx = ax * bx * v
                            for k in range(n):
                                if c[k][w]:
                                    res[i][j][k] = res[i][j][k] + axbx * c[k][w]
        return Tensor3(t.field, res)
    raise DimensionMismatch("expected Tensor2 or Tensor3")


def pair_tensor2(r: Tensor2, i: int, j: int):
    """<r, e*_i (x) e*_j> = r[i][j]."""
    return r.entries[i][j]
