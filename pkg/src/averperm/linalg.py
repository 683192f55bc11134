"""Exact dense linear algebra over an arbitrary field.

Matrices are tuples of row tuples of field scalars.  Everything is pure;
rank decides every bijectivity claim, with no thresholds.
"""

from __future__ import annotations

from .errors import DimensionMismatch, SingularMatrix


def mat(rows):
    return tuple(tuple(r) for r in rows)


def zeros(field, n, m):
    z = field.zero
    return tuple(tuple(z for _ in range(m)) for _ in range(n))


def identity(field, n):
    z, o = field.zero, field.one
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def transpose(a):
    return tuple(zip(*a)) if a else ()


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_neg(a):
    return tuple(tuple(-x for x in r) for r in a)


def mat_scale(c, a):
    return tuple(tuple(c * x for x in r) for r in a)


def mat_mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise DimensionMismatch("matrix product %dx%d by %dx%d"
                                % (len(a), len(a[0]), len(b), len(b[0]) if b else 0))
    bt = transpose(b)
    return tuple(tuple(sum_prod(ra, cb) for cb in bt) for ra in a)


def sum_prod(u, v):
    it = iter(x * y for x, y in zip(u, v))
    acc = next(it)
    for t in it:
        acc = acc + t
    return acc


def mat_vec(a, v):
    return tuple(sum_prod(row, v) for row in a)


def vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vec_sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def is_zero_vec(v):
    return all(not x for x in v)


def is_zero_mat(a):
    return all(not x for r in a for x in r)


def _echelon(field, a):
    """Row echelon form by exact Gaussian elimination.

    Returns (rows as lists, pivot column list).
    """
    rows = [list(r) for r in a]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.one / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return rows, pivots


def rank(field, a):
    if not a:
        return 0
    _, pivots = _echelon(field, a)
    return len(pivots)


def inverse(field, a):
    n = len(a)
    if any(len(r) != n for r in a):
        raise DimensionMismatch("inverse of non-square matrix")
    eye = identity(field, n)
    aug = tuple(tuple(a[i]) + tuple(eye[i]) for i in range(n))
    rows, pivots = _echelon(field, aug)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return tuple(tuple(rows[i][n:]) for i in range(n))


def solve(field, a, b):
    """Unique solution of a x = b; raises SingularMatrix otherwise."""
    n = len(a)
    m = len(a[0]) if a else 0
    aug = tuple(tuple(a[i]) + (b[i],) for i in range(n))
    rows, pivots = _echelon(field, aug)
    if m in pivots:
        raise SingularMatrix("inconsistent system")
    if len(pivots) != m:
        raise SingularMatrix("solution not unique")
    x = [field.zero] * m
    for r, c in enumerate(pivots):
        x[c] = rows[r][m]
    return tuple(x)


def kernel_basis(field, a):
    """Basis of the right kernel of a."""
    if not a:
        return ()
    m = len(a[0])
    rows, pivots = _echelon(field, a)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * m
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return tuple(basis)
