# -*- coding: utf-8 -*-
"""
Exact linear algebra over the cyclotomic scalars.

Dense matrices are lists of rows of CycScalar. Sparse vectors are dicts
``key -> CycScalar`` with comparable keys.
"""
import logging

from .exceptions import DimensionMismatch, SingularMatrix
from .scalars import ONE, ZERO, as_scalar

log = logging.getLogger(__name__)


def zeros(n_rows, n_cols):
    return [[ZERO] * n_cols for _ in range(n_rows)]


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def copy_matrix(m):
    return [list(row) for row in m]


def transpose(m):
    if not m:
        return []
    return [[m[i][j] for i in range(len(m))] for j in range(len(m[0]))]


def matmul(a, b):
    if a and len(a[0]) != len(b):
        raise DimensionMismatch("cannot multiply {}x{} by {}x{}".format(
            len(a), len(a[0]), len(b), len(b[0]) if b else 0))
    n_cols = len(b[0]) if b else 0
    result = []
    for row in a:
        out = [ZERO] * n_cols
        for k, x in enumerate(row):
            if not x:
                continue
            for j, y in enumerate(b[k]):
                if y:
                    out[j] = out[j] + x * y
        result.append(out)
    return result


def vecmat(v, m):
    """Row vector times matrix."""
    n_cols = len(m[0]) if m else 0
    out = [ZERO] * n_cols
    for k, x in enumerate(v):
        if not x:
            continue
        for j, y in enumerate(m[k]):
            if y:
                out[j] = out[j] + x * y
    return out


def matrices_equal(a, b):
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb))
        for ra, rb in zip(a, b))


def row_echelon(m, t=None):
    """
    Forward elimination in place; returns the list of free columns.

    ``t`` is an optional right-hand side transformed alongside ``m``.
    """
    free_vars = []
    n_rows = len(m)
    if n_rows == 0:
        return free_vars
    n_cols = len(m[0])
    assert t is None or len(t) == n_rows
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c]:
                break
        else:
            free_vars.append(piv_c)
            continue
        if i_row != piv_r:
            m[piv_r], m[i_row] = m[i_row], m[piv_r]
            if t is not None:
                t[piv_r], t[i_row] = t[i_row], t[piv_r]
        fp = m[piv_r][piv_c]
        for r in range(piv_r + 1, n_rows):
            fr = m[r][piv_c]
            if not fr:
                continue
            frp = fr / fp
            row = m[r]
            pivot_row = m[piv_r]
            for c in range(piv_c, n_cols):
                if pivot_row[c]:
                    row[c] = row[c] - pivot_row[c] * frp
            if t is not None:
                t[r] = t[r] - t[piv_r] * frp
        piv_r += 1
        if piv_r == n_rows:
            free_vars.extend(range(piv_c + 1, n_cols))
            break
    return free_vars


def back_substitution(m, t, free_vars, n_cols):
    """Solve an echelon system; returns None when it is inconsistent."""
    n_rows = len(m)
    rank = n_cols - len(free_vars)
    for r in range(rank, n_rows):
        if t[r]:
            return None
    free = set(free_vars)
    piv_cols = [c for c in range(n_cols) if c not in free]
    sol = [ZERO] * n_cols
    for r in range(len(piv_cols) - 1, -1, -1):
        piv_c = piv_cols[r]
        s = -t[r]
        for c in range(piv_c + 1, n_cols):
            if m[r][c] and sol[c]:
                s = s + m[r][c] * sol[c]
        sol[piv_c] = -s / m[r][piv_c]
    return sol


def rank(m):
    if not m or not m[0]:
        return 0
    work = copy_matrix(m)
    return len(m[0]) - len(row_echelon(work))


def solve(m, b):
    """A solution of ``m x = b`` or None."""
    if len(m) != len(b):
        raise DimensionMismatch("{} rows against {} right-hand entries"
                                .format(len(m), len(b)))
    if not m:
        return []
    work, rhs = copy_matrix(m), list(b)
    free_vars = row_echelon(work, rhs)
    return back_substitution(work, rhs, free_vars, len(m[0]))


def inverse(m):
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionMismatch("only square matrices are invertible")
    work = [list(row) + unit for row, unit in zip(m, identity(n))]
    pivots = reduced_row_echelon(work, n_cols=n)
    if len(pivots) != n:
        raise SingularMatrix("matrix of size {} has rank {}".format(
            n, len(pivots)))
    return [row[n:] for row in work]


def reduced_row_echelon(m, n_cols=None):
    """
    Gauss-Jordan elimination in place over the first ``n_cols`` columns.

    Pivot rows are normalized to 1; returns the pivot columns.
    """
    n_rows = len(m)
    if n_rows == 0:
        return []
    width = len(m[0])
    n_cols = width if n_cols is None else n_cols
    pivots = []
    piv_r = 0
    for piv_c in range(n_cols):
        for i_row in range(piv_r, n_rows):
            if m[i_row][piv_c]:
                break
        else:
            continue
        m[piv_r], m[i_row] = m[i_row], m[piv_r]
        inv = ONE / m[piv_r][piv_c]
        m[piv_r] = [x * inv if x else x for x in m[piv_r]]
        pivot_row = m[piv_r]
        for r in range(n_rows):
            if r == piv_r or not m[r][piv_c]:
                continue
            factor = m[r][piv_c]
            m[r] = [x - y * factor if y else x
                    for x, y in zip(m[r], pivot_row)]
        pivots.append(piv_c)
        piv_r += 1
        if piv_r == n_rows:
            break
    return pivots


def nullspace(m, n_cols=None):
    """Basis of ``{v : m v = 0}`` as a list of dense vectors."""
    if n_cols is None:
        n_cols = len(m[0]) if m else 0
    work = copy_matrix(m)
    pivots = reduced_row_echelon(work, n_cols) if work else []
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        v = [ZERO] * n_cols
        v[free] = ONE
        for r, p in enumerate(pivots):
            if work[r][free]:
                v[p] = -work[r][free]
        basis.append(v)
    return basis


def sparse_to_dense(vectors, keys=None):
    """Stack sparse vectors as matrix columns; returns (matrix, row keys)."""
    if keys is None:
        keys = sorted({k for v in vectors for k in v})
    index = {k: i for i, k in enumerate(keys)}
    m = zeros(len(keys), len(vectors))
    for j, v in enumerate(vectors):
        for k, c in v.items():
            m[index[k]][j] = c
    return m, keys


class SparseEchelon(object):
    """
    Incremental echelon form of sparse vectors.

    Each stored row is indexed by its largest key, which is its pivot;
    reducing a vector repeatedly clears its current largest key.
    """

    def __init__(self):
        self.rows = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vector):
        v = {k: c for k, c in vector.items() if c}
        while v:
            lead = max(v)
            row = self.rows.get(lead)
            if row is None:
                return v
            factor = v[lead]
            for k, c in row.items():
                total = v.get(k, ZERO) - c * factor
                if total:
                    v[k] = total
                else:
                    v.pop(k, None)
        return v

    def add(self, vector):
        """Insert ``vector``; True when it was independent."""
        v = self.reduce(vector)
        if not v:
            return False
        lead = max(v)
        inv = ONE / v[lead]
        self.rows[lead] = {k: c * inv for k, c in v.items()}
        return True

    def contains(self, vector):
        return not self.reduce(vector)


def span_rank(vectors):
    echelon = SparseEchelon()
    for v in vectors:
        echelon.add(v)
    return len(echelon)


def same_span(first, second):
    """Whether two families of sparse vectors span the same space."""
    echelon = SparseEchelon()
    for v in first:
        echelon.add(v)
    r = len(echelon)
    if any(not echelon.contains(v) for v in second):
        return False
    return span_rank(second) == r


def as_matrix(rows):
    return [[as_scalar(x) for x in row] for row in rows]
