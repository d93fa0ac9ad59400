# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of hklattice._pykernels.

Same algorithms, same signatures, same results bit for bit. Entries stay
Python ints (arbitrary precision); Cython removes the interpreter loop
overhead, which dominates on the 276-column workloads.
"""

__all__ = [
    "hnf",
    "hnf_transform",
    "pivot_columns",
    "smith_normal_form",
    "snf_diagonal",
    "det_bareiss",
    "solve_left_int_row",
    "row_echelon_bareiss",
]


cdef list _copy(mat):
    return [list(row) for row in mat]


cdef void _row_submul(list row, list prow, object q, Py_ssize_t start, Py_ssize_t stop):
    cdef Py_ssize_t c
    cdef object v
    for c in range(start, stop):
        v = prow[c]
        if v:
            row[c] = row[c] - q * v


def hnf(mat):
    """Row-style Hermite normal form of an integer matrix, zero rows dropped."""
    cdef list A = _copy(mat)
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t n = len(A[0]) if m else 0
    cdef Py_ssize_t r = 0, j, i, k
    cdef object v, av, best, pv, q
    cdef list pk
    cdef bint clean
    for j in range(n):
        if r == m:
            break
        while True:
            k = -1
            best = 0
            for i in range(r, m):
                v = (<list>A[i])[j]
                if v:
                    av = -v if v < 0 else v
                    if k < 0 or av < best:
                        k = i
                        best = av
                        if av == 1:
                            break
            if k < 0:
                break
            clean = True
            pk = <list>A[k]
            pv = pk[j]
            for i in range(r, m):
                if i == k:
                    continue
                v = (<list>A[i])[j]
                if v:
                    q = v // pv
                    if q:
                        _row_submul(<list>A[i], pk, q, j, n)
                    if (<list>A[i])[j]:
                        clean = False
            if clean:
                if k != r:
                    A[k], A[r] = A[r], A[k]
                if (<list>A[r])[j] < 0:
                    A[r] = [-x for x in <list>A[r]]
                pv = (<list>A[r])[j]
                for i in range(r):
                    q = (<list>A[i])[j] // pv
                    if q:
                        _row_submul(<list>A[i], <list>A[r], q, j, n)
                r += 1
                break
    return A[:r]


def hnf_transform(mat):
    """HNF with a unimodular transform; see the pure-Python twin."""
    cdef list A = _copy(mat)
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t n = len(A[0]) if m else 0
    cdef list U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    cdef Py_ssize_t r = 0, j, i, k
    cdef object v, av, best, pv, q
    cdef list pk, uk
    cdef bint clean
    for j in range(n):
        if r == m:
            break
        while True:
            k = -1
            best = 0
            for i in range(r, m):
                v = (<list>A[i])[j]
                if v:
                    av = -v if v < 0 else v
                    if k < 0 or av < best:
                        k = i
                        best = av
                        if av == 1:
                            break
            if k < 0:
                break
            clean = True
            pk = <list>A[k]
            uk = <list>U[k]
            pv = pk[j]
            for i in range(r, m):
                if i == k:
                    continue
                v = (<list>A[i])[j]
                if v:
                    q = v // pv
                    if q:
                        _row_submul(<list>A[i], pk, q, j, n)
                        _row_submul(<list>U[i], uk, q, 0, m)
                    if (<list>A[i])[j]:
                        clean = False
            if clean:
                if k != r:
                    A[k], A[r] = A[r], A[k]
                    U[k], U[r] = U[r], U[k]
                if (<list>A[r])[j] < 0:
                    A[r] = [-x for x in <list>A[r]]
                    U[r] = [-x for x in <list>U[r]]
                pv = (<list>A[r])[j]
                for i in range(r):
                    q = (<list>A[i])[j] // pv
                    if q:
                        _row_submul(<list>A[i], <list>A[r], q, j, n)
                        _row_submul(<list>U[i], <list>U[r], q, 0, m)
                r += 1
                break
    return A[:r], U, r


def pivot_columns(H):
    """Pivot (first nonzero) column index of each row of an echelon matrix."""
    cdef list pivots = []
    cdef Py_ssize_t p, c
    cdef list lrow
    for row in H:
        lrow = list(row)
        p = -1
        for c in range(len(lrow)):
            if lrow[c]:
                p = c
                break
        if p < 0:
            raise ValueError("zero row in echelon matrix")
        pivots.append(p)
    return pivots


def solve_left_int_row(H, pivots, b):
    """Integer x with x*H = b for H in row HNF, else None."""
    cdef list res = list(b)
    cdef Py_ssize_t n = len(res)
    cdef list x = []
    cdef Py_ssize_t t, p, c
    cdef object v, q, rem, hv
    cdef list ht
    for t in range(len(pivots)):
        p = pivots[t]
        v = res[p]
        if v:
            ht = list(H[t])
            q, rem = divmod(v, ht[p])
            if rem:
                return None
            x.append(q)
            for c in range(p, n):
                hv = ht[c]
                if hv:
                    res[c] = res[c] - q * hv
        else:
            x.append(0)
    for c in range(n):
        if res[c]:
            return None
    return x


def det_bareiss(mat):
    """Determinant of a square integer matrix by fraction-free elimination."""
    cdef list A = _copy(mat)
    cdef Py_ssize_t n = len(A)
    if n == 0:
        return 1
    for row in A:
        if len(<list>row) != n:
            raise ValueError("matrix is not square")
    cdef int sign = 1
    cdef object prev = 1
    cdef Py_ssize_t k, i, c, piv
    cdef object v, av, best, p, w
    cdef list Ak, Ai
    for k in range(n - 1):
        piv = -1
        best = 0
        for i in range(k, n):
            v = (<list>A[i])[k]
            if v:
                av = -v if v < 0 else v
                if piv < 0 or av < best:
                    piv = i
                    best = av
                    if av == 1:
                        break
        if piv < 0:
            return 0
        if piv != k:
            A[piv], A[k] = A[k], A[piv]
            sign = -sign
        Ak = <list>A[k]
        p = Ak[k]
        for i in range(k + 1, n):
            Ai = <list>A[i]
            v = Ai[k]
            if v:
                for c in range(k + 1, n):
                    w = Ak[c]
                    if w or Ai[c]:
                        Ai[c] = (p * Ai[c] - v * w) // prev
                Ai[k] = 0
            elif prev == 1:
                if p != 1:
                    for c in range(k + 1, n):
                        if Ai[c]:
                            Ai[c] = p * Ai[c]
            else:
                for c in range(k + 1, n):
                    if Ai[c]:
                        Ai[c] = (p * Ai[c]) // prev
        prev = p
    if sign > 0:
        return (<list>A[n - 1])[n - 1]
    return -(<list>A[n - 1])[n - 1]


def row_echelon_bareiss(mat):
    """Fraction-free row echelon form; returns (rows, pivot_cols)."""
    cdef list A = _copy(mat)
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t n = len(A[0]) if m else 0
    cdef object prev = 1
    cdef Py_ssize_t r = 0, j, i, c, piv
    cdef object v, av, best, p, w
    cdef list Ar, Ai, piv_cols = []
    for j in range(n):
        if r == m:
            break
        piv = -1
        best = 0
        for i in range(r, m):
            v = (<list>A[i])[j]
            if v:
                av = -v if v < 0 else v
                if piv < 0 or av < best:
                    piv = i
                    best = av
                    if av == 1:
                        break
        if piv < 0:
            continue
        if piv != r:
            A[piv], A[r] = A[r], A[piv]
        Ar = <list>A[r]
        p = Ar[j]
        for i in range(r + 1, m):
            Ai = <list>A[i]
            v = Ai[j]
            if v:
                for c in range(j + 1, n):
                    w = Ar[c]
                    if w or Ai[c]:
                        Ai[c] = (p * Ai[c] - v * w) // prev
                Ai[j] = 0
            elif prev == 1:
                if p != 1:
                    for c in range(j + 1, n):
                        if Ai[c]:
                            Ai[c] = p * Ai[c]
            else:
                for c in range(j + 1, n):
                    if Ai[c]:
                        Ai[c] = (p * Ai[c]) // prev
        prev = p
        piv_cols.append(j)
        r += 1
    return A[:r], piv_cols


def smith_normal_form(mat, want_v=False, want_vinv=False):
    """Smith normal form diagonal with optional right transforms.

    Returns (diag, V, Vinv); see the pure-Python twin for the contract.
    """
    cdef list A = _copy(mat)
    cdef Py_ssize_t m = len(A)
    cdef Py_ssize_t n = len(A[0]) if m else 0
    cdef Py_ssize_t limit = m if m < n else n
    cdef list V = None, W = None
    cdef Py_ssize_t i, j, c, t, pi, pj
    cdef object v, av, best, p, q
    cdef list Ai, wk, wj, Vi
    cdef bint dirty, col_ok, fix
    if want_v:
        V = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if want_vinv:
        W = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    t = 0
    while t < limit:
        pi = -1
        pj = -1
        best = 0
        for i in range(t, m):
            Ai = <list>A[i]
            for j in range(t, n):
                v = Ai[j]
                if v:
                    av = -v if v < 0 else v
                    if pi < 0 or av < best:
                        pi = i
                        pj = j
                        best = av
                        if av == 1:
                            break
            if best == 1 and pi >= 0:
                break
        if pi < 0:
            break
        if pi != t:
            A[pi], A[t] = A[t], A[pi]
        if pj != t:
            for i in range(m):
                Ai = <list>A[i]
                Ai[pj], Ai[t] = Ai[t], Ai[pj]
            if V is not None:
                for i in range(n):
                    Vi = <list>V[i]
                    Vi[pj], Vi[t] = Vi[t], Vi[pj]
            if W is not None:
                W[pj], W[t] = W[t], W[pj]
        while True:
            i = t + 1
            while i < m:
                v = (<list>A[i])[t]
                if v:
                    p = (<list>A[t])[t]
                    q = v // p
                    if q:
                        _row_submul(<list>A[i], <list>A[t], q, t, n)
                    if (<list>A[i])[t]:
                        A[t], A[i] = A[i], A[t]
                        i = t + 1
                        continue
                i += 1
            j = t + 1
            dirty = False
            while j < n:
                v = (<list>A[t])[j]
                if v:
                    p = (<list>A[t])[t]
                    q = v // p
                    if q:
                        # column j -= q * column t
                        for i in range(m):
                            Ai = <list>A[i]
                            v = Ai[t]
                            if v:
                                Ai[j] = Ai[j] - q * v
                        if V is not None:
                            for i in range(n):
                                Vi = <list>V[i]
                                v = Vi[t]
                                if v:
                                    Vi[j] = Vi[j] - q * v
                        if W is not None:
                            wk = <list>W[t]
                            wj = <list>W[j]
                            for c in range(n):
                                v = wj[c]
                                if v:
                                    wk[c] = wk[c] + q * v
                    if (<list>A[t])[j]:
                        for i in range(m):
                            Ai = <list>A[i]
                            Ai[t], Ai[j] = Ai[j], Ai[t]
                        if V is not None:
                            for i in range(n):
                                Vi = <list>V[i]
                                Vi[t], Vi[j] = Vi[j], Vi[t]
                        if W is not None:
                            W[t], W[j] = W[j], W[t]
                        dirty = True
                        j = t + 1
                        continue
                j += 1
            if dirty:
                continue
            col_ok = True
            for i in range(t + 1, m):
                if (<list>A[i])[t]:
                    col_ok = False
                    break
            if col_ok:
                p = (<list>A[t])[t]
                fix = False
                for i in range(t + 1, m):
                    Ai = <list>A[i]
                    for j in range(t + 1, n):
                        if Ai[j] % p:
                            _row_submul(<list>A[t], Ai, -1, t, n)
                            fix = True
                            break
                    if fix:
                        break
                if not fix:
                    break
        if (<list>A[t])[t] < 0:
            A[t] = [-x for x in <list>A[t]]
        t += 1
    diag = [(<list>A[i])[i] if i < t else 0 for i in range(limit)]
    return diag, V, W


def snf_diagonal(mat):
    """Smith normal form diagonal only."""
    return smith_normal_form(mat)[0]
