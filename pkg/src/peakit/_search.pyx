# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel for pseudo-effect algebra tables.

Same algorithm and interface as ``_search_py``.
"""

from itertools import permutations

cdef enum:
    MAXN = 12
    UNDEF = -1
    FREE = -2


cdef struct State:
    int n
    int t[MAXN * MAXN]


cdef inline bint triple_ok(State* s, int a, int b, int c) nogil:
    cdef int n = s.n
    cdef int ab = s.t[a * n + b]
    cdef int lhs, bc, rhs
    if ab == FREE:
        return True
    lhs = UNDEF if ab == UNDEF else s.t[ab * n + c]
    if lhs == FREE:
        return True
    bc = s.t[b * n + c]
    if bc == FREE:
        return True
    rhs = UNDEF if bc == UNDEF else s.t[a * n + bc]
    if rhs == FREE:
        return True
    return lhs == rhs


cdef bint consistent(State* s, int i, int j) nogil:
    cdef int n = s.n
    cdef int u = n - 1
    cdef int v = s.t[i * n + j]
    cdef int k, x, a, b, cnt, w
    if v >= 0:
        for k in range(1, j):
            if s.t[i * n + k] == v:
                return False
        for k in range(1, i):
            if s.t[k * n + j] == v:
                return False
    if j == n - 2:
        cnt = 0
        for k in range(1, n - 1):
            if s.t[i * n + k] == u:
                cnt += 1
        if cnt != 1:
            return False
    if v == u:
        for k in range(1, j):
            if s.t[i * n + k] == u:
                return False
        for k in range(1, i):
            if s.t[k * n + j] == u:
                return False
    if i == n - 2:
        cnt = 0
        for k in range(1, n - 1):
            if s.t[k * n + j] == u:
                cnt += 1
        if cnt != 1:
            return False
    for x in range(n):
        if not triple_ok(s, i, j, x) or not triple_ok(s, x, i, j):
            return False
    for a in range(n):
        for b in range(n):
            w = s.t[a * n + b]
            if w == i and not triple_ok(s, a, b, j):
                return False
            if w == j and not triple_ok(s, i, a, b):
                return False
    return True


cdef int row_defined(State* s, int i) nogil:
    cdef int n = s.n
    cdef int k, cnt = 0
    for k in range(1, n - 1):
        if s.t[i * n + k] != UNDEF:
            cnt += 1
    return cnt


cdef bint full_check(State* s) nogil:
    cdef int n = s.n
    cdef int u = n - 1
    cdef int a, b, c, d, ab, bc, lhs, rhs, w, cd, ce
    cdef bint left[MAXN][MAXN]
    cdef bint right[MAXN][MAXN]
    for a in range(n):
        for b in range(n):
            ab = s.t[a * n + b]
            for c in range(n):
                lhs = UNDEF if ab == UNDEF else s.t[ab * n + c]
                bc = s.t[b * n + c]
                rhs = UNDEF if bc == UNDEF else s.t[a * n + bc]
                if lhs != rhs:
                    return False
    for a in range(n):
        cd = 0
        ce = 0
        for d in range(n):
            if s.t[a * n + d] == u:
                cd += 1
            if s.t[d * n + a] == u:
                ce += 1
        if cd != 1 or ce != 1:
            return False
        if a != 0 and (s.t[a * n + u] != UNDEF or s.t[u * n + a] != UNDEF):
            return False
    for a in range(n):
        for b in range(n):
            w = s.t[a * n + b]
            if w == UNDEF:
                continue
            cd = 0
            ce = 0
            for d in range(n):
                if s.t[d * n + a] == w:
                    cd += 1
                if s.t[b * n + d] == w:
                    ce += 1
            if cd != 1 or ce != 1:
                return False
    for a in range(n):
        for b in range(n):
            left[a][b] = False
            right[a][b] = False
    for a in range(n):
        for b in range(n):
            w = s.t[a * n + b]
            if w != UNDEF:
                left[b][w] = True
                right[a][w] = True
    for a in range(n):
        for b in range(n):
            if left[a][b] != right[a][b]:
                return False
            if a != b and left[a][b] and left[b][a]:
                return False
            if left[a][b]:
                for c in range(n):
                    if left[b][c] and not left[a][c]:
                        return False
    return True


cdef class _Search:
    cdef State st
    cdef int ncells
    cdef int ci[MAXN * MAXN]
    cdef int cj[MAXN * MAXN]
    cdef int npre
    cdef int pre[MAXN * MAXN]
    cdef bint labeled
    cdef int[:, :] perms
    cdef set found

    def __init__(self, int n, bint labeled, prefix, perms):
        cdef int i, j, k, x
        self.st.n = n
        self.labeled = labeled
        for k in range(n * n):
            self.st.t[k] = FREE
        for x in range(n):
            self.st.t[x] = x
            self.st.t[x * n] = x
            if x:
                self.st.t[x * n + n - 1] = UNDEF
                self.st.t[(n - 1) * n + x] = UNDEF
        k = 0
        for i in range(1, n - 1):
            for j in range(1, n - 1):
                self.ci[k] = i
                self.cj[k] = j
                k += 1
        self.ncells = k
        self.npre = len(prefix)
        for k in range(self.npre):
            self.pre[k] = prefix[k]
        self.perms = perms
        self.found = set()

    cdef tuple canon(self):
        cdef int n = self.st.n
        cdef int nn = n * n
        cdef int p, a, b, w, k
        cdef int best[MAXN * MAXN]
        cdef int cand[MAXN * MAXN]
        cdef int[:, :] perms = self.perms
        cdef bint have = False
        cdef bint less
        for p in range(perms.shape[0]):
            for a in range(n):
                for b in range(n):
                    w = self.st.t[a * n + b]
                    cand[perms[p, a] * n + perms[p, b]] = UNDEF if w == UNDEF else perms[p, w]
            if not have:
                less = True
            else:
                less = False
                for k in range(nn):
                    if cand[k] != best[k]:
                        less = cand[k] < best[k]
                        break
            if less:
                for k in range(nn):
                    best[k] = cand[k]
                have = True
        return tuple([best[k] for k in range(nn)])

    cdef void leaf(self):
        cdef int k
        if full_check(&self.st):
            if self.labeled:
                self.found.add(tuple([self.st.t[k] for k in range(self.st.n * self.st.n)]))
            else:
                self.found.add(self.canon())

    cdef void rec(self, int k):
        cdef int n = self.st.n
        cdef int i, j, v, idx, ndom
        cdef int dom[MAXN + 1]
        if k == self.ncells:
            self.leaf()
            return
        i = self.ci[k]
        j = self.cj[k]
        if k < self.npre:
            dom[0] = self.pre[k]
            ndom = 1
        else:
            dom[0] = UNDEF
            dom[1] = n - 1
            ndom = 2
            for v in range(1, n - 1):
                if v != i and v != j:
                    dom[ndom] = v
                    ndom += 1
        for idx in range(ndom):
            self.st.t[i * n + j] = dom[idx]
            if not consistent(&self.st, i, j):
                continue
            if (not self.labeled and j == n - 2 and i >= 2
                    and row_defined(&self.st, i - 1) < row_defined(&self.st, i)):
                continue
            self.rec(k + 1)
        self.st.t[i * n + j] = FREE


def _perm_array(int n):
    import numpy as np
    rows = [(0,) + p + (n - 1,) for p in permutations(range(1, n - 1))]
    return np.asarray(rows, dtype=np.intc).reshape(len(rows), n)


def search(int n, bint labeled=False, prefix=()):
    if n < 2:
        return []
    if n > MAXN:
        raise ValueError(f"compiled kernel supports orders up to {MAXN}")
    perms = _perm_array(n) if not labeled else _perm_array(2)
    s = _Search(n, labeled, tuple(prefix), perms)
    s.rec(0)
    return sorted(s.found)


def is_pea(t, int n):
    cdef State st
    cdef int k
    if n > MAXN:
        raise ValueError(f"compiled kernel supports orders up to {MAXN}")
    st.n = n
    for k in range(n * n):
        st.t[k] = t[k]
    return full_check(&st)


def canonical(t, int n):
    cdef int k
    cdef _Search s = _Search(n, False, (), _perm_array(n))
    for k in range(n * n):
        s.st.t[k] = t[k]
    return s.canon()
