# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the functions in _pykernels; same signatures, same output."""
from libc.stdint cimport uint64_t
from cpython.array cimport array

cdef extern from *:
    int __builtin_ctzll(unsigned long long)
    int __builtin_popcountll(unsigned long long)


def simple_cycles(int n, adj):
    if n > 64:
        raise OverflowError("compiled kernels handle at most 64 vertices")
    cdef uint64_t a[64]
    cdef uint64_t cand[65]
    cdef int path[65]
    cdef uint64_t used, higher, low, one = 1
    cdef int s, depth, w, i
    out = []
    for i in range(n):
        a[i] = adj[i]
    for s in range(n):
        # 2 << 63 wraps to 0, so higher becomes 0 as it should
        higher = ~((one << s << 1) - 1)
        path[0] = s
        used = one << s
        depth = 0
        cand[0] = a[s] & higher
        while depth >= 0:
            if cand[depth] == 0:
                if depth > 0:
                    used &= ~(one << path[depth])
                depth -= 1
                continue
            low = cand[depth] & (~cand[depth] + 1)
            cand[depth] ^= low
            w = __builtin_ctzll(low)
            depth += 1
            path[depth] = w
            used |= low
            if depth >= 2 and (a[w] >> s) & 1 and path[1] < w:
                out.append(tuple([path[i] for i in range(depth + 1)]))
            cand[depth] = a[w] & higher & ~used
    return out


cdef class _Families:
    cdef int n, order
    cdef uint64_t[:] masks
    cdef int[:] sizes
    cdef int[:] start
    cdef int[:] ordered
    cdef int[:] chosen
    cdef list out

    cdef void walk(self, int v, uint64_t used, int covered, int depth) except *:
        cdef int j, k
        cdef uint64_t one = 1
        if self.order >= 0 and (covered > self.order or covered + (self.n - v) < self.order):
            return
        if v == self.n:
            if self.order < 0 or covered == self.order:
                self.out.append(tuple([self.chosen[j] for j in range(depth)]))
            return
        self.walk(v + 1, used, covered, depth)
        if (used >> v) & one:
            return
        for j in range(self.start[v], self.start[v + 1]):
            k = self.ordered[j]
            if self.masks[k] & used:
                continue
            self.chosen[depth] = k
            self.walk(v + 1, used | self.masks[k], covered + self.sizes[k], depth + 1)


def disjoint_families(int n, masks, int order=-1):
    if n > 64:
        raise OverflowError("compiled kernels handle at most 64 vertices")
    cdef int m = len(masks)
    cdef int k, v
    cdef _Families st = _Families()
    st.n = n
    st.order = order
    st.masks = array("Q", masks)
    st.sizes = array("i", [0] * m)
    st.ordered = array("i", [0] * m)
    st.start = array("i", [0] * (n + 1))
    st.chosen = array("i", [0] * (n + 1))
    st.out = []
    mins = []
    for k in range(m):
        st.sizes[k] = __builtin_popcountll(st.masks[k])
        mins.append(__builtin_ctzll(st.masks[k]))
    ordered = sorted(range(m), key=lambda i: (mins[i], i))
    for k in range(m):
        st.ordered[k] = ordered[k]
        st.start[mins[k] + 1] += 1
    for v in range(n):
        st.start[v + 1] += st.start[v]
    st.walk(0, 0, 0, 0)
    return st.out


def durand_kerner(coeffs, double tol=1e-14, int max_iter=2000):
    cdef int deg = len(coeffs) - 1
    if deg < 1:
        return [], True
    cdef double complex lead = coeffs[0]
    cdef list cl = [complex(x) / lead for x in coeffs]
    cdef double complex z, val, denom, diff, step, seed = 0.4 + 0.9j
    cdef double radius = 0.0, worst, scale
    cdef int i, j, it, t
    for i in range(1, deg + 1):
        if abs(cl[i]) > radius:
            radius = abs(cl[i])
    radius += 1.0
    roots = [radius * complex(seed) ** k for k in range(deg)]
    cdef double complex[128] r
    cdef double complex[129] cc
    if deg > 128:
        raise OverflowError("compiled Durand-Kerner handles degree <= 128")
    for i in range(deg):
        r[i] = roots[i] if roots[i] != 0 else radius
    for i in range(deg + 1):
        cc[i] = cl[i]
    for it in range(max_iter):
        worst = 0.0
        for i in range(deg):
            z = r[i]
            val = 0
            for t in range(deg + 1):
                val = val * z + cc[t]
            denom = 1.0
            for j in range(deg):
                if j != i:
                    diff = z - r[j]
                    if diff == 0:
                        diff = 1e-300
                    denom = denom * diff
            step = val / denom
            r[i] = z - step
            scale = abs(z)
            if scale < 1.0:
                scale = 1.0
            if abs(step) / scale > worst:
                worst = abs(step) / scale
        if worst < tol:
            return [complex(r[i]) for i in range(deg)], True
    return [complex(r[i]) for i in range(deg)], False
