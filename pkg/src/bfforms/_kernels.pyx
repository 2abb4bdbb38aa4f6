# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled sweep kernels; semantics twin of ``bfforms._kernels_py``.

Truth tables are uint64 bitmasks (n <= 6), cube coverage masks likewise,
so the prime filter, the cover branch-and-bound and the polarity scans
run on machine words.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free
from libc.time cimport clock, clock_t, CLOCKS_PER_SEC

from bfforms.errors import GuardTimeoutError

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

BACKEND = "compiled"


cdef inline int popcount64(uint64_t x) nogil:
    return __builtin_popcountll(x)


cdef class _Lattice:
    """Static per-n tables over the 3**n ternary cubes."""

    cdef int n, size, rows
    cdef uint64_t full
    cdef uint64_t* covers
    cdef int* lits
    cdef int* parents     # flattened, 6 slots per cube, -1 padded
    cdef int* nparents
    cdef uint64_t pat0[6]

    def __cinit__(self, int n):
        cdef int p, x, c, digit, d, lc
        cdef uint64_t mask
        cdef int pow3[7]
        self.n = n
        self.rows = 1 << n
        self.full = (<uint64_t>1 << self.rows) - 1 if self.rows < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
        pow3[0] = 1
        for p in range(1, n + 1):
            pow3[p] = pow3[p - 1] * 3
        self.size = pow3[n]
        for p in range(n):
            mask = 0
            for x in range(self.rows):
                if not (x >> p) & 1:
                    mask |= <uint64_t>1 << x
            self.pat0[p] = mask
        self.covers = <uint64_t*>malloc(self.size * sizeof(uint64_t))
        self.lits = <int*>malloc(self.size * sizeof(int))
        self.parents = <int*>malloc(self.size * 6 * sizeof(int))
        self.nparents = <int*>malloc(self.size * sizeof(int))
        if not (self.covers and self.lits and self.parents and self.nparents):
            raise MemoryError()
        for c in range(self.size):
            mask = self.full
            lc = 0
            d = c
            self.nparents[c] = 0
            for p in range(n):
                digit = d % 3
                d //= 3
                if digit == 1:
                    mask &= self.pat0[p]
                    lc += 1
                    self.parents[c * 6 + self.nparents[c]] = c - pow3[p]
                    self.nparents[c] += 1
                elif digit == 2:
                    mask &= self.full ^ self.pat0[p]
                    lc += 1
                    self.parents[c * 6 + self.nparents[c]] = c - 2 * pow3[p]
                    self.nparents[c] += 1
            self.covers[c] = mask
            self.lits[c] = lc

    def __dealloc__(self):
        if self.covers:
            free(self.covers)
        if self.lits:
            free(self.lits)
        if self.parents:
            free(self.parents)
        if self.nparents:
            free(self.nparents)


_LATTICES = {}


cdef _Lattice _lattice(int n):
    lat = _LATTICES.get(n)
    if lat is None:
        lat = _Lattice(n)
        _LATTICES[n] = lat
    return <_Lattice>lat


cdef struct CoverState:
    uint64_t* pcov
    int* plit
    int nprimes
    int best_terms
    int best_lits
    long long nodes
    clock_t deadline


cdef int _cover_rec(CoverState* st, uint64_t uncov, int terms, int lits) except -1:
    cdef int i, count, pick_count
    cdef uint64_t low, m, pick
    st.nodes += 1
    if st.nodes & 0x3FFF == 0 and clock() > st.deadline:
        raise GuardTimeoutError("SOP count minimization exceeded its time guard")
    if uncov == 0:
        if terms < st.best_terms or (terms == st.best_terms and lits < st.best_lits):
            st.best_terms = terms
            st.best_lits = lits
        return 0
    if terms + 1 > st.best_terms:
        return 0
    if terms + 1 == st.best_terms and lits + 1 >= st.best_lits:
        return 0
    pick = 0
    pick_count = st.nprimes + 1
    m = uncov
    while m:
        low = m & (~m + 1)
        m ^= low
        count = 0
        for i in range(st.nprimes):
            if st.pcov[i] & low:
                count += 1
                if count >= pick_count:
                    break
        if count < pick_count:
            pick_count = count
            pick = low
            if count == 1:
                break
    for i in range(st.nprimes):
        if st.pcov[i] & pick:
            _cover_rec(st, uncov & ~st.pcov[i], terms + 1, lits + st.plit[i])
    return 0


cdef int _min_sop_c(int n, uint64_t on, double guard_s,
                    int* out_terms, int* out_lits) except -1:
    cdef _Lattice lat = _lattice(n)
    cdef uint64_t off, uncov, low, m, cov, g_unc
    cdef int c, q, i, hit, count, prime, np
    cdef int sel_terms, sel_lits, found, best_i, best_gain, gain
    cdef uint64_t* pcov
    cdef int* plit
    cdef char* chosen
    cdef CoverState st

    if on == 0:
        out_terms[0] = 0
        out_lits[0] = 0
        return 0
    if on == lat.full:
        out_terms[0] = 1
        out_lits[0] = 0
        return 0
    if guard_s <= 0:
        raise GuardTimeoutError("SOP count minimization exceeded its time guard")

    off = lat.full ^ on
    pcov = <uint64_t*>malloc(lat.size * sizeof(uint64_t))
    plit = <int*>malloc(lat.size * sizeof(int))
    if not (pcov and plit):
        if pcov:
            free(pcov)
        if plit:
            free(plit)
        raise MemoryError()
    np = 0
    for c in range(lat.size):
        cov = lat.covers[c]
        if cov & off:
            continue
        prime = 1
        for i in range(lat.nparents[c]):
            q = lat.parents[c * 6 + i]
            if not (lat.covers[q] & off):
                prime = 0
                break
        if prime:
            pcov[np] = cov
            plit[np] = lat.lits[c]
            np += 1

    chosen = <char*>malloc(np)
    if not chosen:
        free(pcov)
        free(plit)
        raise MemoryError()
    for i in range(np):
        chosen[i] = 0

    try:
        sel_terms = 0
        sel_lits = 0
        uncov = on
        while uncov:
            found = 0
            m = uncov
            while m:
                low = m & (~m + 1)
                m ^= low
                count = 0
                hit = -1
                for i in range(np):
                    if pcov[i] & low:
                        count += 1
                        if count > 1:
                            break
                        hit = i
                if count == 1 and not chosen[hit]:
                    chosen[hit] = 1
                    sel_terms += 1
                    sel_lits += plit[hit]
                    uncov &= ~pcov[hit]
                    found = 1
            if not found:
                break
        if uncov == 0:
            out_terms[0] = sel_terms
            out_lits[0] = sel_lits
            return 0

        # Greedy upper bound over the remaining rows.
        g_unc = uncov
        st.best_terms = sel_terms
        st.best_lits = sel_lits
        while g_unc:
            best_i = -1
            best_gain = 0
            for i in range(np):
                if chosen[i]:
                    continue
                gain = popcount64(pcov[i] & g_unc)
                if gain > best_gain:
                    best_gain = gain
                    best_i = i
            g_unc &= ~pcov[best_i]
            st.best_terms += 1
            st.best_lits += plit[best_i]

        st.pcov = pcov
        st.plit = plit
        st.nprimes = np
        st.nodes = 0
        st.deadline = clock() + <clock_t>(guard_s * CLOCKS_PER_SEC)
        _cover_rec(&st, uncov, sel_terms, sel_lits)
        out_terms[0] = st.best_terms
        out_lits[0] = st.best_lits
        return 0
    finally:
        free(pcov)
        free(plit)
        free(chosen)


cdef int POPJ[64]
for _j in range(64):
    POPJ[_j] = bin(_j).count("1")


cdef void _rm_minima_c(int n, uint64_t mask, int* out) nogil:
    cdef int rows = 1 << n
    cdef uint64_t full = (<uint64_t>1 << rows) - 1 if rows < 64 else <uint64_t>0xFFFFFFFFFFFFFFFF
    cdef uint64_t lo_mask, c, w, low
    cdef int k, p, stride, ad, sh, l, j
    cdef int best_ad = -1, best_sh = -1, best_l = -1
    cdef uint64_t pat0[6]
    cdef int x
    for p in range(n):
        lo_mask = 0
        for x in range(rows):
            if not (x >> p) & 1:
                lo_mask |= <uint64_t>1 << x
        pat0[p] = lo_mask
    for k in range(rows):
        c = mask
        for p in range(n):
            stride = 1 << p
            lo_mask = pat0[p]
            if (k >> p) & 1:
                c = ((c >> stride) & lo_mask) | (((c << stride) ^ c) & (full ^ lo_mask))
            else:
                c = (c ^ ((c & lo_mask) << stride)) & full
        ad = popcount64(c)
        sh = ad - <int>(c & 1)
        l = 0
        w = c & ~<uint64_t>1
        while w:
            low = w & (~w + 1)
            w ^= low
            j = popcount64(low - 1)
            l += POPJ[j]
        if best_ad < 0 or ad < best_ad:
            best_ad = ad
        if best_sh < 0 or sh < best_sh:
            best_sh = sh
        if best_l < 0 or l < best_l:
            best_l = l
    out[0] = best_ad
    out[1] = best_sh
    out[2] = best_l


cdef void _arith_minima_c(int n, uint64_t mask, int* out) nogil:
    cdef int rows = 1 << n
    cdef int64_t arr[64]
    cdef int64_t lo, hi
    cdef int k, p, stride, i, j, ad, sh, l
    cdef int best_ad = -1, best_sh = -1, best_l = -1
    for k in range(rows):
        for i in range(rows):
            arr[i] = (mask >> i) & 1
        for p in range(n):
            stride = 1 << p
            if (k >> p) & 1:
                for i in range(rows):
                    if i & stride:
                        continue
                    lo = arr[i]
                    hi = arr[i | stride]
                    arr[i] = hi
                    arr[i | stride] = lo - hi
            else:
                for i in range(rows):
                    if i & stride:
                        continue
                    arr[i | stride] = arr[i | stride] - arr[i]
        ad = 0
        sh = 0
        l = 0
        for j in range(rows):
            if arr[j] != 0:
                ad += 1
                if j:
                    sh += 1
                    l += POPJ[j]
        if best_ad < 0 or ad < best_ad:
            best_ad = ad
        if best_sh < 0 or sh < best_sh:
            best_sh = sh
        if best_l < 0 or l < best_l:
            best_l = l
    out[0] = best_ad
    out[1] = best_sh
    out[2] = best_l


def min_sop_counts(int n, object on, double guard_s=60.0):
    """(terms, literals) of the exact minimum SOP cover of the ``on`` mask."""
    cdef int terms = 0, lits = 0
    _min_sop_c(n, <uint64_t>on, guard_s, &terms, &lits)
    return (terms, lits)


def rm_minima(int n, object mask):
    """Per-criterion (summands, conjunctions, literals) minima over polarities."""
    cdef int out[3]
    _rm_minima_c(n, <uint64_t>mask, out)
    return (out[0], out[1], out[2])


def arith_minima(int n, object mask):
    """Same as rm_minima for the arithmetic form."""
    cdef int out[3]
    _arith_minima_c(n, <uint64_t>mask, out)
    return (out[0], out[1], out[2])


cdef tuple _analyze_one(int n, uint64_t index, uint64_t full, double guard_s):
    cdef int terms = 0, lits = 0, conj
    cdef int rm_out[3]
    cdef int af_out[3]
    _min_sop_c(n, index, guard_s, &terms, &lits)
    conj = terms - 1 if index == full else terms
    _rm_minima_c(n, index, rm_out)
    _arith_minima_c(n, index, af_out)
    return (terms, conj, lits,
            rm_out[0], rm_out[1], rm_out[2],
            af_out[0], af_out[1], af_out[2])


def analyze_counts(int n, object index, double guard_s=60.0):
    """Nine cost counts for one function index; layout as in the pure twin."""
    cdef _Lattice lat = _lattice(n)
    return _analyze_one(n, <uint64_t>index, lat.full, guard_s)


def sweep_counts(int n, object start, object stop, double guard_s=60.0):
    """analyze_counts over a contiguous index range."""
    cdef _Lattice lat = _lattice(n)
    cdef uint64_t i, lo = <uint64_t>start, hi = <uint64_t>stop
    out = []
    i = lo
    while i < hi:
        out.append(_analyze_one(n, i, lat.full, guard_s))
        i += 1
    return out


def analyze_batch(int n, object indices, double guard_s=60.0):
    """analyze_counts over an explicit index sequence (sampled sweeps)."""
    cdef _Lattice lat = _lattice(n)
    out = []
    for idx in indices:
        out.append(_analyze_one(n, <uint64_t>idx, lat.full, guard_s))
    return out
