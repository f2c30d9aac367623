# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled propagation engine: multi-word bitsets in flat C arrays.

Mirrors the contract of _pycore.PropagationCore. The engine is bound to a
single graph; fixed_point and layer_masks take and return Python ints used
as vertex bitmasks.
"""

from libc.stdlib cimport calloc, free
from libc.string cimport memcpy
from libc.stdint cimport uint64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define PD_POPCOUNT(x) __builtin_popcountll(x)
    #define PD_CTZ(x) __builtin_ctzll(x)
    #else
    static int PD_POPCOUNT(unsigned long long x){int c=0;while(x){x&=x-1;c++;}return c;}
    static int PD_CTZ(unsigned long long x){int c=0;while(!(x&1ULL)){x>>=1;c++;}return c;}
    #endif
    """
    int PD_POPCOUNT(uint64_t x) nogil
    int PD_CTZ(uint64_t x) nogil

DEF WORD_MASK = 0xFFFFFFFFFFFFFFFF


cdef class PropagationCore:
    cdef uint64_t* adj      # n rows of W words each
    cdef uint64_t* cur
    cdef uint64_t* nxt
    cdef int n
    cdef int W

    backend = "compiled"

    def __cinit__(self, adj_masks, int n):
        cdef int v, w
        cdef object row
        self.n = n
        self.W = (n + 63) // 64 if n > 0 else 1
        self.adj = <uint64_t*> calloc(max(n, 1) * self.W, sizeof(uint64_t))
        self.cur = <uint64_t*> calloc(self.W, sizeof(uint64_t))
        self.nxt = <uint64_t*> calloc(self.W, sizeof(uint64_t))
        if self.adj == NULL or self.cur == NULL or self.nxt == NULL:
            raise MemoryError()
        for v in range(n):
            row = adj_masks[v]
            for w in range(self.W):
                self.adj[v * self.W + w] = <uint64_t> (row & WORD_MASK)
                row >>= 64

    def __dealloc__(self):
        free(self.adj)
        free(self.cur)
        free(self.nxt)

    cdef void _load(self, object mask):
        cdef int w
        for w in range(self.W):
            self.cur[w] = <uint64_t> (mask & WORD_MASK)
            mask >>= 64

    cdef object _store(self):
        cdef object out = 0
        cdef int w
        for w in range(self.W - 1, -1, -1):
            out = (out << 64) | self.cur[w]
        return out

    cdef bint _domination(self) nogil:
        """nxt = cur | N(cur); copy into cur; return whether it changed."""
        cdef int w, t, v
        cdef uint64_t m
        cdef bint changed = 0
        memcpy(self.nxt, self.cur, self.W * sizeof(uint64_t))
        for w in range(self.W):
            m = self.cur[w]
            while m:
                v = w * 64 + PD_CTZ(m)
                m &= m - 1
                for t in range(self.W):
                    self.nxt[t] |= self.adj[v * self.W + t]
        for w in range(self.W):
            if self.nxt[w] != self.cur[w]:
                changed = 1
            self.cur[w] = self.nxt[w]
        return changed

    cdef bint _force_round(self) nogil:
        """One simultaneous forcing round on cur; return whether it grew."""
        cdef int w, t, v, cnt, hit_word
        cdef uint64_t m, u, hit_bits
        cdef bint changed = 0
        memcpy(self.nxt, self.cur, self.W * sizeof(uint64_t))
        for w in range(self.W):
            m = self.cur[w]
            while m:
                v = w * 64 + PD_CTZ(m)
                m &= m - 1
                cnt = 0
                hit_word = 0
                hit_bits = 0
                for t in range(self.W):
                    u = self.adj[v * self.W + t] & ~self.cur[t]
                    if u:
                        cnt += PD_POPCOUNT(u)
                        if cnt > 1:
                            break
                        hit_word = t
                        hit_bits = u
                if cnt == 1:
                    self.nxt[hit_word] |= hit_bits
                    changed = 1
        memcpy(self.cur, self.nxt, self.W * sizeof(uint64_t))
        return changed

    def fixed_point(self, mask):
        """Run to the fixed point; return (final mask, least l with S[l+1] == S[l])."""
        cdef int steps
        self._load(mask)
        if not self._domination():
            return self._store(), 0
        steps = 1
        while self._force_round():
            steps += 1
        return self._store(), steps

    def layer_masks(self, mask):
        """All distinct layers S[0], S[1], ... up to the fixed point."""
        self._load(mask)
        layers = [self._store()]
        if not self._domination():
            return layers
        layers.append(self._store())
        while self._force_round():
            layers.append(self._store())
        return layers
