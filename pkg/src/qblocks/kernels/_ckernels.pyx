# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled convolution kernels on packed lattice keys.

Same contract as _pykernels.  Keys additionally have to fit in a signed
64-bit integer; the selection layer checks the packed width before routing
work here.  Coefficients stay arbitrary-precision Python ints.
"""


def binomial_product(vecs, long long bound, int hshift):
    cdef dict acc = {0: 1}
    cdef dict out
    cdef long long v, hv, k, k2
    cdef object ko, c, prev
    for vo in vecs:
        v = vo
        hv = v >> hshift
        out = dict(acc)
        for ko, c in acc.items():
            k = ko
            if (k >> hshift) + hv <= bound:
                k2 = k + v
                prev = out.get(k2)
                if prev is None:
                    out[k2] = c
                else:
                    out[k2] = prev + c
        acc = out
    return acc


def geometric_product(vecs, long long bound, int hshift):
    cdef dict acc = {0: 1}
    cdef dict out
    cdef set keys
    cdef list frontier, grown
    cdef long long v, hv, k, k2
    cdef object ko, c, tail
    for vo in vecs:
        v = vo
        hv = v >> hshift
        keys = set(acc)
        frontier = list(acc)
        while frontier:
            grown = []
            for ko in frontier:
                k = ko
                if (k >> hshift) + hv <= bound:
                    k2 = k + v
                    if k2 not in keys:
                        keys.add(k2)
                        grown.append(k2)
            frontier = grown
        out = {}
        for ko in sorted(keys):
            k = ko
            c = acc.get(ko)
            tail = out.get(k - v)
            if c is None:
                c = tail
            elif tail is not None:
                c = c + tail
            if c is not None and c != 0:
                out[ko] = c
        acc = out
    return acc


def convolve(dict a, dict b, long long bound, int hshift):
    cdef dict out = {}
    cdef long long ka, kb, ha, k
    cdef object kao, kbo, ca, cb, prev
    if len(b) < len(a):
        a, b = b, a
    for kao, ca in a.items():
        ka = kao
        ha = ka >> hshift
        for kbo, cb in b.items():
            kb = kbo
            if ha + (kb >> hshift) <= bound:
                k = ka + kb
                prev = out.get(k)
                if prev is None:
                    out[k] = ca * cb
                else:
                    out[k] = prev + ca * cb
    return out
