# cython: language_level=3
# Compiled twin of pure.py.  Same contracts, same outputs, fewer interpreter
# dispatches in the hot loops.  Coefficients stay exact Fraction objects;
# the win here is loop and tuple overhead, not arithmetic.

compiled = True


def add_terms(dict a, dict b):
    """Return a + b as a fresh dict; zero coefficients are dropped."""
    cdef dict out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = c
        else:
            s = s + c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
    for k, c in b.items():
        s = out.get(k)
        if s is None:
            out[k] = -c
        else:
            s = s - c
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def scale_terms(dict a, c):
    cdef dict out = {}
    if not c:
        return out
    for k, v in a.items():
        out[k] = c * v
    return out


def mul_terms(dict a, dict b):
    """Product of two term dicts over the same variables (exponents add)."""
    cdef dict out = {}
    cdef Py_ssize_t i, n
    cdef tuple ka, kb, k
    for ka, ca in a.items():
        n = len(ka)
        for kb, cb in b.items():
            k = tuple([ka[i] + kb[i] for i in range(n)])
            c = ca * cb
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out


def concat_mul_terms(dict a, dict b):
    """Product where the factors live on disjoint variable blocks, so the
    exponent tuples concatenate instead of adding."""
    cdef dict out = {}
    cdef tuple ka, kb, k
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            c = ca * cb
            s = out.get(k)
            if s is None:
                out[k] = c
            else:
                s = s + c
                if s:
                    out[k] = s
                else:
                    del out[k]
    return out
