# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled term-map kernel.

Same interface and packing as _kernel_py: key = even_mask | odd_mask << 16,
term maps are dicts {int: Fraction}.  Masks fit in 32 bits, so the sign and
overlap work runs on C unsigned ints; coefficient arithmetic stays exact
Python Fractions.
"""

BACKEND_NAME = "compiled"

MASK = 0xFFFF
ODD_SHIFT = 16

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define KPOPCNT(x) __builtin_popcount((unsigned)(x))
    #define KCTZ(x) __builtin_ctz((unsigned)(x))
    #else
    static int KPOPCNT(unsigned v){int c=0;while(v){v&=v-1;++c;}return c;}
    static int KCTZ(unsigned v){int c=0;while(!(v&1u)){v>>=1;++c;}return c;}
    #endif
    """
    int KPOPCNT(unsigned int x) nogil
    int KCTZ(unsigned int x) nogil


def pack(even_mask, odd_mask):
    return even_mask | (odd_mask << ODD_SHIFT)


def even_bits(key):
    return key & MASK


def odd_bits(key):
    return key >> ODD_SHIFT


def key_parity(key):
    cdef unsigned int k = <unsigned int> key
    return KPOPCNT(k >> 16) & 1


cdef inline int _sign(unsigned int oa, unsigned int ob) nogil:
    cdef int inv = 0
    cdef int j
    while ob:
        j = KCTZ(ob)
        inv += KPOPCNT(oa >> (j + 1))
        ob &= ob - 1
    return -1 if (inv & 1) else 1


def koszul_sign(oa, ob):
    return _sign(<unsigned int> oa, <unsigned int> ob)


def mul_into(dict acc, dict a, dict b):
    cdef unsigned int ka, kb
    cdef object key, ca, cb, c, prev, tot
    for ka_obj, ca in a.items():
        ka = <unsigned int> ka_obj
        for kb_obj, cb in b.items():
            kb = <unsigned int> kb_obj
            if ka & kb:
                continue
            c = ca * cb
            if _sign(ka >> 16, kb >> 16) < 0:
                c = -c
            key = ka | kb
            prev = acc.get(key)
            if prev is None:
                acc[key] = c
            else:
                tot = prev + c
                if tot:
                    acc[key] = tot
                else:
                    del acc[key]


def mul_terms(dict a, dict b):
    cdef dict acc = {}
    mul_into(acc, a, b)
    return acc


def add_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef object prev, tot
    for k, c in b.items():
        prev = out.get(k)
        if prev is None:
            out[k] = c
        else:
            tot = prev + c
            if tot:
                out[k] = tot
            else:
                del out[k]
    return out


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
    cdef object prev, tot
    for k, c in b.items():
        prev = out.get(k)
        if prev is None:
            out[k] = -c
        else:
            tot = prev - c
            if tot:
                out[k] = tot
            else:
                del out[k]
    return out


def neg_terms(dict a):
    return {k: -c for k, c in a.items()}


def scale_terms(dict a, c):
    if not c:
        return {}
    return {k: c * v for k, v in a.items()}
