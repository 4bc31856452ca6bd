# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled exact predicate kernels.

Same contract as _kernel_py: homogeneous integer triples, sign results.
Inputs small enough for 128-bit arithmetic take a C fast path; anything
larger falls back to Python big-int arithmetic (still exact).
"""

from cpython.long cimport PyLong_AsLongLongAndOverflow

cdef extern from *:
    ctypedef long long i128 "__int128"

DEF FAST_BOUND = 1073741824  # 2**30: keeps the final determinant inside 128 bits


cdef inline int _sign_obj(object d):
    if d > 0:
        return 1
    elif d < 0:
        return -1
    return 0


def orient(ax, ay, aw, bx, by, bw, cx, cy, cw):
    """Sign of the cross product (b - a) x (c - a): 1 left, -1 right, 0 collinear."""
    cdef long long a0, a1, a2, b0, b1, b2, c0, c1, c2
    cdef int of = 0, bad = 0
    cdef i128 t1, t2, t3, t4, d

    a0 = PyLong_AsLongLongAndOverflow(ax, &of); bad |= of
    a1 = PyLong_AsLongLongAndOverflow(ay, &of); bad |= of
    a2 = PyLong_AsLongLongAndOverflow(aw, &of); bad |= of
    b0 = PyLong_AsLongLongAndOverflow(bx, &of); bad |= of
    b1 = PyLong_AsLongLongAndOverflow(by, &of); bad |= of
    b2 = PyLong_AsLongLongAndOverflow(bw, &of); bad |= of
    c0 = PyLong_AsLongLongAndOverflow(cx, &of); bad |= of
    c1 = PyLong_AsLongLongAndOverflow(cy, &of); bad |= of
    c2 = PyLong_AsLongLongAndOverflow(cw, &of); bad |= of

    if not bad and -FAST_BOUND < a0 < FAST_BOUND and -FAST_BOUND < a1 < FAST_BOUND \
            and a2 < FAST_BOUND and -FAST_BOUND < b0 < FAST_BOUND \
            and -FAST_BOUND < b1 < FAST_BOUND and b2 < FAST_BOUND \
            and -FAST_BOUND < c0 < FAST_BOUND and -FAST_BOUND < c1 < FAST_BOUND \
            and c2 < FAST_BOUND:
        t1 = <i128> b0 * a2 - <i128> a0 * b2
        t2 = <i128> c1 * a2 - <i128> a1 * c2
        t3 = <i128> b1 * a2 - <i128> a1 * b2
        t4 = <i128> c0 * a2 - <i128> a0 * c2
        d = t1 * t2 - t3 * t4
        if d > 0:
            return 1
        elif d < 0:
            return -1
        return 0

    return _sign_obj((bx * aw - ax * bw) * (cy * aw - ay * cw)
                     - (by * aw - ay * bw) * (cx * aw - ax * cw))


def cmp_q(an, ad, bn, bd):
    """Sign of an/ad - bn/bd for positive denominators."""
    cdef long long x0, x1, y0, y1
    cdef int of = 0, bad = 0
    cdef i128 d

    x0 = PyLong_AsLongLongAndOverflow(an, &of); bad |= of
    x1 = PyLong_AsLongLongAndOverflow(ad, &of); bad |= of
    y0 = PyLong_AsLongLongAndOverflow(bn, &of); bad |= of
    y1 = PyLong_AsLongLongAndOverflow(bd, &of); bad |= of

    if not bad:
        d = <i128> x0 * y1 - <i128> y0 * x1
        if d > 0:
            return 1
        elif d < 0:
            return -1
        return 0

    return _sign_obj(an * bd - bn * ad)


def backend_name():
    return "compiled"
