"""Pure-Python exact predicate kernels.

Points enter as homogeneous integer triples (X, Y, W) with W > 0, so every
predicate is a sign computation over arbitrary-precision integers.  A compiled
twin lives in _kernel_c.pyx; keep the two implementations in lockstep.
"""


def orient(ax, ay, aw, bx, by, bw, cx, cy, cw):
    """Sign of the cross product (b - a) x (c - a): 1 left, -1 right, 0 collinear."""
    d = (bx * aw - ax * bw) * (cy * aw - ay * cw) - (by * aw - ay * bw) * (cx * aw - ax * cw)
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def cmp_q(an, ad, bn, bd):
    """Sign of an/ad - bn/bd for positive denominators."""
    d = an * bd - bn * ad
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def backend_name():
    return "python"
