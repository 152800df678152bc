"""Pure-Python Mooney-Rivlin kernels.

These are the reference implementation of the compiled kernels in
``_kernels.pyx``; both must perform the same floating-point operations in
the same order so that results agree bit for bit.

Regime codes: 0 tense, 1 wrinkled along 1, 2 wrinkled along 2, 3 slack.
Flag bits: 1 on boundary, 2 natural width missing (beyond the asymptote),
4 uniaxial relaxed stress not positive.
"""

from math import inf, isnan, nan, sqrt

import numpy as np

TENSE, WRINKLED_1, WRINKLED_2, SLACK = 0, 1, 2, 3
FLAG_BOUNDARY, FLAG_NO_WIDTH, FLAG_UNIAXIAL = 1, 2, 4

BACKEND = "python"


def mr_stress(c1, c2, kv, l1, l2):
    a = l1 * l1
    b = l2 * l2
    ab = a * b
    inv = 1.0 / ab
    t1 = 2.0 * (c1 * (a - inv) - c2 * (1.0 / a - ab) - kv * ab)
    t2 = 2.0 * (c1 * (b - inv) - c2 * (1.0 / b - ab) - kv * ab)
    return t1, t2


def mr_width(c1, c2, kv, lam):
    """Natural width, NaN when the point is at or past the asymptote."""
    a = lam * lam
    num = c1 + c2 * a
    den = num - kv * a
    if den <= 0.0:
        return nan
    if kv > c2 and lam >= sqrt(c1 / (kv - c2)):
        return nan
    return (1.0 / sqrt(lam)) * sqrt(sqrt(num / den))


def mr_point(c1, c2, kv, l1, l2, tau):
    """Classify one state; returns (t1, t2, r1, r2, regime, flags)."""
    t1, t2 = mr_stress(c1, c2, kv, l1, l2)
    w_for_1 = mr_width(c1, c2, kv, l2)
    w_for_2 = mr_width(c1, c2, kv, l1)
    m1 = -inf if isnan(w_for_1) else l1 - w_for_1
    m2 = -inf if isnan(w_for_2) else l2 - w_for_2
    flags = 0
    if abs(m1) <= tau or abs(m2) <= tau:
        flags |= FLAG_BOUNDARY
    tense1 = m1 > tau
    tense2 = m2 > tau
    if tense1 and tense2:
        return t1, t2, t1, t2, TENSE, flags
    if tense1:
        if isnan(w_for_2):
            return t1, t2, 0.0, 0.0, WRINKLED_1, flags | FLAG_NO_WIDTH
        r1 = mr_stress(c1, c2, kv, l1, w_for_2)[0]
        if r1 <= 0.0:
            return t1, t2, 0.0, 0.0, WRINKLED_1, flags | FLAG_UNIAXIAL
        return t1, t2, r1, 0.0, WRINKLED_1, flags
    if tense2:
        if isnan(w_for_1):
            return t1, t2, 0.0, 0.0, WRINKLED_2, flags | FLAG_NO_WIDTH
        r2 = mr_stress(c1, c2, kv, w_for_1, l2)[1]
        if r2 <= 0.0:
            return t1, t2, 0.0, 0.0, WRINKLED_2, flags | FLAG_UNIAXIAL
        return t1, t2, 0.0, r2, WRINKLED_2, flags
    return t1, t2, 0.0, 0.0, SLACK, flags


def mr_grid(c1, c2, kv, l1, l2, tau):
    """Evaluate ``mr_point`` over paired 1-D arrays of stretches."""
    l1 = np.ascontiguousarray(l1, dtype=np.float64)
    l2 = np.ascontiguousarray(l2, dtype=np.float64)
    if l1.shape != l2.shape or l1.ndim != 1:
        raise ValueError("l1 and l2 must be 1-D arrays of equal length")
    n = l1.shape[0]
    out = np.empty((4, n), dtype=np.float64)
    regime = np.empty(n, dtype=np.int8)
    flags = np.empty(n, dtype=np.int8)
    for i, (x, y) in enumerate(zip(l1.tolist(), l2.tolist())):
        t1, t2, r1, r2, reg, flg = mr_point(c1, c2, kv, x, y, tau)
        out[0, i] = t1
        out[1, i] = t2
        out[2, i] = r1
        out[3, i] = r2
        regime[i] = reg
        flags[i] = flg
    return out[0], out[1], out[2], out[3], regime, flags
