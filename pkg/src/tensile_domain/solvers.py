"""Small scalar solvers: bracketed bisection, bracket search, golden section."""

from __future__ import annotations

import math
from typing import Callable, Optional, Sequence

from .errors import SolverError

INVPHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1/phi
INVPHI2 = (3.0 - math.sqrt(5.0)) / 2.0  # 1/phi^2


def _sign(x: float) -> int:
    return (x > 0) - (x < 0)


def bisect(
    f: Callable[[float], float],
    a: float,
    b: float,
    fa: Optional[float] = None,
    fb: Optional[float] = None,
    xtol: float = 0.0,
    maxiter: int = 200,
) -> float:
    """Root of ``f`` in ``[a, b]`` by bisection, polished by one secant step.

    ``f(a)`` and ``f(b)`` must differ in sign.  With ``xtol = 0`` the loop
    runs until the midpoint stops moving in floating point.
    """
    fa = f(a) if fa is None else fa
    fb = f(b) if fb is None else fb
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if _sign(fa) == _sign(fb):
        raise SolverError("root not bracketed", a=a, b=b, fa=fa, fb=fb)
    for _ in range(maxiter):
        m = 0.5 * (a + b)
        if m <= min(a, b) or m >= max(a, b) or abs(b - a) <= xtol:
            break
        fm = f(m)
        if fm == 0.0:
            return m
        if _sign(fm) == _sign(fa):
            a, fa = m, fm
        else:
            b, fb = m, fm
    else:
        if xtol > 0:
            raise SolverError("bisection did not converge", a=a, b=b, fa=fa, fb=fb, maxiter=maxiter)
    # secant polish inside the final bracket, kept only if it helps
    x = a - fa * (b - a) / (fb - fa)
    best, fbest = (a, fa) if abs(fa) <= abs(fb) else (b, fb)
    if min(a, b) < x < max(a, b):
        fx = f(x)
        if abs(fx) < abs(fbest):
            return x
    return best


def expand_upward(
    f: Callable[[float], float],
    start: float,
    factor: float = 2.0,
    cap: float = 1e6,
) -> Optional[tuple]:
    """Walk ``start, start*factor, ...`` until ``f`` changes sign.

    Returns ``(a, b, fa, fb)`` for the first sign change, or ``None`` when
    ``cap`` is passed first.
    """
    a, fa = start, f(start)
    if fa == 0.0:
        return a, a, fa, fa
    while a < cap:
        b = min(a * factor, cap)
        fb = f(b)
        if fb == 0.0 or _sign(fb) != _sign(fa):
            return a, b, fa, fb
        a, fa = b, fb
    return None


def expand_downward(
    f: Callable[[float], float],
    start: float,
    factor: float = 2.0,
    floor: float = 1e-6,
) -> Optional[tuple]:
    """Mirror of :func:`expand_upward` walking towards ``floor``."""
    b, fb = start, f(start)
    while b > floor:
        a = max(b / factor, floor)
        fa = f(a)
        if fa == 0.0 or _sign(fa) != _sign(fb):
            return a, b, fa, fb
        b, fb = a, fa
    return None


def sign_changes(xs: Sequence[float], fs: Sequence[float]) -> list:
    """Brackets ``(x_i, x_{i+1}, f_i, f_{i+1})`` where consecutive values change sign.

    An exact zero at a node yields a degenerate bracket ``(x, x, 0, 0)``.
    """
    out = []
    for i in range(len(xs)):
        if fs[i] == 0.0:
            out.append((xs[i], xs[i], 0.0, 0.0))
        elif i + 1 < len(xs) and fs[i + 1] != 0.0 and _sign(fs[i]) != _sign(fs[i + 1]):
            out.append((xs[i], xs[i + 1], fs[i], fs[i + 1]))
    return out


def golden_max(
    f: Callable[[float], float],
    a: float,
    b: float,
    xtol: float = 1e-10,
    maxiter: int = 500,
) -> tuple:
    """Golden-section search for the maximum of a unimodal ``f`` on ``[a, b]``.

    Returns ``(x, f(x))``.
    """
    h = b - a
    c = a + INVPHI2 * h
    d = a + INVPHI * h
    fc, fd = f(c), f(d)
    for _ in range(maxiter):
        if h <= xtol * max(1.0, abs(c)):
            break
        if fc >= fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + INVPHI2 * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + INVPHI * h
            fd = f(d)
    return (c, fc) if fc >= fd else (d, fd)


def logspace(lo: float, hi: float, n: int) -> list:
    """``n`` points uniformly spaced in ``log`` between ``lo`` and ``hi`` inclusive."""
    if n < 2:
        raise ValueError("need at least two points")
    la, lb = math.log(lo), math.log(hi)
    pts = [math.exp(la + (lb - la) * i / (n - 1)) for i in range(n)]
    pts[0], pts[-1] = lo, hi
    return pts
