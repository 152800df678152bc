"""Natural width and the voltage-dependent region of tensile states.

The tensile region at activation ``k_v`` is::

    D(k_v) = {(l1, l2): l1 > nu(l2, k_v) and l2 > nu(l1, k_v)}

where ``nu(l, k_v)`` is the transverse stretch at which the transverse
stress vanishes.  Its boundary is the ``t2 = 0`` curve ``l2 = nu(l1)``
together with its mirror image; the two meet at equibiaxial vertices.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from . import kernels, solvers
from .errors import NotAvailable, SolverError, UnboundedError
from .material import MaterialModel, reference_modulus
from .stress import StateLike, _check_kv, as_state, diagonal_stress, stresses

log = logging.getLogger(__name__)

# residual tolerance on boundary points, relative to max(mu, 1)
EPS_RES = 1e-10
# stretch cap for bracket searches
LAMBDA_MAX = 1e6
VERTEX_SCAN_POINTS = 256
CRITICAL_SCAN_POINTS = 64

NH_CRITICAL_STRETCH = 2.0 ** (1.0 / 3.0)
NH_CRITICAL_FACTOR = 3.0 / 2.0 ** (11.0 / 3.0)


@dataclass(frozen=True)
class CriticalPoint:
    """Activation at which the two vertices of D coalesce, and their common stretch."""

    k_v_crit: float
    lambda_crit: float
    method: str = "scan-golden"

    def to_record(self) -> dict:
        return {"k_v_crit": self.k_v_crit, "lambda_crit": self.lambda_crit, "method": self.method}


@dataclass
class DomainBoundary:
    """Sampled ``t2 = 0`` curve at one activation.

    ``samples`` are ``(l1, l2)`` pairs ordered by ``l1``; ``residuals`` hold
    ``t2`` evaluated at each sample.  The mirror curve is the swap.
    """

    k_v: float
    samples: List[Tuple[float, float]]
    residuals: List[float]
    vertices: List[float]
    asymptote: Optional[float]
    warnings: List[str] = field(default_factory=list)

    def mirrored(self) -> List[Tuple[float, float]]:
        return [(b, a) for a, b in self.samples]

    def to_record(self) -> dict:
        return {
            "k_v": self.k_v,
            "vertices": list(self.vertices),
            "asymptote": self.asymptote,
            "samples": [[a, b] for a, b in self.samples],
            "residuals": list(self.residuals),
            "warnings": list(self.warnings),
        }

    def rows(self) -> List[dict]:
        """Long-format rows: curve samples, then vertices, then the asymptote."""
        out = [
            {"k_v": self.k_v, "kind": "curve", "lambda1": a, "lambda2": b, "residual": r}
            for (a, b), r in zip(self.samples, self.residuals)
        ]
        for v in self.vertices:
            out.append({"k_v": self.k_v, "kind": "vertex", "lambda1": v, "lambda2": v, "residual": None})
        if self.asymptote is not None:
            out.append({"k_v": self.k_v, "kind": "asymptote", "lambda1": self.asymptote,
                        "lambda2": math.inf, "residual": None})
        return out


# -- natural width -----------------------------------------------------------

def _generic_width(model: MaterialModel, lambda1: float, k_v: float) -> Optional[float]:
    def f(l2):
        return stresses(model, lambda1, l2, k_v)[1]

    seed = lambda1 ** -0.5
    bracket = solvers.expand_upward(f, seed, 2.0, LAMBDA_MAX)
    if bracket is None and f(seed) > 0:
        # tensile already at the classical width: the root lies below it
        bracket = solvers.expand_downward(f, seed, 2.0, 1.0 / LAMBDA_MAX)
    if bracket is None:
        return None
    a, b, fa, fb = bracket
    return solvers.bisect(f, a, b, fa, fb)


def natural_width(model: MaterialModel, lambda1: float, k_v: float) -> Optional[float]:
    """Transverse stretch ``nu(lambda1, k_v)`` at which ``t2`` vanishes.

    Mooney-Rivlin uses the closed form::

        nu = lambda1^(-1/2) [(c1 + c2 l^2) / (c1 + c2 l^2 - k_v l^2)]^(1/4)

    Returns ``None`` when there is no solution, i.e. at or beyond the
    vertical asymptote.  Generic models bracket the root upward from the
    zero-voltage width ``lambda1^(-1/2)`` (factor 2, capped at
    ``LAMBDA_MAX``) and take the first sign change.
    """
    lambda1 = float(lambda1)
    if not (math.isfinite(lambda1) and lambda1 > 0):
        raise ValueError(f"lambda1 must be positive and finite, got {lambda1!r}")
    k_v = _check_kv(k_v)
    if model.is_constant:
        w = kernels.mr_width(model.c1, model.c2, k_v, lambda1)
        return None if math.isnan(w) else w
    return _generic_width(model, lambda1, k_v)


def asymptote(model: MaterialModel, k_v: float) -> Optional[float]:
    """Stretch at which the natural width blows up, ``sqrt(c1/(k_v - c2))``.

    ``None`` when ``k_v <= c2`` (the region stays unbounded).  For generic
    models the onset of missing widths is bracketed and bisected; if none
    is found between ``1/LAMBDA_MAX`` and ``LAMBDA_MAX`` this raises
    ``NotAvailable``.
    """
    k_v = _check_kv(k_v)
    if model.is_constant:
        if k_v <= model.c2:
            return None
        return math.sqrt(model.c1 / (k_v - model.c2))

    def ok(x):
        return natural_width(model, x, k_v) is not None

    x = 1.0
    if ok(x):
        lo = x
        while ok(lo * 2.0):
            lo *= 2.0
            if lo >= LAMBDA_MAX:
                raise NotAvailable(f"no natural-width breakdown below {LAMBDA_MAX:g}")
        hi = lo * 2.0
    else:
        hi = x
        while not ok(hi / 2.0):
            hi /= 2.0
            if hi <= 1.0 / LAMBDA_MAX:
                raise NotAvailable("natural width missing at every sampled stretch")
        lo = hi / 2.0
    while hi - lo > 4e-16 * hi:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if ok(mid):
            lo = mid
        else:
            hi = mid
    return hi


def _asymptote_or_none(model, k_v):
    try:
        return asymptote(model, k_v)
    except NotAvailable:
        return None


# -- vertices ----------------------------------------------------------------

def diagonal_activation(model: MaterialModel, lam: float) -> float:
    """Activation at which the equibiaxial state ``l1 = l2 = lam`` is stress free.

    The diagonal stress is affine in ``k_v`` with slope ``-2 lam^4``, so
    this is explicit.  For Mooney-Rivlin::

        k_v(lam) = c1 (lam^-2 - lam^-8) + c2 (1 - lam^-6)
    """
    if model.is_constant:
        i2 = 1.0 / (lam * lam)
        i6 = i2 * i2 * i2
        return model.c1 * (i2 - i6 * i2) + model.c2 * (1.0 - i6)
    return diagonal_stress(model, lam, 0.0) / (2.0 * lam ** 4)


def _local_extrema(model, xs, gs):
    """Refined interior extrema of the diagonal activation over a scan."""
    extra = []
    for i in range(1, len(xs) - 1):
        if gs[i] >= gs[i - 1] and gs[i] >= gs[i + 1] and not (gs[i] == gs[i - 1] == gs[i + 1]):
            x, _ = solvers.golden_max(lambda t: diagonal_activation(model, t), xs[i - 1], xs[i + 1], 1e-14)
            extra.append(x)
        elif gs[i] <= gs[i - 1] and gs[i] <= gs[i + 1] and not (gs[i] == gs[i - 1] == gs[i + 1]):
            x, _ = solvers.golden_max(lambda t: -diagonal_activation(model, t), xs[i - 1], xs[i + 1], 1e-14)
            extra.append(x)
    return extra


def vertices(model: MaterialModel, k_v: float) -> List[float]:
    """Equibiaxial stretches where both boundary curves of D meet, ascending.

    Found by a sign-change scan of the diagonal stress over a 256-point log
    grid on ``[0.1, max(10, 2 lambda*)]``, with the reference stretch 1 and
    the refined local extrema of the diagonal activation added as nodes so
    that nearly coalesced roots are still separated, then bisection per
    bracket.
    """
    k_v = _check_kv(k_v)
    lam_star = _asymptote_or_none(model, k_v)
    hi = max(10.0, 2.0 * lam_star) if lam_star is not None else 10.0
    grid = solvers.logspace(0.1, hi, VERTEX_SCAN_POINTS)
    gs = [diagonal_activation(model, x) for x in grid]
    nodes = sorted(set(grid + _local_extrema(model, grid, gs) + [1.0]))

    def t(lam):
        return diagonal_stress(model, lam, k_v)

    values = [t(x) for x in nodes]
    if model.is_constant and (k_v < model.c2 or (k_v == model.c2 and model.c1 > 0)):
        # diagonal stress grows without bound: make sure the last root is in range
        while values[-1] < 0 and nodes[-1] < LAMBDA_MAX:
            nodes.append(min(nodes[-1] * 10.0, LAMBDA_MAX))
            values.append(t(nodes[-1]))

    roots = []
    for a, b, fa, fb in solvers.sign_changes(nodes, values):
        try:
            r = a if a == b else solvers.bisect(t, a, b, fa, fb)
        except SolverError as exc:
            raise SolverError(f"vertex bisection failed in [{a}, {b}]", **exc.diagnostics) from exc
        if not roots or r != roots[-1]:
            roots.append(r)
    return roots


# -- boundary and membership ---------------------------------------------------

def boundary(
    model: MaterialModel,
    k_v: float,
    lambda1_range: Sequence[float],
    n: int,
    lower_only: bool = True,
) -> DomainBoundary:
    """Sample the ``t2 = 0`` curve ``l2 = nu(l1, k_v)`` at ``n`` log-spaced nodes.

    With ``lower_only`` only the part with ``l1 >= l2`` is kept, which is
    the piece bounding D below the diagonal.  A range reaching past the
    asymptote is truncated just short of it and a warning is recorded.
    """
    k_v = _check_kv(k_v)
    lo, hi = (float(v) for v in lambda1_range)
    if n < 2:
        raise ValueError("n must be at least 2")
    if not (0 < lo < hi and math.isfinite(hi)):
        raise ValueError(f"invalid lambda1 range ({lo}, {hi})")
    warnings = []
    lam_star = _asymptote_or_none(model, k_v)
    if lam_star is not None and hi >= lam_star:
        msg = f"range [{lo:g}, {hi:g}] crosses the asymptote lambda*={lam_star!r} at k_v={k_v!r}; truncated"
        warnings.append(msg)
        log.debug(msg)
        hi = lam_star * (1.0 - 1e-6)
    samples, residuals = [], []
    if lo < hi:
        for l1 in solvers.logspace(lo, hi, n):
            l2 = natural_width(model, l1, k_v)
            if l2 is None or (lower_only and l1 < l2):
                continue
            samples.append((l1, l2))
            residuals.append(stresses(model, l1, l2, k_v)[1])
    elif lam_star is not None:
        warnings.append("range lies entirely beyond the asymptote; no samples")
    return DomainBoundary(k_v, samples, residuals, vertices(model, k_v), lam_star, warnings)


def contains(model: MaterialModel, s: StateLike, k_v: float) -> bool:
    """Strict membership in D; a missing natural width means not tensile."""
    s = as_state(s)
    w2 = natural_width(model, s.lambda1, k_v)
    if w2 is None or not s.lambda2 > w2:
        return False
    w1 = natural_width(model, s.lambda2, k_v)
    return w1 is not None and s.lambda1 > w1


# -- critical activation -----------------------------------------------------

def critical_activation(model: MaterialModel, method: str = "auto") -> CriticalPoint:
    """Largest activation for which D is non-empty, and the stretch where it vanishes.

    The two vertices coalesce at the maximum over ``lam > 1`` of
    :func:`diagonal_activation`.  ``method="auto"`` uses the Neo-Hookean
    closed form ``k = 3 mu / 2^(11/3)``, ``lam = 2^(1/3)`` when ``c2 = 0``
    and otherwise a 64-point log scan over ``(1, LAMBDA_MAX)`` refined by
    golden section; ``method="generic"`` forces the search.

    Raises
    ------
    UnboundedError
        If the scan maximum sits at the cap (no coalescence, e.g. ``c1 = 0``).
    """
    if method not in ("auto", "closed-form", "generic"):
        raise ValueError(f"unknown method {method!r}")
    nh = model.is_constant and model.c2 == 0.0
    if method == "closed-form" and not nh:
        raise NotAvailable("closed form exists only for Neo-Hookean materials")
    if nh and method != "generic":
        return CriticalPoint(NH_CRITICAL_FACTOR * 2.0 * model.c1, NH_CRITICAL_STRETCH, "closed-form")

    def g(lam):
        return diagonal_activation(model, lam)

    xs = solvers.logspace(1.0, LAMBDA_MAX, CRITICAL_SCAN_POINTS)
    gs = [g(x) for x in xs]
    i = max(range(len(xs)), key=gs.__getitem__)
    # c1 = 0 saturates at c2 in floating point: a cap value tying the maximum is unbounded too
    if i == len(xs) - 1 or gs[-1] >= gs[i] - 1e-12 * abs(gs[i]):
        raise UnboundedError(
            "diagonal activation still increasing at the stretch cap; vertices never coalesce",
            sup_estimate=gs[-1], stretch_cap=LAMBDA_MAX,
        )
    if i == 0 or gs[i] <= 0.0:
        raise SolverError("no positive interior maximum of the diagonal activation", values=gs[:4])
    x, gx = solvers.golden_max(g, xs[i - 1], xs[i + 1], 1e-14)
    return CriticalPoint(gx, x, "scan-golden")
