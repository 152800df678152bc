"""Incompressible isotropic materials described by their response functions.

A material is the pair of response functions ``beta1(l1, l2)`` and
``beta2(l1, l2)`` multiplying ``B`` and ``B^-1`` in the elastic Cauchy
stress.  Mooney-Rivlin has the constant pair ``(2 c1, -2 c2)``; Neo-Hookean
is the ``c2 = 0`` special case with ``c1 = mu / 2``.
"""

from __future__ import annotations

import ast
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

from .errors import DegenerateMaterial, NotAvailable

ResponseFunction = Callable[[float, float], float]

MOONEY_RIVLIN = "mooney-rivlin"
NEO_HOOKEAN = "neo-hookean"
GENERIC = "generic"


@dataclass(frozen=True)
class MaterialModel:
    """Immutable material description.

    For the constant (Mooney-Rivlin family) kinds ``c1``/``c2`` hold the
    moduli and the response callbacks are unused.  Generic models carry the
    two callbacks and, optionally, a declared shear modulus.
    """

    kind: str
    c1: float = 0.0
    c2: float = 0.0
    declared_mu: Optional[float] = None
    response1: Optional[ResponseFunction] = field(default=None, compare=False, repr=False)
    response2: Optional[ResponseFunction] = field(default=None, compare=False, repr=False)
    name: Optional[str] = None

    @property
    def is_constant(self) -> bool:
        """True for Mooney-Rivlin and Neo-Hookean models."""
        return self.kind != GENERIC

    def beta1(self, l1: float, l2: float) -> float:
        if self.is_constant:
            return 2.0 * self.c1
        return self.response1(l1, l2)

    def beta2(self, l1: float, l2: float) -> float:
        if self.is_constant:
            return -2.0 * self.c2
        return self.response2(l1, l2)

    def scaled(self, factor: float) -> "MaterialModel":
        """Same material with every modulus multiplied by ``factor``."""
        if factor <= 0 or not math.isfinite(factor):
            raise DegenerateMaterial(f"scale factor must be positive, got {factor!r}")
        if self.kind == NEO_HOOKEAN:
            return neo_hookean(2.0 * self.c1 * factor)
        if self.kind == MOONEY_RIVLIN:
            return mooney_rivlin(self.c1 * factor, self.c2 * factor)
        f1, f2 = self.response1, self.response2
        mu = None if self.declared_mu is None else self.declared_mu * factor
        return generic(
            lambda a, b: factor * f1(a, b),
            lambda a, b: factor * f2(a, b),
            shear_modulus=mu,
            name=self.name,
        )

    def describe(self) -> dict:
        """Plain-dict echo used in JSON output."""
        if self.kind == NEO_HOOKEAN:
            return {"kind": self.kind, "mu": 2.0 * self.c1, "c1": self.c1, "c2": self.c2}
        if self.kind == MOONEY_RIVLIN:
            return {"kind": self.kind, "c1": self.c1, "c2": self.c2}
        out = {"kind": self.kind}
        if self.name:
            out["name"] = self.name
        if self.declared_mu is not None:
            out["mu"] = self.declared_mu
        return out


def _check_modulus(name, value):
    value = float(value)
    if not math.isfinite(value):
        raise DegenerateMaterial(f"{name} must be finite, got {value!r}")
    if value < 0:
        raise DegenerateMaterial(f"{name} must be non-negative, got {value!r}")
    return value


def mooney_rivlin(c1: float, c2: float) -> MaterialModel:
    """Mooney-Rivlin material with ``beta1 = 2 c1`` and ``beta2 = -2 c2``.

    Raises
    ------
    DegenerateMaterial
        If either modulus is negative or non-finite, or both are zero.
    """
    c1 = _check_modulus("c1", c1)
    c2 = _check_modulus("c2", c2)
    if c1 + c2 <= 0:
        raise DegenerateMaterial("c1 and c2 are both zero")
    return MaterialModel(MOONEY_RIVLIN, c1, c2)


def neo_hookean(mu: float) -> MaterialModel:
    """Neo-Hookean material of shear modulus ``mu`` (``c1 = mu/2``, ``c2 = 0``)."""
    mu = float(mu)
    if not (math.isfinite(mu) and mu > 0):
        raise DegenerateMaterial(f"mu must be positive and finite, got {mu!r}")
    return MaterialModel(NEO_HOOKEAN, 0.5 * mu, 0.0)


def generic(
    beta1: ResponseFunction,
    beta2: ResponseFunction,
    shear_modulus: Optional[float] = None,
    name: Optional[str] = None,
) -> MaterialModel:
    """Material given by two pointwise response callbacks.

    Only finiteness of the callbacks is checked, and only when they are
    evaluated by the solvers.
    """
    if not (callable(beta1) and callable(beta2)):
        raise TypeError("beta1 and beta2 must be callables (l1, l2) -> float")
    if shear_modulus is not None:
        shear_modulus = float(shear_modulus)
        if not (math.isfinite(shear_modulus) and shear_modulus > 0):
            raise DegenerateMaterial(f"declared shear modulus must be positive, got {shear_modulus!r}")
    return MaterialModel(GENERIC, declared_mu=shear_modulus, response1=beta1, response2=beta2, name=name)


def shear_modulus(model: MaterialModel) -> float:
    """Small-strain shear modulus ``2 (c1 + c2)``.

    Generic models return their declared modulus or raise ``NotAvailable``.
    """
    if model.is_constant:
        return 2.0 * (model.c1 + model.c2)
    if model.declared_mu is None:
        raise NotAvailable("generic material has no declared shear modulus")
    return model.declared_mu


def reference_modulus(model: MaterialModel) -> float:
    """``max(mu, 1)``, the scale used by residual tolerances (1 if unknown)."""
    try:
        return max(shear_modulus(model), 1.0)
    except NotAvailable:
        return 1.0


# -- key-value parsing ------------------------------------------------------

_EXPR_FUNCS = {
    name: getattr(math, name)
    for name in ("exp", "log", "sqrt", "sin", "cos", "tan", "tanh", "cosh", "sinh", "atan", "fabs")
}
_EXPR_FUNCS["abs"] = abs
_EXPR_CONSTS = {"pi": math.pi, "e": math.e}
_EXPR_VARS = ("l1", "l2", "lambda1", "lambda2")
_EXPR_NODES = (
    ast.Expression, ast.BinOp, ast.UnaryOp, ast.Constant, ast.Name, ast.Load, ast.Call,
    ast.Add, ast.Sub, ast.Mult, ast.Div, ast.Pow, ast.USub, ast.UAdd,
)


def compile_response(expr: str) -> ResponseFunction:
    """Compile an arithmetic expression in ``l1``, ``l2`` into a callback.

    Only arithmetic, numeric literals, ``pi``/``e`` and a handful of
    ``math`` functions are accepted.
    """
    tree = ast.parse(expr.strip(), mode="eval")
    for node in ast.walk(tree):
        if not isinstance(node, _EXPR_NODES):
            raise DegenerateMaterial(f"unsupported syntax in response expression {expr!r}")
        if isinstance(node, ast.Constant) and not isinstance(node.value, (int, float)):
            raise DegenerateMaterial(f"non-numeric literal in {expr!r}")
        if isinstance(node, ast.Name) and node.id not in _EXPR_FUNCS \
                and node.id not in _EXPR_CONSTS and node.id not in _EXPR_VARS:
            raise DegenerateMaterial(f"unknown name {node.id!r} in {expr!r}")
        if isinstance(node, ast.Call) and not (
            isinstance(node.func, ast.Name) and node.func.id in _EXPR_FUNCS
        ):
            raise DegenerateMaterial(f"unsupported call in {expr!r}")
    code = compile(tree, "<response>", "eval")
    namespace = {"__builtins__": {}, **_EXPR_FUNCS, **_EXPR_CONSTS}

    def response(l1, l2):
        return eval(code, namespace, {"l1": l1, "l2": l2, "lambda1": l1, "lambda2": l2})

    return response


def from_config(section: Mapping[str, str]) -> MaterialModel:
    """Build a material from a config section.

    ``kind = mooney-rivlin`` needs ``c1`` and ``c2``; ``kind = neo-hookean``
    needs ``mu``; ``kind = generic`` needs ``beta1`` and ``beta2``
    expressions in ``l1``, ``l2`` and accepts an optional ``mu``.
    """
    kind = section.get("kind", "").strip().lower().replace("_", "-")
    try:
        if kind in ("mooney-rivlin", "mr"):
            return mooney_rivlin(float(section["c1"]), float(section["c2"]))
        if kind in ("neo-hookean", "nh"):
            return neo_hookean(float(section["mu"]))
        if kind == GENERIC:
            mu = section.get("mu")
            return generic(
                compile_response(section["beta1"]),
                compile_response(section["beta2"]),
                shear_modulus=None if mu in (None, "") else float(mu),
                name=section.get("name"),
            )
    except KeyError as exc:
        raise DegenerateMaterial(f"material kind {kind!r} requires key {exc.args[0]!r}") from None
    except SyntaxError as exc:
        raise DegenerateMaterial(f"bad response expression: {exc.msg}") from None
    raise DegenerateMaterial(f"unknown material kind {section.get('kind')!r}")
