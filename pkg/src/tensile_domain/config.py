"""Run configuration: sectioned key-value files plus command-line overrides.

Example::

    [material]
    kind = mooney-rivlin
    c1 = 1
    c2 = 1

    [load]
    k_v = 0, 0.5, 1.0

    [boundary]
    lambda1_min = 0.5
    lambda1_max = 5
    n = 200

Overrides are ``section.key=value`` strings and win over the file.
"""

from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence

from .errors import TensileDomainError
from .material import MaterialModel, from_config
from .stress import ElectricLoad, activation_parameter


class ConfigError(TensileDomainError, ValueError):
    """Invalid or incomplete run configuration."""


@dataclass
class RunConfig:
    material: Optional[MaterialModel]
    material_section: Dict[str, str]
    k_values: List[float]
    sections: Dict[str, Dict[str, str]] = field(default_factory=dict)

    def section(self, name: str) -> Dict[str, str]:
        return self.sections.get(name, {})

    def get(self, section: str, key: str, default=None):
        return self.sections.get(section, {}).get(key, default)

    def single_k(self) -> float:
        if len(self.k_values) != 1:
            raise ConfigError(f"exactly one activation value expected, got {len(self.k_values)}")
        return self.k_values[0]


def parse_float(text, what: str) -> float:
    try:
        v = float(text)
    except (TypeError, ValueError):
        raise ConfigError(f"{what}: not a number: {text!r}") from None
    if not math.isfinite(v):
        raise ConfigError(f"{what}: must be finite, got {text!r}")
    return v


def parse_list(text: str, what: str) -> List[float]:
    """Comma/whitespace separated numbers, or ``start:stop:count`` (inclusive linspace)."""
    text = (text or "").strip()
    if not text:
        return []
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"{what}: range must be start:stop:count, got {text!r}")
        start, stop = parse_float(parts[0], what), parse_float(parts[1], what)
        count = parse_float(parts[2], what)
        if count != int(count) or count < 1:
            raise ConfigError(f"{what}: count must be a positive integer, got {parts[2]!r}")
        count = int(count)
        if count == 1:
            return [start]
        return [start + (stop - start) * i / (count - 1) for i in range(count)]
    return [parse_float(tok, what) for tok in text.replace(",", " ").split()]


def parse_overrides(items: Sequence[str]) -> Dict[str, Dict[str, str]]:
    out: Dict[str, Dict[str, str]] = {}
    for item in items:
        key, sep, value = item.partition("=")
        section, dot, name = key.strip().partition(".")
        if not sep or not dot or not section or not name:
            raise ConfigError(f"override must look like section.key=value, got {item!r}")
        out.setdefault(section.lower(), {})[name.strip().lower()] = value.strip()
    return out


def read_sections(path: Optional[str]) -> Dict[str, Dict[str, str]]:
    if path is None:
        return {}
    parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
    try:
        with open(path, encoding="utf-8") as fh:
            parser.read_file(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    except configparser.Error as exc:
        raise ConfigError(f"malformed config {path}: {exc}") from None
    return {s.lower(): dict(parser[s]) for s in parser.sections()}


def _load_values(section: Dict[str, str]) -> List[float]:
    has_k = "k_v" in section
    triple = [k for k in ("permittivity", "voltage", "thickness") if k in section]
    if has_k and triple:
        raise ConfigError("[load] gives both k_v and permittivity/voltage/thickness")
    if has_k:
        values = parse_list(section["k_v"], "load.k_v")
        for v in values:
            if v < 0:
                raise ConfigError(f"load.k_v must be non-negative, got {v!r}")
        return values
    if not triple:
        return []
    if len(triple) != 3:
        raise ConfigError("[load] needs all of permittivity, voltage, thickness")
    eps = parse_float(section["permittivity"], "load.permittivity")
    h = parse_float(section["thickness"], "load.thickness")
    out = []
    for v in parse_list(section["voltage"], "load.voltage"):
        out.append(activation_parameter(ElectricLoad(permittivity=eps, voltage=v, thickness=h)))
    return out


def build(
    path: Optional[str],
    overrides: Sequence[str] = (),
    kv: Optional[str] = None,
    require_material: bool = True,
) -> RunConfig:
    """Merge file and overrides into a :class:`RunConfig`.

    ``kv`` replaces the whole ``[load]`` section with ``k_v = kv``.
    """
    sections = read_sections(path)
    for name, values in parse_overrides(overrides).items():
        sections.setdefault(name, {}).update(values)
    if kv is not None:
        sections["load"] = {"k_v": kv}
    material_section = sections.get("material")
    material = None
    if material_section:
        material = from_config(material_section)
    elif require_material:
        raise ConfigError("missing [material] section")
    k_values = _load_values(sections.get("load", {}))
    return RunConfig(material, material_section or {}, k_values, sections)
