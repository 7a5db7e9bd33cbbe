"""JSON fixtures: a morphism over K_N with optional validated fibers.

Schema::

    {"p": 3, "ram": 2,
     "morphism": {"coeffs": [element, ...]},
     "fibers": [{"center": element, "roots": [element, ...]}, ...]}

An element is a list of ``["n/d", k]`` terms meaning ``sum (n/d) * pi^k``.
A bare ``"coeffs"`` key at top level is accepted in place of ``morphism``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .disc_morphism import DiscMorphism
from .errors import UsageError
from .fiber import validate_fiber
from .polynomial import Poly
from .valued_field import FieldParams, element_from_json


@dataclass
class Fixture:
    F: DiscMorphism
    fibers: list = field(default_factory=list)
    name: Optional[str] = None
    meta: dict = field(default_factory=dict)

    @property
    def params(self) -> FieldParams:
        return self.F.params

    def to_json(self) -> dict:
        out = {"p": self.params.p, "ram": self.params.N, "morphism": self.F.f.to_json()}
        if self.fibers:
            out["fibers"] = [fd.to_json() for fd in self.fibers]
        if self.name:
            out["name"] = self.name
        out.update(self.meta)
        return out


_KNOWN = {"p", "ram", "morphism", "coeffs", "fibers", "name"}


def parse_fixture(data: dict) -> Fixture:
    """Build and validate a fixture; morphism and fiber errors propagate."""
    try:
        params = FieldParams(int(data["p"]), int(data["ram"]))
        coeffs = data["morphism"]["coeffs"] if "morphism" in data else data["coeffs"]
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed fixture: missing {exc}") from exc
    F = DiscMorphism(Poly.from_json(params, coeffs))
    fibers = []
    for fb in data.get("fibers", []):
        c = element_from_json(params, fb["center"])
        roots = [element_from_json(params, r) for r in fb["roots"]]
        fibers.append(validate_fiber(F, c, roots))
    meta = {k: v for k, v in data.items() if k not in _KNOWN}
    return Fixture(F, fibers, data.get("name"), meta)


def load_fixture(path) -> Fixture:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    return parse_fixture(data)


def _compact(x) -> str:
    return json.dumps(x, separators=(", ", ": "))


def format_fixture(data: dict) -> str:
    """Indented JSON with every field element kept on one line."""
    lines = ["{"]
    items = list(data.items())
    for n, (key, val) in enumerate(items):
        end = "," if n + 1 < len(items) else ""
        if key == "morphism":
            body = ",\n".join(f"    {_compact(c)}" for c in val["coeffs"])
            lines.append(f'  "morphism": {{"coeffs": [\n{body}\n  ]}}{end}')
        elif key == "fibers":
            fibs = []
            for fb in val:
                roots = ",\n".join(f"      {_compact(r)}" for r in fb["roots"])
                fibs.append(f'    {{"center": {_compact(fb["center"])},\n     "roots": [\n{roots}\n     ]}}')
            lines.append('  "fibers": [\n' + ",\n".join(fibs) + f"\n  ]{end}")
        else:
            lines.append(f"  {json.dumps(key)}: {_compact(val)}{end}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_fixture(fx: Fixture, path) -> None:
    Path(path).write_text(format_fixture(fx.to_json()))


def fixture_paths(directory) -> list:
    return sorted(Path(directory).glob("*.json"))
