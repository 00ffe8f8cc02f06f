"""File formats and named objects used by the command line."""

from __future__ import annotations

import json
import re
from pathlib import Path

from .cochain import Cochain
from .cycles import FormalChain
from .diagram import KnotDiagram, builtin_knots, load_knot, parse_pd
from .errors import InputError
from .invariants import TriplePointData
from .quandle import (AlexanderModule, FiniteQuandle, make_alexander, make_dihedral, make_qs6,
                      make_trivial)

__all__ = ["named_quandle", "load_quandle", "load_cochain", "load_diagram", "load_chain",
           "load_triple_points", "read_json", "dump_json"]


def read_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def named_quandle(text: str) -> FiniteQuandle:
    """``T4``, ``R3``, ``S4``, ``QS6`` or an Alexander spec ``5:T+2``."""
    s = text.strip()
    m = re.fullmatch(r"T_?(\d+)", s)
    if m:
        return make_trivial(int(m.group(1)))
    m = re.fullmatch(r"R_?(\d+)", s)
    if m:
        return make_dihedral(int(m.group(1)))
    if re.fullmatch(r"S_?4", s):
        q = make_alexander(2, [1, 1, 1])
        return FiniteQuandle(q.table, label="S4")
    if s.upper() == "QS6":
        return make_qs6()
    m = re.fullmatch(r"(\d+)\s*:\s*(.+)", s)
    if m:
        return AlexanderModule(int(m.group(1)), m.group(2)).as_quandle()
    raise InputError(f"unknown quandle {text!r}")


def load_quandle(spec) -> FiniteQuandle:
    """A quandle from a JSON file, a JSON object, or a name (see :func:`named_quandle`)."""
    if isinstance(spec, FiniteQuandle):
        return spec
    if isinstance(spec, dict):
        return FiniteQuandle.from_json(spec)
    path = Path(str(spec))
    if path.suffix == ".json" or path.is_file():
        return FiniteQuandle.from_json(read_json(path))
    return named_quandle(str(spec))


def load_cochain(spec, quandle: FiniteQuandle | None = None) -> Cochain:
    """A cochain from JSON; the quandle comes from ``quandle`` or the file.

    The file's ``quandle`` entry may be a full quandle object (with a
    table), a name, or ``{"label": ..., "size": ...}`` with a known label.
    """
    data = spec if isinstance(spec, dict) else read_json(spec)
    if quandle is None:
        info = data.get("quandle")
        if isinstance(info, dict) and "table" in info:
            quandle = FiniteQuandle.from_json(info)
        elif isinstance(info, dict) and info.get("label"):
            quandle = named_quandle(str(info["label"]))
        elif isinstance(info, str):
            quandle = load_quandle(info)
        else:
            raise InputError("cochain file does not identify its quandle; pass --quandle")
    return Cochain.from_json(data, quandle)


def load_diagram(spec) -> KnotDiagram:
    """A diagram from a PD file or a stored name such as ``3_1``."""
    if isinstance(spec, KnotDiagram):
        return spec
    path = Path(str(spec))
    if path.is_file():
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
        return parse_pd(text, name=path.stem)
    name = path.name[:-3] if path.name.endswith(".pd") else str(spec)
    if name in builtin_knots() or name in ("0_1", "unknot"):
        return load_knot(name)
    raise InputError(f"no PD file or stored diagram {spec!r}")


def load_chain(spec) -> FormalChain:
    data = spec if isinstance(spec, dict) else read_json(spec)
    return FormalChain.from_json(data)


def load_triple_points(spec) -> list[TriplePointData]:
    """One or several colored triple-point lists.

    Accepts ``{"triple_points": [...]}``, ``{"colorings": [[...], ...]}`` or
    a bare list of records.
    """
    data = spec if isinstance(spec, (dict, list)) else read_json(spec)
    try:
        if isinstance(data, dict) and "colorings" in data:
            return [TriplePointData.from_json(d) for d in data["colorings"]]
        return [TriplePointData.from_json(data)]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad triple-point data: {exc}") from None
