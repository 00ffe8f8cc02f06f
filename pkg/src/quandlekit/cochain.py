"""Cochains on a finite quandle with values in an Alexander module."""

from __future__ import annotations

from itertools import product

import numpy as np

from .errors import InputError
from .quandle import AlexanderModule, FiniteQuandle

__all__ = ["Cochain", "as_module"]


def as_module(coefficients) -> AlexanderModule:
    """Coerce ``None``/``0`` (integers), an int ``q`` (``Z_q``) or a module."""
    if coefficients is None:
        return AlexanderModule.integers()
    if isinstance(coefficients, AlexanderModule):
        return coefficients
    if isinstance(coefficients, str):
        return AlexanderModule.from_spec(coefficients)
    q = int(coefficients)
    return AlexanderModule.integers() if q == 0 else AlexanderModule.zmod(q)


class Cochain:
    """A map from ``level``-tuples of quandle elements to a coefficient module.

    Values are stored densely as an integer array of shape
    ``(size**level, degree)``; row ``i`` holds the coefficient vector of the
    ``i``-th tuple in lexicographic order.
    """

    def __init__(self, quandle: FiniteQuandle, level: int, coefficients, values=None):
        self.quandle = quandle
        self.level = int(level)
        self.coefficients = as_module(coefficients)
        n = quandle.size ** self.level
        d = self.coefficients.degree
        if values is None:
            arr = np.zeros((n, d), dtype=np.int64)
        else:
            arr = np.asarray(values, dtype=np.int64).reshape(n, d)
        if self.coefficients.p:
            arr = np.mod(arr, self.coefficients.p)
        arr.setflags(write=False)
        self.values = arr

    # ------------------------------------------------------------ builders
    @classmethod
    def from_dict(cls, quandle, level, coefficients, mapping) -> "Cochain":
        """Build from ``{tuple: element}``; omitted tuples are 0.

        Elements are module element indices (ints) or coefficient vectors.
        """
        c = cls(quandle, level, coefficients)
        vals = c.values.copy()
        mod = c.coefficients
        for tup, v in mapping.items():
            tup = tuple(int(x) for x in tup)
            vals[c.tuple_index(tup)] += np.asarray(
                mod.vector(int(v)) if np.ndim(v) == 0 else v, dtype=np.int64)
        return cls(quandle, level, mod, vals)

    @classmethod
    def chi(cls, quandle, tup, coefficients, value=1) -> "Cochain":
        """Characteristic function of a tuple, scaled by ``value``."""
        tup = tuple(tup)
        return cls.from_dict(quandle, len(tup), coefficients, {tup: value})

    @classmethod
    def from_function(cls, quandle, level, coefficients, func) -> "Cochain":
        mod = as_module(coefficients)
        rows = [mod.vector(int(func(*t))) for t in product(range(quandle.size), repeat=level)]
        return cls(quandle, level, mod, np.array(rows).reshape(-1, mod.degree))

    @classmethod
    def random(cls, quandle, level, coefficients, rng, theory="quandle") -> "Cochain":
        mod = as_module(coefficients)
        n = quandle.size ** level
        hi = mod.p if mod.p else 5
        lo = 0 if mod.p else -5
        vals = rng.integers(lo, hi, size=(n, mod.degree))
        c = cls(quandle, level, mod, vals)
        return c.restrict(theory)

    # ------------------------------------------------------------- access
    def tuple_index(self, tup) -> int:
        n = self.quandle.size
        if len(tup) != self.level or any(not 0 <= x < n for x in tup):
            raise InputError(f"tuple {tup} is not a {self.level}-tuple of elements of [0, {n})")
        idx = 0
        for x in tup:
            idx = idx * n + x
        return idx

    def tuples(self):
        return product(range(self.quandle.size), repeat=self.level)

    def vector(self, *tup) -> np.ndarray:
        return self.values[self.tuple_index(tuple(tup))]

    def __call__(self, *tup) -> int:
        return self.coefficients.index(self.vector(*tup))

    def support(self) -> dict[tuple, int]:
        out = {}
        for i, t in enumerate(self.tuples()):
            if self.values[i].any():
                out[t] = self.coefficients.index(self.values[i])
        return out

    def is_zero(self) -> bool:
        return not self.values.any()

    def degenerate_support(self) -> list[tuple]:
        return [t for t in self.support() if any(t[i] == t[i + 1] for i in range(len(t) - 1))]

    def quandle_part(self) -> "Cochain":
        """Copy with all degenerate tuples set to zero."""
        return self.restrict("quandle")

    def restrict(self, theory: str) -> "Cochain":
        """Copy keeping only the values on the generators of ``theory``.

        Quandle cochains vanish on degenerate tuples; degenerate cochains
        are functions on the degenerate tuples, so other values are dropped.
        """
        if theory == "rack":
            return self
        if theory not in ("quandle", "degenerate"):
            raise InputError(f"unknown theory {theory!r}")
        keep_degenerate = theory == "degenerate"
        vals = self.values.copy()
        for i, t in enumerate(self.tuples()):
            if any(t[k] == t[k + 1] for k in range(len(t) - 1)) != keep_degenerate:
                vals[i] = 0
        return Cochain(self.quandle, self.level, self.coefficients, vals)

    # --------------------------------------------------------- arithmetic
    def _check(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        if (other.level != self.level or other.coefficients != self.coefficients
                or other.quandle != self.quandle):
            raise InputError("cochains differ in level, quandle or coefficients")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Cochain(self.quandle, self.level, self.coefficients, self.values + other.values)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return Cochain(self.quandle, self.level, self.coefficients, self.values - other.values)

    def __neg__(self):
        return Cochain(self.quandle, self.level, self.coefficients, -self.values)

    def __rmul__(self, k: int):
        return Cochain(self.quandle, self.level, self.coefficients, int(k) * self.values)

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.level == other.level and self.coefficients == other.coefficients
                and self.quandle == other.quandle
                and np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.level, self.values.tobytes()))

    def __repr__(self):
        return f"Cochain(level={self.level}, {self.coefficients.label}, {self.chi_string()})"

    def chi_string(self) -> str:
        """Readable sum of characteristic functions, e.g. ``chi(0,2) + 2 chi(1,0)``."""
        terms = []
        mod = self.coefficients
        for t, v in self.support().items():
            lab = mod.element_label(v)
            coef = "" if lab == "1" else (f"({lab}) " if " " in lab else f"{lab} ")
            terms.append(f"{coef}chi({','.join(map(str, t))})")
        return " + ".join(terms) if terms else "0"

    # --------------------------------------------------------------- json
    def to_json(self) -> dict:
        return {
            "level": self.level,
            "quandle": {"label": self.quandle.label, "size": self.quandle.size},
            "coefficients": self.coefficients.to_json(),
            "values": [[list(t), self.coefficients.vector(v).tolist()]
                       for t, v in self.support().items()],
        }

    @classmethod
    def from_json(cls, data: dict, quandle: FiniteQuandle) -> "Cochain":
        try:
            level = int(data["level"])
            mod = AlexanderModule.from_json(data.get("coefficients", {"p": 0}))
            entries = data.get("values", [])
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad cochain JSON: {exc}") from None
        info = data.get("quandle")
        if isinstance(info, dict) and "size" in info and int(info["size"]) != quandle.size:
            raise InputError(f"cochain is for a quandle of size {info['size']}, "
                             f"got size {quandle.size}")
        mapping = {}
        for entry in entries:
            tup, val = entry
            if np.ndim(val) == 0:
                val = mod.vector(int(val) % mod.p if mod.p else int(val))
            mapping[tuple(tup)] = np.asarray(val, dtype=np.int64)
        return cls.from_dict(quandle, level, mod, mapping)
