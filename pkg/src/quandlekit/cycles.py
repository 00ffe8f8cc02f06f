"""Colored crossings as quandle 2-chains, and the pairing with cocycles."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .cochain import Cochain, as_module
from .diagram import KnotDiagram, colorings
from .errors import InputError
from .homology import ChainComplex, _boundary_terms
from .invariants import GroupRingElement, _require_cocycle
from .linalg import IntegerSolver, solve_mod
from .quandle import FiniteQuandle

__all__ = [
    "FormalChain", "ColoredCrossing", "chain_from_crossings", "boundary", "is_cycle",
    "is_null_homologous", "kronecker_pairing", "coloring_chain", "invariant_via_pairing",
]


def _degenerate(t) -> bool:
    return any(t[i] == t[i + 1] for i in range(len(t) - 1))


class FormalChain:
    """An integer combination of ``level``-tuples.

    With ``quandle=True`` (the default) degenerate tuples are dropped, so the
    chain lives in the quandle chain group.
    """

    def __init__(self, level: int, terms=None, quandle: bool = True):
        self.level = int(level)
        self.quandle = quandle
        acc: Counter = Counter()
        for t, k in dict(terms or {}).items():
            t = tuple(int(x) for x in t)
            if len(t) != self.level:
                raise InputError(f"tuple {t} does not have length {self.level}")
            if quandle and _degenerate(t):
                continue
            acc[t] += int(k)
        self.terms = {t: k for t, k in sorted(acc.items()) if k}

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, FormalChain) or other.level != self.level:
            return NotImplemented
        c = Counter(self.terms)
        c.update(other.terms)
        return FormalChain(self.level, c, self.quandle)

    def __neg__(self):
        return FormalChain(self.level, {t: -k for t, k in self.terms.items()}, self.quandle)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, FormalChain):
            return NotImplemented
        return self.level == other.level and self.terms == other.terms

    def __hash__(self):
        return hash((self.level, tuple(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for n, (t, k) in enumerate(self.terms.items()):
            body = f"({','.join(map(str, t))})"
            mag = "" if abs(k) == 1 else f"{abs(k)}"
            if n == 0:
                out = ("-" if k < 0 else "") + mag + body
            else:
                out += f" {'-' if k < 0 else '+'} {mag}{body}"
        return out

    def __repr__(self):
        return f"FormalChain({self})"

    def to_json(self) -> dict:
        return {"level": self.level, "terms": [[list(t), k] for t, k in self.terms.items()]}

    @classmethod
    def from_json(cls, data) -> "FormalChain":
        try:
            level = int(data["level"])
            terms = {tuple(t): int(k) for t, k in data["terms"]}
        except (KeyError, TypeError, ValueError):
            raise InputError("chain JSON needs 'level' and 'terms': [[[a, b], k], ...]") from None
        return cls(level, terms)


@dataclass(frozen=True)
class ColoredCrossing:
    a: int
    b: int
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InputError(f"crossing sign must be +1 or -1, got {self.sign}")


def chain_from_crossings(records) -> FormalChain:
    """``sum eps_j (a_j, b_j)`` over colored crossings ``(a, b, eps)``."""
    terms: Counter = Counter()
    for r in records:
        r = r if isinstance(r, ColoredCrossing) else ColoredCrossing(*r)
        terms[(r.a, r.b)] += r.sign
    return FormalChain(2, terms)


def _check_elements(c: FormalChain, X: FiniteQuandle):
    for t in c.terms:
        if any(not 0 <= x < X.size for x in t):
            raise InputError(f"tuple {t} has entries outside the quandle of size {X.size}")


def boundary(c: FormalChain, X: FiniteQuandle) -> FormalChain:
    """Untwisted boundary; level-1 chains have zero boundary."""
    _check_elements(c, X)
    if c.level <= 1:
        return FormalChain(max(c.level - 1, 0), {}, c.quandle)
    acc: Counter = Counter()
    for t, k in c.terms.items():
        for c0, c1, target in _boundary_terms(X.table, t):
            acc[target] += k * (c0 + c1)
    return FormalChain(c.level - 1, acc, c.quandle)


def is_cycle(c: FormalChain, X: FiniteQuandle) -> tuple[bool, FormalChain]:
    """Whether ``c`` is a cycle, together with its boundary."""
    d = boundary(c, X)
    return d.is_zero(), d


def is_null_homologous(c: FormalChain, X: FiniteQuandle, coefficients=None
                       ) -> FormalChain | None:
    """A chain ``w`` one level up with ``boundary(w) = c``, or ``None``.

    Coefficients are ``Z`` (default) or ``Z_q``; the witness has integer
    coefficients reduced into ``[0, q)`` in the latter case.
    """
    ok, _ = is_cycle(c, X)
    if not ok:
        raise InputError("chain is not a cycle")
    module = as_module(coefficients)
    if module.degree != 1:
        raise InputError("null-homology is computed with Z or Z_q coefficients")
    q = module.p
    if c.is_zero():
        return FormalChain(c.level + 1, {})
    cx = ChainComplex(X, "quandle")
    mat = cx.boundary_matrix(c.level + 1, module).matrix
    rows = cx.basis(c.level)
    pos = {t: i for i, t in enumerate(rows)}
    rhs = np.zeros(len(rows), dtype=np.int64)
    for t, k in c.terms.items():
        rhs[pos[t]] = k % q if q else k
    if q:
        sol = solve_mod(mat, rhs, q)
    else:
        sol = IntegerSolver(mat).solve(rhs.tolist())
    if sol is None:
        return None
    cols = cx.basis(c.level + 1)
    w = FormalChain(c.level + 1, {t: int(k) for t, k in zip(cols, sol) if int(k)})
    d = boundary(w, X)
    assert all((d.terms.get(t, 0) - c.terms.get(t, 0)) % q == 0 if q else
               d.terms.get(t, 0) == c.terms.get(t, 0)
               for t in set(d.terms) | set(c.terms)), "null-homology witness failed"
    return w


def kronecker_pairing(phi: Cochain, c: FormalChain) -> int:
    """``<phi, c> = sum c(t) phi(t)`` as an element index of the coefficient module."""
    if phi.level != c.level:
        raise InputError(f"cochain level {phi.level} differs from chain level {c.level}")
    module = phi.coefficients
    w = np.zeros(module.degree, dtype=np.int64)
    for t, k in c.terms.items():
        w = w + k * phi.vector(*t)
    return module.index(w)


def coloring_chain(K: KnotDiagram, coloring) -> FormalChain:
    """``sum_tau eps(tau) (C(alpha), C(beta))`` for one coloring."""
    return chain_from_crossings(
        (coloring[cd.alpha], coloring[cd.beta], cd.sign) for cd in K.crossing_data())


def invariant_via_pairing(K: KnotDiagram, X: FiniteQuandle, phi: Cochain) -> GroupRingElement:
    """``sum over colorings of [<phi, chain of the coloring>]``."""
    _require_cocycle(phi, X, 2, twisted=False)
    return GroupRingElement.from_elements(
        phi.coefficients, (kronecker_pairing(phi, coloring_chain(K, col))
                           for col in colorings(K, X)))
