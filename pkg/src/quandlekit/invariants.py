"""State-sum invariants: colorings, cocycle invariants, the bracket and Jones."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cochain import Cochain, as_module
from .diagram import KnotDiagram, alexander_numbering, colorings
from .errors import InputError, UnsupportedError
from .homology import is_cocycle
from .quandle import AlexanderModule, FiniteQuandle

__all__ = [
    "GroupRingElement", "LaurentPolynomial", "TriplePoint", "TriplePointData",
    "col", "cocycle_invariant", "twisted_cocycle_invariant", "lopes_family",
    "link_component_vector", "coloring_weights", "surface_weight", "surface_state_sum",
    "bracket", "normalized", "jones",
]


class GroupRingElement:
    """A finite formal sum ``sum k_a [a]`` over the elements of a module."""

    def __init__(self, module: AlexanderModule, terms=None):
        self.module = as_module(module)
        counts = Counter()
        for a, k in dict(terms or {}).items():
            counts[int(a)] += int(k)
        self.terms = {a: k for a, k in sorted(counts.items()) if k}

    @classmethod
    def identity(cls, module, k: int = 1):
        return cls(module, {0: k})

    @classmethod
    def from_elements(cls, module, elements):
        return cls(module, Counter(int(a) for a in elements))

    def mass(self) -> int:
        return sum(self.terms.values())

    def __add__(self, other):
        if not isinstance(other, GroupRingElement) or other.module != self.module:
            return NotImplemented
        c = Counter(self.terms)
        c.update(other.terms)
        return GroupRingElement(self.module, c)

    def __eq__(self, other):
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.module == other.module and self.terms == other.terms

    def __hash__(self):
        return hash((self.module, tuple(self.terms.items())))

    def map(self, func) -> "GroupRingElement":
        """Image under an element map, e.g. ``module.neg`` for inversion."""
        c = Counter()
        for a, k in self.terms.items():
            c[func(a)] += k
        return GroupRingElement(self.module, c)

    def inverse_image(self) -> "GroupRingElement":
        return self.map(self.module.neg)

    def __str__(self):
        if not self.terms:
            return "0"
        mod = self.module
        return " + ".join(f"{k}*[{mod.element_label(a)}]" for a, k in self.terms.items())

    def __repr__(self):
        return f"GroupRingElement({self})"

    def to_json(self) -> dict:
        return {"coefficients": self.module.to_json(),
                "terms": [[self.module.vector(a).tolist(), k] for a, k in self.terms.items()],
                "text": str(self)}


class LaurentPolynomial:
    """Finitely supported ``{exponent: coefficient}``; exponents may be fractions."""

    def __init__(self, terms=None, var: str = "A"):
        acc: dict = {}
        for e, c in dict(terms or {}).items():
            e = Fraction(e)
            acc[e] = acc.get(e, 0) + int(c)
        self.terms = {e: c for e, c in sorted(acc.items()) if c}
        self.var = var

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(out, self.var)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.terms.items()}, self.var)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(out, self.var)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def substitute_power(self, k: Fraction, var: str) -> "LaurentPolynomial":
        """Replace ``var0`` by ``var**k``."""
        return LaurentPolynomial({e * k: c for e, c in self.terms.items()}, var)

    def integral_exponents(self) -> dict[int, int]:
        if any(e.denominator != 1 for e in self.terms):
            raise ValueError("polynomial has non-integral exponents")
        return {int(e): c for e, c in self.terms.items()}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms.items():
            mono = "" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' + mono if mono else ''}"
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self):
        return f"LaurentPolynomial({self})"

    def to_json(self) -> dict:
        return {"var": self.var, "terms": [[str(e), c] for e, c in self.terms.items()],
                "text": str(self)}


# ------------------------------------------------------------ state sums

def col(K: KnotDiagram, X: FiniteQuandle) -> int:
    """``Col_X(K)``: the number of colorings."""
    return len(colorings(K, X))


def _require_cocycle(phi: Cochain, X: FiniteQuandle, level: int, twisted: bool):
    if not isinstance(phi, Cochain) or phi.level != level:
        raise InputError(f"expected a level-{level} cochain")
    if phi.quandle != X:
        raise InputError("cochain is defined on a different quandle")
    if not phi.coefficients.p:
        raise UnsupportedError("state sums need finite coefficients")
    chk = is_cocycle(phi, "quandle", twisted=twisted)
    if not chk.ok:
        kind = "twisted" if twisted else "untwisted"
        raise InputError(f"not a {kind} quandle {level}-cocycle: {chk.reason} at "
                         f"{chk.witness}; the state sum would not be an invariant")


def _weights(K, X, phi, twisted, crossings=None):
    """``(coloring, weight vector)`` for every coloring."""
    module = phi.coefficients
    data = K.crossing_data()
    if crossings is not None:
        data = [data[c] for c in crossings]
        idx = list(crossings)
    else:
        idx = list(range(len(data)))
    mats = []
    if twisted:
        L = alexander_numbering(K)
        mats = [module.t_power_matrix(-L[c]) for c in idx]
    out = []
    for coloring in colorings(K, X):
        w = np.zeros(module.degree, dtype=np.int64)
        for n, cd in enumerate(data):
            v = phi.vector(coloring[cd.alpha], coloring[cd.beta])
            if twisted:
                v = mats[n] @ v
            w = w + cd.sign * v
        out.append((coloring, module.index(w)))
    return out


def coloring_weights(K: KnotDiagram, X: FiniteQuandle, phi: Cochain,
                     twisted: bool = False) -> list[tuple]:
    """Per-coloring weights ``(coloring, element)``, with ``phi`` checked first."""
    if twisted and K.n_components > 1:
        raise UnsupportedError("the twisted invariant is computed for knots only")
    _require_cocycle(phi, X, 2, twisted)
    return _weights(K, X, phi, twisted)


def cocycle_invariant(K: KnotDiagram, X: FiniteQuandle, phi: Cochain) -> GroupRingElement:
    """``Phi(K) = sum over colorings of [sum_tau eps(tau) phi(x, y)]``."""
    _require_cocycle(phi, X, 2, twisted=False)
    return GroupRingElement.from_elements(phi.coefficients,
                                          (w for _, w in _weights(K, X, phi, False)))


def twisted_cocycle_invariant(K: KnotDiagram, X: FiniteQuandle, A, phi: Cochain
                              ) -> GroupRingElement:
    """``Phi_T(K)``: weights ``eps(tau) T^(-L(tau)) phi(x, y)`` with ``L`` the Alexander numbering."""
    A = as_module(A)
    if phi.coefficients != A:
        raise InputError(f"cochain takes values in {phi.coefficients.label}, not {A.label}")
    if K.n_components > 1:
        raise UnsupportedError("the twisted invariant is computed for knots only")
    _require_cocycle(phi, X, 2, twisted=True)
    return GroupRingElement.from_elements(A, (w for _, w in _weights(K, X, phi, True)))


def lopes_family(K: KnotDiagram, X: FiniteQuandle, phi: Cochain) -> tuple:
    """Sorted multiset of the per-coloring weights (element indices)."""
    _require_cocycle(phi, X, 2, twisted=False)
    return tuple(sorted(w for _, w in _weights(K, X, phi, False)))


def link_component_vector(K: KnotDiagram, X: FiniteQuandle, phi: Cochain) -> list:
    """One state sum per component, over the crossings whose under edges lie on it."""
    _require_cocycle(phi, X, 2, twisted=False)
    out = []
    for i in range(K.n_components):
        cs = [c for c in range(K.n_crossings) if K.under_component(c) == i]
        out.append(GroupRingElement.from_elements(
            phi.coefficients, (w for _, w in _weights(K, X, phi, False, cs))))
    return out


# ------------------------------------------------------- surfaces

@dataclass(frozen=True)
class TriplePoint:
    """Source colors of bottom, middle and top sheets, sign and Alexander number."""

    x: int
    y: int
    z: int
    sign: int
    alexander: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise InputError(f"triple point sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True)
class TriplePointData:
    points: tuple

    @classmethod
    def from_json(cls, data) -> "TriplePointData":
        recs = data["triple_points"] if isinstance(data, dict) else data
        pts = []
        for r in recs:
            if isinstance(r, dict):
                pts.append(TriplePoint(int(r["x"]), int(r["y"]), int(r["z"]),
                                       int(r.get("sign", r.get("epsilon", 1))),
                                       int(r.get("alexander", r.get("L", 0)))))
            else:
                pts.append(TriplePoint(*(int(v) for v in r)))
        return cls(tuple(pts))


def surface_weight(data: TriplePointData, theta: Cochain, twisted: bool | None = None,
                   check: bool = True) -> int:
    """Element ``sum eps T^(-L) theta(x, y, z)`` for one colored surface diagram."""
    module = theta.coefficients
    tw = (not module.trivial_action) if twisted is None else twisted
    if check:
        _require_cocycle(theta, theta.quandle, 3, twisted=tw)
    w = np.zeros(module.degree, dtype=np.int64)
    for pt in (data.points if isinstance(data, TriplePointData) else data):
        for v in (pt.x, pt.y, pt.z):
            if not 0 <= v < theta.quandle.size:
                raise InputError(f"color {v} is not an element of the quandle")
        v = theta.vector(pt.x, pt.y, pt.z)
        if tw:
            v = module.t_power_matrix(-pt.alexander) @ v
        w = w + pt.sign * v
    return module.index(w)


def surface_state_sum(colorings_data, theta: Cochain, twisted: bool | None = None
                      ) -> GroupRingElement:
    """Sum of :func:`surface_weight` over supplied colored triple-point lists."""
    module = theta.coefficients
    tw = (not module.trivial_action) if twisted is None else twisted
    _require_cocycle(theta, theta.quandle, 3, twisted=tw)
    return GroupRingElement.from_elements(
        module, (surface_weight(d, theta, tw, check=False) for d in colorings_data))


# -------------------------------------------------------- bracket

def bracket(K: KnotDiagram, loop_norm: bool = False) -> LaurentPolynomial:
    """Kauffman bracket by expansion over all smoothings.

    Each closed loop contributes ``d = -A^2 - A^-2``, so the crossingless
    unknot has bracket ``d``; with ``loop_norm`` one factor of ``d`` is
    divided out and the unknot has bracket 1.
    """
    if not K.crossings:
        return LaurentPolynomial({0: 1} if loop_norm else {2: -1, -2: -1})
    labels = {lab: n for n, lab in enumerate(K.labels)}
    quads = [tuple(labels[x] for x in q) for q in K.crossings]
    m = len(labels)
    counts: Counter = Counter()
    nc = len(quads)
    for state in range(1 << nc):
        parent = list(range(m))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        a = 0
        for c, (i, j, k, l) in enumerate(quads):
            if state >> c & 1:
                pairs = ((i, l), (j, k))
            else:
                pairs = ((i, j), (k, l))
                a += 1
            for u, v in pairs:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        loops = len({find(x) for x in range(m)})
        counts[(a - (nc - a), loops)] += 1
    d = LaurentPolynomial({2: -1, -2: -1})
    total = LaurentPolynomial()
    powers = {0: LaurentPolynomial({0: 1})}
    for (e, loops), k in counts.items():
        n = loops - 1 if loop_norm else loops
        if n not in powers:
            p = LaurentPolynomial({0: 1})
            for _ in range(n):
                p = p * d
            powers[n] = p
        total = total + LaurentPolynomial({e: k}) * powers[n]
    return total


def normalized(K: KnotDiagram, loop_norm: bool = False) -> LaurentPolynomial:
    """``(-A)^(-3w) <K>``, invariant under all Reidemeister moves."""
    w = K.writhe
    sign = -1 if (3 * w) % 2 else 1
    return LaurentPolynomial({-3 * w: sign}) * bracket(K, loop_norm)


def jones(K: KnotDiagram) -> LaurentPolynomial:
    """``V(t)``: the loop-normalized ``(-A)^(-3w) <K>`` at ``A = t^(-1/4)``.

    Exponents are integers for knots and half-integers for links with an
    even number of components.
    """
    v = normalized(K, loop_norm=True).substitute_power(Fraction(-1, 4), "t")
    expect = 1 if K.n_components % 2 else 2
    if any((e * expect).denominator != 1 for e in v.terms):
        raise ArithmeticError("Jones polynomial has unexpected exponents")
    return v
