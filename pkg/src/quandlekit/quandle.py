"""Finite quandles, Alexander modules and quandle homomorphisms.

A finite quandle is stored as its operation table: ``table[a, b] = a * b``
with elements identified with ``range(n)``.  Alexander modules
``Z_p[T, T^-1]/(h)`` index their elements by the base-``p`` digits of the
canonical residue, lowest power of ``T`` first, so in ``Z_2[T]/(T^2+T+1)``
the indices 0, 1, 2, 3 are ``0, 1, T, T+1``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from itertools import permutations

import numpy as np

from .errors import InputError

__all__ = [
    "AxiomReport",
    "verify_axioms",
    "FiniteQuandle",
    "AlexanderModule",
    "QuandleHom",
    "make_trivial",
    "make_dihedral",
    "make_alexander",
    "make_conjugation",
    "make_qs6",
    "star_inv",
    "find_isomorphism",
    "is_isomorphic",
    "enumerate_quandles",
    "small_quandles",
    "parse_poly",
    "format_poly",
]


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of :func:`verify_axioms`.

    ``axiom`` is 1, 2 or 3 for the first failing axiom (idempotence,
    right-invertibility, right self-distributivity) and ``witness`` the
    first offending element tuple.
    """

    ok: bool
    axiom: int | None = None
    witness: tuple | None = None

    def __str__(self):
        if self.ok:
            return "quandle axioms I-III hold"
        names = {1: "I (idempotence)", 2: "II (right translations bijective)",
                 3: "III (right self-distributivity)"}
        return f"axiom {names[self.axiom]} fails at {self.witness}"


def _as_table(table) -> np.ndarray:
    try:
        arr = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise InputError(f"table is not an integer array: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise InputError(f"table must be a non-empty square array, got shape {arr.shape}")
    n = arr.shape[0]
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        a, b = (int(v) for v in bad[0])
        raise InputError(f"table entry [{a}][{b}] = {arr[a, b]} outside [0, {n})")
    return arr


def verify_axioms(table) -> AxiomReport:
    """Check the three quandle axioms exhaustively on an operation table."""
    t = _as_table(table)
    n = t.shape[0]
    idx = np.arange(n)
    diag = t[idx, idx]
    bad = np.nonzero(diag != idx)[0]
    if len(bad):
        return AxiomReport(False, 1, (int(bad[0]),))
    for b in range(n):
        col = t[:, b]
        if len(np.unique(col)) != n:
            seen = {}
            for a in range(n):
                c = int(col[a])
                if c in seen:
                    return AxiomReport(False, 2, (seen[c], a, b))
                seen[c] = a
    # lhs[a, b, c] = (a*b)*c ; rhs[a, b, c] = (a*c)*(b*c)
    lhs = t[t]
    rhs = t[t[:, None, :], t[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return AxiomReport(False, 3, tuple(int(v) for v in bad[0]))
    return AxiomReport(True)


@dataclass(frozen=True, eq=False)
class FiniteQuandle:
    """A finite quandle given by its operation table (validated on creation)."""

    table: np.ndarray
    label: str = ""
    inverse: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        t = _as_table(self.table).copy()
        report = verify_axioms(t)
        if not report.ok:
            raise InputError(f"{self.label or 'table'}: {report}")
        inv = np.empty_like(t)
        n = t.shape[0]
        for b in range(n):
            inv[t[:, b], b] = np.arange(n)
        t.setflags(write=False)
        inv.setflags(write=False)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "inverse", inv)

    @property
    def size(self) -> int:
        return int(self.table.shape[0])

    def __len__(self):
        return self.size

    def op(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int, b: int) -> int:
        """The unique ``c`` with ``c * b == a``."""
        return int(self.inverse[a, b])

    def __eq__(self, other):
        if not isinstance(other, FiniteQuandle):
            return NotImplemented
        return np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"FiniteQuandle(size={self.size}, label={self.label!r})"

    def to_json(self) -> dict:
        return {"label": self.label, "size": self.size, "table": self.table.tolist()}

    @classmethod
    def from_json(cls, data: dict) -> "FiniteQuandle":
        try:
            table = data["table"]
        except (KeyError, TypeError):
            raise InputError("quandle JSON needs a 'table' entry") from None
        if "size" in data and int(data["size"]) != len(table):
            raise InputError(f"declared size {data['size']} != table size {len(table)}")
        return cls(table, label=str(data.get("label", "")))


def star_inv(q: FiniteQuandle, a: int, b: int) -> int:
    """Return the unique ``c`` with ``c * b = a``."""
    return q.inv(a, b)


# --------------------------------------------------------------------------
# polynomials

_TERM = re.compile(r"([+-]?)\s*(\d*)\s*\*?\s*(T(?:\s*\^\s*(-?\d+))?)?")


def parse_poly(text: str) -> dict[int, int]:
    """Parse ``"T^2 + T + 1"`` style text into ``{exponent: coefficient}``."""
    s = text.replace(" ", "").replace("**", "^").replace("t", "T")
    if not s:
        raise InputError("empty polynomial")
    out: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise InputError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        sign, coef, tpart, exp = m.groups()
        if not coef and not tpart:
            raise InputError(f"cannot parse polynomial {text!r}")
        c = int(coef) if coef else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp else 1) if tpart else 0
        out[e] = out.get(e, 0) + c
        pos = m.end()
    return {e: c for e, c in out.items() if c}


def format_poly(coeffs, var: str = "T") -> str:
    """Format a low-to-high coefficient sequence or exponent dict."""
    if not isinstance(coeffs, dict):
        coeffs = {i: c for i, c in enumerate(coeffs)}
    terms = []
    for e in sorted((e for e, c in coeffs.items() if c), reverse=True):
        c = coeffs[e]
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        if mono and abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}{mono}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        s += f" {sign} {body}"
    return s


def _unit(c: int, p: int) -> bool:
    return p == 0 and abs(c) == 1 or p > 0 and math.gcd(c % p, p) == 1


class AlexanderModule:
    """The module ``Z_p[T, T^-1]/(h)`` with its quandle structure.

    ``h`` is a coefficient sequence, lowest degree first, or a dict
    ``{exponent: coefficient}``; Laurent shifts are removed since ``T`` is a
    unit.  ``p == 0`` is accepted only for ``h = T - 1``, giving the integers
    with trivial ``T``-action (used for untwisted integral (co)homology).
    """

    def __init__(self, p: int, h):
        p = int(p)
        if p < 0 or p == 1:
            raise InputError(f"modulus must be 0 or >= 2, got {p}")
        if isinstance(h, str):
            h = parse_poly(h)
        if isinstance(h, dict):
            if not h:
                raise InputError("h = 0 gives an infinite module; not supported here")
            lo = min(h)
            hi = max(h)
            h = [h.get(e, 0) for e in range(lo, hi + 1)]
        coeffs = [int(c) % p if p else int(c) for c in h]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
        if not coeffs:
            raise InputError("h = 0 gives an infinite module; not supported here")
        if len(coeffs) < 2:
            raise InputError("h must have positive degree (a unit h gives the zero module)")
        if not _unit(coeffs[0], p) or not _unit(coeffs[-1], p):
            raise InputError(
                f"leading and constant coefficients of h = {format_poly(coeffs)} "
                f"must be units mod {p}")
        if p == 0 and coeffs not in ([-1, 1], [1, -1]):
            raise InputError("integer coefficients (p = 0) are supported only for h = T - 1")
        if p == 0:
            coeffs = [-1, 1]
        self.p = p
        self.h = tuple(coeffs)
        self.degree = len(coeffs) - 1
        d = self.degree
        self._lead_inv = pow(coeffs[-1], -1, p) if p else coeffs[-1]
        self._const_inv = pow(coeffs[0], -1, p) if p else -1
        tmat = np.zeros((d, d), dtype=np.int64)
        for j in range(d - 1):
            tmat[j + 1, j] = 1
        for i in range(d):
            tmat[i, d - 1] = -self._lead_inv * coeffs[i]
        self.t_matrix = self._reduce(tmat)
        # T^{-1} = -h0^{-1} (h1 + h2 T + ... + hd T^{d-1})
        tinv = np.zeros((d, d), dtype=np.int64)
        for j in range(1, d):
            tinv[j - 1, j] = 1
        for i in range(d):
            tinv[i, 0] = -self._const_inv * coeffs[i + 1]
        self.t_inverse = self._reduce(tinv)
        self._powers = {0: np.eye(d, dtype=np.int64), 1: self.t_matrix, -1: self.t_inverse}

    # ---------------------------------------------------------------- basics
    @classmethod
    def zmod(cls, q: int) -> "AlexanderModule":
        """``Z_q`` with trivial ``T``-action (untwisted coefficients)."""
        return cls(q, [-1, 1])

    @classmethod
    def integers(cls) -> "AlexanderModule":
        return cls(0, [-1, 1])

    @property
    def trivial_action(self) -> bool:
        return self.degree == 1 and int(self.t_matrix[0, 0]) == (1 % self.p if self.p else 1)

    @property
    def size(self) -> int | None:
        return self.p ** self.degree if self.p else None

    def __len__(self):
        if not self.p:
            raise TypeError("the integers have no finite size")
        return self.size

    def __eq__(self, other):
        return isinstance(other, AlexanderModule) and (self.p, self.h) == (other.p, other.h)

    def __hash__(self):
        return hash((self.p, self.h))

    @property
    def label(self) -> str:
        if not self.p:
            return "Z"
        if self.trivial_action:
            return f"Z_{self.p}"
        return f"Z_{self.p}[T,T^-1]/({format_poly(self.h)})"

    def __repr__(self):
        return f"AlexanderModule({self.label})"

    def to_json(self) -> dict:
        return {"p": self.p, "h": list(self.h)}

    @classmethod
    def from_json(cls, data) -> "AlexanderModule":
        if isinstance(data, str):
            return cls.from_spec(data)
        try:
            return cls(int(data["p"]), data.get("h", [-1, 1]))
        except (KeyError, TypeError):
            raise InputError(f"bad coefficient descriptor {data!r}") from None

    @classmethod
    def from_spec(cls, text: str) -> "AlexanderModule":
        """Parse ``Z``, ``Z3``, ``Z_3``, ``R3`` or ``3:T^2+T+1``."""
        s = text.strip()
        m = re.fullmatch(r"Z_?(\d*)", s)
        if m:
            return cls.integers() if not m.group(1) else cls.zmod(int(m.group(1)))
        m = re.fullmatch(r"R_?(\d+)", s)
        if m:
            return cls(int(m.group(1)), [1, 1])
        m = re.fullmatch(r"S_?4", s)
        if m:
            return cls(2, [1, 1, 1])
        m = re.fullmatch(r"(\d+)\s*:\s*(.+)", s)
        if m:
            return cls(int(m.group(1)), m.group(2))
        raise InputError(f"cannot parse coefficient spec {text!r}")

    def _reduce(self, arr):
        return np.mod(arr, self.p) if self.p else arr

    # ------------------------------------------------------------- elements
    def vector(self, a: int) -> np.ndarray:
        if not self.p:
            return np.array([a], dtype=np.int64)
        if not 0 <= a < self.size:
            raise InputError(f"element index {a} outside [0, {self.size})")
        out = np.zeros(self.degree, dtype=np.int64)
        for i in range(self.degree):
            a, out[i] = divmod(a, self.p)
        return out

    def index(self, vec) -> int:
        v = self._reduce(np.asarray(vec, dtype=np.int64))
        if not self.p:
            return int(v[0])
        idx = 0
        for c in reversed(v.tolist()):
            idx = idx * self.p + int(c)
        return idx

    def all_vectors(self) -> np.ndarray:
        """``(size, degree)`` array; row ``i`` is the vector of element ``i``."""
        if not self.p:
            raise InputError("the integers are infinite")
        idx = np.arange(self.size)
        return np.stack([(idx // self.p ** i) % self.p for i in range(self.degree)], axis=1)

    def index_array(self, vecs: np.ndarray) -> np.ndarray:
        v = self._reduce(np.asarray(vecs, dtype=np.int64))
        if not self.p:
            return v[..., 0]
        weights = self.p ** np.arange(self.degree, dtype=np.int64)
        return v @ weights

    def add(self, a: int, b: int) -> int:
        return self.index(self.vector(a) + self.vector(b))

    def sub(self, a: int, b: int) -> int:
        return self.index(self.vector(a) - self.vector(b))

    def neg(self, a: int) -> int:
        return self.index(-self.vector(a))

    def scale(self, k: int, a: int) -> int:
        return self.index(k * self.vector(a))

    def t_power_matrix(self, k: int) -> np.ndarray:
        if k not in self._powers:
            base = self.t_matrix if k > 0 else self.t_inverse
            m = self._powers[0]
            for _ in range(abs(k)):
                m = self._reduce(base @ m)
            self._powers[k] = m
        return self._powers[k]

    def t_act(self, a: int, k: int = 1) -> int:
        """``T^k . a``."""
        return self.index(self.t_power_matrix(k) @ self.vector(a))

    def op(self, a: int, b: int) -> int:
        """Quandle operation ``a * b = T a + (1 - T) b``."""
        va, vb = self.vector(a), self.vector(b)
        t = self.t_matrix
        return self.index(t @ va + vb - t @ vb)

    def poly_matrix(self, poly: dict[int, int]) -> np.ndarray:
        """Matrix of multiplication by the Laurent polynomial ``poly``."""
        d = self.degree
        m = np.zeros((d, d), dtype=np.int64)
        for e, c in poly.items():
            m = m + c * self.t_power_matrix(e)
        return self._reduce(m)

    def element_of_poly(self, poly: dict[int, int]) -> int:
        """Residue class of a Laurent polynomial, as an element index."""
        e0 = np.zeros(self.degree, dtype=np.int64)
        e0[0] = 1
        return self.index(self.poly_matrix(poly) @ e0)

    def element_label(self, a: int) -> str:
        if not self.p:
            return str(a)
        if self.degree == 1:
            return str(a)
        return format_poly(self.vector(a).tolist())

    def as_quandle(self) -> FiniteQuandle:
        if not self.p:
            raise InputError("the integers do not form a finite quandle")
        v = self.all_vectors()
        tv = self._reduce(v @ self.t_matrix.T)
        # op[a, b] = T v_a + v_b - T v_b
        vecs = tv[:, None, :] + v[None, :, :] - tv[None, :, :]
        table = self.index_array(vecs)
        return FiniteQuandle(table, label=self.label)


@dataclass(frozen=True, eq=False)
class QuandleHom:
    """A map between finite quandles, checked to respect ``*``."""

    source: FiniteQuandle
    target: FiniteQuandle
    values: tuple

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        if len(vals) != self.source.size:
            raise InputError(f"homomorphism needs {self.source.size} values, got {len(vals)}")
        if any(not 0 <= v < self.target.size for v in vals):
            raise InputError("homomorphism value outside the target quandle")
        object.__setattr__(self, "values", vals)
        w = self.failure()
        if w is not None:
            a, b = w
            raise InputError(f"f({a}*{b}) != f({a})*f({b})")

    def failure(self):
        f = np.asarray(self.values)
        lhs = f[self.source.table]
        rhs = self.target.table[f[:, None], f[None, :]]
        bad = np.argwhere(lhs != rhs)
        return None if not len(bad) else tuple(int(x) for x in bad[0])

    def __call__(self, a: int) -> int:
        return self.values[a]

    @staticmethod
    def check(source: FiniteQuandle, target: FiniteQuandle, values) -> bool:
        f = np.asarray(values, dtype=np.int64)
        return bool(np.array_equal(f[source.table], target.table[f[:, None], f[None, :]]))


# --------------------------------------------------------------------------
# constructors

def make_trivial(n: int) -> FiniteQuandle:
    if n < 1:
        raise InputError("n must be positive")
    return FiniteQuandle(np.tile(np.arange(n)[:, None], (1, n)), label=f"T{n}")


def make_dihedral(n: int) -> FiniteQuandle:
    if n < 1:
        raise InputError("n must be positive")
    i = np.arange(n)
    return FiniteQuandle((2 * i[None, :] - i[:, None]) % n, label=f"R{n}")


def make_alexander(p: int, h) -> FiniteQuandle:
    if int(p) < 2:
        raise InputError("finite Alexander quandles need p >= 2")
    return AlexanderModule(p, h).as_quandle()


def make_conjugation(mult, subset, exponent: int = 1, label: str = "") -> FiniteQuandle:
    """Quandle on ``subset`` of a group with ``a * b = b^-n a b^n``.

    ``mult[g][h]`` is the index of ``g h``; ``subset`` lists group element
    indices and must be closed under the operation.
    """
    m = np.asarray(mult, dtype=np.int64)
    g = m.shape[0]
    if m.shape != (g, g):
        raise InputError("group multiplication table must be square")
    ident = [e for e in range(g) if np.array_equal(m[e], np.arange(g))]
    if not ident:
        raise InputError("multiplication table has no identity")
    e = ident[0]
    inv = np.empty(g, dtype=np.int64)
    for x in range(g):
        ys = np.nonzero(m[x] == e)[0]
        if len(ys) != 1:
            raise InputError(f"element {x} has no unique inverse")
        inv[x] = ys[0]

    def power(x, k):
        y = e
        base = x if k >= 0 else int(inv[x])
        for _ in range(abs(k)):
            y = int(m[y, base])
        return y

    elems = [int(s) for s in subset]
    pos = {x: i for i, x in enumerate(elems)}
    if len(pos) != len(elems):
        raise InputError("subset has repeated elements")
    k = len(elems)
    table = np.empty((k, k), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            bn = power(b, exponent)
            c = int(m[m[power(b, -exponent), a], bn])
            if c not in pos:
                raise InputError(f"subset not closed: {b}^-n {a} {b}^n = {c}")
            table[i, j] = pos[c]
    return FiniteQuandle(table, label=label or f"Conj{k}")


def _perm_from_cycle(cycle, n=4):
    p = list(range(n))
    for i, x in enumerate(cycle):
        p[x - 1] = cycle[(i + 1) % len(cycle)] - 1
    return tuple(p)


QS6_NAMES = ("a", "A", "b", "B", "c", "C")
_QS6_CYCLES = ((1, 2, 3, 4), (1, 4, 3, 2), (1, 2, 4, 3), (1, 3, 4, 2), (1, 3, 2, 4), (1, 4, 2, 3))


def make_qs6() -> FiniteQuandle:
    """Conjugation quandle of the six 4-cycles of S_4, ordered a, A, b, B, c, C."""
    perms = list(permutations(range(4)))
    pos = {p: i for i, p in enumerate(perms)}
    # (g h)(x) = g(h(x))
    mult = [[pos[tuple(g[h[x]] for x in range(4))] for h in perms] for g in perms]
    subset = [pos[_perm_from_cycle(c)] for c in _QS6_CYCLES]
    return make_conjugation(mult, subset, 1, label="QS6")


# --------------------------------------------------------------------------
# isomorphism

def _element_keys(q: FiniteQuandle):
    keys = []
    t = q.table
    n = q.size
    for x in range(n):
        col = t[:, x]
        seen = np.zeros(n, dtype=bool)
        cycles = []
        for y in range(n):
            if not seen[y]:
                length = 0
                z = y
                while not seen[z]:
                    seen[z] = True
                    z = int(col[z])
                    length += 1
                cycles.append(length)
        fixed_left = int(np.sum(t[x, :] == x))
        keys.append((tuple(sorted(cycles)), fixed_left))
    return keys


def _generators(q: FiniteQuandle):
    n = q.size
    gens = []
    span = np.zeros(n, dtype=bool)
    while not span.all():
        g = int(np.argmin(span))
        gens.append(g)
        members = [x for x in range(n) if span[x]] + [g]
        span[g] = True
        frontier = list(members)
        while frontier:
            new = []
            current = [x for x in range(n) if span[x]]
            for a in frontier:
                for b in current:
                    for c in (q.table[a, b], q.table[b, a], q.inverse[a, b], q.inverse[b, a]):
                        c = int(c)
                        if not span[c]:
                            span[c] = True
                            new.append(c)
            frontier = new
    return gens


def find_isomorphism(q: FiniteQuandle, r: FiniteQuandle) -> list[int] | None:
    """Search for an isomorphism ``q -> r``; returns the image list or None.

    Backtracks over images of a generating set, restricted to elements with
    matching right-translation cycle type, and extends by closure.
    """
    n = q.size
    if r.size != n:
        return None
    kq, kr = _element_keys(q), _element_keys(r)
    if sorted(kq) != sorted(kr):
        return None
    gens = _generators(q)
    qt, qi, rt, ri = q.table, q.inverse, r.table, r.inverse

    def extend(f, used, a, img):
        f = dict(f)
        used = set(used)
        f[a] = img
        used.add(img)
        work = [a]
        while work:
            x = work.pop()
            for y in list(f):
                for src, dst in (
                    (qt[x, y], rt[f[x], f[y]]), (qt[y, x], rt[f[y], f[x]]),
                    (qi[x, y], ri[f[x], f[y]]), (qi[y, x], ri[f[y], f[x]]),
                ):
                    src, dst = int(src), int(dst)
                    if src in f:
                        if f[src] != dst:
                            return None
                    else:
                        if dst in used or kq[src] != kr[dst]:
                            return None
                        f[src] = dst
                        used.add(dst)
                        work.append(src)
        return f, used

    def search(f, used, i):
        if i == len(gens):
            return f if len(f) == n else None
        g = gens[i]
        if g in f:
            return search(f, used, i + 1)
        for img in range(n):
            if img in used or kr[img] != kq[g]:
                continue
            res = extend(f, used, g, img)
            if res is None:
                continue
            out = search(res[0], res[1], i + 1)
            if out is not None:
                return out
        return None

    f = search({}, set(), 0)
    if f is None:
        return None
    images = [f[x] for x in range(n)]
    assert QuandleHom.check(q, r, images)
    return images


def is_isomorphic(q: FiniteQuandle, r: FiniteQuandle) -> bool:
    return find_isomorphism(q, r) is not None


def _iso_key(cols) -> tuple:
    """Multiset of (cycle type of the column, cycle type of the row) per element."""
    n = len(cols)

    def cycle_type(perm):
        seen, out = set(), []
        for s in range(n):
            if s not in seen:
                k, x = 0, s
                while x not in seen:
                    seen.add(x)
                    x = perm[x]
                    k += 1
                out.append(k)
        return tuple(sorted(out))

    rows = [sorted(cols[b][a] for b in range(n)) for a in range(n)]
    return tuple(sorted((cycle_type(cols[a]), tuple(rows[a].count(v) for v in range(n)).count(0))
                        for a in range(n)))


def enumerate_quandles(n: int, up_to_isomorphism: bool = True) -> list[FiniteQuandle]:
    """Every quandle on ``range(n)``, optionally one per isomorphism class.

    Columns ``b -> (a |-> a*b)`` are chosen one at a time among permutations
    fixing ``b``; a partial table is abandoned as soon as a fully determined
    instance of the third axiom fails.  Practical up to ``n = 5``.
    """
    if n < 1:
        raise InputError("quandle size must be positive")
    cols: list[tuple[int, ...]] = [()] * n
    found: list[FiniteQuandle] = []
    buckets: dict = {}
    perms = [[p for p in permutations(range(n)) if p[b] == b] for b in range(n)]

    def consistent(k):
        # columns 0..k are set; check (a*b)*c = (a*c)*(b*c) where defined
        for b in range(k + 1):
            for c in range(k + 1):
                if b != k and c != k:
                    continue
                bc = cols[c][b]
                if bc > k:
                    continue
                rb, rc, rbc = cols[b], cols[c], cols[bc]
                for a in range(n):
                    if rc[rb[a]] != rbc[rc[a]]:
                        return False
        # triples whose combined column b*c was set earlier than b or c
        for b in range(k + 1):
            for c in range(k):
                bc = cols[c][b]
                if bc == k and b != k:
                    rb, rc, rbc = cols[b], cols[c], cols[bc]
                    if any(rc[rb[a]] != rbc[rc[a]] for a in range(n)):
                        return False
        return True

    def search(k):
        if k == n:
            table = np.array([[cols[b][a] for b in range(n)] for a in range(n)])
            q = FiniteQuandle(table, label=f"Q{n}_{len(found)}")
            if up_to_isomorphism:
                same = buckets.setdefault(_iso_key(cols), [])
                if any(is_isomorphic(q, r) for r in same):
                    return
                same.append(q)
            found.append(q)
            return
        for p in perms[k]:
            cols[k] = p
            if consistent(k):
                search(k + 1)
        cols[k] = ()

    search(0)
    return found


def small_quandles(n: int) -> list[FiniteQuandle]:
    """One quandle per isomorphism class of order ``n <= 6``, from stored tables.

    The tables were produced by :func:`enumerate_quandles`; the class counts
    are 1, 1, 3, 7, 22, 73.
    """
    import json
    from importlib import resources

    if not 1 <= n <= 6:
        raise InputError("stored quandle classes cover orders 1 to 6")
    data = json.loads(resources.files("quandlekit").joinpath("data/quandles/small.json")
                      .read_text())
    return [FiniteQuandle(np.array(t), label=f"Q{n}_{i}") for i, t in enumerate(data[str(n)])]
