"""Rack, degenerate and quandle (co)homology, twisted and untwisted.

Chains of level ``n`` are generated by ``n``-tuples of quandle elements.  The
twisted boundary is

    d(x1..xn) = sum_i (-1)^i [ T (x1..^xi..xn) - (x1*xi, .., x(i-1)*xi, x(i+1), .., xn) ]

and the untwisted boundary is its value at ``T = 1``.  Level-1 chains have
zero boundary.  Coefficients are :class:`AlexanderModule` objects: ``Z`` and
``Z_q`` are the modules with trivial ``T`` action, and a twisted complex
expands ``T`` into the companion matrix of the module.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from .cochain import Cochain, as_module
from .errors import InfeasibleSizeError, InputError, UnsupportedError
from .linalg import (AbelianGroup, IntegerSolver, integer_rank, invariant_factors, is_prime,
                     kernel_mod, row_echelon, solve_mod, subquotient, _rref_mod)
from .quandle import AlexanderModule, FiniteQuandle, QuandleHom

__all__ = [
    "THEORIES", "DEFAULT_MAX_TUPLES", "max_tuples", "check_feasible", "chain_basis",
    "ChainComplex", "BoundaryMatrix", "CocycleCheck",
    "homology", "cohomology", "cocycle_basis", "coboundary_basis",
    "coboundary", "is_cocycle", "is_coboundary", "cohomologous", "is_quandle_hom_to_module",
    "ModuleMap", "ExactSequence", "Obstruction", "obstruction_class",
]

THEORIES = ("rack", "degenerate", "quandle")
DEFAULT_MAX_TUPLES = 10 ** 6


def max_tuples() -> int:
    """Tuple-count guard; ``QW_MAX_TUPLES`` overrides the default of 10**6."""
    raw = os.environ.get("QW_MAX_TUPLES")
    if raw is None or not raw.strip():
        return DEFAULT_MAX_TUPLES
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"QW_MAX_TUPLES must be an integer, got {raw!r}") from None


def check_feasible(size: int, level: int) -> None:
    limit = max_tuples()
    if size ** level > limit:
        raise InfeasibleSizeError(
            f"level {level} over a quandle of size {size} needs {size ** level} tuples "
            f"(limit {limit}; raise QW_MAX_TUPLES to override)")


def _degenerate(t) -> bool:
    return any(t[i] == t[i + 1] for i in range(len(t) - 1))


def _in_theory(t, theory) -> bool:
    if theory == "rack":
        return True
    return _degenerate(t) == (theory == "degenerate")


def chain_basis(size: int, level: int, theory: str = "quandle") -> tuple:
    """Lexicographically ordered generating tuples of the chain group."""
    if theory not in THEORIES:
        raise InputError(f"theory must be one of {THEORIES}, got {theory!r}")
    if level <= 0:
        return ()
    # checked on every call: the limit may change between calls
    check_feasible(size, level)
    return _chain_basis(size, level, theory)


@lru_cache(maxsize=64)
def _chain_basis(size: int, level: int, theory: str) -> tuple:
    return tuple(t for t in product(range(size), repeat=level) if _in_theory(t, theory))


def _boundary_terms(table, t):
    """Yield ``(c0, c1, target)``: the term ``(c0 + c1 T) * target`` of ``d(t)``."""
    n = len(t)
    for i in range(n):
        sign = -1 if i % 2 == 0 else 1          # (-1)^(i+1) with 1-based i
        yield 0, sign, t[:i] + t[i + 1:]
        moved = tuple(int(table[x, t[i]]) for x in t[:i]) + t[i + 1:]
        yield -sign, 0, moved


def _resolve_twisted(module: AlexanderModule, twisted) -> bool:
    if twisted is None:
        return not module.trivial_action
    return bool(twisted)


@dataclass(frozen=True)
class BoundaryMatrix:
    """Matrix of ``d_n : C_n -> C_(n-1)`` over the scalar ring of ``module``.

    Each basis tuple owns a block of ``module.degree`` consecutive rows or
    columns.  Entries are reduced mod ``module.p`` (kept exact for ``p = 0``).
    """

    level: int
    matrix: np.ndarray
    rows: tuple
    cols: tuple
    module: AlexanderModule
    twisted: bool

    @property
    def shape(self):
        return self.matrix.shape


@lru_cache(maxsize=256)
def _poly_boundary(table_bytes: bytes, size: int, theory: str, n: int) -> dict:
    cols = chain_basis(size, n, theory)
    entries: dict = {}
    if n < 2:
        return entries
    table = np.frombuffer(table_bytes, dtype=np.int64).reshape(size, size)
    pos = {t: i for i, t in enumerate(chain_basis(size, n - 1, theory))}
    for j, t in enumerate(cols):
        terms: dict = {}
        for c0, c1, target in _boundary_terms(table, t):
            a, b = terms.get(target, (0, 0))
            terms[target] = (a + c0, b + c1)
        for target, coef in terms.items():
            if coef == (0, 0):
                continue
            i = pos.get(target)
            if i is None:
                # non-degenerate terms of a degenerate tuple cancel
                if theory == "degenerate":
                    raise AssertionError("degenerate subcomplex not closed")
                continue
            entries[(i, j)] = coef
    return entries


@lru_cache(maxsize=64)
def _poly_dense(table_bytes: bytes, size: int, theory: str, n: int):
    nrows = len(chain_basis(size, n - 1, theory)) if n >= 2 else 0
    ncols = len(chain_basis(size, n, theory))
    c0 = np.zeros((nrows, ncols), dtype=np.int64)
    c1 = np.zeros((nrows, ncols), dtype=np.int64)
    for (i, j), (a, b) in _poly_boundary(table_bytes, size, theory, n).items():
        c0[i, j] = a
        c1[i, j] = b
    c0.flags.writeable = False
    c1.flags.writeable = False
    return c0, c1


class ChainComplex:
    """Chain complex of a finite quandle in one of the three theories.

    ``twisting`` is ``None`` for the untwisted complex, or the coefficient
    module over which the twisted complex is taken.
    """

    def __init__(self, quandle: FiniteQuandle, theory: str = "quandle",
                 twisting: AlexanderModule | None = None, max_level: int | None = None):
        if theory not in THEORIES:
            raise InputError(f"theory must be one of {THEORIES}, got {theory!r}")
        if twisting is not None:
            twisting = as_module(twisting)
            if not twisting.p:
                raise UnsupportedError("twisted (co)homology needs a finite coefficient module")
        self.quandle = quandle
        self.theory = theory
        self.twisting = twisting
        self.max_level = max_level

    def __repr__(self):
        tw = f", twisted over {self.twisting.label}" if self.twisting is not None else ""
        return f"ChainComplex({self.quandle.label or self.quandle.size}, {self.theory}{tw})"

    def _check_level(self, n):
        if self.max_level is not None and n > self.max_level:
            raise InputError(f"level {n} exceeds the complex's maximum level {self.max_level}")

    def basis(self, n: int) -> tuple:
        self._check_level(n)
        return chain_basis(self.quandle.size, n, self.theory)

    def resolve(self, coefficients=None) -> tuple[AlexanderModule, bool]:
        """Coefficient module and twisted flag used for a computation."""
        if self.twisting is not None:
            if coefficients is not None and as_module(coefficients) != self.twisting:
                raise InputError(f"complex is twisted over {self.twisting.label}; "
                                 f"got coefficients {as_module(coefficients).label}")
            return self.twisting, True
        return as_module(coefficients), False

    def poly_boundary(self, n: int) -> dict:
        """Sparse ``d_n`` with entries ``(c0, c1)`` meaning ``c0 + c1 T``.

        Keys are ``(row, col)`` positions in ``basis(n-1) x basis(n)``.
        """
        self._check_level(n)
        return _poly_boundary(self.quandle.table.tobytes(), self.quandle.size, self.theory, n)

    def _dense(self, n: int, module: AlexanderModule, twisted: bool) -> np.ndarray:
        """Integer matrix of ``d_n`` with ``T`` replaced by its companion matrix."""
        c0, c1 = _poly_dense(self.quandle.table.tobytes(), self.quandle.size, self.theory, n)
        eye = np.eye(module.degree, dtype=np.int64)
        if twisted:
            mat = np.kron(c0, eye) + np.kron(c1, module.t_matrix)
        else:
            mat = np.kron(c0 + c1, eye)
        return np.mod(mat, module.p) if module.p else mat

    def boundary_matrix(self, n: int, coefficients=None) -> BoundaryMatrix:
        module, twisted = self.resolve(coefficients)
        cols = self.basis(n)
        rows = self.basis(n - 1) if n >= 2 else ()
        return BoundaryMatrix(n, self._dense(n, module, twisted), rows, cols, module, twisted)

    def coboundary_matrix(self, n: int, coefficients=None) -> np.ndarray:
        """Matrix of ``delta^n : C^n -> C^(n+1)``, ``(delta f)(c) = (-1)^n f(dc)``."""
        module, twisted = self.resolve(coefficients)
        self.basis(n + 1)
        mat = self._dense(n + 1, module, twisted).T
        if n % 2:
            mat = -mat
        return np.mod(mat, module.p) if module.p else np.ascontiguousarray(mat)

    # ------------------------------------------------ cochain <-> vectors
    def cochain_vector(self, f: Cochain) -> np.ndarray:
        idx = [f.tuple_index(t) for t in self.basis(f.level)]
        return f.values[idx].reshape(-1) if idx else np.zeros(0, dtype=np.int64)

    def vector_cochain(self, n: int, module: AlexanderModule, vec) -> Cochain:
        vals = np.zeros((self.quandle.size ** n, module.degree), dtype=np.int64)
        vec = np.asarray(vec, dtype=np.int64).reshape(-1, module.degree)
        for row, t in zip(vec, self.basis(n)):
            k = 0
            for x in t:
                k = k * self.quandle.size + x
            vals[k] = row
        return Cochain(self.quandle, n, module, vals)


def _complex(obj, theory, coefficients, twisted) -> tuple[ChainComplex, AlexanderModule]:
    if isinstance(obj, ChainComplex):
        module, _ = obj.resolve(coefficients)
        return obj, module
    module = as_module(coefficients)
    tw = _resolve_twisted(module, twisted)
    return ChainComplex(obj, theory, module if tw else None), module


# ---------------------------------------------------------------- groups

def homology(obj, n: int, coefficients=None, theory: str = "quandle",
             twisted: bool | None = None) -> AbelianGroup:
    """``H_n`` as invariant factors.

    ``obj`` is a :class:`ChainComplex` or a quandle; for a quandle the
    complex is twisted when the coefficient module has a nontrivial action,
    unless ``twisted`` says otherwise.
    """
    cx, module = _complex(obj, theory, coefficients, twisted)
    f = cx.boundary_matrix(n, module).matrix
    g = cx.boundary_matrix(n + 1, module).matrix
    dim = len(cx.basis(n)) * module.degree
    if module.p:
        return subquotient(f, g, module.p, dim)
    rank_f = integer_rank(f.tolist()) if f.size else 0
    diag = invariant_factors(g.tolist()) if g.size else []
    return AbelianGroup(dim - rank_f - len(diag), tuple(x for x in diag if x > 1))


def cohomology(obj, n: int, coefficients=None, theory: str = "quandle",
               twisted: bool | None = None) -> AbelianGroup:
    """``H^n`` as invariant factors."""
    cx, module = _complex(obj, theory, coefficients, twisted)
    dim = len(cx.basis(n)) * module.degree
    f = cx.coboundary_matrix(n, module)
    if n >= 2:
        g = cx.coboundary_matrix(n - 1, module)
    else:
        g = np.zeros((dim, 0), dtype=np.int64)
    return subquotient(f, g, module.p, dim)


def _span_rows(rows: np.ndarray, p: int, width: int) -> np.ndarray:
    """Echelon generating set of the row span, mod ``p`` (``0`` = over Z)."""
    rows = np.asarray(rows, dtype=np.int64).reshape(-1, width)
    if p and is_prime(p):
        r, piv = _rref_mod(rows, p) if rows.size else (rows, [])
        return np.asarray(r[: len(piv)], dtype=np.int64).reshape(-1, width)
    lst = rows.tolist()
    if p:
        lst = lst + [[p * int(i == j) for j in range(width)] for i in range(width)]
    if not lst:
        return np.zeros((0, width), dtype=np.int64)
    e, _, piv = row_echelon(lst, ncols=width, hermite=True)
    out = [[x % p for x in row] if p else row for row in e[: len(piv)]]
    out = [row for row in out if any(row)]
    return np.array(out, dtype=np.int64).reshape(-1, width)


def cocycle_basis(obj, n: int, coefficients=None, theory: str = "quandle",
                  twisted: bool | None = None) -> list[Cochain]:
    """Generators of ``Z^n`` in echelon form (a basis when ``p`` is prime)."""
    cx, module = _complex(obj, theory, coefficients, twisted)
    dim = len(cx.basis(n)) * module.degree
    delta = cx.coboundary_matrix(n, module)
    p = module.p
    if p and is_prime(p):
        rows = kernel_mod(delta, p, ncols=dim) if delta.shape[0] else np.eye(dim, dtype=np.int64)
    elif not p:
        rows = IntegerSolver(delta, ncols=dim).kernel() if delta.shape[0] else np.eye(dim)
    else:
        b = delta.shape[0]
        stacked = np.concatenate([delta, p * np.eye(b, dtype=np.int64)], axis=1)
        rows = [r[:dim] for r in IntegerSolver(stacked, ncols=dim + b).kernel()]
    rows = _span_rows(np.asarray(rows, dtype=np.int64).reshape(-1, dim), p, dim)
    return [cx.vector_cochain(n, module, r) for r in rows]


def coboundary_basis(obj, n: int, coefficients=None, theory: str = "quandle",
                     twisted: bool | None = None) -> list[Cochain]:
    """Generators of ``B^n`` (images of ``delta^(n-1)``) in echelon form."""
    cx, module = _complex(obj, theory, coefficients, twisted)
    dim = len(cx.basis(n)) * module.degree
    if n < 2:
        return []
    delta = cx.coboundary_matrix(n - 1, module)
    rows = _span_rows(delta.T, module.p, dim)
    return [cx.vector_cochain(n, module, r) for r in rows]


# --------------------------------------------------------------- cochains

def coboundary(f: Cochain, twisted: bool | None = None) -> Cochain:
    """``delta f`` evaluated on every ``(n+1)``-tuple (rack formula).

    For a quandle cochain the result vanishes on degenerate tuples.  A
    level-0 cochain has zero coboundary since level-1 chains are cycles.
    """
    module = f.coefficients
    tw = _resolve_twisted(module, twisted)
    q = f.quandle
    n = f.level
    size = q.size
    check_feasible(size, n + 1)
    out = Cochain(q, n + 1, module)
    if n == 0:
        return out
    tuples = np.array(list(product(range(size), repeat=n + 1)), dtype=np.int64)
    weights = size ** np.arange(n - 1, -1, -1, dtype=np.int64)
    tmat = module.t_matrix if tw else np.eye(module.degree, dtype=np.int64)
    vals = f.values
    acc = np.zeros((len(tuples), module.degree), dtype=np.int64)
    table = q.table
    for i in range(n + 1):
        sign = -1 if i % 2 == 0 else 1
        deleted = np.delete(tuples, i, axis=1)
        moved = deleted.copy()
        if i:
            moved[:, :i] = table[tuples[:, :i], tuples[:, i:i + 1]]
        acc += sign * (vals[deleted @ weights] @ tmat.T)
        acc -= sign * vals[moved @ weights]
        if module.p:
            acc = np.mod(acc, module.p)
    if n % 2:
        acc = -acc
    return Cochain(q, n + 1, module, acc)


@dataclass(frozen=True)
class CocycleCheck:
    """Outcome of a cocycle test with the first violated tuple, if any."""

    ok: bool
    witness: tuple | None = None
    value: int | None = None
    reason: str = ""

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "cocycle"
        return f"not a cocycle: {self.reason} at {self.witness} (value {self.value})"


def _theory_mask(size, level, theory):
    return np.array([_in_theory(t, theory) for t in product(range(size), repeat=level)],
                    dtype=bool)


def is_cocycle(f: Cochain, theory: str = "quandle", twisted: bool | None = None) -> CocycleCheck:
    """Exact cocycle test, reporting the first tuple where ``delta f`` is nonzero."""
    if theory not in THEORIES:
        raise InputError(f"theory must be one of {THEORIES}, got {theory!r}")
    size = f.quandle.size
    if f.level == 0:
        return CocycleCheck(True)
    if theory == "degenerate":
        # only the values on degenerate tuples define a degenerate cochain
        f = f.restrict("degenerate")
    elif theory == "quandle":
        mask = _theory_mask(size, f.level, theory)
        bad = np.nonzero(f.values.any(axis=1) & ~mask)[0]
        if len(bad):
            t = next(t for k, t in enumerate(f.tuples()) if k == bad[0])
            return CocycleCheck(False, t, f(*t), f"cochain is nonzero outside the {theory} "
                                                 "generators")
    df = coboundary(f, twisted)
    nz = df.values.any(axis=1)
    if theory == "degenerate":
        nz &= _theory_mask(size, f.level + 1, theory)
    hits = np.nonzero(nz)[0]
    if not len(hits):
        return CocycleCheck(True)
    k = int(hits[0])
    digits = []
    for _ in range(f.level + 1):
        k, r = divmod(k, size)
        digits.append(r)
    t = tuple(reversed(digits))
    return CocycleCheck(False, t, df(*t), "coboundary is nonzero")


def is_coboundary(f: Cochain, theory: str = "quandle",
                  twisted: bool | None = None) -> Cochain | None:
    """A cochain ``psi`` with ``delta psi = f``, or ``None`` if there is none."""
    module = f.coefficients
    tw = _resolve_twisted(module, twisted)
    if f.level <= 1:
        return Cochain(f.quandle, f.level - 1, module) if f.level == 1 and f.is_zero() else None
    cx = ChainComplex(f.quandle, theory, module if tw else None)
    chk = is_cocycle(f, theory, tw)
    if not chk.ok:
        return None
    delta = cx.coboundary_matrix(f.level - 1, module)
    rhs = cx.cochain_vector(f)
    if delta.shape[1] == 0:
        return Cochain(f.quandle, f.level - 1, module) if not rhs.any() else None
    if module.p:
        sol = solve_mod(delta, rhs, module.p)
    else:
        sol = IntegerSolver(delta).solve(rhs.tolist())
    if sol is None:
        return None
    psi = cx.vector_cochain(f.level - 1, module, np.asarray(sol, dtype=np.int64))
    assert coboundary(psi, tw).restrict(theory) == f.restrict(theory), \
        "coboundary witness failed to verify"
    return psi


def cohomologous(f: Cochain, g: Cochain, theory: str = "quandle",
                 twisted: bool | None = None) -> Cochain | None:
    """``psi`` with ``delta psi = f - g``, or ``None`` when the classes differ."""
    if f.coefficients != g.coefficients or f.level != g.level:
        raise InputError("cochains have different levels or coefficient modules")
    return is_coboundary(f - g, theory, twisted)


def is_quandle_hom_to_module(eta: Cochain, twisted: bool | None = None) -> bool:
    """Whether ``T eta(x1) + (1-T) eta(x2) = eta(x1*x2)`` for all pairs."""
    if eta.level != 1:
        raise InputError("expected a level-1 cochain")
    module = eta.coefficients
    tw = _resolve_twisted(module, twisted)
    tmat = module.t_matrix if tw else np.eye(module.degree, dtype=np.int64)
    v = eta.values
    tv = v @ tmat.T
    lhs = tv[:, None, :] + v[None, :, :] - tv[None, :, :]
    rhs = v[eta.quandle.table]
    diff = lhs - rhs
    if module.p:
        diff = np.mod(diff, module.p)
    return not diff.any()


# ------------------------------------------------------------ obstruction

class ModuleMap:
    """A ``Z[T, T^-1]``-linear map between finite Alexander modules.

    Given by a table of element indices, or by an integer matrix acting on
    coefficient vectors; additivity and ``T``-equivariance are verified.
    """

    def __init__(self, source: AlexanderModule, target: AlexanderModule, table=None,
                 matrix=None):
        if not source.p or not target.p:
            raise UnsupportedError("module maps need finite modules")
        self.source = source
        self.target = target
        if matrix is not None:
            m = np.asarray(matrix, dtype=np.int64).reshape(target.degree, source.degree)
            vecs = source.all_vectors()
            table = target.index_array(vecs @ m.T)
        if table is None:
            raise InputError("ModuleMap needs a table or a matrix")
        table = np.asarray(table, dtype=np.int64)
        if table.shape != (source.size,) or table.min() < 0 or table.max() >= target.size:
            raise InputError("module map table has the wrong shape or range")
        self.table = table
        self._verify()

    def _verify(self):
        s, t = self.source, self.target
        sv = s.all_vectors()
        tv = t.all_vectors()
        img = tv[self.table]
        sums = s.index_array(sv[:, None, :] + sv[None, :, :])
        lhs = self.table[sums]
        rhs = t.index_array(img[:, None, :] + img[None, :, :])
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            a, b = map(int, bad[0])
            raise InputError(f"map is not additive: f({a}+{b}) != f({a})+f({b})")
        ts = s.index_array(sv @ s.t_matrix.T)
        tt = t.index_array(img @ t.t_matrix.T)
        bad = np.nonzero(self.table[ts] != tt)[0]
        if len(bad):
            raise InputError(f"map does not commute with T at element {int(bad[0])}")

    def __call__(self, a: int) -> int:
        return int(self.table[a])

    def is_injective(self) -> bool:
        return len(set(self.table.tolist())) == self.source.size

    def is_surjective(self) -> bool:
        return len(set(self.table.tolist())) == self.target.size

    def kernel(self) -> list[int]:
        return [int(a) for a in np.nonzero(self.table == 0)[0]]

    def image(self) -> list[int]:
        return sorted(set(int(x) for x in self.table))


class ExactSequence:
    """``0 -> N --i--> G --p--> A -> 0`` of finite Alexander modules."""

    def __init__(self, inclusion: ModuleMap, projection: ModuleMap):
        if inclusion.target != projection.source:
            raise InputError("the middle modules of the two maps differ")
        if not inclusion.is_injective():
            raise InputError("the first map is not injective")
        if not projection.is_surjective():
            raise InputError("the second map is not surjective")
        if inclusion.image() != projection.kernel():
            raise InputError("image of the first map differs from kernel of the second")
        self.i = inclusion
        self.p = projection
        self.N = inclusion.source
        self.G = inclusion.target
        self.A = projection.target
        self._i_inv = {int(g): n for n, g in enumerate(inclusion.table)}

    def default_section(self) -> list[int]:
        """Minimal-index preimage of each element of ``A``; ``s(0) = 0``."""
        sec = [None] * self.A.size
        for g, a in enumerate(self.p.table):
            if sec[a] is None:
                sec[a] = g
        return sec

    def i_inverse(self, g: int) -> int:
        try:
            return self._i_inv[g]
        except KeyError:
            raise InputError(f"element {g} of the middle module is not in the image") from None


@dataclass(frozen=True)
class Obstruction:
    """The obstruction 2-cocycle, whether its class vanishes, and a lift if so."""

    phi: Cochain
    trivial: bool
    psi: Cochain | None
    lift: tuple | None


def obstruction_class(eta, sequence: ExactSequence, section=None) -> Obstruction:
    """Obstruction to lifting a quandle homomorphism ``eta: X -> A`` through ``G -> A``.

    ``eta`` is a :class:`QuandleHom` into the quandle of ``A`` or a level-1
    cochain with values in ``A``.  The default section picks the
    smallest-index preimage.
    """
    A, G = sequence.A, sequence.G
    if isinstance(eta, QuandleHom):
        if eta.target != A.as_quandle():
            raise InputError("eta must map into the quandle of the module A")
        quandle, values = eta.source, list(eta.values)
    elif isinstance(eta, Cochain):
        if eta.level != 1 or eta.coefficients != A:
            raise InputError("eta must be a level-1 cochain with values in A")
        quandle, values = eta.quandle, [eta(x) for x in range(eta.quandle.size)]
    else:
        raise InputError("eta must be a QuandleHom or a level-1 Cochain")
    eta_c = Cochain(quandle, 1, A, np.array([A.vector(v) for v in values]))
    if not is_quandle_hom_to_module(eta_c, twisted=True):
        raise InputError("eta is not a quandle homomorphism into A")
    sec = list(section) if section is not None else sequence.default_section()
    if len(sec) != A.size or sec[0] != 0 or any(sequence.p(g) != a for a, g in enumerate(sec)):
        raise InputError("section must satisfy p(s(a)) = a and s(0) = 0")
    s_eta = np.array([G.vector(sec[v]) for v in values], dtype=np.int64)
    tg = G.t_matrix
    n = quandle.size
    table = quandle.table
    phi_vals = np.zeros((n * n, sequence.N.degree), dtype=np.int64)
    for x1 in range(n):
        for x2 in range(n):
            g = tg @ s_eta[x1] + s_eta[x2] - tg @ s_eta[x2] - s_eta[table[x1, x2]]
            phi_vals[x1 * n + x2] = sequence.N.vector(sequence.i_inverse(G.index(g)))
    phi = Cochain(quandle, 2, sequence.N, phi_vals)
    psi = is_coboundary(phi, "quandle", twisted=True)
    if psi is None:
        return Obstruction(phi, False, None, None)
    lift = tuple(G.add(sec[v], sequence.i(psi(x))) for x, v in enumerate(values))
    lift_c = Cochain(quandle, 1, G, np.array([G.vector(g) for g in lift]))
    assert is_quandle_hom_to_module(lift_c, twisted=True), "lift is not a homomorphism"
    return Obstruction(phi, True, psi, lift)
