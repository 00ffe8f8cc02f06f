"""Exact integer and modular linear algebra.

Everything works on Python ints (lists of lists) so nothing overflows; the
mod-p routines use numpy int64 and assume ``p`` is prime and small.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "AbelianGroup",
    "exact_matmul",
    "IntegerSolver",
    "row_echelon",
    "invariant_factors",
    "integer_rank",
    "is_prime",
    "rank_mod_p",
    "solve_mod",
    "kernel_mod",
    "subquotient",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def exact_matmul(a, b) -> np.ndarray:
    """Integer matrix product, through float64 BLAS when that is provably exact."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.size == 0 or b.size == 0:
        return a @ b
    bound = int(np.abs(a).max()) * int(np.abs(b).max()) * a.shape[1]
    if bound < 2 ** 52:
        return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
    return a @ b


def _rows(m) -> list[list[int]]:
    if isinstance(m, np.ndarray):
        return [[int(x) for x in row] for row in m.tolist()]
    return [[int(x) for x in row] for row in m]


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group ``Z^rank + Z_d1 + Z_d2 + ...``.

    ``torsion`` is the invariant-factor list (each > 1, each dividing the
    next).
    """

    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        tors = tuple(sorted(int(d) for d in self.torsion if abs(int(d)) != 1))
        object.__setattr__(self, "torsion", _to_invariant_factors(tors))

    @property
    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    @property
    def order(self) -> int | None:
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def elementary_divisors(self) -> tuple[int, ...]:
        out = []
        for d in self.torsion:
            k = 2
            while d > 1:
                if d % k == 0:
                    pk = 1
                    while d % k == 0:
                        d //= k
                        pk *= k
                    out.append(pk)
                k += 1
        return tuple(sorted(out))

    def direct_sum(self, other: "AbelianGroup") -> "AbelianGroup":
        return AbelianGroup(self.rank + other.rank, self.torsion + other.torsion)

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z_{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion), "text": str(self)}


def _to_invariant_factors(divisors) -> tuple[int, ...]:
    """Normalize an arbitrary list of cyclic orders into invariant factors."""
    prime_powers: dict[int, list[int]] = {}
    for d in divisors:
        d = abs(d)
        k = 2
        while d > 1:
            if d % k == 0:
                pk = 1
                while d % k == 0:
                    d //= k
                    pk *= k
                prime_powers.setdefault(k, []).append(pk)
            k += 1
    if not prime_powers:
        return ()
    for v in prime_powers.values():
        v.sort(reverse=True)
    length = max(len(v) for v in prime_powers.values())
    factors = []
    for i in range(length):
        f = 1
        for v in prime_powers.values():
            if i < len(v):
                f *= v[i]
        factors.append(f)
    return tuple(sorted(factors))


def row_echelon(a, ncols: int | None = None, transform: bool = False, hermite: bool = False):
    """Row echelon form over Z by unimodular row operations.

    Returns ``(E, U, pivots)`` with ``U @ A == E`` (``U`` is None unless
    ``transform``).  With ``hermite`` the entries above each pivot are
    reduced into ``[0, pivot)``, giving the Hermite normal form.
    """
    rows = _rows(a)
    m = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)] if transform else None
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if rows[i][c]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(rows[i][c]))
            if piv != r:
                rows[piv], rows[r] = rows[r], rows[piv]
                if u is not None:
                    u[piv], u[r] = u[r], u[piv]
            pr = rows[r]
            pv = pr[c]
            clean = True
            for i in range(r + 1, m):
                ri = rows[i]
                if not ri[c]:
                    continue
                q = ri[c] // pv
                rows[i] = [x - q * y for x, y in zip(ri, pr)]
                if u is not None:
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                if rows[i][c]:
                    clean = False
            if clean:
                break
        if r < m and rows[r][c]:
            if rows[r][c] < 0:
                rows[r] = [-x for x in rows[r]]
                if u is not None:
                    u[r] = [-x for x in u[r]]
            if hermite:
                pv = rows[r][c]
                for i in range(r):
                    q = rows[i][c] // pv
                    if q:
                        rows[i] = [x - q * y for x, y in zip(rows[i], rows[r])]
                        if u is not None:
                            u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            pivots.append(c)
            r += 1
    return rows, u, pivots


def integer_rank(a) -> int:
    rows = _rows(a)
    if not rows:
        return 0
    return len(row_echelon(rows)[2])


def invariant_factors(a) -> list[int]:
    """Nonzero Smith normal form diagonal of an integer matrix (d1 | d2 | ...)."""
    rows = _rows(a)
    if not rows or not rows[0]:
        return []
    # echelon first: shrinks the problem to rank-many rows
    e, _, piv = row_echelon(rows)
    mat = [row[:] for row in e[: len(piv)]]
    m = len(mat)
    if m == 0:
        return []
    n = len(mat[0])
    diag = []
    s = 0
    while s < m:
        # pick smallest nonzero entry in the trailing block
        best = None
        for i in range(s, m):
            row = mat[i]
            for j in range(s, n):
                v = row[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        mat[s], mat[i] = mat[i], mat[s]
        if j != s:
            for row in mat:
                row[s], row[j] = row[j], row[s]
        while True:
            pv = mat[s][s]
            done = True
            for i in range(s + 1, m):
                if mat[i][s]:
                    q = mat[i][s] // pv
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[s])]
                    if mat[i][s]:
                        done = False
            for j in range(s + 1, n):
                if mat[s][j]:
                    q = mat[s][j] // pv
                    for row in mat:
                        if row[s]:
                            row[j] -= q * row[s]
                    if mat[s][j]:
                        done = False
            if done:
                # divisibility of the trailing block
                bad = None
                for i in range(s + 1, m):
                    for j in range(s + 1, n):
                        if mat[i][j] % pv:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                mat[s] = [x + y for x, y in zip(mat[s], mat[bad])]
                continue
            # move the smallest entry of row/col s onto the pivot
            best = (abs(pv), s, s)
            for i in range(s, m):
                if mat[i][s] and abs(mat[i][s]) < best[0]:
                    best = (abs(mat[i][s]), i, s)
            for j in range(s, n):
                if mat[s][j] and abs(mat[s][j]) < best[0]:
                    best = (abs(mat[s][j]), s, j)
            _, i, j = best
            if i != s:
                mat[s], mat[i] = mat[i], mat[s]
            if j != s:
                for row in mat:
                    row[s], row[j] = row[j], row[s]
        diag.append(abs(mat[s][s]))
        s += 1
    return diag


class IntegerSolver:
    """Solve ``M x = b`` over Z and produce a kernel basis of ``M``.

    ``M`` has shape ``(rows, cols)`` and acts on column vectors of length
    ``cols``.  Internally the transpose is row-reduced with a unimodular
    transform.
    """

    def __init__(self, m, ncols: int | None = None):
        if ncols is None and isinstance(m, np.ndarray) and m.ndim == 2:
            ncols = m.shape[1]
        rows = _rows(m)
        self.nrows = len(rows)
        self.ncols = ncols if ncols is not None else (len(rows[0]) if rows else 0)
        mt = [[rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        self._e, self._u, self._piv = row_echelon(mt, ncols=self.nrows, transform=True,
                                                  hermite=True)
        self.rank = len(self._piv)

    def kernel(self) -> list[list[int]]:
        """Z-basis of ``{x : M x = 0}`` in Hermite form."""
        basis = [row[:] for row in self._u[self.rank:]]
        if not basis:
            return []
        e, _, piv = row_echelon(basis, ncols=self.ncols, hermite=True)
        return e[: len(piv)]

    def solve(self, b) -> list[int] | None:
        res = [int(x) for x in b]
        if len(res) != self.nrows:
            raise ValueError("right-hand side has wrong length")
        z = []
        for j, c in enumerate(self._piv):
            row = self._e[j]
            q, rem = divmod(res[c], row[c])
            if rem:
                return None
            z.append(q)
            if q:
                res = [x - q * y for x, y in zip(res, row)]
        if any(res):
            return None
        x = [0] * self.ncols
        for j, q in enumerate(z):
            if q:
                x = [xi + q * ui for xi, ui in zip(x, self._u[j])]
        return x


# --------------------------------------------------------------------------
# prime modulus

def _rref_mod(a: np.ndarray, p: int):
    m = np.mod(np.array(a, dtype=np.int64), p)
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if not len(nz):
            continue
        i = r + int(nz[0])
        if i != r:
            m[[i, r]] = m[[r, i]]
        m[r] = (m[r] * pow(int(m[r, c]), -1, p)) % p
        col = m[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if len(nzr):
            m[nzr] = (m[nzr] - np.outer(col[nzr], m[r])) % p
        pivots.append(c)
        r += 1
    return m, pivots


def rank_mod_p(a, p: int) -> int:
    a = np.asarray(a, dtype=np.int64)
    if a.size == 0:
        return 0
    return len(_rref_mod(a, p)[1])


def kernel_mod(a, p: int, ncols: int | None = None) -> np.ndarray:
    """Basis (rows) of the kernel of ``a`` over ``F_p``, in reduced echelon form."""
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[1] if a.ndim == 2 and a.size else (ncols or 0)
    if a.size == 0:
        return np.eye(n, dtype=np.int64)
    r, piv = _rref_mod(a, p)
    free = [j for j in range(n) if j not in set(piv)]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.int64)
        v[f] = 1
        for i, c in enumerate(piv):
            v[c] = (-r[i, f]) % p
        basis.append(v)
    if not basis:
        return np.zeros((0, n), dtype=np.int64)
    k, _ = _rref_mod(np.array(basis), p)
    return k


def solve_mod(a, b, q: int) -> np.ndarray | None:
    """A solution of ``a x = b (mod q)`` or None; any modulus ``q >= 2``."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    rows, cols = a.shape
    if is_prime(q):
        aug = np.concatenate([np.mod(a, q), np.mod(b, q)[:, None]], axis=1)
        r, piv = _rref_mod(aug, q)
        if cols in piv:
            return None
        x = np.zeros(cols, dtype=np.int64)
        for i, c in enumerate(piv):
            x[c] = r[i, cols]
        return x
    stacked = np.concatenate([a, q * np.eye(rows, dtype=np.int64)], axis=1)
    sol = IntegerSolver(stacked).solve(b.tolist())
    if sol is None:
        return None
    return np.mod(np.array(sol[:cols], dtype=object), q).astype(np.int64)


def subquotient(f, g, q: int, dim: int) -> AbelianGroup:
    """The group ``ker(f) / im(g)`` with entries read modulo ``q`` (0 = over Z).

    ``f`` maps ``Z^dim`` onward (shape ``(*, dim)``) and ``g`` maps into
    ``Z^dim`` (shape ``(dim, *)``); ``f g = 0`` mod ``q`` is assumed.
    """
    f = np.asarray(f, dtype=np.int64).reshape(-1, dim)
    g = np.asarray(g, dtype=np.int64).reshape(dim, -1)
    if q and is_prime(q):
        kdim = dim - (rank_mod_p(f, q) if f.size else 0)
        idim = rank_mod_p(g, q) if g.size else 0
        return AbelianGroup(0, (q,) * (kdim - idim))
    if q == 0:
        kernel = IntegerSolver(f, ncols=dim).kernel() if f.shape[0] else \
            [[int(i == j) for j in range(dim)] for i in range(dim)]
        relations = g.T.tolist()
    else:
        b = f.shape[0]
        stacked = np.concatenate([f, q * np.eye(b, dtype=np.int64)], axis=1)
        full = IntegerSolver(stacked).kernel()
        kernel = [row[:dim] for row in full]
        e, _, piv = row_echelon(kernel, ncols=dim, hermite=True)
        kernel = e[: len(piv)]
        relations = g.T.tolist() + [[q * int(i == j) for j in range(dim)] for i in range(dim)]
    k = len(kernel)
    if k == 0:
        return AbelianGroup()
    # coordinates of each relation in the kernel basis: kernel^T c = rel
    kt = [[kernel[i][j] for i in range(k)] for j in range(dim)]
    solver = IntegerSolver(kt, ncols=k)
    coords = []
    for rel in relations:
        if not any(rel):
            continue
        c = solver.solve(rel)
        if c is None:
            raise ArithmeticError("relation outside the cycle lattice; f g != 0?")
        coords.append(c)
    if not coords:
        return AbelianGroup(k)
    diag = invariant_factors(coords)
    return AbelianGroup(k - len(diag), tuple(d for d in diag if d > 1))
