"""Alexander and abelian extensions, and the cocycles they come from.

An extension lives on ``A x X``; the pair ``(a, x)`` has index
``a * |X| + x``.
"""

from __future__ import annotations

import numpy as np

from .cochain import Cochain, as_module
from .errors import InputError
from .homology import is_cocycle
from .quandle import AlexanderModule, FiniteQuandle, make_alexander

__all__ = [
    "pair_index", "alexander_extension", "abelian_extension", "extension_cocycle",
    "extension_bijection", "extension_cocycle_laurent", "cocycle_from_bijection",
    "is_isomorphism",
]


def pair_index(a: int, x: int, x_size: int) -> int:
    return a * x_size + x


def _check_phi(X, A, phi, twisted):
    if not isinstance(phi, Cochain) or phi.level != 2:
        raise InputError("phi must be a level-2 cochain")
    if phi.quandle != X:
        raise InputError("phi is defined on a different quandle")
    if phi.coefficients != A:
        raise InputError(f"phi takes values in {phi.coefficients.label}, expected {A.label}")
    chk = is_cocycle(phi, "quandle", twisted=twisted)
    if not chk.ok:
        kind = "twisted" if twisted else "untwisted"
        raise InputError(f"phi is not a {kind} quandle 2-cocycle: {chk.reason} "
                         f"at {chk.witness}")


def _extension(X: FiniteQuandle, A: AlexanderModule, phi: Cochain, twisted: bool,
               label: str) -> FiniteQuandle:
    n = X.size
    vecs = A.all_vectors()
    k = A.size
    tmat = A.t_matrix if twisted else np.eye(A.degree, dtype=np.int64)
    tv = vecs @ tmat.T
    # a1 * a2 in the fiber (or plain a1 for abelian extensions)
    fiber = tv[:, None, :] + vecs[None, :, :] - tv[None, :, :]
    phi_v = phi.values.reshape(n, n, A.degree)
    total = fiber[:, None, :, None, :] + phi_v[None, :, None, :, :]
    a_idx = A.index_array(total)                       # (a1, x1, a2, x2)
    x_idx = np.broadcast_to(X.table[None, :, None, :], a_idx.shape)
    table = (a_idx * n + x_idx).reshape(k * n, k * n)
    return FiniteQuandle(table, label=label)


def alexander_extension(X: FiniteQuandle, A, phi: Cochain) -> FiniteQuandle:
    """``AE(X, A, phi)``: ``(a1, x1) * (a2, x2) = (a1*a2 + phi(x1, x2), x1*x2)``."""
    A = as_module(A)
    if not A.p:
        raise InputError("the fiber must be a finite module")
    _check_phi(X, A, phi, twisted=True)
    return _extension(X, A, phi, True, f"AE({X.label},{A.label})")


def abelian_extension(X: FiniteQuandle, A, phi: Cochain) -> FiniteQuandle:
    """``E(X, A, phi)``: ``(a1, x1) * (a2, x2) = (a1 + phi(x1, x2), x1*x2)``."""
    A = as_module(A)
    if not A.p:
        raise InputError("the fiber must be a finite group")
    _check_phi(X, A, phi, twisted=False)
    return _extension(X, A, phi, False, f"E({X.label},{A.label})")


def _digit_modules(p: int, m: int, h):
    if p < 2 or m < 2:
        raise InputError("extension_cocycle needs p >= 2 and m >= 2")
    big = AlexanderModule(p ** m, h)
    X = AlexanderModule(p ** (m - 1), list(big.h))
    A = AlexanderModule(p, list(big.h))
    if X.degree != big.degree or A.degree != big.degree:
        raise InputError("leading coefficient of h must stay a unit mod p")
    return big, X, A


def extension_bijection(p: int, m: int, h) -> np.ndarray:
    """``f(L) = (top digits of L, lower digits of L)`` as an index array.

    Entry ``L`` (an element index of ``Z_{p^m}[T, T^-1]/(h)``) is the index of
    ``f(L)`` in ``AE(X, A, phi)`` for the cocycle of :func:`extension_cocycle`.
    """
    big, X, A = _digit_modules(p, m, h)
    v = big.all_vectors()
    low = v % p ** (m - 1)
    top = v // p ** (m - 1)
    return A.index_array(top) * X.size + X.index_array(low)


def extension_cocycle(p: int, m: int, h) -> Cochain:
    """The 2-cocycle realizing ``Z_{p^m}[T, T^-1]/(h)`` as an extension.

    ``X = Z_{p^(m-1)}[T, T^-1]/(h)`` and ``A = Z_p[T, T^-1]/(h)``.  With
    ``s`` lifting the digits of an element of ``X`` unchanged, ``phi(L, M)``
    is the top base-``p`` digit of each coefficient of ``s(L) * s(M)``
    computed with coefficients mod ``p^m``.
    """
    big, X, A = _digit_modules(p, m, h)
    xv = X.all_vectors()
    tb = big.t_matrix
    tv = xv @ tb.T
    prod = np.mod(tv[:, None, :] + xv[None, :, :] - tv[None, :, :], big.p)
    top = prod // p ** (m - 1)
    Xq = X.as_quandle()
    return Cochain(Xq, 2, A, top.reshape(-1, A.degree))


def extension_cocycle_laurent(p: int, m: int, L: dict, M: dict) -> dict:
    """Pointwise ``phi(L, M)`` for ``h = 0`` on Laurent polynomials.

    ``L`` and ``M`` map exponents to coefficients in ``[0, p^(m-1))``; the
    result maps exponents to top digits in ``[0, p)``.
    """
    if p < 2 or m < 2:
        raise InputError("extension_cocycle_laurent needs p >= 2 and m >= 2")
    low = p ** (m - 1)
    for poly in (L, M):
        for e, c in poly.items():
            if not 0 <= int(c) < low:
                raise InputError(f"coefficient {c} of T^{e} is not a digit lift in [0, {low})")
    out: dict = {}
    # T L + M - T M
    for e, c in L.items():
        out[e + 1] = out.get(e + 1, 0) + int(c)
    for e, c in M.items():
        out[e] = out.get(e, 0) + int(c)
        out[e + 1] = out.get(e + 1, 0) - int(c)
    res = {}
    for e, c in out.items():
        d = (c % p ** m) // low
        if d:
            res[e] = d
    return dict(sorted(res.items()))


def is_isomorphism(q: FiniteQuandle, r: FiniteQuandle, mapping) -> bool:
    """Whether ``mapping`` (index array ``q -> r``) is a quandle isomorphism."""
    f = np.asarray(mapping, dtype=np.int64)
    if q.size != r.size or f.shape != (q.size,) or len(set(f.tolist())) != q.size:
        return False
    return bool(np.array_equal(f[q.table], r.table[f[:, None], f[None, :]]))


def cocycle_from_bijection(E: FiniteQuandle, X: FiniteQuandle, A, mapping,
                           twisted: bool = True) -> Cochain:
    """Read off ``phi`` from a bijection ``E -> A x X`` onto an extension.

    ``mapping[e]`` is the pair index of the image of ``e``.  The cocycle is
    evaluated on the zero section and then the whole bijection is checked
    to be an isomorphism onto the resulting extension.
    """
    A = as_module(A)
    n = X.size
    f = np.asarray(mapping, dtype=np.int64)
    if f.shape != (E.size,) or E.size != A.size * n or len(set(f.tolist())) != E.size:
        raise InputError("mapping is not a bijection onto A x X")
    inv = np.empty_like(f)
    inv[f] = np.arange(E.size)
    zero = [int(inv[pair_index(0, x, n)]) for x in range(n)]
    vals = np.zeros((n * n, A.degree), dtype=np.int64)
    for x1 in range(n):
        for x2 in range(n):
            img = int(f[E.table[zero[x1], zero[x2]]])
            a, x = divmod(img, n)
            if x != X.table[x1, x2]:
                raise InputError("projection to X is not a homomorphism")
            vals[x1 * n + x2] = A.vector(a)
    phi = Cochain(X, 2, A, vals)
    ext = _extension(X, A, phi, twisted, "")
    if not is_isomorphism(E, ext, f):
        raise InputError("mapping is not an isomorphism onto any extension of this form")
    return phi


def dihedral_tower(p: int, m: int):
    """``(R_{p^m}, phi, f)`` with ``R_{p^m} = AE(R_{p^(m-1)}, R_p, phi)`` via ``f``."""
    return make_alexander(p ** m, [1, 1]), extension_cocycle(p, m, [1, 1]), \
        extension_bijection(p, m, [1, 1])
