"""Independent reference computations used by the test-suite.

Nothing in here imports quandlekit.  The PD orientation logic, the Jones
skein recursion, the brute-force coloring counter and the tuple-level chain
complexes are deliberately re-derived from scratch so they can check the library's own code paths.
"""

from collections import defaultdict
from itertools import product


def orient_pd(pd):
    """Return ``(heads, signs)`` for a PD code.

    ``heads[label]`` is the ``(crossing, slot)`` the edge runs into and
    ``signs[c]`` is +1 when the over strand enters at slot 3.
    """
    ends = defaultdict(list)
    for c, quad in enumerate(pd):
        for k, lab in enumerate(quad):
            ends[lab].append((c, k))
    head = {}
    tail = {}
    for c, quad in enumerate(pd):
        head_slot = (c, 0)
        tail_slot = (c, 2)
        head.setdefault(quad[0], set()).add(head_slot)
        tail.setdefault(quad[2], set()).add(tail_slot)
    # flatten: an edge has exactly one head end and one tail end
    h = {}
    t = {}
    for lab, s in head.items():
        h[lab] = next(iter(s)) if len(s) == 1 else None
    for lab, s in tail.items():
        t[lab] = next(iter(s)) if len(s) == 1 else None

    def other(lab, end):
        a, b = ends[lab]
        return b if a == end else a

    changed = True
    while changed:
        changed = False
        for lab in ends:
            if lab in h and lab not in t:
                t[lab] = other(lab, h[lab])
                changed = True
            elif lab in t and lab not in h:
                h[lab] = other(lab, t[lab])
                changed = True
        for c, quad in enumerate(pd):
            j, l = quad[1], quad[3]
            if h.get(j) == (c, 1) and l not in t:
                t[l] = (c, 3)
                changed = True
            if h.get(l) == (c, 3) and j not in t:
                t[j] = (c, 1)
                changed = True
            if t.get(j) == (c, 1) and l not in h:
                h[l] = (c, 3)
                changed = True
            if t.get(l) == (c, 3) and j not in h:
                h[j] = (c, 1)
                changed = True
        if not changed:
            for c, quad in enumerate(pd):
                j, l = quad[1], quad[3]
                if j not in h and j not in t and l not in h and l not in t:
                    if j == l + 1:
                        h[l] = (c, 3)
                    else:
                        h[j] = (c, 1)
                    changed = True
                    break
    signs = []
    for c, quad in enumerate(pd):
        signs.append(1 if h[quad[3]] == (c, 3) else -1)
    return h, signs


# ---------------------------------------------------------------- Jones skein

def _padd(p, q, scale=1):
    out = dict(p)
    for e, v in q.items():
        out[e] = out.get(e, 0) + scale * v
    return {e: v for e, v in out.items() if v}


def _pmul(p, q):
    out = {}
    for e1, v1 in p.items():
        for e2, v2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
    return {e: v for e, v in out.items() if v}


_DELTA = {1: -1, -1: -1}  # -(s + 1/s), s = t^(1/2)


def _ppow(p, n):
    out = {0: 1}
    for _ in range(n):
        out = _pmul(out, p)
    return out


def jones_skein(pd):
    """Jones polynomial by oriented skein recursion on descending diagrams.

    Returns a dict mapping exponents of ``s = t**(1/2)`` to coefficients.
    """
    pd = [tuple(q) for q in pd]
    heads, signs = orient_pd(pd)
    xs = []
    for c, (i, j, k, l) in enumerate(pd):
        if heads[l] == (c, 3):
            b_in, b_out = l, j
        else:
            b_in, b_out = j, l
        xs.append((i, k, b_in, b_out, signs[c]))
    return _skein(tuple(xs), 0)


def _skein(xs, loops):
    if not xs:
        return _ppow(_DELTA, loops - 1) if loops else {0: 1}
    succ = {}
    where = {}
    for idx, (a_in, a_out, b_in, b_out, _) in enumerate(xs):
        succ[a_in] = a_out
        succ[b_in] = b_out
        where[a_in] = (idx, "under")
        where[b_in] = (idx, "over")
    seen_edges = set()
    seen_x = set()
    bad = None
    ncomp = 0
    for start in sorted(succ):
        if start in seen_edges:
            continue
        ncomp += 1
        e = start
        while e not in seen_edges:
            seen_edges.add(e)
            idx, role = where[e]
            if idx not in seen_x:
                seen_x.add(idx)
                if role == "under" and bad is None:
                    bad = idx
            e = succ[e]
    if bad is None:
        return _ppow(_DELTA, ncomp + loops - 1)
    a_in, a_out, b_in, b_out, sgn = xs[bad]
    switched = list(xs)
    switched[bad] = (b_in, b_out, a_in, a_out, -sgn)
    v_switch = _skein(tuple(switched), loops)
    rest = [x for n, x in enumerate(xs) if n != bad]
    extra = 0
    rename = {}

    def find(x):
        while x in rename:
            x = rename[x]
        return x

    for u, v in ((a_in, b_out), (b_in, a_out)):
        u, v = find(u), find(v)
        if u == v:
            extra += 1
        else:
            rename[v] = u
    rest = tuple(tuple(find(y) for y in x[:4]) + (x[4],) for x in rest)
    v_smooth = _skein(rest, loops + extra)
    if sgn == 1:
        # V(L+) = s^4 V(L-) + (s^3 - s) V(L0)
        return _padd(_pmul({4: 1}, v_switch), _pmul({3: 1, 1: -1}, v_smooth))
    # V(L-) = s^-4 V(L+) - (s^-1 - s^-3) V(L0)
    return _padd(_pmul({-4: 1}, v_switch), _pmul({-1: -1, -3: 1}, v_smooth))


def jones_skein_t(pd):
    """Jones polynomial as ``{exponent_of_t: coeff}`` with Fraction-free halves."""
    from fractions import Fraction

    return {Fraction(e, 2): v for e, v in jones_skein(pd).items()}


# ---------------------------------------------------------------- colorings

def brute_force_colorings(pd, table):
    """All edge colorings satisfying the crossing relation, by enumeration."""
    n = len(table)
    heads, signs = orient_pd(pd)
    labels = sorted({x for q in pd for x in q})
    pos = {lab: i for i, lab in enumerate(labels)}
    out = []
    for assign in product(range(n), repeat=len(labels)):
        ok = True
        for c, (i, j, k, l) in enumerate(pd):
            if assign[pos[j]] != assign[pos[l]]:
                ok = False
                break
            y = assign[pos[j]]
            if signs[c] == 1:
                alpha, gamma = assign[pos[i]], assign[pos[k]]
            else:
                alpha, gamma = assign[pos[k]], assign[pos[i]]
            if table[alpha][y] != gamma:
                ok = False
                break
        if ok:
            out.append(dict(zip(labels, assign)))
    return out


def brute_force_phi(pd, table, phi, q):
    """Untwisted state-sum ``{group element: multiplicity}`` by enumeration.

    ``phi`` maps pairs to integers mod ``q``.
    """
    heads, signs = orient_pd(pd)
    result = defaultdict(int)
    for col in brute_force_colorings(pd, table):
        w = 0
        for c, (i, j, k, l) in enumerate(pd):
            alpha = col[i] if signs[c] == 1 else col[k]
            w += signs[c] * phi.get((alpha, col[j]), 0)
        result[w % q] += 1
    return dict(result)


# ---------------------------------------------------------------- homology

def _degenerate(t):
    return any(t[i] == t[i + 1] for i in range(len(t) - 1))


def _tuples(size, n, theory):
    out = list(product(range(size), repeat=n))
    if theory == "quandle":
        return [t for t in out if not _degenerate(t)]
    if theory == "degenerate":
        return [t for t in out if _degenerate(t)]
    return out


def naive_boundary_terms(table, t, twisted=False):
    """``[(coefficient in Z[T] as (c0, c1), target)]`` for one generator.

    Written from the face-map description: deleting entry ``i`` and acting on
    the entries before it by ``x_i``.  The twisted version weights the plain
    face by ``T`` and includes the ``i = 1`` face.
    """
    n = len(t)
    out = []
    start = 0 if twisted else 1
    for i in range(start, n):
        s = -1 if i % 2 == 0 else 1          # (-1)^(i+1) for 1-based i + 1
        plain = t[:i] + t[i + 1:]
        acted = tuple(table[x][t[i]] for x in t[:i]) + t[i + 1:]
        out.append(((0, s) if twisted else (s, 0), plain))
        out.append(((-s, 0), acted))
    return out


def naive_boundary(table, n, theory="rack", twisted=False):
    """Boundary ``C_n -> C_{n-1}`` as a dict ``{(row, col): (c0, c1)}``.

    Rows and columns follow ``_tuples`` order; degenerate images are dropped
    in the quandle theory.
    """
    size = len(table)
    rows = {t: i for i, t in enumerate(_tuples(size, n - 1, theory))} if n > 1 else {}
    cols = _tuples(size, n, theory)
    acc = defaultdict(lambda: [0, 0])
    for j, t in enumerate(cols):
        if n == 1:
            continue
        for (c0, c1), target in naive_boundary_terms(table, t, twisted):
            if target not in rows:
                continue
            cell = acc[(rows[target], j)]
            cell[0] += c0
            cell[1] += c1
    return len(rows), len(cols), {k: tuple(v) for k, v in acc.items() if any(v)}


def _integer_matrix(table, n, theory):
    import sympy

    r, c, entries = naive_boundary(table, n, theory)
    m = sympy.zeros(r, c)
    for (i, j), (c0, _) in entries.items():
        m[i, j] = c0
    return m


def naive_homology(table, n, theory="quandle"):
    """``(rank, sorted torsion)`` of the integral homology in degree ``n``."""
    from sympy import ZZ
    from sympy.matrices.normalforms import invariant_factors

    d_n = _integer_matrix(table, n, theory)
    d_up = _integer_matrix(table, n + 1, theory)
    c_n = d_n.shape[1]
    rank_n = d_n.rank() if d_n.shape[0] and c_n else 0
    if d_up.shape[0] and d_up.shape[1]:
        facs = [abs(int(x)) for x in invariant_factors(d_up, domain=ZZ) if x != 0]
    else:
        facs = []
    return c_n - rank_n - len(facs), sorted(f for f in facs if f != 1)


def _rank_mod(m, p):
    from sympy import GF
    from sympy.polys.matrices import DomainMatrix

    if not (m.shape[0] and m.shape[1]):
        return 0
    return DomainMatrix.from_Matrix(m.applyfunc(lambda v: v % p)).convert_to(GF(p)).rank()


def naive_cohomology_dim(table, n, p, theory="quandle"):
    """Dimension of ``H^n(X; Z_p)`` for prime ``p`` (untwisted)."""
    d_n = _integer_matrix(table, n, theory)
    d_up = _integer_matrix(table, n + 1, theory)
    return d_n.shape[1] - _rank_mod(d_n, p) - _rank_mod(d_up, p)


def naive_coboundary_value(table, f, t):
    """``f(boundary t)`` for an untwisted cochain given as a dict on tuples."""
    return sum(c0 * f.get(target, 0) for (c0, _), target in naive_boundary_terms(table, t))


def naive_twisted_dd_vanishes(table, n, p, companion):
    """Whether ``boundary_n boundary_{n+1} = 0`` over ``Z_p[T]/(h)``.

    ``companion`` is the integer matrix of multiplication by ``T``.
    """
    import numpy as np

    T = np.array(companion, dtype=np.int64)
    d = len(T)
    eye = np.eye(d, dtype=np.int64)

    def dense(k):
        r, c, entries = naive_boundary(table, k, "rack", twisted=True)
        m = np.zeros((r * d, c * d), dtype=np.int64)
        for (i, j), (c0, c1) in entries.items():
            m[i * d:(i + 1) * d, j * d:(j + 1) * d] = c0 * eye + c1 * T
        return m % p

    prod = (dense(n) @ dense(n + 1)) % p
    return not prod.any()


def naive_is_coboundary_mod(table, f, n, p):
    """Whether the level-``n`` quandle cochain ``f`` (dict) is ``delta`` of something mod ``p``.

    The image of ``delta`` is the row space of the boundary matrix, so ``f``
    is a coboundary exactly when appending it as a row keeps the rank.
    """
    d_n = _integer_matrix(table, n, "quandle")
    cols = _tuples(len(table), n, "quandle")
    row = [[f.get(t, 0) % p for t in cols]]
    import sympy

    return _rank_mod(d_n.col_join(sympy.Matrix(row)), p) == _rank_mod(d_n, p)
