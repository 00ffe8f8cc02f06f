"""Oriented knot and link diagrams given by PD codes.

A crossing ``X[i, j, k, l]`` lists its four edge labels counterclockwise,
starting from the incoming under edge.  The under strand runs from slot 0
to slot 2; the over strand joins slots 1 and 3.  A crossing is positive
when the over strand enters at slot 3.

Edges are the pieces between consecutive crossings.  Arcs, the objects a
coloring labels, are maximal runs of edges joined through over-passes.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from importlib import resources
from math import gcd

import numpy as np

from .errors import InputError, UnsupportedError
from .linalg import integer_rank, invariant_factors, is_prime, rank_mod_p
from .quandle import AlexanderModule, FiniteQuandle, parse_poly

__all__ = [
    "CrossingData", "KnotDiagram", "AlexanderNumbering", "parse_pd", "unknot",
    "alexander_numbering", "colorings", "coloring_count", "alexander_coloring_count",
    "r1", "r2", "mirror", "reverse", "braid_closure", "load_knot", "builtin_knots",
]

_X_RE = re.compile(r"X\s*[\[(]\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*[\])]")
_SIDE_RE = re.compile(r"^\s*(-?\d+)\s*([LRlr])\s*$")
_ORIENT_RE = re.compile(r"^\s*(-?\d+)\s*@\s*(\d+)(?:\s*\.\s*([0-3]))?\s*$")


@dataclass(frozen=True)
class CrossingData:
    """Arcs at a crossing: ``gamma = alpha * beta`` for every coloring."""

    sign: int
    alpha: int
    beta: int
    gamma: int
    under_in: int
    under_out: int


class KnotDiagram:
    """A validated, oriented PD diagram; treat instances as immutable.

    ``orient`` maps an edge label to the ``(crossing, slot)`` it runs into;
    it is only needed for components that never pass under a crossing.
    ``unbounded`` names the unbounded face as ``"<label>L"`` or
    ``"<label>R"`` (the face on that side of the edge); the default is the
    right side of the largest label.
    """

    def __init__(self, crossings, orient=None, unbounded: str | None = None, name: str = ""):
        self.name = name
        self.crossings = tuple(tuple(int(x) for x in q) for q in crossings)
        for q in self.crossings:
            if len(q) != 4:
                raise InputError(f"crossing {q} does not have four entries")
        if not self.crossings:
            self._init_unknot(unbounded)
            return
        self._init_edges()
        self._init_orientation(dict(orient or {}))
        self._init_structure()
        self._init_faces(unbounded)

    # ------------------------------------------------------------ set-up
    def _init_unknot(self, unbounded):
        self.labels = (1,)
        self.ends = {}
        self.head = {}
        self.tail = {}
        self.signs = ()
        self.over_in = ()
        self.components = ((1,),)
        self.edge_component = {1: 0}
        self.arcs = ((1,),)
        self.edge_arc = {1: 0}
        self.faces = (((1, 1),), ((1, -1),))
        self.dart_face = {(1, 1): 0, (1, -1): 1}
        self.corner_face = {}
        side = (unbounded or "1R").strip().upper()
        if side not in ("1L", "1R"):
            raise InputError("the crossingless unknot has a single edge labelled 1")
        self.unbounded = 0 if side.endswith("L") else 1
        self.unbounded_spec = side

    def _init_edges(self):
        ends: dict = {}
        for c, q in enumerate(self.crossings):
            for k, lab in enumerate(q):
                ends.setdefault(lab, []).append((c, k))
        bad = [lab for lab, e in ends.items() if len(e) != 2]
        if bad:
            lab = bad[0]
            raise InputError(f"edge label {lab} appears {len(ends[lab])} time(s); "
                             "every label must appear exactly twice")
        self.labels = tuple(sorted(ends))
        self.ends = {lab: tuple(e) for lab, e in ends.items()}
        self._other = {}
        for lab, (a, b) in self.ends.items():
            self._other[a] = b
            self._other[b] = a

    def _init_orientation(self, orient):
        head: dict = {}
        tail: dict = {}

        def set_head(lab, end):
            if end not in self.ends[lab]:
                raise InputError(f"edge {lab} does not meet crossing slot {end}")
            if head.get(lab, end) != end or tail.get(lab) == end:
                raise InputError(f"inconsistent orientation of edge {lab}")
            if lab in head:
                return False
            head[lab] = end
            other = self._other[end]
            if tail.get(lab, other) != other:
                raise InputError(f"inconsistent orientation of edge {lab}")
            tail[lab] = other
            return True

        def set_tail(lab, end):
            return set_head(lab, self._other[end])

        for lab, end in orient.items():
            set_head(int(lab), tuple(end))
        for c, q in enumerate(self.crossings):
            set_head(q[0], (c, 0))
            set_tail(q[2], (c, 2))
        queue = True
        while queue:
            queue = False
            for c, q in enumerate(self.crossings):
                j, l = q[1], q[3]
                if head.get(j) == (c, 1) or tail.get(l) == (c, 3):
                    queue |= set_tail(l, (c, 3)) | set_head(j, (c, 1))
                elif head.get(l) == (c, 3) or tail.get(j) == (c, 1):
                    queue |= set_tail(j, (c, 1)) | set_head(l, (c, 3))
            if not queue:
                # a component that never passes under: orient it by label order
                for c, q in enumerate(self.crossings):
                    j, l = q[1], q[3]
                    if j not in head and l not in head:
                        if j == l + 1:
                            set_head(l, (c, 3))
                        else:
                            set_head(j, (c, 1))
                        queue = True
                        break
        for c, q in enumerate(self.crossings):
            j, l = q[1], q[3]
            if (head[j] == (c, 1)) == (head[l] == (c, 3)):
                raise InputError(f"over strand at crossing {c} has no consistent direction")
        self.head = head
        self.tail = tail
        self.over_in = tuple(3 if head[q[3]] == (c, 3) else 1
                             for c, q in enumerate(self.crossings))
        self.signs = tuple(1 if s == 3 else -1 for s in self.over_in)

    def _init_structure(self):
        # successor of an edge along its component
        succ = {}
        for lab in self.labels:
            c, k = self.head[lab]
            succ[lab] = self.crossings[c][(k + 2) % 4]
        comps = []
        seen = set()
        for lab in self.labels:
            if lab in seen:
                continue
            comp = []
            e = lab
            while e not in seen:
                seen.add(e)
                comp.append(e)
                e = succ[e]
            comps.append(tuple(comp))
        self.components = tuple(comps)
        self.edge_component = {e: i for i, comp in enumerate(comps) for e in comp}
        self.successor = succ
        # arcs: break each component at its under-crossings
        parent = {lab: lab for lab in self.labels}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for q in self.crossings:
            a, b = find(q[1]), find(q[3])
            if a != b:
                parent[max(a, b)] = min(a, b)
        groups: dict = {}
        for lab in self.labels:
            groups.setdefault(find(lab), []).append(lab)
        self.arcs = tuple(tuple(sorted(g)) for _, g in sorted(groups.items()))
        self.edge_arc = {e: i for i, arc in enumerate(self.arcs) for e in arc}
        # connectivity of the underlying 4-valent graph
        cparent = list(range(len(self.crossings)))

        def cfind(x):
            while cparent[x] != x:
                cparent[x] = cparent[cparent[x]]
                x = cparent[x]
            return x

        for (c1, _), (c2, _) in self.ends.values():
            a, b = cfind(c1), cfind(c2)
            if a != b:
                cparent[a] = b
        if len({cfind(c) for c in range(len(self.crossings))}) > 1:
            raise InputError("diagram is disconnected; split diagrams are not supported")

    def _init_faces(self, unbounded):
        dart_face = {}
        corner_face = {}
        faces = []
        for lab in self.labels:
            for start_end in (self.tail[lab], self.head[lab]):
                dart = (lab, 1 if start_end == self.tail[lab] else -1)
                if dart in dart_face:
                    continue
                face = []
                end = start_end
                while True:
                    c, k = end
                    e = self.crossings[c][k]
                    d = (e, 1 if end == self.tail[e] else -1)
                    if d in dart_face:
                        break
                    dart_face[d] = len(faces)
                    corner_face[end] = len(faces)
                    face.append(d)
                    c2, k2 = self._other[end]
                    end = (c2, (k2 - 1) % 4)
                faces.append(tuple(face))
        v = len(self.crossings)
        if len(faces) != v + 2:
            raise InputError(f"rotation data is not planar: {len(faces)} faces for {v} "
                             f"crossings (expected {v + 2})")
        self.faces = tuple(faces)
        self.dart_face = dart_face
        self.corner_face = corner_face
        spec = unbounded if unbounded is not None else f"{max(self.labels)}R"
        m = _SIDE_RE.match(str(spec))
        if not m:
            raise InputError(f"unbounded face must look like '<label>L' or '<label>R', "
                             f"got {spec!r}")
        lab, side = int(m.group(1)), m.group(2).upper()
        if lab not in self.ends:
            raise InputError(f"unbounded face refers to unknown edge {lab}")
        self.unbounded = dart_face[(lab, 1 if side == "L" else -1)]
        self.unbounded_spec = f"{lab}{side}"

    # ------------------------------------------------------------ queries
    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def writhe(self) -> int:
        return sum(self.signs)

    @property
    def n_components(self) -> int:
        return len(self.components)

    def face_side(self, lab: int, side: str) -> int:
        """Face on the left (``"L"``) or right (``"R"``) of an edge."""
        return self.dart_face[(lab, 1 if side.upper() == "L" else -1)]

    def source_face(self, c: int) -> int:
        """Face from which the normals of both strands at crossing ``c`` point."""
        return self.corner_face[(c, 0 if self.signs[c] == 1 else 1)]

    def crossing_data(self) -> list[CrossingData]:
        out = []
        for c, (i, j, k, _l) in enumerate(self.crossings):
            s = self.signs[c]
            a, g = (i, k) if s == 1 else (k, i)
            out.append(CrossingData(s, self.edge_arc[a], self.edge_arc[j], self.edge_arc[g],
                                    self.edge_arc[i], self.edge_arc[k]))
        return out

    def under_component(self, c: int) -> int:
        return self.edge_component[self.crossings[c][0]]

    def orientation_lines(self) -> list[str]:
        """``orient:`` entries fixing every edge's direction explicitly."""
        return [f"{lab}@{c}.{k}" for lab, (c, k) in sorted(self.head.items())]

    def to_pd(self, orient: bool = False) -> str:
        lines = []
        if self.name:
            lines.append(f"# {self.name}")
        lines.append(f"unbounded_face: {self.unbounded_spec}")
        if orient and self.crossings:
            lines.append("orient: " + ", ".join(self.orientation_lines()))
        lines += [f"X({a},{b},{c},{d})" for a, b, c, d in self.crossings]
        return "\n".join(lines) + "\n"

    def pd_list(self) -> list[list[int]]:
        return [list(q) for q in self.crossings]

    def __repr__(self):
        nm = f"{self.name}, " if self.name else ""
        return (f"KnotDiagram({nm}{self.n_crossings} crossings, "
                f"{self.n_components} component(s))")

    def __eq__(self, other):
        return (isinstance(other, KnotDiagram) and self.crossings == other.crossings
                and self.head == other.head and self.unbounded_spec == other.unbounded_spec)

    def __hash__(self):
        return hash((self.crossings, self.unbounded_spec))


def unknot() -> KnotDiagram:
    return KnotDiagram([], name="0_1")


def parse_pd(source, name: str = "") -> KnotDiagram:
    """Parse PD text (``X(a,b,c,d)`` entries, optional headers) or a list of quadruples.

    Headers: ``unbounded_face: 5R`` and ``orient: 5@0.3, 7@2`` (edge ``5``
    runs into slot 3 of crossing 0; the slot may be omitted when the edge
    meets that crossing once).  ``#`` starts a comment.
    """
    if not isinstance(source, str):
        try:
            quads = [tuple(int(x) for x in q) for q in source]
        except (TypeError, ValueError):
            raise InputError("PD list must contain quadruples of integers") from None
        return KnotDiagram(quads, name=name)
    quads = []
    unbounded = None
    orient_items = []
    for raw in source.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        low = line.lower()
        if low.startswith("unbounded_face:"):
            unbounded = line.split(":", 1)[1].strip()
            continue
        if low.startswith("orient:"):
            orient_items += [x for x in re.split(r"[,\s]+", line.split(":", 1)[1]) if x]
            continue
        if low.startswith("name:"):
            name = name or line.split(":", 1)[1].strip()
            continue
        found = _X_RE.findall(line)
        rest = _X_RE.sub("", line)
        rest = re.sub(r"PD\s*[\[(]|[\])\[(,;\s]", "", rest)
        if rest:
            raise InputError(f"cannot parse PD line {raw!r}")
        quads += [tuple(int(x) for x in f) for f in found]
    # orient entries are joined back into "lab@c.k" tokens
    orient = {}
    for item in orient_items:
        m = _ORIENT_RE.match(item)
        if not m:
            raise InputError(f"bad orient entry {item!r}; expected <label>@<crossing>[.<slot>]")
        lab, c = int(m.group(1)), int(m.group(2))
        if not 0 <= c < len(quads):
            raise InputError(f"orient entry {item!r} names a missing crossing")
        if m.group(3) is not None:
            k = int(m.group(3))
        else:
            slots = [k for k, x in enumerate(quads[c]) if x == lab]
            if len(slots) != 1:
                raise InputError(f"orient entry {item!r} is ambiguous or wrong; give a slot")
            k = slots[0]
        orient[lab] = (c, k)
    return KnotDiagram(quads, orient=orient, unbounded=unbounded, name=name)


# ---------------------------------------------------------- numbering

@dataclass(frozen=True)
class AlexanderNumbering:
    faces: tuple
    crossings: tuple

    def __getitem__(self, c: int) -> int:
        return self.crossings[c]


def alexander_numbering(K: KnotDiagram) -> AlexanderNumbering:
    """Face labels with the unbounded face 0, rising by 1 across an edge to its left."""
    nf = len(K.faces)
    adj = [[] for _ in range(nf)]
    for lab in K.labels:
        left, right = K.dart_face[(lab, 1)], K.dart_face[(lab, -1)]
        adj[right].append((left, 1))
        adj[left].append((right, -1))
    val = [None] * nf
    val[K.unbounded] = 0
    queue = deque([K.unbounded])
    while queue:
        f = queue.popleft()
        for g, step in adj[f]:
            if val[g] is None:
                val[g] = val[f] + step
                queue.append(g)
    for lab in K.labels:
        left, right = K.dart_face[(lab, 1)], K.dart_face[(lab, -1)]
        if val[left] != val[right] + 1:
            raise RuntimeError(f"Alexander numbering inconsistent across edge {lab}")
    cross = tuple(val[K.source_face(c)] for c in range(K.n_crossings))
    return AlexanderNumbering(tuple(val), cross)


# ----------------------------------------------------------- colorings

def colorings(K: KnotDiagram, X: FiniteQuandle) -> list[tuple]:
    """All colorings as tuples indexed by arc, sorted lexicographically."""
    n = X.size
    m = len(K.arcs)
    data = K.crossing_data()
    table = X.table
    inv = X.inverse
    by_arc = [[] for _ in range(m)]
    for cd in data:
        for a in {cd.alpha, cd.beta, cd.gamma}:
            by_arc[a].append(cd)
    weight = [len(x) for x in by_arc]
    out = []

    def propagate(assign, start):
        stack = [start]
        while stack:
            a = stack.pop()
            for cd in by_arc[a]:
                al, be, ga = assign[cd.alpha], assign[cd.beta], assign[cd.gamma]
                if be < 0:
                    continue
                if al >= 0:
                    want = int(table[al, be])
                    if ga < 0:
                        assign[cd.gamma] = want
                        stack.append(cd.gamma)
                    elif ga != want:
                        return False
                elif ga >= 0:
                    assign[cd.alpha] = int(inv[ga, be])
                    stack.append(cd.alpha)
        return True

    def search(assign):
        free = [a for a in range(m) if assign[a] < 0]
        if not free:
            out.append(tuple(assign))
            return
        a = max(free, key=lambda x: (weight[x], -x))
        for v in range(n):
            nxt = list(assign)
            nxt[a] = v
            if propagate(nxt, a):
                search(nxt)

    search([-1] * m)
    out.sort()
    return out


def coloring_count(K: KnotDiagram, X: FiniteQuandle) -> int:
    return len(colorings(K, X))


def _poly_mod(poly: dict, p: int) -> list[int]:
    if not poly:
        return []
    lo = min(poly)
    coeffs = [0] * (max(poly) - lo + 1)
    for e, c in poly.items():
        coeffs[e - lo] = c % p
    return _strip(coeffs)


def _strip(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    while a and a[0] == 0:
        a.pop(0)
    return a


def _poly_gcd_mod(a, b, p):
    a, b = _strip(a), _strip(b)
    while b:
        inv = pow(b[-1], -1, p)
        while len(a) >= len(b) and a:
            f = a[-1] * inv % p
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] = (a[shift + i] - f * c) % p
            while a and a[-1] == 0:
                a.pop()
        a, b = b, _strip(a)
    return a


def alexander_coloring_count(K: KnotDiagram, p: int, h=None, ideal=None) -> int:
    """Number of colorings by ``Z_p[T, T^-1]/J`` from the linear crossing equations.

    ``J`` is given by one polynomial ``h`` or, for prime ``p``, a list of
    generators ``ideal`` whose gcd is used.
    """
    p = int(p)
    if p < 2:
        raise UnsupportedError("colorings by an infinite module are not counted")
    if ideal is not None:
        if h is not None:
            raise InputError("give either h or ideal, not both")
        if not is_prime(p):
            raise UnsupportedError("ideal generators are supported for prime p only")
        g: list = []
        for gen in ideal:
            poly = parse_poly(gen) if isinstance(gen, str) else (
                gen if isinstance(gen, dict) else dict(enumerate(gen)))
            g = _poly_gcd_mod(g, _poly_mod(poly, p), p)
        if not g:
            raise UnsupportedError("the zero ideal gives an infinite module")
        if len(g) == 1:
            return 1          # J is the unit ideal; the module is 0
        h = g
    module = AlexanderModule(p, h)
    d = module.degree
    m = len(K.arcs)
    rows = []
    t = module.t_matrix
    one_minus_t = np.mod(np.eye(d, dtype=np.int64) - t, p)
    for cd in K.crossing_data():
        block = np.zeros((d, m * d), dtype=np.int64)
        block[:, cd.alpha * d:(cd.alpha + 1) * d] += t
        block[:, cd.beta * d:(cd.beta + 1) * d] += one_minus_t
        block[:, cd.gamma * d:(cd.gamma + 1) * d] -= np.eye(d, dtype=np.int64)
        rows.append(np.mod(block, p))
    nvars = m * d
    if not rows:
        return p ** nvars
    mat = np.concatenate(rows, axis=0)
    if is_prime(p):
        return p ** (nvars - rank_mod_p(mat, p))
    diag = invariant_factors(mat.tolist())
    count = p ** (nvars - len(diag))
    for x in diag:
        count *= gcd(x, p)
    return count


# --------------------------------------------------------------- moves

def _heads(K: KnotDiagram) -> dict:
    return dict(K.head)


def _rebuild(crossings, heads, unbounded, name):
    return KnotDiagram(crossings, orient=heads, unbounded=unbounded, name=name)


def r1(K: KnotDiagram, edge: int, side: str = "L", sign: int = 1) -> KnotDiagram:
    """Add a kink on ``edge`` lying to its left or right with the given sign."""
    if not K.crossings:
        raise UnsupportedError("moves on the crossingless unknot are not supported")
    if edge not in K.ends:
        raise InputError(f"unknown edge {edge}")
    side = side.upper()
    top = max(K.labels)
    e_in, e_out, loop = edge, top + 1, top + 2
    c = len(K.crossings)
    crossings = [list(q) for q in K.crossings]
    hc, hk = K.head[edge]
    crossings[hc][hk] = e_out
    heads = _heads(K)
    heads[e_out] = (hc, hk)
    if side == "L" and sign == 1:
        new, slots = [e_in, e_out, loop, loop], {e_in: 0, loop: 3}
    elif side == "L":
        new, slots = [loop, e_in, e_out, loop], {e_in: 1, loop: 0}
    elif sign == 1:
        new, slots = [loop, loop, e_out, e_in], {e_in: 3, loop: 0}
    else:
        new, slots = [e_in, loop, loop, e_out], {e_in: 0, loop: 1}
    crossings.append(new)
    heads[e_in] = (c, slots[e_in])
    heads[loop] = (c, slots[loop])
    return _rebuild(crossings, heads, K.unbounded_spec, K.name)


def r2(K: KnotDiagram, over: int, under: int, face: int | None = None) -> KnotDiagram:
    """Push edge ``over`` across a shared face and over edge ``under``.

    ``face`` is needed only when the two edges share more than one face.
    """
    if not K.crossings:
        raise UnsupportedError("moves on the crossingless unknot are not supported")
    if over == under or over not in K.ends or under not in K.ends:
        raise InputError("r2 needs two distinct existing edges")
    shared = []
    for f, darts in enumerate(K.faces):
        de = [d for d in darts if d[0] == over]
        df = [d for d in darts if d[0] == under]
        if de and df:
            shared.append((f, de[0], df[0]))
    if face is not None:
        shared = [s for s in shared if s[0] == face]
    if not shared:
        raise InputError(f"edges {over} and {under} do not share a face")
    if len(shared) > 1:
        raise InputError(f"edges {over} and {under} share faces "
                         f"{[s[0] for s in shared]}; pass face=")
    _, d_e, d_f = shared[0]
    top = max(K.labels)
    c_a, c_b = len(K.crossings), len(K.crossings) + 1
    crossings = [list(q) for q in K.crossings]
    heads = _heads(K)

    def split(lab, dart_dir, names):
        """Return (segment at dart start, middle, segment at dart end)."""
        tail_end, head_end = K.tail[lab], K.head[lab]
        first, mid, last = lab, names[0], names[1]
        # ``first`` keeps the tail end, ``last`` takes over the head end
        crossings[head_end[0]][head_end[1]] = last
        heads[last] = head_end
        if dart_dir == 1:
            return first, mid, last, 1
        return last, mid, first, -1

    # f: west segment at the start of its dart, east at the end
    f_w, f_m, f_e, f_dir = split(under, d_f[1], (top + 1, top + 2))
    # e: the dart runs east to west, so A (west) is its end
    e_b, e_m, e_a, e_dir = split(over, d_e[1], (top + 3, top + 4))
    if f_dir == 1:
        xa = [f_w, e_m, f_m, e_a]
        xb = [f_m, e_m, f_e, e_b]
        heads[f_w], heads[f_m] = (c_a, 0), (c_b, 0)
    else:
        xa = [f_m, e_a, f_w, e_m]
        xb = [f_e, e_b, f_m, e_m]
        heads[f_e], heads[f_m] = (c_b, 0), (c_a, 0)
    a_over = {e_a: 3, e_m: 1} if f_dir == 1 else {e_a: 1, e_m: 3}
    b_over = {e_b: 3, e_m: 1} if f_dir == 1 else {e_b: 1, e_m: 3}
    if e_dir == 1:
        # e runs with its dart: enters at B, middle, leaves at A
        heads[e_b] = (c_b, b_over[e_b])
        heads[e_m] = (c_a, a_over[e_m])
    else:
        heads[e_a] = (c_a, a_over[e_a])
        heads[e_m] = (c_b, b_over[e_m])
    crossings += [xa, xb]
    return _rebuild(crossings, heads, K.unbounded_spec, K.name)


def mirror(K: KnotDiagram) -> KnotDiagram:
    """Switch every crossing; the planar picture and orientation are kept."""
    if not K.crossings:
        return K
    crossings = []
    heads = {}
    for c, (i, j, k, l) in enumerate(K.crossings):
        if K.over_in[c] == 1:
            crossings.append([j, k, l, i])
        else:
            crossings.append([l, i, j, k])
    for lab, (c, k) in K.head.items():
        shift = 1 if K.over_in[c] == 1 else 3
        heads[lab] = (c, (k - shift) % 4)
    return _rebuild(crossings, heads, K.unbounded_spec, f"{K.name}*" if K.name else "")


def reverse(K: KnotDiagram) -> KnotDiagram:
    """Reverse the orientation of every component."""
    if not K.crossings:
        return K
    crossings = []
    heads = {}
    for i, j, k, l in K.crossings:
        crossings.append([k, l, i, j])
    for lab, (c, k) in K.tail.items():
        heads[lab] = (c, (k - 2) % 4)
    spec = K.unbounded_spec
    spec = spec[:-1] + ("R" if spec.endswith("L") else "L")
    return _rebuild(crossings, heads, spec, f"r{K.name}" if K.name else "")


def braid_closure(word, n_strands: int | None = None, name: str = "") -> KnotDiagram:
    """Closure of a braid word; ``i`` is the generator sigma_i, ``-i`` its inverse.

    Strands run upward, sigma_i puts the strand moving from position ``i`` to
    ``i+1`` over the other, and the closing strands pass to the right.
    """
    word = [int(w) for w in word]
    if not word or 0 in word:
        raise InputError("braid word must be a nonempty list of nonzero integers")
    n = n_strands or (max(abs(w) for w in word) + 1)
    if max(abs(w) for w in word) >= n:
        raise InputError("generator index exceeds strand count")
    touched = {abs(w) for w in word} | {abs(w) + 1 for w in word}
    if len(touched) != n:
        raise InputError("every strand must take part in a crossing")
    cur = list(range(1, n + 1))
    bottom = list(cur)
    nxt = n + 1
    crossings = []
    heads = {}
    for w in word:
        i = abs(w) - 1
        a_in, b_in = cur[i], cur[i + 1]
        a_out, b_out = nxt, nxt + 1
        nxt += 2
        c = len(crossings)
        if w > 0:
            crossings.append([b_in, a_out, b_out, a_in])
            heads[b_in], heads[a_in] = (c, 0), (c, 3)
        else:
            crossings.append([a_in, b_in, a_out, b_out])
            heads[a_in], heads[b_in] = (c, 0), (c, 1)
        cur[i], cur[i + 1] = b_out, a_out
    rename = dict(zip(cur, bottom))
    crossings = [[rename.get(x, x) for x in q] for q in crossings]
    heads = {rename.get(k, k): v for k, v in heads.items()}
    # relabel densely, keeping first appearance order
    order = {}
    for q in crossings:
        for x in q:
            order.setdefault(x, len(order) + 1)
    crossings = [[order[x] for x in q] for q in crossings]
    heads = {order[k]: v for k, v in heads.items()}
    return KnotDiagram(crossings, orient=heads, unbounded=f"{order[bottom[0]]}L", name=name)


# ------------------------------------------------------------- library

def builtin_knots() -> list[str]:
    root = resources.files("quandlekit") / "data" / "knots"
    return sorted(p.name[:-3] for p in root.iterdir() if p.name.endswith(".pd"))


def load_knot(name: str) -> KnotDiagram:
    """A stored diagram (``3_1``, ``4_1``, ``5_1``, ``5_2``, ``6_1``, ``hopf``, variants)."""
    if name in ("0_1", "unknot"):
        return unknot()
    root = resources.files("quandlekit") / "data" / "knots"
    path = root / f"{name}.pd"
    if not path.is_file():
        raise InputError(f"no stored diagram named {name!r}; known: {builtin_knots()}")
    return parse_pd(path.read_text(), name=name)
