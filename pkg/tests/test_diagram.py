import pytest
from conftest import PLAIN_KNOTS
from oracles import brute_force_colorings, orient_pd

from quandlekit import (AlexanderModule, InputError, KnotDiagram, alexander_coloring_count,
                        alexander_numbering, braid_closure, builtin_knots, colorings, load_knot,
                        make_alexander, make_dihedral, make_trivial, mirror, parse_pd, r1, r2,
                        reverse, unknot)
from quandlekit.invariants import col


def test_builtin_catalogue():
    names = builtin_knots()
    for n in ("3_1", "4_1", "5_1", "5_2", "6_1", "hopf", "3_1_r1", "4_1_braid"):
        assert n in names


@pytest.mark.parametrize("name", PLAIN_KNOTS)
def test_orientation_matches_oracle(name):
    K = load_knot(name)
    heads, signs = orient_pd(K.pd_list())
    assert list(K.signs) == list(signs)
    assert dict(K.head) == {lab: tuple(h) for lab, h in heads.items()}


def test_writhe_and_components():
    assert abs(load_knot("3_1").writhe) == 3
    assert load_knot("4_1").writhe == 0
    assert load_knot("hopf").n_components == 2
    assert load_knot("3_1").n_components == 1


@pytest.mark.parametrize("name", builtin_knots())
def test_euler_and_numbering(name):
    K = load_knot(name)
    assert len(K.faces) == K.n_crossings + 2
    num = alexander_numbering(K)
    assert num.faces[K.unbounded] == 0
    for lab in K.labels:
        assert num.faces[K.face_side(lab, "L")] == num.faces[K.face_side(lab, "R")] + 1


# 6_1 has 12 edges; 4^12 assignments is too many for the enumerator
BRUTE_CASES = [(n, make_dihedral(3)) for n in PLAIN_KNOTS] + \
    [(n, make_alexander(2, [1, 1, 1])) for n in PLAIN_KNOTS if n != "6_1"]


@pytest.mark.parametrize("name,X", BRUTE_CASES)
def test_colorings_match_brute_force(name, X):
    K = load_knot(name)
    want = brute_force_colorings(K.pd_list(), X.table.tolist())
    assert col(K, X) == len(want)
    # every library coloring lifts to an edge coloring found by enumeration
    found = {tuple(c[K.edge_arc[lab]] for lab in K.labels) for c in colorings(K, X)}
    assert found == {tuple(w[lab] for lab in K.labels) for w in want}


@pytest.mark.parametrize("name", builtin_knots())
@pytest.mark.parametrize("p,h", [(3, [1, 1]), (2, [1, 1, 1]), (5, [1, 1]), (4, [1, 1]),
                                 (9, [1, 1])])
def test_linear_count_matches_enumeration(name, p, h):
    K = load_knot(name)
    X = AlexanderModule(p, h).as_quandle()
    assert alexander_coloring_count(K, p, h) == col(K, X)


def test_trivial_quandle_counts():
    for name in builtin_knots():
        K = load_knot(name)
        assert col(K, make_trivial(3)) == 3 ** K.n_components


def test_fox_colorings():
    assert col(load_knot("3_1"), make_dihedral(3)) == 9
    assert col(load_knot("4_1"), make_dihedral(3)) == 3
    assert col(load_knot("4_1"), make_dihedral(5)) == 25
    assert col(load_knot("5_1"), make_dihedral(5)) == 25


def test_parse_formats():
    a = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
    b = parse_pd("# comment\nX[1, 4, 2, 5]\nX[3, 6, 4, 1]\nX[5, 2, 6, 3]\n")
    c = parse_pd([[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]])
    assert a.crossings == b.crossings == c.crossings


def test_parse_headers_round_trip():
    K = load_knot("3_1_r1")
    again = parse_pd(K.to_pd(orient=True))
    assert again == K


@pytest.mark.parametrize("text", [
    "X(1,2,3)",
    "X(1,4,2,5) X(3,6,4,1)",
    "X(1,2,2,1) X(3,4,4,3)",
    "Y(1,2,3,4)",
])
def test_invalid_pd(text):
    with pytest.raises(InputError):
        parse_pd(text)


def test_unbounded_face_choices_share_invariants():
    K = load_knot("3_1")
    X = make_dihedral(3)
    for lab in K.labels:
        for side in "LR":
            K2 = KnotDiagram(K.crossings, unbounded=f"{lab}{side}")
            assert col(K2, X) == 9
            assert alexander_numbering(K2).faces[K2.unbounded] == 0


def test_r1_and_r2_preserve_colorings():
    K = load_knot("4_1")
    X = make_dihedral(5)
    base = col(K, X)
    for lab in K.labels[:3]:
        for side in "LR":
            for sign in (1, -1):
                K1 = r1(K, lab, side, sign)
                assert K1.n_crossings == K.n_crossings + 1
                assert col(K1, X) == base
    face = next(f for f in K.faces if len(f) >= 2)
    e1, e2 = face[0][0], face[1][0]
    K2 = r2(K, e1, e2)
    assert K2.n_crossings == K.n_crossings + 2
    assert col(K2, X) == base


def test_mirror_and_reverse():
    K = load_knot("3_1")
    M = mirror(K)
    assert M.writhe == -K.writhe
    assert col(M, make_dihedral(3)) == 9
    R = reverse(K)
    assert R.writhe == K.writhe


def test_braid_closures():
    assert col(braid_closure([1, 1, 1]), make_dihedral(3)) == 9
    assert col(braid_closure([1, -2, 1, -2]), make_dihedral(5)) == 25
    hopf = braid_closure([1, 1])
    assert hopf.n_components == 2


def test_unknot():
    U = unknot()
    assert U.n_crossings == 0 and len(U.faces) == 2
    assert col(U, make_dihedral(5)) == 5
    assert load_knot("unknot").n_crossings == 0
