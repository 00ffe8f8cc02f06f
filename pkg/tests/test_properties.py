"""Property-based checks with hypothesis."""

import numpy as np
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from quandlekit import (AlexanderModule, Cochain, KnotDiagram, coboundary, cocycle_basis,
                        cocycle_invariant, col, extension_cocycle, is_cocycle, jones, load_knot,
                        normalized, r1, r2, small_quandles, star_inv, twisted_cocycle_invariant,
                        verify_axioms)
from quandlekit.extensions import _extension
from quandlekit.homology import THEORIES
from quandlekit.reproduce import phi_s4, s4_quandle

SLOW = settings(max_examples=40, deadline=None,
                suppress_health_check=[HealthCheck.too_slow])

quandles = st.sampled_from([q for n in range(1, 6) for q in small_quandles(n)])
modules = st.sampled_from([None, AlexanderModule.zmod(2), AlexanderModule.zmod(3),
                           AlexanderModule(3, [1, 1]), AlexanderModule(2, [1, 1, 1]),
                           AlexanderModule(4, [1, 1])])
knots = st.sampled_from(["3_1", "4_1", "5_2"])


@SLOW
@given(quandles, st.data())
def test_star_inv_inverts(X, data):
    a = data.draw(st.integers(0, X.size - 1))
    b = data.draw(st.integers(0, X.size - 1))
    assert X.op(star_inv(X, a, b), b) == a
    assert star_inv(X, X.op(a, b), b) == a


@SLOW
@given(quandles, modules, st.integers(1, 2), st.integers(0, 2 ** 32 - 1), st.booleans())
def test_delta_squared_on_random_cochains(X, A, level, seed, twisted):
    rng = np.random.default_rng(seed)
    f = Cochain.random(X, level, A, rng, theory="rack")
    tw = twisted and A is not None and not A.trivial_action
    assert coboundary(coboundary(f, tw), tw).is_zero()


@SLOW
@given(quandles, st.sampled_from(THEORIES), st.integers(0, 2 ** 32 - 1))
def test_coboundaries_pass_cocycle_test(X, theory, seed):
    rng = np.random.default_rng(seed)
    f = coboundary(Cochain.random(X, 1, 3, rng, theory=theory))
    assert is_cocycle(f, theory=theory)


@SLOW
@given(st.sampled_from([q for n in (3, 4) for q in small_quandles(n)]),
       st.sampled_from([AlexanderModule.zmod(2), AlexanderModule(3, [1, 1])]),
       st.data())
def test_extensions_by_random_cocycles_are_quandles(X, A, data):
    tw = not A.trivial_action
    basis = cocycle_basis(X, 2, A, twisted=tw)
    assume(basis)
    coeffs = data.draw(st.lists(st.integers(0, A.p - 1), min_size=len(basis),
                                max_size=len(basis)))
    phi = Cochain.from_dict(X, 2, A, {})
    for k, b in zip(coeffs, basis):
        phi = phi + k * b
    E = _extension(X, A, phi, tw, "")
    assert verify_axioms(E.table).ok


def _edge_pairs(K):
    pairs = []
    for f, face in enumerate(K.faces):
        labs = sorted({lab for lab, _ in face})
        pairs += [(a, b, f) for a in labs for b in labs if a != b]
    return pairs


def _signature(K):
    S4 = s4_quandle()
    ext = extension_cocycle(3, 2, [1, 1])
    return (col(K, S4), cocycle_invariant(K, S4, phi_s4()),
            twisted_cocycle_invariant(K, ext.quandle, ext.coefficients, ext), normalized(K))


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(knots, st.data())
def test_random_reidemeister_moves_preserve_invariants(name, data):
    K = load_knot(name)
    ref = _signature(K)
    for _ in range(data.draw(st.integers(1, 2))):
        if data.draw(st.booleans()):
            lab = data.draw(st.sampled_from(K.labels))
            K = r1(K, lab, data.draw(st.sampled_from("LR")), data.draw(st.sampled_from([1, -1])))
        else:
            over, under, face = data.draw(st.sampled_from(_edge_pairs(K)))
            K = r2(K, over, under, face=face)
    assert _signature(K) == ref
    assert jones(K) == jones(load_knot(name))


@settings(max_examples=30, deadline=None)
@given(knots, st.data())
def test_twisted_invariant_ignores_unbounded_face(name, data):
    K = load_knot(name)
    lab = data.draw(st.sampled_from(K.labels))
    side = data.draw(st.sampled_from("LR"))
    K2 = KnotDiagram(K.crossings, unbounded=f"{lab}{side}")
    ext = extension_cocycle(3, 2, [1, 1])
    Z4T = AlexanderModule(4, [1, 1])
    basis = cocycle_basis(s4_quandle(), 2, Z4T)
    tw = basis[0] + basis[1]
    for X, A, f in ((ext.quandle, ext.coefficients, ext), (s4_quandle(), Z4T, tw)):
        assert twisted_cocycle_invariant(K2, X, A, f) == twisted_cocycle_invariant(K, X, A, f)


@SLOW
@given(knots, st.integers(0, 2 ** 32 - 1))
def test_phi_depends_on_class_only(name, seed):
    rng = np.random.default_rng(seed)
    S4 = s4_quandle()
    K = load_knot(name)
    psi = Cochain.random(S4, 1, 2, rng)
    assert cocycle_invariant(K, S4, phi_s4() + coboundary(psi)) == \
        cocycle_invariant(K, S4, phi_s4())


@SLOW
@given(quandles, modules, st.integers(1, 3), st.integers(0, 2 ** 32 - 1))
def test_cochain_json_round_trip(X, A, level, seed):
    f = Cochain.random(X, level, A, np.random.default_rng(seed))
    assert Cochain.from_json(f.to_json(), X) == f
