"""
State sums from quandle cocycles
================================

"""

import numpy as np

import quandlekit as qk
from quandlekit.reproduce import phi_s4

S4 = qk.make_alexander(2, [1, 1, 1])
phi = phi_s4()
trefoil = qk.load_knot("3_1")

# Phi is a sum over colorings of products of Boltzmann weights, valued in Z[Z_2]
print(qk.cocycle_invariant(trefoil, S4, phi))
print(qk.cocycle_invariant(qk.unknot(), S4, phi))

# a coboundary only counts colorings
rng = np.random.default_rng(0)
f = qk.coboundary(qk.Cochain.random(S4, 1, 2, rng))
print(qk.cocycle_invariant(trefoil, S4, f), qk.col(trefoil, S4))

# the same number via the Kronecker pairing with coloring-induced cycles
print(qk.invariant_via_pairing(trefoil, S4, phi))

# each coloring gives a 2-cycle
c = next(c for c in qk.colorings(trefoil, S4) if len(set(c)) > 1)
chain = qk.coloring_chain(trefoil, c)
print(chain, qk.is_cycle(chain, S4)[0])

# Reidemeister moves leave everything unchanged
moved = qk.r1(trefoil, trefoil.labels[0], "L", 1)
face = next(f for f in moved.faces if len(f) >= 2)
moved = qk.r2(moved, face[0][0], face[1][0])
print(moved.n_crossings, qk.cocycle_invariant(moved, S4, phi))

# twisted invariant: weights carry T^(-L) where L is the Alexander numbering
ext = qk.extension_cocycle(2, 2, [1, 1, 1])
print(qk.alexander_numbering(trefoil).faces)
print(qk.twisted_cocycle_invariant(trefoil, S4, ext.coefficients, ext))

# per-component values for links
print(qk.link_component_vector(qk.load_knot("hopf"), S4, phi))
