"""
Rack and quandle homology
=========================

"""

import quandlekit as qk

R3 = qk.make_dihedral(3)
S4 = qk.make_alexander(2, [1, 1, 1])

# integral homology, printed as a finitely generated abelian group
for n in (1, 2, 3):
    print(n, qk.homology(R3, n))

# cohomology with Z_q coefficients
print(qk.cohomology(S4, 2, 2))
print(qk.cohomology(R3, 3, 3))

# the rack complex splits into its degenerate and quandle parts
R4 = qk.make_dihedral(4)
for theory in ("rack", "degenerate", "quandle"):
    print(theory, qk.homology(R4, 2, theory=theory))

# cochains are dense arrays indexed by tuples; chi(a, b) is the indicator of (a, b).
# S4 lists its elements as 0, 1, T, T+1, so T has index 2
phi = sum((qk.Cochain.chi(S4, (a, b), 2)
           for a in range(4) for b in range(4) if a != b and 2 not in (a, b)),
          qk.Cochain.from_dict(S4, 2, 2, {}))
print(phi.chi_string())

# a cocycle that is not a coboundary
print(bool(qk.is_cocycle(phi)), qk.is_coboundary(phi) is None)

# a non-cocycle reports the tuple where delta phi is nonzero
print(qk.is_cocycle(qk.Cochain.chi(S4, (0, 2), 2)))

# coboundaries come with a witness psi, delta psi = f
psi = qk.Cochain.from_dict(S4, 1, 2, {(0,): 1})
print(qk.is_coboundary(qk.coboundary(psi)))

# twisted coefficients: an Alexander module as the coefficient ring
R3mod = qk.AlexanderModule(3, [1, 1])
print(qk.cohomology(R3, 2, R3mod))

# sizes grow like |X|^n; QW_MAX_TUPLES caps how many tuples may be built
try:
    import os
    os.environ["QW_MAX_TUPLES"] = "100"
    qk.homology(qk.make_dihedral(5), 4)
except qk.InfeasibleSizeError as exc:
    print("refused:", exc)
finally:
    del os.environ["QW_MAX_TUPLES"]
