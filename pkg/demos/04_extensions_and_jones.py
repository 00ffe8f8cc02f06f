"""
Extensions and the Jones polynomial
===================================

"""

import quandlekit as qk

# R9 is an extension of R3 by R3.  The cocycle records the carry digit
phi = qk.extension_cocycle(3, 2, [1, 1])
print(phi.chi_string())

E = qk.alexander_extension(phi.quandle, phi.coefficients, phi)
f = qk.extension_bijection(3, 2, [1, 1])
print(E.size, qk.is_isomorphic(E, qk.make_dihedral(9)))

# the same construction for Z_8[T]/(T^2+T+1) over S4
phi8 = qk.extension_cocycle(2, 3, [1, 1, 1])
print(phi8.quandle.size, len(phi8.support()))

# pointwise version on Laurent polynomials {degree: coefficient}
print(qk.extension_cocycle_laurent(3, 2, {0: 1}, {0: 2}))

# cohomologous cocycles give isomorphic extensions
R3mod = phi.coefficients
cob = qk.coboundary(qk.Cochain.from_dict(phi.quandle, 1, R3mod, {(1,): 1}), twisted=True)
E2 = qk.alexander_extension(phi.quandle, R3mod, phi + cob)
print(qk.is_isomorphic(E, E2))

# Kauffman bracket, its writhe-normalized form, and Jones in t = A^-4
K = qk.load_knot("3_1")
print(qk.bracket(K))
print(qk.normalized(K))
print(qk.jones(K))
print(qk.jones(qk.mirror(K)))

# the figure eight is amphichiral
F = qk.load_knot("4_1")
print(qk.jones(F) == qk.jones(qk.mirror(F)))

# links may have half-integer exponents
print(qk.jones(qk.load_knot("hopf")))
