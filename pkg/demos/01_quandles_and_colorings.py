"""
Quandles, tables and knot colorings
===================================

"""

import numpy as np

import quandlekit as qk

# a quandle is stored as its operation table: table[a, b] = a * b
R3 = qk.make_dihedral(3)
print(R3.table)

# the three axioms, checked exhaustively
print(qk.verify_axioms(R3.table))

# a table that is not a quandle comes back with a counterexample
print(qk.verify_axioms(np.array([[0, 2, 1], [1, 1, 0], [2, 0, 2]])))

# Alexander quandles Z_p[T, T^-1]/(h) with a * b = T a + (1 - T) b.
# h is given by its coefficients, lowest degree first
S4 = qk.make_alexander(2, [1, 1, 1])
print(S4.table)

# small quandles up to isomorphism: 1, 1, 3, 7, 22, 73
print([len(qk.small_quandles(n)) for n in range(1, 7)])

# knot diagrams come from PD codes; a handful are bundled
print(qk.builtin_knots())
K = qk.load_knot("3_1")
print(K.to_pd())
print("writhe", K.writhe, "components", K.n_components)

# Fox 3-colorings of the trefoil: 3 trivial + 6 nontrivial
print(qk.col(K, R3))

for c in list(qk.colorings(K, R3))[:4]:
    print(c)

# the figure eight has none besides the constant ones
print(qk.col(qk.load_knot("4_1"), R3))

# both are colored nontrivially by S4
print(qk.col(K, S4), qk.col(qk.load_knot("4_1"), S4))

# for Alexander quandles the count is |X| times the size of a solution space,
# found by linear algebra without enumerating anything
print(qk.alexander_coloring_count(qk.load_knot("5_1"), 5, [1, 1]))
