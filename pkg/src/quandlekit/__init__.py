"""Quandle (co)homology, cocycle knot invariants and the Kauffman bracket.

Finite quandles are operation tables over ``range(n)``; coefficients are
Alexander modules ``Z_p[T, T^-1]/(h)`` (``Z`` and ``Z_q`` included);
knots are PD codes.
"""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("artifact")
except PackageNotFoundError:       # running from a source tree
    __version__ = "0.0.0"

from .cochain import Cochain, as_module
from .cycles import (FormalChain, boundary, chain_from_crossings, coloring_chain,
                     invariant_via_pairing, is_cycle, is_null_homologous, kronecker_pairing)
from .diagram import (KnotDiagram, alexander_coloring_count, alexander_numbering,
                      braid_closure, builtin_knots, colorings, load_knot, mirror, parse_pd, r1,
                      r2, reverse, unknot)
from .errors import InfeasibleSizeError, InputError, UnsupportedError
from .extensions import (abelian_extension, alexander_extension, cocycle_from_bijection,
                         extension_bijection, extension_cocycle, extension_cocycle_laurent)
from .homology import (ChainComplex, ExactSequence, ModuleMap, coboundary, cocycle_basis,
                       cohomologous, cohomology, homology, is_coboundary, is_cocycle,
                       obstruction_class)
from .invariants import (GroupRingElement, LaurentPolynomial, bracket, cocycle_invariant, col,
                         jones, link_component_vector, lopes_family, normalized,
                         surface_state_sum, surface_weight, twisted_cocycle_invariant)
from .linalg import AbelianGroup
from .quandle import (AlexanderModule, FiniteQuandle, QuandleHom, enumerate_quandles,
                      find_isomorphism, is_isomorphic, make_alexander, make_conjugation,
                      make_dihedral, make_qs6, make_trivial, small_quandles, star_inv,
                      verify_axioms)

__all__ = [
    "Cochain", "as_module", "FormalChain", "boundary", "chain_from_crossings", "coloring_chain",
    "invariant_via_pairing", "is_cycle", "is_null_homologous", "kronecker_pairing",
    "KnotDiagram", "alexander_coloring_count", "alexander_numbering", "braid_closure",
    "builtin_knots", "colorings", "load_knot", "mirror", "parse_pd", "r1", "r2", "reverse",
    "unknot", "InfeasibleSizeError", "InputError", "UnsupportedError", "abelian_extension",
    "alexander_extension", "cocycle_from_bijection", "extension_bijection", "extension_cocycle",
    "extension_cocycle_laurent", "ChainComplex", "ExactSequence", "ModuleMap", "coboundary",
    "cocycle_basis", "cohomologous", "cohomology", "homology", "is_coboundary", "is_cocycle",
    "obstruction_class", "GroupRingElement", "LaurentPolynomial", "bracket",
    "cocycle_invariant", "col", "jones", "link_component_vector", "lopes_family", "normalized",
    "surface_state_sum", "surface_weight", "twisted_cocycle_invariant", "AbelianGroup",
    "AlexanderModule", "FiniteQuandle", "QuandleHom", "enumerate_quandles", "find_isomorphism",
    "is_isomorphic", "make_alexander", "make_conjugation", "make_dihedral", "make_qs6",
    "make_trivial", "small_quandles", "star_inv", "verify_axioms", "__version__",
]
