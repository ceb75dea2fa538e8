"""Exact integral cohomology of symmetric products.

Two independent models with a certified comparison:

- the invariant subring of the signed n-fold tensor power of any finite
  graded ring presentation, with its integral basis and integer structure
  constants (``sympower``), built on the signed group action (``tensors``)
  over exact presentations (``rings``);
- the generators-and-relations quotient for genus-g surfaces with
  weight-descent normal forms, Betti numbers, and minimal generating sets
  (``quotient``);
- exact integer lattice certification (``lattice``) and the degreewise
  unimodular change of basis between the models (``bridge``).
"""

from .rings import Element, Generator, Ring, ValidationReport, load_ring
from .tensors import Perm, TensorElement, act, sym_element, symmetrize, tensor_multiply
from .sympower import (
    BasisIndex,
    StructureTable,
    chi,
    dual_element,
    enumerate_basis,
    expand,
    pair,
    realize,
    structure_constants,
)
from .quotient import (
    Monomial,
    Polynomial,
    betti,
    format_poly,
    ideal_generators,
    multiply_nf,
    normal_form,
    parse_poly,
    quotient_basis,
    relation_poly,
    verify_minimality,
)
from .bridge import BridgeReport, check_isomorphism, multiplicativity_spot_check
from .fixtures import load_fixture, surface_ring

__all__ = [
    "BasisIndex", "BridgeReport", "Element", "Generator", "Monomial", "Perm",
    "Polynomial", "Ring", "StructureTable", "TensorElement", "ValidationReport",
    "act", "betti", "check_isomorphism", "chi", "dual_element", "enumerate_basis",
    "expand", "format_poly", "ideal_generators", "load_fixture", "load_ring",
    "multiply_nf", "multiplicativity_spot_check", "normal_form", "pair",
    "parse_poly", "quotient_basis", "realize", "relation_poly", "structure_constants",
    "surface_ring", "sym_element", "symmetrize", "tensor_multiply",
    "verify_minimality",
]
