"""Fully commutative elements of type D_n, their packets, and homogeneous KLR modules."""

from .catalan import catalan, catalan_number, catalan_triangle
from .errors import DomainError, InvalidArgumentError, ParseError, ResourceLimitError
from .packets import (
    Collection, Packet, Suffix, build_collection, build_packet, packet_index,
    packet_size_formula, packet_sizes, phi, rho, sigma, tau, verify_identity, verify_theorem,
)
from .weight_graph import Component, Content, build_graph, components, homogeneous_components
from .words import (
    CanonicalForm, DynkinGraph, Word, commutation_class, enumerate_canonical,
    homogeneous_forms, is_fully_commutative, is_homogeneous, realize, segment, split,
)

__version__ = "0.1.0"
