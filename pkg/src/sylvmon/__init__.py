"""Sylvester monoid, binary search tree insertion and the Loday-Ronco algebra
of planar binary trees realized inside free quasi-symmetric functions."""

from .words import inverse, maj, parse_word, shifted_shuffle, shuffle, standardize
from .trees import Node, canonical_perm, decreasing_tree, enumerate_shapes, p_symbol, parse_tree, q_symbol, serialize_tree
from .sylvester import class_maj_gf, q_hook_formula, sylvester_class, sylvester_equivalent
from .fqsym import F, G, FQSymElement
from .pbt import P, Q, PBTElement, p_product, q_dual_product

__version__ = "0.1.0"
