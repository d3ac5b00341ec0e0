"""Exact representation theory of the wreath products (Z/d) wr S_n and the
FI_G-modules built from them."""
from .combinat import LabeledCycleType, MultiPartition, WreathElement, enumerate_classes, pad, unpad
from .exactnum import Cyclotomic, zeta
from .wreathchar import ClassFunction, character_table, decompose, ind_fig_character, inner_product, irr_character
from .charpoly import CharacterPolynomial, fit, from_induced, stable_inner_product, twisted_variable
from .orlik_solomon import equivariant_character, monomial_arrangement, braid_arrangement
from .coinvariants import coinvariant_character
from .applications import fr_character, gauss_series, stability_report, verify_h_decompositions

__version__ = "0.1.0"
