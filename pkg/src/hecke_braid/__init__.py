"""Verification toolkit for type-A Iwahori-Hecke representations over finite
fields and the images of the commutator subgroup of the braid group."""

from .gf import FieldCtx, make_field, parse_field_spec
from .hecke import HeckeRep
from .young import StdTableau, standard_tableaux

__all__ = ["FieldCtx", "HeckeRep", "StdTableau", "make_field", "parse_field_spec", "standard_tableaux"]
__version__ = "0.1.0"
