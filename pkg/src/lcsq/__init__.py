"""Lower central series quotients of free associative algebras over Q."""

from .characters import Partition, bound, char_tensor_field, decompose
from .lcs_engine import b_character, bbar1_character, build_lcs_table
from .verifier import verify_instance, verify_lemmas

__all__ = ["Partition", "bound", "char_tensor_field", "decompose", "b_character",
           "bbar1_character", "build_lcs_table", "verify_instance", "verify_lemmas"]
__version__ = "0.1.0"
