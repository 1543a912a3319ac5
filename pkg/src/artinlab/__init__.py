"""artinlab: exact induction certificates for finite permutation groups and
a desk-scale lab for explicit Chebotarev-type bounds over Q.

The algebraic half builds permutation groups, exact cyclotomic arithmetic,
irreducible character tables, and rational certificates expressing faithful
characters through induced linear characters of nilpotent subgroups.  The
analytic half instantiates the companion bound formulas over Q with
interval-certified comparisons.
"""

from .catalog import acceptance_catalog, parse_group_spec
from .chartab import (CharacterTable, ClassFunction, character_table, decompose,
                      induce, inner_product, kernel_and_faithful,
                      linear_characters, restrict, trivial_character)
from .cyclotomic import Cyclotomic
from .errors import (ArtinLabError, CapacityError, FalsificationError,
                     GateError, InputError)
from .group import PermGroup, abelianization, minimal_normal_subgroups, \
    normal_subgroups, quotient_group
from .induction import (InductionCertificate, MonomialCharacter,
                        certificate_solve, class_indicator_decomposition,
                        faithful_monomials, lemma61_certificate,
                        mackey_decompose, mackey_verify, verify_spaces,
                        z_certificate_search)
from .subgroups import Subgroup, subgroups_up_to_conjugacy

__version__ = "0.1.0"

__all__ = [
    "ArtinLabError", "CapacityError", "CharacterTable", "ClassFunction",
    "Cyclotomic", "FalsificationError", "GateError", "InductionCertificate",
    "InputError", "MonomialCharacter", "PermGroup", "Subgroup",
    "abelianization", "acceptance_catalog", "certificate_solve",
    "character_table", "class_indicator_decomposition", "decompose",
    "faithful_monomials", "induce", "inner_product", "kernel_and_faithful",
    "lemma61_certificate", "linear_characters", "mackey_decompose",
    "mackey_verify", "minimal_normal_subgroups", "normal_subgroups",
    "parse_group_spec", "quotient_group", "restrict", "subgroups_up_to_conjugacy",
    "trivial_character", "verify_spaces", "z_certificate_search",
    "__version__",
]
