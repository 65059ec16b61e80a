"""Group-level checks: homological image, relations, Hurwitz moves, derivations."""

from .derive import (
    CHAINS, DerivationError, DerivationScript, apply_relation, chain_script_name,
    check_script, convert_to_ab6, load_script, parse_script, run_script, script_names,
)
from .hurwitz import Factor, FactorSeq, hurwitz_move
from .relations import Relation, RelationSet, relation_set
from .search import search_equivalence
from .sl2 import is_identity_sl2, sl2_image

__all__ = [
    "CHAINS", "DerivationError", "DerivationScript", "Factor", "FactorSeq", "Relation",
    "RelationSet", "apply_relation", "chain_script_name", "check_script", "convert_to_ab6",
    "hurwitz_move", "is_identity_sl2", "load_script", "parse_script", "relation_set",
    "run_script", "script_names", "search_equivalence", "sl2_image",
]
