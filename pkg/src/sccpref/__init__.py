"""Parallel SCC-recursive enumeration of preferred extensions of argumentation frameworks."""

from .basepref import b_pref, encode_complete_in
from .engine import PreferredEnumerator, greedy_precompute, l_cond, merge, p_pref, pref
from .framework import (IN, OUT, UNDEC, ArgumentationFramework, DomainError, Label, Labelling,
                        attacked_by, attackers_of, ext2lab, is_acceptable, is_admissible,
                        is_conflict_free, restrict)
from .grounded import grounded_in
from .scc import build_level_list, compute_sccs

__all__ = [
    "ArgumentationFramework", "Labelling", "Label", "IN", "OUT", "UNDEC", "DomainError",
    "attackers_of", "attacked_by", "restrict", "is_conflict_free", "is_acceptable",
    "is_admissible", "ext2lab", "grounded_in", "compute_sccs", "build_level_list",
    "encode_complete_in", "b_pref", "pref", "p_pref", "l_cond", "merge", "greedy_precompute",
    "PreferredEnumerator",
]
