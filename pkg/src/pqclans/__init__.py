"""Exact combinatorics of (p, q)-clans.

Weak order and reduced words, atoms and shapes, clan Schubert polynomials
and their stable limits, Schur P/Q polynomials, counting formulas, and a
numerical search for the clans with the most reduced words.
"""

from .clans import (
    Clan,
    all_clans,
    clan_from_json_dict,
    clan_to_json_dict,
    count_clans,
    format_clan,
    minimal_clan,
    negate_clan,
    parse_clan,
    profile,
    reverse_clan,
    shift_clan,
    star,
    underlying_involution,
)
from .weak_order import (
    build_poset,
    count_maximal_chains,
    count_reduced_words,
    down_covers,
    rank,
    reduced_words,
    up_covers,
)
from .atoms_shapes import atoms, clans_with_atom, clans_with_word, lsh, shape_atom, sigma_max, ush
from .polynomials import (
    Polynomial,
    divided_difference,
    isobaric_divided_difference,
    poly_str,
    schubert_clan,
    schubert_perm,
    stanley_truncated,
)
from .symfun import (
    count_shifted_syt,
    count_syt,
    schur_p_truncated,
    schur_q_truncated,
    schur_truncated,
    staircase,
)
from .counting import (
    involution_words,
    maximal_chain_formula,
    product_formula_count,
)
from .maximizer import argmax_reduced_words, limit_density, log_f, minimize_f

__version__ = "0.1.0"

__all__ = [
    "Clan",
    "all_clans",
    "argmax_reduced_words",
    "atoms",
    "build_poset",
    "clan_from_json_dict",
    "clan_to_json_dict",
    "clans_with_atom",
    "clans_with_word",
    "count_clans",
    "count_maximal_chains",
    "count_reduced_words",
    "count_shifted_syt",
    "count_syt",
    "divided_difference",
    "down_covers",
    "format_clan",
    "involution_words",
    "isobaric_divided_difference",
    "limit_density",
    "log_f",
    "lsh",
    "maximal_chain_formula",
    "minimal_clan",
    "minimize_f",
    "negate_clan",
    "parse_clan",
    "poly_str",
    "Polynomial",
    "product_formula_count",
    "profile",
    "rank",
    "reduced_words",
    "reverse_clan",
    "schubert_clan",
    "schubert_perm",
    "schur_p_truncated",
    "schur_q_truncated",
    "schur_truncated",
    "shape_atom",
    "shift_clan",
    "sigma_max",
    "staircase",
    "stanley_truncated",
    "star",
    "underlying_involution",
    "up_covers",
    "ush",
    "__version__",
]
