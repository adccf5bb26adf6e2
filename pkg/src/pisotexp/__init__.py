"""Exact beta-expansions and left-infinite alpha-adic expansions in Pisot bases."""

from __future__ import annotations

from .algebra import (
    Box,
    FieldElement,
    FinitenessCondition,
    PisotSpec,
    add,
    check_finiteness_conditions,
    conjugate_value,
    floor_at_beta,
    invert,
    make_spec,
    mul,
    neg,
    sign,
    sub,
)
from .alpha_adic import (
    ExpansionSet,
    algorithm1,
    alpha_expand,
    alpha_expand_negative,
    alpha_expand_positive,
    enumerate_expansions,
    expansions_of_minus_one,
    normalize_preperiod,
)
from .beta import Finiteness, RenyiExpansion, beta_expand, classify_finiteness, renyi_d, renyi_d_star
from .errors import PisotError
from .rational_psi import psi_step, psi_trace, rational_alpha_expand, rational_alpha_represent
from .transducer import (
    Transducer,
    build_normalization_transducer,
    consecutive_a_bound,
    export,
    run_right_sequential,
)
from .words import (
    Alphabet,
    FiniteWord,
    LeftWord,
    RightWord,
    canonicalize,
    format_word,
    is_admissible_beta,
    is_weakly_admissible,
    is_weakly_admissible_tail,
    lex_less,
    parse_word,
    pi_alpha,
    pi_beta,
)

__all__ = [name for name in dir() if not name.startswith("_") and name != "annotations"]
__version__ = "0.1.0"
