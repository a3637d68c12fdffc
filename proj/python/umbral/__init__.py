from ._umbral import (
    Delta,
    Psi,
    RationalFunction,
    Series,
    b_sequence,
    basic_sequence,
    binomial_nogo,
    exp_psi_square,
    first_nogo_witness,
    laguerre_S,
    laguerre_closed,
    polar_check,
    q_bracket,
    q_laguerre_closed,
    s_factor,
    sheffer_sequence,
    su2,
    su2_check,
    weyl_check,
)

__all__ = [
    "Delta",
    "Psi",
    "RationalFunction",
    "Series",
    "b_sequence",
    "basic_sequence",
    "binomial_nogo",
    "exp_psi_square",
    "first_nogo_witness",
    "laguerre_S",
    "laguerre_closed",
    "polar_check",
    "q_bracket",
    "q_laguerre_closed",
    "s_factor",
    "sheffer_sequence",
    "su2",
    "su2_check",
    "weyl_check",
]
