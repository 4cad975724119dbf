"""Simultaneous rational function codes over prime fields.

Polynomials are coefficient lists with the constant term first. A received
word is a list of columns, one per evaluation point, each holding ``ell``
residues modulo ``(x - alpha_j)^lambda_j``. Pole words are lists of
``(vr_j, rows)`` pairs.
"""

from ._srf import (
    BoundError,
    Code,
    CodeError,
    ConfigError,
    DecodeError,
    FieldError,
    ModelError,
    bound,
    decode,
    decode_poles,
    distance,
    encode,
    encode_poles,
    min_distance,
    omega_count,
    pole_distance,
    reduce,
    run_campaign,
    subset_sum_witness,
    t_bar,
    t_max,
)

__all__ = [
    "BoundError",
    "Code",
    "CodeError",
    "ConfigError",
    "DecodeError",
    "FieldError",
    "ModelError",
    "bound",
    "decode",
    "decode_poles",
    "distance",
    "encode",
    "encode_poles",
    "min_distance",
    "omega_count",
    "pole_distance",
    "reduce",
    "run_campaign",
    "subset_sum_witness",
    "t_bar",
    "t_max",
]
