"""Exact verification of terminating hypergeometric identities with arguments 4 and 1/4."""

__version__ = "0.1.0"

from .field import Fraction, Polynomial, RatFun, T, parse_scalar, format_scalar, ratfun_limit_at_zero
from .series import (
    SeriesSpec,
    pochhammer,
    eval_terminating,
    partial_sum,
    reverse,
    termination_index,
    chu_vandermonde_rhs,
    parse_series,
)
from .catalog import check_identity, eval_named, expand_prop31, list_catalog, Verdict
from .groups import generate_group, family_group, classify_group, verify_reparameterization
from .limits import check_identity_perturbed, omega_chu, omega_chen_chu, perturb

__all__ = [
    "Fraction", "Polynomial", "RatFun", "T", "parse_scalar", "format_scalar", "ratfun_limit_at_zero",
    "SeriesSpec", "pochhammer", "eval_terminating", "partial_sum", "reverse", "termination_index",
    "chu_vandermonde_rhs", "parse_series",
    "check_identity", "eval_named", "expand_prop31", "list_catalog", "Verdict",
    "generate_group", "family_group", "classify_group", "verify_reparameterization",
    "check_identity_perturbed", "omega_chu", "omega_chen_chu", "perturb",
]
