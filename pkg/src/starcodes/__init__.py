"""Linear codes over finite fields and their componentwise products."""

from .bounds import (
    aq_exact,
    aq_formula_bound,
    alpha_upper_bound,
    check_adjunction,
    check_dim_dperp,
    pairwise_bound,
    partition_code,
    product_singleton_bound,
    reed_solomon,
)
from .code import LinearCode, code_from_generator, gaussian_binomial, iter_subspaces
from .gf import GF, Field, field_new
from .matrix import CodeVector, GFMatrix
from .product import power_code, product_code, star, support_condition
from .witness import (
    Branch,
    WitnessReport,
    high_dim_witness,
    product_singleton_witness,
    unconditional_witness,
    verify_report,
)

__version__ = "0.1.0"
