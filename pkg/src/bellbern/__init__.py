"""Exact complete Bell polynomials, Bernoulli numbers and generalized
Bernoulli numbers, with cross-checks between independent computation paths."""

from .bell_poly import (
    BellPolynomial,
    bell_eval_recurrence,
    bell_sequence,
    bell_symbolic,
    exp_via_bell,
    poly_eval,
)
from .bernoulli import (
    BernoulliCache,
    bell_args,
    bernoulli,
    bernoulli_numbers,
    check_identity_3_5,
    check_recurrence_3_7,
    generalized_bernoulli,
    generalized_bernoulli_oracle,
    log_series_coefficient,
)
from .numeric import CapacityError, DomainError, binomial, factorial, format_rational, parse_rational, rat, rat_arith
from .partitions import PartitionMultiplicity, enumerate_partitions, partition_count, partition_weight
from .power_series import (
    TruncatedSeries,
    ts_add,
    ts_coefficient,
    ts_exp,
    ts_invert,
    ts_log,
    ts_mul,
    ts_pow_rational,
    ts_reflect,
    ts_scale,
    ts_x_over_expm1,
)
from .report import Counterexample, VerificationReport

__version__ = "0.1.0"
