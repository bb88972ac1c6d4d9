"""Truncated variational calculus in the theta formalism."""

from .superpoly import (
    SuperDiffPolynomial,
    TruncationError,
    component_basis,
    d_multi,
    d_x,
    partial_theta,
    partial_u,
    random_component,
    random_element,
)
from .operators import (
    QuotientClass,
    d_operator,
    delta_op,
    embed_theta,
    graded_commutator,
    hat_P,
    iota_eval,
    quotient_normalize,
    schouten,
    theta_potential,
    var_der_theta,
    var_der_u,
)
from .forms import FormElement, d_H, homotopy_h, random_form
