"""Exact division polynomials for odd-degree hyperelliptic curves.

The package computes the Hankel-determinant division polynomials psi_n of a
curve y^2 = f(x) (f monic separable of degree 2g+1) in exact rational
arithmetic, validates their structure (degrees, integral leading
coefficients, Catalan-determinant values at branch points), and produces
convergence tables showing (1/n^2) log|Res(f, psi_n^2)| approaching one half
of log|disc f| at archimedean and p-adic places.
"""

from .algebra import (
    GF,
    DomainError,
    Poly,
    PolyRing,
    QQ,
    ZZ,
    det_bareiss,
    det_gauss,
    discriminant,
    newton_interpolate,
    poly_mod,
    pow_mod,
    prem,
    resultant,
)
from .catalan import (
    CatalanCache,
    admissible,
    c_of_n,
    catalan,
    catalan_hankel_det,
    d_of_n,
    dcv_product,
    hankel_shape,
)
from .curves import CurveSpec, random_curve
from .division import (
    BudgetExceededError,
    PsiResult,
    PsiValidation,
    default_n_cap,
    hankel_matrix,
    hankel_psi,
    psi_mod_p,
    validate_psi,
)
from .places import Place, factor_trial, is_prime, log_abs, rational_support, val_p
from .series import (
    METHODS,
    PjTable,
    build_e1,
    compare_tables,
    convolution_lhs,
    convolution_rhs,
    pj_closed_form,
    pj_newton_sqrt,
    pj_rj_recursion,
    pj_table,
)
from .verify import (
    ConvergenceRow,
    CrosscheckReport,
    ProductFormulaResult,
    converge_at_root,
    converge_resultant,
    crosscheck_elliptic,
    product_formula_check,
    resultant_identity,
    root_identity,
    sign_survey,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "CatalanCache",
    "ConvergenceRow",
    "CrosscheckReport",
    "CurveSpec",
    "DomainError",
    "GF",
    "METHODS",
    "Place",
    "PjTable",
    "Poly",
    "PolyRing",
    "ProductFormulaResult",
    "PsiResult",
    "PsiValidation",
    "QQ",
    "ZZ",
    "admissible",
    "build_e1",
    "c_of_n",
    "catalan",
    "catalan_hankel_det",
    "compare_tables",
    "converge_at_root",
    "converge_resultant",
    "convolution_lhs",
    "convolution_rhs",
    "crosscheck_elliptic",
    "d_of_n",
    "dcv_product",
    "default_n_cap",
    "det_bareiss",
    "det_gauss",
    "discriminant",
    "factor_trial",
    "hankel_matrix",
    "hankel_psi",
    "hankel_shape",
    "is_prime",
    "log_abs",
    "newton_interpolate",
    "pj_closed_form",
    "pj_newton_sqrt",
    "pj_rj_recursion",
    "pj_table",
    "poly_mod",
    "pow_mod",
    "prem",
    "product_formula_check",
    "psi_mod_p",
    "random_curve",
    "rational_support",
    "resultant",
    "resultant_identity",
    "root_identity",
    "sign_survey",
    "val_p",
    "validate_psi",
]
