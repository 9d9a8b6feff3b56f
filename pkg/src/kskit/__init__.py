"""kskit: special-function numerics and computational probability.

Modules
-------
gammakit    Gamma, Barnes double Gamma G(z; delta), generalized Pochhammer.
ksfun       Three-parameter function E(alpha, m, l; x), Mittag-Leffler,
            Le Roy, hyperbolic bounds, asymptotic laws.
mellin      Mellin transforms and numerical inversion on vertical lines.
fracdist    Fractional Weibull / Frechet / Gumbel distributions.
stochastic  Stable-subordinator Monte Carlo, path functionals, orderings.
verify      Machine verification campaigns over the analytic claims.
cli         Command-line front end (``kskit`` entry point).
"""

from .errors import AccuracyError, DomainError
from .gammakit import (
    BarnesContext,
    PochhammerQuery,
    barnes_g_complex,
    default_context,
    log_barnes_g,
    log_g_complex,
    log_gamma,
    poch_g,
    pochhammer,
    pochhammer_g,
    pochhammer_g_rescale,
)
from .ksfun import (
    AsymptoticLaw,
    KSParams,
    LeRoyAsymptotic,
    asym_minus_infinity,
    frechet_type_upper_bound,
    generalized_ml_bounds,
    is_cm,
    ks_deriv,
    ks_eval,
    le_roy,
    le_roy_asym,
    mittag_leffler,
    weibull_type_bounds,
)
from .mellin import (
    MellinStrip,
    ZSpec,
    f_mellin,
    f_strip,
    ks_mellin_integral,
    ks_value_by_inversion,
    le_roy_value_by_inversion,
    mellin_invert,
    w_mellin,
    w_strip,
    x_spec,
    y_mellin,
    z_exists,
    z_mellin,
)
from .fracdist import (
    DistParams,
    TailLaw,
    frechet_cdf,
    frechet_density,
    frechet_sample,
    gumbel_sample,
    tail_law,
    weibull_cdf,
    weibull_density,
    weibull_sample,
)
from .stochastic import (
    BetaProductSpec,
    MCEstimate,
    MeshConfig,
    OrderReport,
    SubordinatorPath,
    beta_product_mellin,
    beta_product_sample,
    convex_order_check,
    first_passage_sample,
    frechet_functional,
    mc_estimate,
    perpetuity_functional,
    sample_positive_stable,
    simulate_path,
    stochastic_order_check,
    substream,
    survival_crossings,
    weibull_functional,
)
from .verify import ClaimReport, VerifyConfig, run_claim, run_suite

__version__ = "0.1.0"
