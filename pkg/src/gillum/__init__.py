"""Gaussian-illumination receiver analysis toolkit.

Builds Gaussian probe states as covariance matrices, propagates them through
a lossy thermal target channel, evaluates quadratic-observable receivers
exactly, and compares against quantum Chernoff bounds.
"""

from .states import (
    GaussianState,
    QuadratureState,
    apply_beam_splitter,
    from_quadrature,
    make_cct,
    make_coherent,
    make_thermal,
    make_tmsv,
    make_vacuum,
    symplectic_form,
    tensor,
    to_quadrature,
)
from .channels import (
    HypothesisPair,
    NoiseModel,
    ScenarioParams,
    SourceKind,
    apply_target,
    coherent_pair_two_mode,
    hypothesis_pair,
)
from .observables import (
    HeterodyneVariant,
    ObservableStats,
    QuadraticObservable,
    heterodyne_degrade,
    obs_bound,
    obs_dh,
    obs_hd_product,
    obs_number,
    obs_number_difference,
    obs_off,
    obs_opa,
    obs_pc,
    obs_quadrature,
    obs_squeeze_difference,
    stats,
    transform_by_beam_splitter,
)
from .receivers import (
    DEFAULT_OPA_GAIN,
    ReceiverKind,
    ReceiverSpec,
    SnrReport,
    make_report,
    optimal_beta_closed,
    optimize_alpha_beta_nonconstant,
    p_err,
    p_err_exponential_bound,
    snr_bound_constant,
    snr_bound_nonconstant,
    snr_cct,
    snr_closed_dh,
    snr_closed_opa,
    snr_closed_pc,
    snr_coherent_hd,
    snr_coherent_off,
    snr_generic,
    snr_nearly_bound,
    threshold,
)
from .chernoff import QcbResult, coherent_qcb_closed, qcb, williamson
from .figures import Curve, CurveSet, SweepConfig, run_figure
from .emit import emit, to_csv, to_json, to_svg

__version__ = "0.1.0"
