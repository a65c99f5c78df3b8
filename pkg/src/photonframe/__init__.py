"""Lorentz-transform light pulses and check that their energy tracks frequency."""

from .duality import (
    FrequencyEnergySample,
    PhotonEnsemble,
    PlanckFit,
    fit_planck_constant,
    parallel_null_check,
    seed_ensemble,
    transform_ensemble,
    universal_ratio_check,
)
from .errors import (
    ConfigurationError,
    ConsistencyError,
    DegenerateFitError,
    DomainError,
    PhotonFrameError,
    WaveEvaluationError,
)
from .fields import FieldState, boost_fields, energy_density, energy_density_ratio, plane_wave, poynting
from .kinematics import (
    Boost,
    FourVector,
    WaveFourVector,
    boost_four_vector,
    compose_boosts,
    doppler_factor,
    make_boost,
    minkowski_square,
)
from .pulse import (
    MonochromaticPulse,
    QuadraturePlan,
    QuadratureRule,
    boost_pulse,
    closed_form_energy,
    energy_ratio_closed_form,
    integrate_energy,
    sample_fields,
    verify_energy_ratio,
)

__version__ = "0.1.0"
