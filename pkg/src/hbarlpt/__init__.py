"""Logarithmic perturbation theory for radial bound states via hbar-expansions.

Exact rational recursions for the energy corrections and logarithmic-derivative
coefficients of the spherical anharmonic oscillator and screened Coulomb
potentials, with residual checks and a Numerov eigenvalue oracle.
"""
from .coulomb import (
    CoulombPotential,
    DebyeSpec,
    NoBoundStateError,
    coulomb_c0,
    coulomb_closed_form,
    coulomb_series,
    debye_closed_form,
    debye_taylor,
)
from .exact import Rational, TruncatedSeries, parse_rational, render_decimal, sqrt_exact
from .oscillator import (
    OscillatorPotential,
    c0_oscillator,
    oscillator_closed_form,
    oscillator_series,
)
from .tables import CoefficientTable, EnergySeries, MissingEntryError, QuantumNumbers
from .verification import (
    cross_check_closed_forms,
    quantization_residue,
    riccati_residual,
    verify_table,
)

__version__ = "0.1.0"
