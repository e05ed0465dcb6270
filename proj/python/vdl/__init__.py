"""Decoherence kernel for a switched dipole between conducting plates."""

from ._vdl import (
    CapabilityError,
    DecoherenceResult,
    DimensionlessParams,
    DomainError,
    NumericalError,
    Position,
    PreconditionError,
    QuadratureSpec,
    SeriesPolicy,
    __version__,
    angular_kernel_j,
    cavity_overlap,
    ci,
    cin,
    coupling_alpha,
    decoherence_kernel,
    dipole_for_alpha,
    exponent_general_n,
    feasibility_report,
    kernel_at_plates,
    kernel_no_cutoff,
    kernel_term,
    m0_term,
    radial_integral_m,
    switching_spectrum,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
