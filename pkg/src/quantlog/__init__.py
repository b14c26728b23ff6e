"""Matrix logarithm by Gauss-Legendre quadrature, with an exact statevector
simulation of the block-encoded ``log(A)|b>`` state preparation."""

from .errors import PreconditionError, QuantlogError
from .logquad import LogApprox, build_log_approx, error_constant_K, final_error_bound, resolvent
from .matcore import eigendecompose_hermitian, inverse, reference_log, spectral_norm
from .pipeline import RunReport, run_full
from .qlsp import QlspInstance, build_instance
from .quadrature import QuadratureRule, gauss_legendre, pade_error_bound, scalar_quadrature_log

__version__ = "0.1.0"

__all__ = [
    "LogApprox",
    "PreconditionError",
    "QlspInstance",
    "QuadratureRule",
    "QuantlogError",
    "RunReport",
    "build_instance",
    "build_log_approx",
    "eigendecompose_hermitian",
    "error_constant_K",
    "final_error_bound",
    "gauss_legendre",
    "inverse",
    "pade_error_bound",
    "reference_log",
    "resolvent",
    "run_full",
    "scalar_quadrature_log",
    "spectral_norm",
]
