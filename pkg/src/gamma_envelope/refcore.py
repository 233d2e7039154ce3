"""Reference evaluation of ln Gamma, psi and psi^(k), plus shared constants.

The heavy scalar kernels live in ``_ckernels`` (compiled) with a
pure-Python twin in ``_kernels``; the compiled backend is preferred at
import time.  Set ``GAMMA_ENVELOPE_PURE_PYTHON=1`` to force the fallback.

All functions are pure and stateless.
"""

import math
import os
from dataclasses import dataclass

if os.environ.get("GAMMA_ENVELOPE_PURE_PYTHON"):
    from gamma_envelope import _kernels as _impl
else:
    try:
        from gamma_envelope import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from gamma_envelope import _kernels as _impl

#: Euler-Mascheroni constant, 17 significant digits.
EULER_GAMMA = 0.57721566490153286

PI_SQ_OVER_6 = math.pi * math.pi / 6.0


def backend():
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return "compiled" if _impl.__name__.endswith("_ckernels") else "python"


def ln_gamma(x):
    """ln Gamma(x), x > 0."""
    return _impl.ln_gamma(float(x))


def digamma(x):
    """psi(x), x > 0."""
    return _impl.digamma(float(x))


def polygamma(k, x):
    """psi^(k)(x) for k in {1, 2, 3}, x > 0."""
    return _impl.polygamma(k, float(x))


def gamma(x):
    """Gamma(x) = exp(ln_gamma(x)), x > 0."""
    return math.exp(_impl.ln_gamma(float(x)))


@dataclass(frozen=True)
class Constants:
    """The numeric anchors every bound family derives from."""

    euler_gamma: float
    pi_sq_over_6: float
    alpha_sharp: float  # 2 (1 - euler_gamma), sharp lower exponent
    beta_sharp: float  # euler_gamma, sharp upper exponent
    alzer_alpha: float  # 1 - euler_gamma
    alzer_beta: float  # (pi^2/6 - euler_gamma) / 2


def constants():
    """Populated :class:`Constants`; all fields exact functions of gamma."""
    g = EULER_GAMMA
    return Constants(
        euler_gamma=g,
        pi_sq_over_6=PI_SQ_OVER_6,
        alpha_sharp=2.0 * (1.0 - g),
        beta_sharp=g,
        alzer_alpha=1.0 - g,
        alzer_beta=0.5 * (PI_SQ_OVER_6 - g),
    )


def _check_gamma_literal():
    # The stored literal must agree with -psi(1) computed by the kernels;
    # a mismatch means a broken kernel build and poisons every bound.
    if abs(EULER_GAMMA + digamma(1.0)) > 1e-12:
        raise RuntimeError(
            "Euler-Mascheroni literal disagrees with -digamma(1) "
            "(backend %s)" % backend()
        )


_check_gamma_literal()
