"""Pure-Python kernels for ln-gamma, digamma and polygamma.

Scheme: shift the argument upward by the recurrence until it exceeds
``_SHIFT_CUTOFF``, then sum the Stirling-type asymptotic series.  With ten
Bernoulli terms and a cutoff of 15 the truncation error of every kernel is
below 1e-13 relative, which leaves the double-precision rounding of the
recurrence as the dominant error source.

This module is the fallback; ``_ckernels`` is the compiled twin with the
same three functions.
"""

import math

_SHIFT_CUTOFF = 15.0

# B_{2n} / (2n (2n-1)) for the ln-gamma tail, n = 1..10
_LNGAMMA_COEFFS = (
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
)

# B_{2n} / (2n) for the digamma tail, n = 1..10
_DIGAMMA_COEFFS = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
    -3617.0 / 8160.0,
    43867.0 / 14364.0,
    -174611.0 / 6600.0,
)

# B_{2n}, n = 1..10, for the polygamma tail
_BERNOULLI = (
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
)

_HALF_LN_TWO_PI = 0.9189385332046727417803297364


def ln_gamma(x):
    """ln Gamma(x) for x > 0."""
    if not (x > 0.0) or math.isinf(x):
        raise ValueError("ln_gamma requires finite x > 0, got %r" % (x,))
    shift = 0.0
    y = x
    while y < _SHIFT_CUTOFF:
        shift += math.log(y)
        y += 1.0
    inv = 1.0 / y
    inv2 = inv * inv
    tail = 0.0
    p = inv
    for c in _LNGAMMA_COEFFS:
        tail += c * p
        p *= inv2
    return (y - 0.5) * math.log(y) - y + _HALF_LN_TWO_PI + tail - shift


def digamma(x):
    """psi(x) for x > 0."""
    if not (x > 0.0) or math.isinf(x):
        raise ValueError("digamma requires finite x > 0, got %r" % (x,))
    shift = 0.0
    y = x
    while y < _SHIFT_CUTOFF:
        shift += 1.0 / y
        y += 1.0
    inv = 1.0 / y
    inv2 = inv * inv
    tail = 0.0
    p = inv2
    for c in _DIGAMMA_COEFFS:
        tail += c * p
        p *= inv2
    return math.log(y) - 0.5 * inv - tail - shift


def polygamma(k, x):
    """psi^(k)(x) for k in {1, 2, 3} and x > 0."""
    if k not in (1, 2, 3):
        raise ValueError("polygamma supports k in {1, 2, 3}, got %r" % (k,))
    if not (x > 0.0) or math.isinf(x):
        raise ValueError("polygamma requires finite x > 0, got %r" % (x,))
    fact_k = float(math.factorial(k))
    # recurrence: psi^(k)(x) = psi^(k)(x+1) + (-1)^(k+1) k! / x^(k+1)
    sign_rec = 1.0 if k % 2 else -1.0
    shift = 0.0
    y = x
    while y < _SHIFT_CUTOFF:
        shift += sign_rec * fact_k / y ** (k + 1)
        y += 1.0
    inv = 1.0 / y
    inv2 = inv * inv
    # (-1)^(k+1) psi^(k)(y) = (k-1)!/y^k + k!/(2 y^(k+1)) + sum B_2n (2n+k-1)!/(2n)! y^(-2n-k)
    value = math.factorial(k - 1) * inv**k + fact_k * 0.5 * inv ** (k + 1)
    p = inv ** (2 + k)
    for n, b in enumerate(_BERNOULLI, start=1):
        # (2n+k-1)! / (2n)!
        r = 1.0
        for j in range(2 * n + 1, 2 * n + k):
            r *= j
        value += b * r * p
        p *= inv2
    sign = 1.0 if k % 2 else -1.0  # (-1)^(k+1)
    return sign * value + shift
