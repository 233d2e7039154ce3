# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled kernels for ln-gamma, digamma and polygamma.

Same recurrence-shift + Stirling-series scheme as the pure-Python
``_kernels`` module; kept line-for-line comparable so the two backends can
be cross-checked in the test suite.
"""

from libc.math cimport log, isinf, isnan

cdef double _SHIFT_CUTOFF = 15.0
cdef double _HALF_LN_TWO_PI = 0.9189385332046727417803297364

cdef double[10] _LNGAMMA_COEFFS = [
    1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0,
    -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0,
    43867.0 / 244188.0, -174611.0 / 125400.0,
]

cdef double[10] _DIGAMMA_COEFFS = [
    1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0,
    -691.0 / 32760.0, 1.0 / 12.0, -3617.0 / 8160.0,
    43867.0 / 14364.0, -174611.0 / 6600.0,
]

cdef double[10] _BERNOULLI = [
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0,
    43867.0 / 798.0, -174611.0 / 330.0,
]


cdef inline double _pow_int(double base, int n):
    cdef double r = 1.0
    cdef int i
    for i in range(n):
        r *= base
    return r


def ln_gamma(double x):
    """ln Gamma(x) for x > 0."""
    if not (x > 0.0) or isinf(x) or isnan(x):
        raise ValueError("ln_gamma requires finite x > 0, got %r" % (x,))
    cdef double shift = 0.0
    cdef double y = x
    while y < _SHIFT_CUTOFF:
        shift += log(y)
        y += 1.0
    cdef double inv = 1.0 / y
    cdef double inv2 = inv * inv
    cdef double tail = 0.0
    cdef double p = inv
    cdef int n
    for n in range(10):
        tail += _LNGAMMA_COEFFS[n] * p
        p *= inv2
    return (y - 0.5) * log(y) - y + _HALF_LN_TWO_PI + tail - shift


def digamma(double x):
    """psi(x) for x > 0."""
    if not (x > 0.0) or isinf(x) or isnan(x):
        raise ValueError("digamma requires finite x > 0, got %r" % (x,))
    cdef double shift = 0.0
    cdef double y = x
    while y < _SHIFT_CUTOFF:
        shift += 1.0 / y
        y += 1.0
    cdef double inv = 1.0 / y
    cdef double inv2 = inv * inv
    cdef double tail = 0.0
    cdef double p = inv2
    cdef int n
    for n in range(10):
        tail += _DIGAMMA_COEFFS[n] * p
        p *= inv2
    return log(y) - 0.5 * inv - tail - shift


def polygamma(int k, double x):
    """psi^(k)(x) for k in {1, 2, 3} and x > 0."""
    if k < 1 or k > 3:
        raise ValueError("polygamma supports k in {1, 2, 3}, got %r" % (k,))
    if not (x > 0.0) or isinf(x) or isnan(x):
        raise ValueError("polygamma requires finite x > 0, got %r" % (x,))
    cdef double fact_k = 1.0
    cdef double fact_km1 = 1.0
    cdef int i
    for i in range(2, k):
        fact_km1 *= i
    fact_k = fact_km1 * k
    cdef double sign_rec = 1.0 if k % 2 else -1.0
    cdef double shift = 0.0
    cdef double y = x
    while y < _SHIFT_CUTOFF:
        shift += sign_rec * fact_k / _pow_int(y, k + 1)
        y += 1.0
    cdef double inv = 1.0 / y
    cdef double inv2 = inv * inv
    cdef double value = fact_km1 * _pow_int(inv, k) + fact_k * 0.5 * _pow_int(inv, k + 1)
    cdef double p = _pow_int(inv, 2 + k)
    cdef double r
    cdef int n, j
    for n in range(1, 11):
        r = 1.0
        for j in range(2 * n + 1, 2 * n + k):
            r *= j
        value += _BERNOULLI[n - 1] * r * p
        p *= inv2
    cdef double sign = 1.0 if k % 2 else -1.0
    return sign * value + shift
