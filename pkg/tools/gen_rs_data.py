#!/usr/bin/env python3
"""Regenerate src/zetapair/_rs_data.py.

The Riemann-Siegel remainder terms are polynomials in derivatives of

    Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p),

an entire function of p (the zeros of the denominator are cancelled).
Evaluating the high-order derivatives directly in double precision is
hopeless near p = 1/4, 3/4, so this script computes them with mpmath at
60 significant digits on a Chebyshev grid and fits one Chebyshev series
per correction term C_0..C_4 on p in [0, 1].  The runtime package only
ships the fitted coefficient arrays.

Usage: python tools/gen_rs_data.py
"""

import sys
from pathlib import Path

import mpmath
import numpy as np
from numpy.polynomial import chebyshev

mpmath.mp.dps = 60

DEGREE = 56
PI = mpmath.pi


def psi(p):
    num = mpmath.cos(2 * PI * (p**2 - p - mpmath.mpf(1) / 16))
    den = mpmath.cos(2 * PI * p)
    return num / den


def psi_deriv(p, m):
    if m == 0:
        return psi(p)
    return mpmath.diff(psi, p, m, h=mpmath.mpf(10) ** (-6), direction=0)


# C_j(p) in the expansion
#   Z(t) = 2 sum_{n<=N} cos(theta - t log n)/sqrt(n)
#          + (-1)^{N+1} tau^{-1/4} sum_j C_j(p) tau^{-j/2},
# tau = t/(2 pi), N = floor(sqrt(tau)), p = frac(sqrt(tau)).
def correction(p, j):
    pi2 = PI**2
    if j == 0:
        return psi_deriv(p, 0)
    if j == 1:
        return -psi_deriv(p, 3) / (96 * pi2)
    if j == 2:
        return psi_deriv(p, 2) / (64 * pi2) + psi_deriv(p, 6) / (18432 * pi2**2)
    if j == 3:
        return (-psi_deriv(p, 1) / (64 * pi2)
                - psi_deriv(p, 5) / (3840 * pi2**2)
                - psi_deriv(p, 9) / (5308416 * pi2**3))
    if j == 4:
        return (psi_deriv(p, 0) / (128 * pi2)
                + psi_deriv(p, 4) / (24576 * pi2**2)
                + psi_deriv(p, 8) / (5898240 * pi2**3)
                + psi_deriv(p, 12) / (2038431744 * pi2**4))
    raise ValueError(j)


def fit(j):
    z = np.cos((2 * np.arange(DEGREE + 1) + 1) / (2 * (DEGREE + 1)) * np.pi)
    vals = np.array([float(correction(mpmath.mpf((zz + 1) / 2), j)) for zz in z])
    vander = chebyshev.chebvander(z, DEGREE)
    coef, *_ = np.linalg.lstsq(vander, vals, rcond=None)
    # drop the numerically-zero high tail
    keep = np.nonzero(np.abs(coef) > 1e-17)[0]
    return coef[: keep[-1] + 1] if len(keep) else coef[:1]


def main():
    out = Path(__file__).resolve().parent.parent / "src" / "zetapair" / "_rs_data.py"
    arrays = [fit(j) for j in range(5)]
    with out.open("w") as fh:
        fh.write('"""Chebyshev coefficients (argument z = 2p - 1, p in [0, 1]) of the\n')
        fh.write("Riemann-Siegel correction terms C_0..C_4.  Generated by\n")
        fh.write('tools/gen_rs_data.py; do not edit by hand."""\n\n')
        fh.write("import numpy as np\n\n")
        for j, coef in enumerate(arrays):
            fh.write(f"RS_C{j} = np.array([\n")
            for v in coef:
                fh.write(f"    {float(v)!r},\n")
            fh.write("])\n\n")
        fh.write("RS_CORRECTIONS = (RS_C0, RS_C1, RS_C2, RS_C3, RS_C4)\n")
    print(f"wrote {out} (degrees: {[len(a) - 1 for a in arrays]})")


if __name__ == "__main__":
    sys.exit(main())
