"""Closed-form antiderivatives, the cosine integral, smoothing kernels, and
the adaptive quadrature engine shared by the prediction and verification code.

The exponential-trigonometric antiderivatives implemented here are the
workhorse of every closed form in the package: after the substitution
v = log u, all integrals of u^m * trig(h log u) reduce to them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

EULER_GAMMA = 0.5772156649015328606

__all__ = [
    "EULER_GAMMA",
    "ExpTrigAntiderivative",
    "KernelParams",
    "QuadratureError",
    "QuadResult",
    "cosine_integral",
    "exp_trig_antider",
    "fejer",
    "gauss_legendre",
    "quad",
    "quad_sinc",
    "re_psi_hat",
    "sin_over_x_power_integral",
    "sine_integral",
]


# ---------------------------------------------------------------------------
# exponential-trigonometric antiderivatives


@dataclass(frozen=True)
class ExpTrigAntiderivative:
    """Parameters (a, b) of one of the four antiderivative families

        int e^{ax} sin(bx) dx,   int e^{ax} cos(bx) dx,
        int x e^{ax} sin(bx) dx, int x e^{ax} cos(bx) dx,

    with the integration constant fixed to zero.  a and b must not both
    vanish (the denominators are powers of a^2 + b^2).
    """

    a: float
    b: float
    kind: str  # "exp_sin" | "exp_cos" | "x_exp_sin" | "x_exp_cos"

    KINDS = ("exp_sin", "exp_cos", "x_exp_sin", "x_exp_cos")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.a == 0.0 and self.b == 0.0:
            raise ValueError("a and b must not both be zero")

    def integrand(self, x):
        e = np.exp(self.a * np.asarray(x, dtype=float))
        trig = np.sin if self.kind.endswith("sin") else np.cos
        v = e * trig(self.b * np.asarray(x, dtype=float))
        if self.kind.startswith("x_"):
            v = np.asarray(x, dtype=float) * v
        return v


def exp_trig_antider(p: ExpTrigAntiderivative, x):
    """Evaluate the antiderivative described by *p* at x (scalar or array)."""
    a, b = p.a, p.b
    x = np.asarray(x, dtype=float)
    d = a * a + b * b
    e = np.exp(a * x)
    s, c = np.sin(b * x), np.cos(b * x)
    if p.kind == "exp_sin":
        return e * (a * s - b * c) / d
    if p.kind == "exp_cos":
        return e * (a * c + b * s) / d
    # x e^{ax} trig(bx):  [ax/d - (a^2-b^2)/d^2] e^{ax} trig
    #                  -/+ [bx/d - 2ab/d^2] e^{ax} cotrig
    u = a * x / d - (a * a - b * b) / (d * d)
    w = b * x / d - 2.0 * a * b / (d * d)
    if p.kind == "x_exp_sin":
        return e * (u * s - w * c)
    return e * (u * c + w * s)


# ---------------------------------------------------------------------------
# cosine integral


def _ci_series(x):
    # ci(x) = C0 + log x + sum_{k>=1} (-1)^k x^{2k} / (2k (2k)!)
    # Accumulated in extended precision: the alternating sum loses up to
    # ~8 digits to cancellation near x = 25.
    xl = np.longdouble(x)
    term = np.longdouble(1.0)
    total = np.longdouble(0.0)
    x2 = xl * xl
    for k in range(1, 60):
        term = term * x2 / ((2 * k - 1) * (2 * k))   # x^{2k} / (2k)!
        contrib = term / (2 * k)
        total += -contrib if k % 2 else contrib
        if abs(contrib) < 1e-24 * max(1.0, abs(float(total))):
            break
    return EULER_GAMMA + math.log(x) + float(total)


def _ci_asymptotic(x):
    # ci(x) = f(x) sin x - g(x) cos x with the divergent asymptotic series
    # f ~ (1/x) sum (-1)^k (2k)!/x^{2k},  g ~ (1/x^2) sum (-1)^k (2k+1)!/x^{2k},
    # truncated at the smallest term.  For x > 25 this reaches ~1e-12.
    f = 0.0
    g = 0.0
    tf, tg = 1.0, 1.0
    x2 = x * x
    prev = math.inf
    for k in range(0, 30):
        if k > 0:
            tf *= -(2 * k) * (2 * k - 1) / x2
            tg *= -(2 * k + 1) * (2 * k) / x2
        if abs(tf) > prev:
            break
        f += tf
        g += tg
        prev = abs(tf)
    return f / x * math.sin(x) - g / x2 * math.cos(x)


def cosine_integral(x: float) -> float:
    """ci(x) = -int_x^inf cos(t)/t dt = C0 + log x + int_0^x (cos t - 1)/t dt.

    Power series up to x = 25, asymptotic expansion beyond; at least ten
    correct digits everywhere on x > 0.
    """
    if x <= 0.0:
        raise ValueError("cosine_integral requires x > 0")
    if x <= 25.0:
        return _ci_series(x)
    return _ci_asymptotic(x)


def sin_over_x_power_integral(a: float, n: int) -> float:
    """int_1^inf sin(ax) / x^{2n} dx for a > 0, n >= 1, in closed form:

        a^{2n-1}/(2n-1)! [ sum_{k=1}^{2n-1} (2n-k-1)!/a^{2n-k}
                           sin(a + (k-1) pi/2)  + (-1)^n ci(a) ].
    """
    if a <= 0.0:
        raise ValueError("requires a > 0")
    if n < 1:
        raise ValueError("requires n >= 1")
    total = 0.0
    for k in range(1, 2 * n):
        total += (math.factorial(2 * n - k - 1) / a ** (2 * n - k)
                  * math.sin(a + (k - 1) * math.pi / 2.0))
    total += (-1.0) ** n * cosine_integral(a)
    return a ** (2 * n - 1) / math.factorial(2 * n - 1) * total


# ---------------------------------------------------------------------------
# smoothing kernels


def _sinc(z):
    # sin(z)/z with the continuous extension at 0 (not numpy's normalised sinc)
    z = np.asarray(z, dtype=float)
    return np.sinc(z / np.pi)


def fejer(u):
    """(sin(pi u) / (pi u))^2, the Fourier transform of the triangle kernel."""
    return np.sinc(np.asarray(u, dtype=float)) ** 2


@dataclass(frozen=True)
class KernelParams:
    """Smooth-weight parameters: U = log^M T, Delta = 1/(2^K U).

    The constructor nudges Delta by at most 2 ulp so that
    Delta * 2^K * U == 1.0 holds exactly in float arithmetic.
    """

    U: float
    Delta: float
    K: int
    M: int

    @classmethod
    def from_T(cls, T: float, M: int = 3, K: int = 4) -> "KernelParams":
        if T <= math.e:
            raise ValueError("need log T > 1")
        U = math.log(T) ** M
        denom = math.ldexp(U, K)  # 2^K * U, exact scaling
        delta = 1.0 / denom
        for cand in (delta, math.nextafter(delta, math.inf),
                     math.nextafter(delta, -math.inf)):
            if cand * denom == 1.0:
                delta = cand
                break
        return cls(U=U, Delta=delta, K=K, M=M)


def re_psi_hat(y, kp: KernelParams):
    """Re of the transformed smooth weight:
    (sin(2 pi y)/(2 pi y)) * (sin(2 pi Delta y)/(2 pi Delta y))^(K+1),
    extended by continuity to 1 at y = 0."""
    y = np.asarray(y, dtype=float)
    return _sinc(2.0 * np.pi * y) * _sinc(2.0 * np.pi * kp.Delta * y) ** (kp.K + 1)


# ---------------------------------------------------------------------------
# quadrature engine


class QuadratureError(RuntimeError):
    """Raised when the requested tolerance cannot be certified."""


@dataclass(frozen=True)
class QuadResult:
    value: float
    error: float

    def __iter__(self):
        return iter((self.value, self.error))


def quad(f, a: float, b: float, tol: float = 1e-10, breakpoints=(),
         tail_envelope=None, limit: int = 200) -> QuadResult:
    """Adaptive integral of f over [a, b] with a certified error estimate.

    breakpoints: interior points where f is non-smooth; the interval is
    integrated piecewise between them.
    b = inf requires tail_envelope(Y) -> certified bound on |int_Y^inf f|;
    the upper limit is raised until the envelope is below tol/2.

    Raises QuadratureError when the accumulated estimate exceeds tol.
    """
    tail = 0.0
    segments = []
    if math.isinf(b):
        if tail_envelope is None:
            raise ValueError("infinite upper limit needs a tail_envelope")
        y = max(2.0 * abs(a) + 16.0, 64.0)
        while tail_envelope(y) > tol / 2.0:
            y *= 2.0
            if y > 1e16:
                raise QuadratureError("tail envelope never reaches tol/2")
        tail = tail_envelope(y)
        # geometric segments keep each scipy call well conditioned
        edges = [a]
        while edges[-1] < y:
            edges.append(min(max(edges[-1] * 4.0, edges[-1] + 16.0), y))
        segments = list(zip(edges[:-1], edges[1:]))
        b = y
    pts = sorted(p for p in breakpoints if a < p < b)
    if not segments:
        segments = [(a, b)]
    pieces = []
    for lo, hi in segments:
        inner = [lo] + [p for p in pts if lo < p < hi] + [hi]
        pieces.extend(zip(inner[:-1], inner[1:]))
    total, err = 0.0, tail
    per_tol = (tol - tail) / max(1, len(pieces))
    for lo, hi in pieces:
        v, e = integrate.quad(f, lo, hi, epsabs=per_tol, epsrel=1e-12,
                              limit=limit)
        total += v
        err += abs(e)
    if err > max(tol, 1e-14 * abs(total)):
        raise QuadratureError(f"error estimate {err:.2e} exceeds tol {tol:.2e}")
    return QuadResult(total, err)


def quad_sinc(g, a: float, b: float, freq: float, tol: float = 1e-10,
              limit: int = 100) -> QuadResult:
    """Integral of g(y) * sin(freq y)/(freq y) over [a, b], split at the
    sine zeros k pi / freq so each panel is non-oscillatory."""
    if freq <= 0.0:
        raise ValueError("freq must be positive")
    if b <= a:
        return QuadResult(0.0, 0.0)
    klo = math.ceil(freq * a / math.pi)
    khi = math.floor(freq * b / math.pi)
    zeros = [k * math.pi / freq for k in range(klo, khi + 1)]
    pts = [a] + [z for z in zeros if a < z < b] + [b]
    per_tol = tol / max(1, len(pts) - 1)

    def fn(y):
        z = freq * y
        return g(y) * (math.sin(z) / z if z != 0.0 else 1.0)

    total, err = 0.0, 0.0
    for lo, hi in zip(pts[:-1], pts[1:]):
        v, e = integrate.quad(fn, lo, hi, epsabs=per_tol, epsrel=1e-12,
                              limit=limit)
        total += v
        err += abs(e)
    if err > max(tol, 1e-13 * abs(total)):
        raise QuadratureError(f"error estimate {err:.2e} exceeds tol {tol:.2e}")
    return QuadResult(total, err)


def sine_integral(z: float, tol: float = 1e-11) -> float:
    """Si(z) = int_0^z sin(u)/u du via the oscillation-aware splitter."""
    if z == 0.0:
        return 0.0
    sign = 1.0
    if z < 0.0:
        z, sign = -z, -1.0
    return sign * quad_sinc(lambda y: 1.0, 0.0, z, 1.0, tol=tol).value


def gauss_legendre(f, a: float, b: float, panels: int = 64, order: int = 12) -> float:
    """Composite fixed-order Gauss-Legendre rule.

    No adaptivity and no shared code with quad(); used by the verification
    suite as an independent second route.
    """
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(a, b, panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1:] - edges[:-1])
    nodes = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    vals = np.asarray(f(nodes), dtype=float).reshape(panels, order)
    return float(np.sum(vals * w[None, :] * half[:, None]))
