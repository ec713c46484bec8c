"""Predicted values of the pair sum F_h(x, T) in the three x-regimes, and
the limiting pair-density conjectures.

Each prediction is returned as a TheoryBreakdown: named main terms, named
integral terms with their error estimates, and the magnitude of the
quoted remainder terms (surrogate constant 1, epsilon = 0.05 in the
exponents).  The envelope contextualises comparisons; it is never added
to the total.

The integral terms are built from the exact piecewise machinery in
arith.py: G1 and G2 reduce to rotations of prefix integrals of
f(u) u^m trig(h log u), so the only numerical error in the prediction
path is the quadrature of the explicitly oscillatory sinc factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .arith import CorrectionState, FWeightedPrefix
from .special import quad, quad_sinc, sine_integral

TWO_PI = 2.0 * math.pi
EPSILON = 0.05  # surrogate for the arbitrarily-small exponent

__all__ = ["TheoryBreakdown", "Theory", "conj1_form_factor",
           "conj2_density", "conj3_density"]


@dataclass
class TheoryBreakdown:
    """Prediction decomposed into its displayed terms.

    total is the sum of main_terms and integral_terms; error_envelope is
    the magnitude of the remainder terms with surrogate constants.
    """

    theorem_id: str
    main_terms: dict = field(default_factory=dict)
    integral_terms: dict = field(default_factory=dict)
    integral_errors: dict = field(default_factory=dict)
    error_envelope: float = 0.0
    warnings: list = field(default_factory=list)

    @property
    def total(self) -> float:
        return float(sum(self.main_terms.values())
                     + sum(self.integral_terms.values()))

    def as_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "main_terms": dict(self.main_terms),
            "integral_terms": dict(self.integral_terms),
            "integral_errors": dict(self.integral_errors),
            "error_envelope": self.error_envelope,
            "warnings": list(self.warnings),
            "total": self.total,
        }


def _h_tilde(h: float) -> float:
    return abs(h) + 1.0


_GL_NODES = {k: np.polynomial.legendre.leggauss(k) for k in (10, 18)}


def _panel_sinc_integral(fvec, a: float, b: float, freq: float,
                         chunk: int = 65536):
    """int_a^b fvec(y) * sinc(freq y) dy with panel edges at the integers
    (where the integrand has slope kinks from f) and at the sinc zeros.

    Each panel gets a 10-point Gauss-Legendre rule; the error estimate is
    the summed disagreement with an 18-point rule.  fvec must accept
    arrays.
    """
    edges = np.unique(np.concatenate([
        np.array([a, b]),
        np.arange(math.ceil(a), math.floor(b) + 1, dtype=float),
        np.arange(math.ceil(freq * a / math.pi), math.floor(freq * b / math.pi) + 1)
        * (math.pi / freq),
    ]))
    edges = edges[(edges >= a) & (edges <= b)]
    total, err = 0.0, 0.0
    for s in range(0, len(edges) - 1, chunk):
        lo = edges[s:min(s + chunk, len(edges) - 1)]
        hi = edges[s + 1:min(s + chunk, len(edges) - 1) + 1]
        mid = 0.5 * (lo + hi)
        half = 0.5 * (hi - lo)
        vals = {}
        for order, (xn, wn) in _GL_NODES.items():
            ys = (mid[:, None] + half[:, None] * xn[None, :]).ravel()
            fv = fvec(ys) * _sinc_arr(freq * ys)
            vals[order] = (fv.reshape(len(lo), order) @ wn) * half
        total += float(np.sum(vals[18]))
        err += float(np.sum(np.abs(vals[18] - vals[10])))
    return total, err


def _sinc_arr(z):
    return np.sinc(np.asarray(z, dtype=float) / np.pi)


class Theory:
    """Prediction evaluator bound to a singular-series table."""

    def __init__(self, state: CorrectionState):
        self.state = state
        self._prefix_cache: dict = {}

    # -- shared plumbing ----------------------------------------------------

    def _prefix(self, h: float, y_need: float) -> FWeightedPrefix:
        y_max = int(min(self.state.k_max,
                        max(400_000, 2 * int(math.ceil(y_need)))))
        key = (float(h), y_max)
        hit = self._prefix_cache.get(key)
        if hit is None:
            # drop smaller tables for the same h
            for k in [k for k in self._prefix_cache if k[0] == float(h) and k[1] < y_max]:
                del self._prefix_cache[k]
            hit = FWeightedPrefix(self.state, h, y_max)
            self._prefix_cache[key] = hit
        return hit

    def _g1_vec(self, ys: np.ndarray, h: float, x: float,
                pre: FWeightedPrefix) -> np.ndarray:
        phi = h * np.log(x / ys)
        pc = pre.prefix(ys, 0, 0)
        ps = pre.prefix(ys, 0, 1)
        cph, sph = np.cos(phi), np.sin(phi)
        ic = cph * pc - sph * ps
        is_ = sph * pc + cph * ps
        return ((2.0 - h * h) * ic - 3.0 * h * is_) / ys**3

    def _g2_vec(self, ys: np.ndarray, h: float, x: float,
                pre: FWeightedPrefix) -> np.ndarray:
        phi = h * np.log(x / ys)
        end_c = pre.prefix(float(pre.y_max), -4, 0)
        end_s = pre.prefix(float(pre.y_max), -4, 1)
        qc = end_c - pre.prefix(ys, -4, 0)
        qs = end_s - pre.prefix(ys, -4, 1)
        cph, sph = np.cos(phi), np.sin(phi)
        ic = cph * qc - sph * qs
        is_ = sph * qc + cph * qs
        return ys * ((6.0 - h * h) * ic + 5.0 * h * is_)

    def g1(self, y: float, h: float, x: float) -> float:
        """G1(y) = y^-3 int_0^y f(u) [(2-h^2) cos(h log(ux/y))
                                      - 3h sin(h log(ux/y))] du, exact."""
        if y < 1.0:
            raise ValueError("requires y >= 1")
        pre = self._prefix(h, y)
        return float(self._g1_vec(np.asarray([y]), h, x, pre)[0])

    def g2(self, y: float, h: float, x: float) -> float:
        """G2(y) = y int_y^inf f(u) u^-4 [(6-h^2) cos(h log(ux/y))
                                          + 5h sin(h log(ux/y))] du,
        truncated at the prefix-table end with the |f| <= C u^0.6 tail."""
        if y < 1.0:
            raise ValueError("requires y >= 1")
        pre = self._prefix(h, y)
        return float(self._g2_vec(np.asarray([y]), h, x, pre)[0])

    def g2_tail_bound(self, y: float, h: float) -> float:
        pre = self._prefix(h, y)
        return y * pre.tail_bound_m4(abs(6.0 - h * h) + 5.0 * abs(h))

    # -- theorem predictions -------------------------------------------------

    def thm1_prediction(self, x: float, T: float, h: float) -> TheoryBreakdown:
        """Valid regime 1 <= x <= T / log T."""
        out = TheoryBreakdown("T1")
        if x > T / math.log(T):
            out.warnings.append(f"x={x:.6g} beyond T/log T={T / math.log(T):.6g}")
        lx = math.log(x)
        h2 = h * h
        ch, sh = math.cos(h * lx), math.sin(h * lx)
        out.main_terms["cos_sin_bracket"] = (T / TWO_PI) * (
            4.0 * ch / (4.0 + h2) * lx - 8.0 * h * sh / (4.0 + h2) ** 2)
        lt = math.log(T / TWO_PI)
        out.main_terms["x2_log_squared"] = (T / (TWO_PI * x * x)) * (lt * lt - 2.0 * lt)
        out.error_envelope = x * lx + _h_tilde(h) * T / x ** (0.5 - EPSILON)
        return out

    def thm3_prediction(self, x: float, T: float, h: float,
                        M: int = 3) -> TheoryBreakdown:
        """Valid regime T / log^M T <= x <= T."""
        out = TheoryBreakdown("T3")
        if not (T / math.log(T) ** M <= x <= T):
            out.warnings.append("x outside [T/log^M T, T]")
        lx = math.log(x)
        h2 = h * h
        ch, sh = math.cos(h * lx), math.sin(h * lx)
        out.main_terms["cos_sin_bracket"] = (T / math.pi) * (
            2.0 * ch / (4.0 + h2) * lx - 4.0 * h * sh / (4.0 + h2) ** 2)
        out.error_envelope = (_h_tilde(h) * x
                              + _h_tilde(h) * T / math.log(T) ** (M - 2))
        return out

    def thm4_prediction(self, x: float, T: float, h: float,
                        M: int = 3) -> TheoryBreakdown:
        """Valid regime T <= x (strong pair correlation scale)."""
        out = TheoryBreakdown("T4")
        if x < T:
            out.warnings.append("x below T")
        lx = math.log(x)
        h2 = h * h
        out.main_terms["main"] = ((T / TWO_PI) * math.log(T / (TWO_PI * math.e))
                                  * 4.0 * math.cos(h * lx) / (4.0 + h2))
        out.error_envelope = (_h_tilde(h) * T * (T / x) ** (0.5 - EPSILON)
                              + _h_tilde(h) * T / math.log(T) ** (M - 2))
        return out

    def thm2_prediction(self, x: float, T: float, h: float,
                        k_cap: int = 100_000, y_cap: float | None = None,
                        M: int = 3, tol: float = 1e-8) -> TheoryBreakdown:
        """All displayed terms of the TPC-conditional expansion, valid for
        x >= T / log^M T.  Truncations (y_cap for the sinc-weighted
        y-integral, k_cap for the singular-series sum) carry certified
        bounds; if a bound exceeds 1% of the running total the caps are
        too small and a ValueError is raised.
        """
        out = TheoryBreakdown("T2")
        if x < T / math.log(T) ** M:
            out.warnings.append("x below T/log^M T")
        if y_cap is None:
            y_cap = min(max(1e3 * x / T, 1e3), 1e6)
        lx = math.log(x)
        h2 = h * h
        ch, sh = math.cos(h * lx), math.sin(h * lx)
        c = T / x  # sinc frequency

        out.main_terms["cos_sin_bracket"] = (T / math.pi) * (
            2.0 * ch / (4.0 + h2) * lx - 4.0 * h * sh / (4.0 + h2) ** 2)

        # sinc-weighted y-integral of the G-bracket
        pre = self._prefix(h, y_cap)

        def bracket(ys):
            return (-2.0 * ch / ((4.0 + h2) * ys)
                    - 4.0 * self.state.f(ys) * ch / (ys * ys)
                    + self._g1_vec(ys, h, x, pre) + self._g2_vec(ys, h, x, pre))

        val2, qerr2 = _panel_sinc_integral(bracket, 1.0, float(y_cap), c)
        cf = self.state.f_envelope_06
        c_g1 = (abs(2.0 - h2) + 3.0 * abs(h)) * cf / 1.6
        c_g2 = (abs(6.0 - h2) + 5.0 * abs(h)) * cf / 2.4
        tail2 = (1.0 / c) * (2.0 / ((4.0 + h2) * y_cap)
                             + (4.0 * cf + c_g1 + c_g2) / (1.4 * y_cap ** 1.4))
        out.integral_terms["g_bracket_sinc_integral"] = (T / math.pi) * val2
        out.integral_errors["g_bracket_sinc_integral"] = (T / math.pi) * (qerr2 + tail2)

        si = sine_integral(c)
        out.integral_terms["sinc_bracket_9h2"] = -(x / math.pi) * si * (
            3.0 * ch / (9.0 + h2) + h * sh / (9.0 + h2))
        out.integral_terms["sinc_bracket_1h2"] = -(x / math.pi) * si * (
            ch / (1.0 + h2) - h * sh / (1.0 + h2))

        # singular-series term: split cos(h log(kx/y)) over k and y
        ic, is_, iq_err = self._series_sinc_moments(h, c, tol)
        ks = np.arange(1, k_cap + 1, dtype=np.float64)
        svals = self.state.table.values[1:k_cap + 1]
        hk = h * np.log(ks * x)
        series = float(np.sum(svals / ks**2 * (np.cos(hk) * ic + np.sin(hk) * is_)))
        tail5 = (self.state.table.max_value * math.hypot(ic, is_)
                 * (1.0 / k_cap + 1.0 / k_cap**2))
        out.integral_terms["singular_series_sinc"] = (T / math.pi) * series
        out.integral_errors["singular_series_sinc"] = (T / math.pi) * (tail5 + iq_err)

        out.error_envelope = _h_tilde(h) * (
            x ** (1.0 + 6.0 * EPSILON) / T
            + x ** (0.5 + 7.0 * EPSILON)
            + x * x / T ** (2.0 - 2.0 * EPSILON)
            + T / math.log(T) ** (M - 2))

        bound_total = sum(out.integral_errors.values())
        if bound_total > 0.01 * abs(out.total):
            raise ValueError(
                f"truncation bounds {bound_total:.3g} exceed 1% of the total "
                f"{out.total:.6g}: raise k_cap/y_cap")
        return out

    def _series_sinc_moments(self, h: float, c: float, tol: float):
        """Ic, Is = int_0^1 y (cos, sin)(h log y) sinc(cy) dy.

        Split at the first sinc zero: above it the oscillation splitter,
        below it the substitution v = log y (integrand e^{2v} trig(hv)
        sinc(c e^v), truncated where e^{2v} makes the tail negligible).
        """
        y0 = min(math.pi / c, 1.0)
        vmin = 0.5 * math.log(tol / 8.0)
        err = 0.0

        def make(kind):
            trig = math.cos if kind == 0 else math.sin

            def low(v):
                y = math.exp(v)
                z = c * y
                return math.exp(2.0 * v) * trig(h * v) * (math.sin(z) / z if z else 1.0)

            val = quad(low, vmin, math.log(y0), tol=tol).value
            e = tol + math.exp(2.0 * vmin) / 2.0
            if y0 < 1.0:
                r = quad_sinc(lambda y: y * trig(h * math.log(y)), y0, 1.0, c, tol=tol)
                val += r.value
                e += r.error
            return val, e

        ic, e1 = make(0)
        is_, e2 = make(1)
        return ic, is_, e1 + e2

    # -- conjectures ----------------------------------------------------------

    def conj1_form_factor(self, alpha: float, T: float, h: float) -> float:
        return conj1_form_factor(alpha, T, h)

    def conj2_density(self, alpha: float, T: float, h: float) -> float:
        return conj2_density(alpha, T, h)

    def conj3_density(self, alpha: float, beta: float, T: float) -> float:
        return conj3_density(alpha, beta, T)


def conj1_form_factor(alpha: float, T: float, h: float) -> float:
    """Limiting form factor: T^{-2a} log T + a 4cos(h a log T)/(4+h^2) on
    0 <= a <= 1, and 4cos(h a log T)/(4+h^2) beyond (o(1) terms set to 0;
    the branch mismatch at a = 1 is the documented T^{-2} log T)."""
    a = abs(alpha)
    osc = 4.0 * math.cos(h * a * math.log(T)) / (4.0 + h * h)
    if a <= 1.0:
        return T ** (-2.0 * a) * math.log(T) + a * osc
    return osc


def conj2_density(alpha: float, T: float, h: float, tol: float = 1e-8) -> float:
    """int over [-a + h log T/2pi, a + h log T/2pi] of
    1 - 4/(4+h^2) (sin pi u / pi u)^2 du."""
    if alpha <= 0.0:
        raise ValueError("requires alpha > 0")
    shift = h * math.log(T) / TWO_PI
    lo, hi = -alpha + shift, alpha + shift
    c = 4.0 / (4.0 + h * h)

    def integrand(u):
        s = np.sinc(u)
        return 1.0 - c * s * s

    # breakpoints at the integers where the kernel touches zero
    pts = [k for k in range(math.ceil(lo), math.floor(hi) + 1) if lo < k < hi]
    return quad(integrand, lo, hi, tol=tol, breakpoints=pts).value


def conj3_density(alpha: float, beta: float, T: float, tol: float = 1e-8) -> float:
    """int_alpha^beta of 1 - fejer(u) / (1 + (pi u / log T)^2) du, for
    0 < alpha < beta <= log T (warn past log T / 2)."""
    if not 0.0 < alpha < beta:
        raise ValueError("requires 0 < alpha < beta")
    logT = math.log(T)
    if beta > logT:
        raise ValueError("requires beta <= log T")

    def integrand(u):
        s = np.sinc(u)
        return 1.0 - s * s / (1.0 + (math.pi * u / logT) ** 2)

    pts = [k for k in range(math.ceil(alpha), math.floor(beta) + 1)
           if alpha < k < beta]
    return quad(integrand, alpha, beta, tol=tol, breakpoints=pts).value


def select_theorem(x: float, T: float, M: int = 3) -> str | None:
    """The regime the paper's expansions partition x into: T1 for
    x <= T/log T, T3 for x <= T, T4 for x <= T^2 (roughly), else none."""
    if x <= T / math.log(T):
        return "T1"
    if x <= T:
        return "T3"
    if x <= T * T:
        return "T4"
    return None
