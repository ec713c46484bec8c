"""Number-theoretic primitives: the von Mangoldt function, the
Hardy-Littlewood singular series, its correction functions epsilon and f,
and the weighted partial-sum functionals built from them.

Everything downstream (predictions and verification alike) consumes the
exact piecewise structure established here: between consecutive integers

    epsilon(y) = P(k) - y + (1/2) log y          (P(k) = sum_{j<=k} S(j)),
    f(y)       = a_k + b_k y - y^2/2 + (y log y)/2,

so integrals of f and epsilon against u^m trig(h log u) have closed forms
through the exponential-trigonometric antiderivatives.  No quadrature error
enters the prediction path.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple

import numpy as np

from .special import EULER_GAMMA

# B = -C0 - log(2 pi): the mean value of epsilon(y) is B/2, which makes
# f(y) = int_0^y (epsilon - B/2) fluctuate instead of drift.
B_CONSTANT = -EULER_GAMMA - math.log(2.0 * math.pi)

DEFAULT_K_MAX = 10**6
DEFAULT_PRIME_BOUND = 10**7

_CACHE_MAGIC = b"ZPSS"
_CACHE_VERSION = 1

__all__ = [
    "B_CONSTANT",
    "CorrectionState",
    "SingularSeriesTable",
    "TailBounded",
    "primes_up_to",
    "s_alpha_h",
    "singular_series_table",
    "t_alpha_h",
    "von_mangoldt",
    "von_mangoldt_support",
]


def primes_up_to(n: int) -> np.ndarray:
    """All primes <= n by an odd-only sieve."""
    if n < 2:
        return np.empty(0, dtype=np.int64)
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p:: p] = False
    return np.nonzero(sieve)[0].astype(np.int64)


def von_mangoldt(n: int) -> float:
    """Lambda(n): log p when n is a power of the prime p, else 0."""
    if n < 1:
        raise ValueError("von_mangoldt requires n >= 1")
    if n == 1:
        return 0.0
    for p in range(2, int(n**0.5) + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return math.log(p) if n == 1 else 0.0
    return math.log(n)  # n itself prime


def von_mangoldt_support(limit: int):
    """Prime powers n <= limit together with Lambda(n) = log p.

    Returns (n_values ascending, lambda_values); every n not listed has
    Lambda(n) = 0, which makes sums over Lambda cheap at sieve scale.
    """
    primes = primes_up_to(limit)
    ns = [primes]
    ls = [np.log(primes.astype(np.float64))]
    for p in primes[primes.astype(np.float64) <= limit**0.5]:
        q = int(p) * int(p)
        lp = math.log(p)
        while q <= limit:
            ns.append(np.array([q], dtype=np.int64))
            ls.append(np.array([lp]))
            q *= int(p)
    n = np.concatenate(ns)
    lam = np.concatenate(ls)
    order = np.argsort(n, kind="stable")
    return n[order], lam[order]


# ---------------------------------------------------------------------------
# singular series


def _twin_prime_product(prime_bound: int) -> float:
    """2 prod_{2 < p <= prime_bound} (1 - 1/(p-1)^2), accumulated in logs.

    Truncation excess is at most 2/(P log P) relative (the omitted factors
    lie in [1 - sum_{p>P} (p-1)^{-2}, 1]), ~1.2e-8 at P = 1e7.
    """
    odd = primes_up_to(prime_bound)[1:].astype(np.float64)
    return 2.0 * math.exp(float(np.sum(np.log1p(-1.0 / (odd - 1.0) ** 2))))


@dataclass(frozen=True)
class SingularSeriesTable:
    """Cached singular-series values S(k) for k <= k_max.

    values[k] = 2 prod_{p>2}(1 - 1/(p-1)^2) prod_{p|k, p>2} (p-1)/(p-2)
    for even k, 0 for odd k.  partial_sums[k] = sum_{j<=k} values[j].
    """

    values: np.ndarray
    partial_sums: np.ndarray
    twin_prime_product: float
    k_max: int
    prime_bound: int
    max_value: float = field(init=False, default=0.0)

    def __post_init__(self):
        object.__setattr__(self, "max_value", float(self.values.max()))

    def singular_series(self, d: int) -> float:
        """S(d); exact table lookup for d <= k_max, direct product beyond."""
        if d < 1:
            raise ValueError("singular_series requires d >= 1")
        if d % 2 == 1:
            return 0.0
        if d <= self.k_max:
            return float(self.values[d])
        out = self.twin_prime_product
        m = d
        while m % 2 == 0:
            m //= 2
        for p in range(3, int(m**0.5) + 1, 2):
            if m % p == 0:
                out *= (p - 1.0) / (p - 2.0)
                while m % p == 0:
                    m //= p
        if m > 1:
            out *= (m - 1.0) / (m - 2.0)
        return out

    def partial_sum(self, y: float) -> float:
        """sum_{k <= y} S(k); right-continuous at the integers."""
        if y < 0:
            raise ValueError("partial_sum requires y >= 0")
        if y > self.k_max:
            raise ValueError(f"y={y} exceeds table range k_max={self.k_max}")
        k = int(math.floor(y))
        return float(self.partial_sums[k]) if k >= 1 else 0.0

    # -- binary cache ------------------------------------------------------

    def save(self, path):
        path = Path(path)
        with path.open("wb") as fh:
            fh.write(_CACHE_MAGIC)
            fh.write(struct.pack("<IQQd", _CACHE_VERSION, self.k_max,
                                 self.prime_bound, self.twin_prime_product))
            fh.write(self.values.tobytes())

    @classmethod
    def load(cls, path) -> "SingularSeriesTable":
        path = Path(path)
        with path.open("rb") as fh:
            if fh.read(4) != _CACHE_MAGIC:
                raise ValueError(f"{path}: not a singular-series cache")
            version, k_max, prime_bound, twin = struct.unpack("<IQQd", fh.read(28))
            if version != _CACHE_VERSION:
                raise ValueError(f"{path}: unsupported cache version {version}")
            values = np.frombuffer(fh.read(), dtype=np.float64).copy()
        if len(values) != k_max + 1:
            raise ValueError(f"{path}: truncated cache")
        return cls(values=values, partial_sums=np.cumsum(values),
                   twin_prime_product=twin, k_max=int(k_max),
                   prime_bound=int(prime_bound))


def singular_series_table(k_max: int = DEFAULT_K_MAX,
                          prime_bound: int = DEFAULT_PRIME_BOUND,
                          cache_path=None) -> SingularSeriesTable:
    """Build (or reload) the S(k) table for k <= k_max."""
    if cache_path is not None:
        cache_path = Path(cache_path)
        if cache_path.exists():
            table = SingularSeriesTable.load(cache_path)
            if table.k_max == k_max and table.prime_bound == prime_bound:
                return table
    twin = _twin_prime_product(prime_bound)
    local = np.ones(k_max + 1)
    for p in primes_up_to(k_max)[1:]:
        local[p::p] *= (p - 1.0) / (p - 2.0)
    values = np.zeros(k_max + 1)
    values[2::2] = twin * local[2::2]
    table = SingularSeriesTable(values=values, partial_sums=np.cumsum(values),
                                twin_prime_product=twin, k_max=k_max,
                                prime_bound=prime_bound)
    if cache_path is not None:
        cache_path.parent.mkdir(parents=True, exist_ok=True)
        table.save(cache_path)
    return table


# ---------------------------------------------------------------------------
# correction functions epsilon and f


class CorrectionState:
    """Exact evaluation of epsilon(y) and f(y) over the table range.

    epsilon(y) = sum_{k<=y} S(k) - y + (1/2) log y   for y > 0,
    f(y)       = int_0^y (epsilon(u) - B/2) du,      B = -C0 - log 2pi,

    with f evaluated by piecewise-closed-form integration (one exact piece
    per unit interval) rather than quadrature.  f at the integers is
    precomputed as a cumulative table.
    """

    def __init__(self, table: SingularSeriesTable):
        self.table = table
        self.B = B_CONSTANT
        self.euler_gamma = EULER_GAMMA
        kmax = table.k_max
        csum = table.partial_sums
        # int over [k, k+1) of (P(k) - B/2 - u + log(u)/2) du, k = 1..kmax-1
        k = np.arange(1, kmax, dtype=np.float64)
        hi = k + 1.0
        piece = ((csum[1:kmax] - self.B / 2.0)
                 - (hi * hi - k * k) / 2.0
                 + 0.5 * (hi * np.log(hi) - hi - k * np.log(k) + k))
        f1 = -1.0 - self.B / 2.0
        self.f_cache = np.concatenate([[f1], f1 + np.cumsum(piece)])  # f(1..kmax)
        # coefficients of f(u) = a_k + b_k u - u^2/2 + (u log u)/2 on [k, k+1]
        kk = np.arange(0, kmax, dtype=np.float64)
        self._b = np.empty(kmax)
        self._a = np.empty(kmax)
        self._b[0] = -(0.5 + self.B / 2.0)
        self._a[0] = 0.0
        sk = csum[1:kmax]
        kf = kk[1:]
        self._b[1:] = (sk - self.B / 2.0) - 0.5
        self._a[1:] = (self.f_cache[:-1] - (sk - self.B / 2.0) * kf
                       + kf * kf / 2.0 - 0.5 * kf * np.log(kf) + 0.5 * kf)
        # empirical envelope constant for |f(y)| <= C y^0.6 (tail bounds)
        ks = np.arange(1, kmax + 1, dtype=np.float64)
        self.f_envelope_06 = float(np.max(np.abs(self.f_cache) / ks**0.6)) * 1.5

    @property
    def k_max(self) -> int:
        return self.table.k_max

    def epsilon(self, y):
        """epsilon(y); y > 0 (log singularity at 0), vectorised."""
        y = np.asarray(y, dtype=float)
        if np.any(y <= 0.0):
            raise ValueError("epsilon requires y > 0")
        if np.any(y > self.k_max):
            raise ValueError("y exceeds table range")
        k = np.floor(y).astype(np.int64)
        ps = np.where(k >= 1, self.table.partial_sums[np.minimum(k, self.k_max)], 0.0)
        out = ps - y + 0.5 * np.log(y)
        return out if out.ndim else float(out)

    def f(self, y):
        """f(y) for y >= 0, exact piecewise closed form, vectorised."""
        y = np.asarray(y, dtype=float)
        if np.any(y < 0.0):
            raise ValueError("f requires y >= 0")
        if np.any(y > self.k_max):
            raise ValueError("y exceeds table range")
        ysafe = np.where(y > 0.0, y, 1.0)
        k = np.minimum(np.floor(y).astype(np.int64), self.k_max - 1)
        a = self._a[k]
        b = self._b[k]
        out = a + b * y - y * y / 2.0 + 0.5 * y * np.log(ysafe)
        out = np.where(y > 0.0, out, 0.0)
        return out if out.ndim else float(out)

    def piece_coeffs(self, k: int):
        """(a_k, b_k) of the f-piece on [k, k+1] (k = 0 covers (0, 1])."""
        return float(self._a[k]), float(self._b[k])


# ---------------------------------------------------------------------------
# exact integrals of u^m trig(h log u + phi) and of f(u) u^m trig(h log u)


def _int_um_trig(m, h, phi, a, b, kind):
    """int_a^b u^m trig(h log u + phi) du, exact (m real, m != -1 or h != 0).

    Substituting v = log u turns the integrand into e^{(m+1)v} trig(hv+phi),
    an exponential-trigonometric antiderivative.
    """
    aa = m + 1.0
    d = aa * aa + h * h
    va = np.log(a)
    vb = np.log(b)

    def F(v):
        e = np.exp(aa * v)
        c = np.cos(h * v + phi)
        s = np.sin(h * v + phi)
        return e * (aa * c + h * s) / d if kind == 0 else e * (aa * s - h * c) / d

    return F(vb) - F(va)


def _int_um_logu_trig(m, h, phi, a, b, kind):
    """int_a^b u^m log(u) trig(h log u + phi) du, exact (v e^{av} forms)."""
    aa = m + 1.0
    d = aa * aa + h * h
    va = np.log(a)
    vb = np.log(b)

    def F(v):
        e = np.exp(aa * v)
        c = np.cos(h * v + phi)
        s = np.sin(h * v + phi)
        u = aa * v / d - (aa * aa - h * h) / (d * d)
        w = h * v / d - 2.0 * aa * h / (d * d)
        return e * (u * c + w * s) if kind == 0 else e * (u * s - w * c)

    return F(vb) - F(va)


def int_f_um_trig(state: CorrectionState, m, h, phi, a, b, kind, k_index=None):
    """int_a^b f(u) u^m trig(h log u + phi) du with [a, b] inside one unit
    interval [k, k+1]; exact via the piecewise form of f.  Vectorised when
    a, b, k_index are arrays."""
    if k_index is None:
        k_index = int(np.floor(float(a)))
    if np.isscalar(k_index) or np.ndim(k_index) == 0:
        ak, bk = state.piece_coeffs(int(k_index))
    else:
        ak = state._a[np.asarray(k_index)]
        bk = state._b[np.asarray(k_index)]
    r = ak * _int_um_trig(m, h, phi, a, b, kind)
    r = r + bk * _int_um_trig(m + 1, h, phi, a, b, kind)
    r = r - 0.5 * _int_um_trig(m + 2, h, phi, a, b, kind)
    r = r + 0.5 * _int_um_logu_trig(m + 1, h, phi, a, b, kind)
    return r


class FWeightedPrefix:
    """Prefix integrals of f(u) u^m trig(h log u) at the integers, exact.

    Pc/Ps(y; m=0)  = int_0^y f(u) cos/sin(h log u) du,
    Qc/Qs(y; m=-4) = int_1^y f(u) u^-4 cos/sin(h log u) du,

    the building blocks of the prediction integrals: any phase shift
    h log(x/y) is recovered by a rotation of the (cos, sin) pair.
    """

    def __init__(self, state: CorrectionState, h: float, y_max: int):
        if y_max > state.k_max:
            raise ValueError("y_max exceeds table range")
        self.state = state
        self.h = float(h)
        self.y_max = int(y_max)
        ks = np.arange(0, self.y_max)
        a = np.where(ks == 0, 1e-300, ks).astype(np.float64)  # f ~ u log u at 0
        b = (ks + 1).astype(np.float64)
        self._tabs = {}
        for m in (0, -4):
            lo = np.maximum(a, 1.0) if m == -4 else a  # m=-4 prefixes start at u=1
            for kind in (0, 1):
                pieces = int_f_um_trig(state, m, self.h, 0.0, lo, b, kind, k_index=ks)
                if m == -4:
                    pieces = pieces.copy()
                    pieces[0] = 0.0
                self._tabs[(m, kind)] = np.concatenate([[0.0], np.cumsum(pieces)])

    def prefix(self, y, m: int, kind: int):
        """Exact prefix integral up to y (scalar or array), y <= y_max."""
        y = np.asarray(y, dtype=float)
        if np.any(y > self.y_max):
            raise ValueError("y exceeds prefix table range")
        k = np.minimum(np.floor(y).astype(np.int64), self.y_max - 1)
        base = self._tabs[(m, kind)][k]
        lo = np.maximum(k.astype(np.float64), 1e-300 if m == 0 else 1.0)
        part = int_f_um_trig(self.state, m, self.h, 0.0, lo,
                             np.maximum(y, lo), kind, k_index=k)
        if m == -4:
            part = np.where(y <= 1.0, 0.0, part)
        out = base + part
        return out if out.ndim else float(out)

    def tail_bound_m4(self, hfactor: float) -> float:
        """Certified bound on |int_{y_max}^inf f(u) u^-4 [..] du| from the
        empirical envelope |f(u)| <= C u^0.6."""
        c = self.state.f_envelope_06
        return hfactor * c * self.y_max ** (-2.4) / 2.4


# ---------------------------------------------------------------------------
# S_alpha^h and T_alpha^h


class TailBounded(NamedTuple):
    value: float
    tail_bound: float


def s_alpha_h(state: CorrectionState, y: float, alpha: float, h: float,
              x: float) -> float:
    """S_alpha^h(y) = sum_{k<=y} S(k) k^alpha cos(h log(kx/y))
                      - int_0^y u^alpha cos(h log(ux/y)) du,  alpha >= 0.

    The integral part is closed form: (y/x)^{alpha+1} times the exponential-
    trigonometric antiderivative at v = log x.
    """
    if alpha < 0:
        raise ValueError("requires alpha >= 0")
    if y < 0 or x < 1:
        raise ValueError("requires y >= 0 and x >= 1")
    tab = state.table
    if y > tab.k_max:
        raise ValueError("y exceeds table range")
    kmax = int(math.floor(y))
    total = 0.0
    if kmax >= 1:
        ks = np.arange(1, kmax + 1, dtype=np.float64)
        total = float(np.sum(tab.values[1:kmax + 1] * ks**alpha
                             * np.cos(h * np.log(ks * x / y))))
    aa = alpha + 1.0
    lx = math.log(x)
    integral = (y**aa * (aa * math.cos(h * lx) + h * math.sin(h * lx))
                / (aa * aa + h * h))
    return total - integral


def t_alpha_h(state: CorrectionState, y: float, alpha: float, h: float,
              x: float, k_cap: int | None = None) -> TailBounded:
    """T_alpha^h(y) = sum_{k>y} S(k) k^-alpha cos(h log(kx/y))
                      - int_y^inf u^-alpha cos(h log(ux/y)) du,  alpha > 1.

    Sum and integral are both truncated at k_cap and paired there; past the
    cap they cancel to first order, and the remainder

        |sum_{k>K} - int_K^inf|  <=  (|eps(K)| + max|eps| + 1) (alpha+|h|+1) K^-alpha

    (by partial summation against A(t) = t - log(t)/2 + eps(t)) is returned
    as tail_bound.
    """
    if alpha <= 1.0:
        raise ValueError("requires alpha > 1 (the tail diverges otherwise)")
    if y <= 0 or x < 1:
        raise ValueError("requires y > 0 and x >= 1")
    tab = state.table
    if k_cap is None:
        k_cap = tab.k_max
    if k_cap < y:
        raise ValueError("k_cap must be >= y")
    if k_cap > tab.k_max:
        raise ValueError("k_cap exceeds table range")
    klo = int(math.floor(y)) + 1
    total = 0.0
    if klo <= k_cap:
        ks = np.arange(klo, k_cap + 1, dtype=np.float64)
        total = float(np.sum(tab.values[klo:k_cap + 1] / ks**alpha
                             * np.cos(h * np.log(ks * x / y))))
    aa = 1.0 - alpha
    d = aa * aa + h * h

    def antider(u):
        v = math.log(u * x / y)
        return (y / x) ** aa * math.exp(aa * v) * (aa * math.cos(h * v)
                                                   + h * math.sin(h * v)) / d

    integral = antider(float(k_cap)) - antider(float(y))
    eps_cap = abs(float(state.epsilon(float(k_cap))))
    bound = ((eps_cap + 0.5 * math.log(max(k_cap, 2)) + 1.0)
             * (alpha + abs(h) + 1.0) * float(k_cap) ** (-alpha))
    return TailBounded(total - integral, bound)
