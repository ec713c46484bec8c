"""Empirical pair statistics of the zero ordinates.

The central quantity is the shifted pair sum

    F_h(x, T) = sum_{0 < gamma, gamma' <= T} cos((gamma - gamma' - h) log x)
                                             w(gamma - gamma' - h),
    w(u) = 4 / (4 + u^2),

a double sum over ordered pairs including the diagonal.  Two evaluation
modes: exact (every pair) and windowed (only |gamma - gamma' - h| <= W via
a two-pointer sweep, with a certified bound on the omitted mass).  All
sums are chunked over the outer index and combined by a fixed-shape
pairwise tree, so results are bit-identical for any worker count.

F_h = F_{-h} holds bit-exactly because the sums are evaluated at |h|; the
two are equal term-by-term under exchanging the pair order.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import backend
from .zeros import ZeroTable

TWO_PI = 2.0 * math.pi

_CHUNK = 4096

__all__ = ["PairCorrRequest", "FhEstimate", "PairKernel", "weight",
           "fh_exact", "fh_windowed", "form_factor", "band_pair_count",
           "convolved_statistic", "fejer_pair", "fh_record"]


def weight(u):
    """w(u) = 4 / (4 + u^2)."""
    u = np.asarray(u, dtype=float)
    out = 4.0 / (4.0 + u * u)
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class PairCorrRequest:
    """Evaluation request: x >= 1, 0 < T <= table coverage, shift h.

    mode is "exact" or "windowed"; windowed mode needs window > |h| + 2.
    log_x overrides log(x) when x is given as a power T^alpha, avoiding
    the exponent round trip.
    """

    x: float
    T: float
    h: float
    mode: str = "exact"
    window: float | None = None
    log_x: float | None = None

    def __post_init__(self):
        if self.x < 1.0:
            raise ValueError("requires x >= 1")
        if self.T <= 0.0:
            raise ValueError("requires T > 0")
        if self.mode not in ("exact", "windowed"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "windowed":
            if self.window is None or self.window <= 0.0:
                raise ValueError("windowed mode needs window > 0")
            if self.window <= abs(self.h) + 2.0:
                raise ValueError("window too small relative to h "
                                 "(need W > |h| + 2)")

    @property
    def effective_log_x(self) -> float:
        return self.log_x if self.log_x is not None else math.log(self.x)


@dataclass(frozen=True)
class FhEstimate:
    """F_h value with pair bookkeeping.

    truncation_bound is 0 in exact mode; in windowed mode it is
    (omitted ordered pairs) * max weight of an omitted pair = 4/(4+W^2),
    a certified bound on |windowed - exact|.
    """

    value: float
    pairs_used: int
    truncation_bound: float
    h_tilde: float


def _tree_sum(parts: np.ndarray) -> float:
    """Pairwise reduction with a fixed shape (independent of who computed
    each slot), so results do not depend on the worker count."""
    a = parts.astype(np.float64, copy=True)
    while len(a) > 1:
        m = (len(a) // 2) * 2
        a = np.concatenate([a[0:m:2] + a[1:m:2], a[m:]])
    return float(a[0]) if len(a) else 0.0


def _run_chunks(fn, n_outer: int, workers: int):
    chunks = [(i, min(i + _CHUNK, n_outer)) for i in range(0, n_outer, _CHUNK)]
    parts = np.zeros(len(chunks))
    counts = np.zeros(len(chunks), dtype=np.int64)

    def work(slot):
        i0, i1 = chunks[slot]
        v, c = fn(i0, i1)
        parts[slot] = v
        counts[slot] = c

    if workers > 1 and backend.BACKEND == "cython":
        with ThreadPoolExecutor(max_workers=workers) as pool:
            list(pool.map(work, range(len(chunks))))
    else:
        for slot in range(len(chunks)):
            work(slot)
    return _tree_sum(parts), int(counts.sum())


def fh_exact(zeros: ZeroTable, req: PairCorrRequest, workers: int = 1) -> FhEstimate:
    """The full double sum over ordered pairs (diagonal included)."""
    if req.mode != "exact":
        raise ValueError("request mode is not exact")
    gam = np.ascontiguousarray(zeros.up_to(req.T))
    habs = abs(req.h)
    logx = req.effective_log_x
    if len(gam) == 0:
        return FhEstimate(0.0, 0, 0.0, habs + 1.0)
    value, pairs = _run_chunks(
        lambda i0, i1: backend.pair_sum_exact(gam, logx, habs, i0, i1),
        len(gam), workers)
    return FhEstimate(value, pairs, 0.0, habs + 1.0)


def fh_windowed(zeros: ZeroTable, req: PairCorrRequest, workers: int = 1) -> FhEstimate:
    """Pairs with |gamma - gamma' - h| <= W only, plus a certified bound on
    the omitted mass: every omitted pair has weight < 4/(4+W^2)."""
    if req.mode != "windowed":
        raise ValueError("request mode is not windowed")
    gam = np.ascontiguousarray(zeros.up_to(req.T))
    habs = abs(req.h)
    w = float(req.window)
    logx = req.effective_log_x
    if len(gam) == 0:
        return FhEstimate(0.0, 0, 0.0, habs + 1.0)
    value, pairs = _run_chunks(
        lambda i0, i1: backend.pair_sum_window(gam, logx, habs, w, i0, i1),
        len(gam), workers)
    omitted = len(gam) * len(gam) - pairs
    bound = omitted * 4.0 / (4.0 + w * w)
    return FhEstimate(value, pairs, bound, habs + 1.0)


def fh(zeros: ZeroTable, req: PairCorrRequest, workers: int = 1) -> FhEstimate:
    return (fh_exact if req.mode == "exact" else fh_windowed)(zeros, req, workers)


def form_factor(zeros: ZeroTable, alpha: float, T: float, h: float,
                window: float | None = None, workers: int = 1) -> float:
    """F_h(alpha) = F_h(T^alpha, T) / ((T/2pi) log T), evaluated at |alpha|
    (the statistic is even in alpha) and through log x = |alpha| log T
    directly."""
    if len(zeros.ordinates) == 0 or T < zeros.ordinates[0]:
        raise ValueError("T below the first zero: empty statistic")
    a = abs(alpha)
    logx = a * math.log(T)
    mode = "exact" if window is None else "windowed"
    req = PairCorrRequest(x=math.exp(logx), T=T, h=h, mode=mode,
                          window=window, log_x=logx)
    est = fh(zeros, req, workers)
    return est.value / ((T / TWO_PI) * math.log(T))


def band_pair_count(zeros: ZeroTable, T: float, h: float, alpha: float,
                    beta: float | None = None) -> float:
    """Normalised count of ordered pairs gamma != gamma'.

    beta None:  |gamma - gamma' - h| <= 2 pi alpha / log T;
    beta given: 2 pi alpha / log T <= gamma - gamma' <= 2 pi beta / log T.
    Both divided by (T/2pi) log T.
    """
    gam = zeros.up_to(T)
    if len(gam) == 0:
        raise ValueError("empty table")
    if alpha <= 0.0:
        raise ValueError("requires alpha > 0")
    logT = math.log(T)
    if beta is None:
        delta = TWO_PI * alpha / logT
        lo = np.searchsorted(gam, gam - h - delta, side="left")
        hi = np.searchsorted(gam, gam - h + delta, side="right")
        count = int((hi - lo).sum())
        if abs(h) <= delta:  # remove the diagonal hits
            count -= len(gam)
    else:
        if beta <= alpha:
            raise ValueError("requires beta > alpha")
        dlo = TWO_PI * alpha / logT
        dhi = TWO_PI * beta / logT
        lo = np.searchsorted(gam, gam - dhi, side="left")
        hi = np.searchsorted(gam, gam - dlo, side="right")
        count = int((hi - lo).sum())
        if dlo <= 0.0 <= dhi:
            count -= len(gam)
    return count / ((T / TWO_PI) * logT)


# ---------------------------------------------------------------------------
# convolved statistic


@dataclass(frozen=True)
class PairKernel:
    """Even test function r with transform r_hat and compact support radius
    (|r(u)| = 0 for |u| > support)."""

    r: callable
    r_hat: callable
    support: float
    name: str = "kernel"

    def check_even(self, grid=None) -> None:
        grid = np.linspace(0.25, max(self.support, 1.0), 17) if grid is None else grid
        if not np.allclose(self.r(grid), self.r(-grid), rtol=0, atol=1e-12):
            raise ValueError(f"kernel {self.name!r} is not even on the sample grid")


def fejer_pair() -> PairKernel:
    """The triangle/Fejer transform pair: r(u) = max(1-|u|, 0) has
    r_hat(alpha) = (sin(pi alpha)/(pi alpha))^2."""
    return PairKernel(
        r=lambda u: np.maximum(1.0 - np.abs(u), 0.0),
        r_hat=lambda a: np.sinc(np.asarray(a, dtype=float)) ** 2,
        support=1.0,
        name="fejer",
    )


def convolved_statistic(zeros: ZeroTable, T: float, h: float,
                        kernel: PairKernel) -> float:
    """((T/2pi) log T)^{-1} sum over ordered pairs (diagonal included) of
    r((gamma - gamma' - h) log T / 2pi) w(gamma - gamma' - h)."""
    kernel.check_even()
    gam = zeros.up_to(T)
    if len(gam) == 0:
        return 0.0
    logT = math.log(T)
    scale = logT / TWO_PI
    wband = kernel.support / scale
    lo = np.searchsorted(gam, gam - h - wband, side="left")
    hi = np.searchsorted(gam, gam - h + wband, side="right")
    cnt = hi - lo
    starts = np.repeat(lo, cnt)
    csum = np.concatenate([[0], np.cumsum(cnt)])
    offsets = np.arange(csum[-1]) - np.repeat(csum[:-1], cnt)
    d = np.repeat(gam, cnt) - gam[starts + offsets] - h
    vals = np.asarray(kernel.r(d * scale), dtype=float) * weight(d)
    if len(vals) == 0:
        return 0.0
    partials = np.add.reduceat(vals, np.arange(0, len(vals), _CHUNK))
    return _tree_sum(partials) / ((T / TWO_PI) * logT)


def fh_record(req: PairCorrRequest, est: FhEstimate) -> dict:
    """JSON-ready export of one evaluation."""
    return {
        "x": req.x,
        "T": req.T,
        "h": req.h,
        "mode": req.mode,
        "value": est.value,
        "pairs_used": est.pairs_used,
        "truncation_bound": est.truncation_bound,
    }
