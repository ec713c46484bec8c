"""Pure-numpy implementations of the hot kernels.

Same call signatures as the compiled extension in _kernels.pyx; the
selection happens in backend.py.  These are vectorised rather than naive,
so the fallback stays usable at the full 1e5-zero scale (roughly 5-10x
slower than the extension).
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def pair_sum_exact(gam: np.ndarray, logx: float, h: float,
                   i0: int, i1: int) -> tuple[float, int]:
    """sum over i in [i0, i1), all j, of cos((g_i - g_j - h) logx) w(g_i - g_j - h).

    Ordered pairs including the diagonal; w(u) = 4/(4+u^2).
    """
    total = 0.0
    n = len(gam)
    block = max(1, min(i1 - i0, 8 * 1024 * 1024 // max(n, 1) + 1))
    for s in range(i0, i1, block):
        e = min(s + block, i1)
        d = gam[s:e, None] - gam[None, :] - h
        total += float(np.sum(np.cos(d * logx) * 4.0 / (4.0 + d * d)))
    return total, (i1 - i0) * n


def pair_sum_window(gam: np.ndarray, logx: float, h: float, w: float,
                    i0: int, i1: int) -> tuple[float, int]:
    """Windowed variant: only pairs with |g_i - g_j - h| <= w.

    The inner ranges come from searchsorted on the sorted table; the work is
    proportional to the number of retained pairs.
    """
    gi = gam[i0:i1]
    lo = np.searchsorted(gam, gi - h - w, side="left")
    hi = np.searchsorted(gam, gi - h + w, side="right")
    cnt = hi - lo
    npairs = int(cnt.sum())
    if npairs == 0:
        return 0.0, 0
    total = 0.0
    budget = 4 * 1024 * 1024
    s = 0
    csum = np.concatenate([[0], np.cumsum(cnt)])
    while s < len(gi):
        e = s
        while e < len(gi) and csum[e + 1] - csum[s] <= budget:
            e += 1
        e = max(e, s + 1)
        c = cnt[s:e]
        starts = np.repeat(lo[s:e], c)
        offsets = np.arange(csum[e] - csum[s]) - np.repeat(csum[s:e] - csum[s], c)
        j = starts + offsets
        d = np.repeat(gi[s:e], c) - gam[j] - h
        total += float(np.sum(np.cos(d * logx) * 4.0 / (4.0 + d * d)))
        s = e
    return total, npairs


def z_rs_group(ts: np.ndarray, th: np.ndarray, nmain: int,
               tau: np.ndarray, p: np.ndarray, coeffs) -> np.ndarray:
    """Riemann-Siegel Z for points sharing the main-sum length nmain.

    Z = 2 sum_{n<=N} cos(th - t log n)/sqrt(n)
        + (-1)^{N+1} tau^{-1/4} sum_j C_j(2p-1) tau^{-j/2}.
    """
    n = np.arange(1, nmain + 1, dtype=np.float64)
    phases = th[:, None] - ts[:, None] * np.log(n)[None, :]
    main = 2.0 * (np.cos(phases) @ (1.0 / np.sqrt(n)))
    z = 2.0 * p - 1.0
    corr = np.zeros_like(ts)
    rt = 1.0 / np.sqrt(tau)
    scale = np.ones_like(ts)
    for c in coeffs:
        corr += _chebval(z, c) * scale
        scale *= rt
    sign = 1.0 if (nmain + 1) % 2 == 0 else -1.0
    return main + sign * tau**-0.25 * corr


def _chebval(z, c):
    b0 = np.zeros_like(z)
    b1 = np.zeros_like(z)
    for ck in c[::-1]:
        b0, b1 = 2.0 * z * b0 - b1 + ck, b0
    return b0 - z * b1


def z_em_batch(ts: np.ndarray, th: np.ndarray, bern: np.ndarray,
               ratio: float = 1.8) -> np.ndarray:
    """Euler-Maclaurin Z for an arbitrary batch of points.

    zeta(1/2+it) = sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2
                   + sum_k bern[k] (s)_{2k-1} N^{-s-2k+1},
    bern[k] = B_2k/(2k)!; N ~ ratio * t/(2pi) keeps the Bernoulli tail
    geometric with quotient (1/ratio)^2.
    """
    ts = np.asarray(ts, dtype=float)
    out = np.empty_like(ts)
    ns = np.ceil(ratio * ts / (2.0 * np.pi)).astype(np.int64) + 12
    nmax = int(ns.max())
    n = np.arange(1, nmax, dtype=np.float64)
    logn = np.log(n)
    mask = n[None, :] < ns[:, None]
    s = 0.5 + 1j * ts
    terms = np.exp(-np.outer(s, logn))
    main = np.sum(np.where(mask, terms, 0.0), axis=1)
    nf = ns.astype(np.float64)
    tail = nf ** (1.0 - s) / (s - 1.0) + 0.5 * nf**-s
    corr = np.zeros_like(s)
    fac = np.ones_like(s)
    npow = nf ** (1.0 - s)
    inv_n2 = 1.0 / (nf * nf)
    for k in range(1, len(bern)):
        fac = fac * s if k == 1 else fac * (s + (2 * k - 3)) * (s + (2 * k - 2))
        npow = npow * inv_n2
        corr = corr + bern[k] * fac * npow
    zeta = main + tail + corr
    out[:] = np.real(np.exp(1j * th) * zeta)
    return out
