"""Acquire, validate, and serve ordinates of the Riemann zeta zeros.

Zero ordinates come from either a text file (one ascending decimal per
line, the convention of the public datasets) or from direct computation.
Computation proceeds by Gram blocks: a block delimited by two "good" Gram
points (where (-1)^k Z(g_k) > 0) carries exactly as many zeros as Gram
intervals, which holds throughout the desk-scale range (violations of
Rosser's rule start near the 13,999,826th Gram point, far beyond the 1e5
cap).  Every zero is bracketed by sign changes and bisected; a zero that
cannot be separated raises instead of being skipped, since a silent gap
would corrupt every pair statistic downstream.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import zeta_eval

DESK_SCALE_CAP = 100_000

TWO_PI = 2.0 * math.pi

# scan/refine parameters
_MAX_SPLIT_LEVEL = 14
_BISECT_TARGET = 1e-11
_SUSPECT_SLOPE = 0.25  # |Z'| below this gets an Euler-Maclaurin polish

__all__ = ["ZeroTable", "DESK_SCALE_CAP", "load_zeros", "compute_zeros",
           "validate_count", "export_zeros"]


@dataclass(frozen=True)
class ZeroTable:
    """Immutable sorted ordinates gamma in (0, t_max] with provenance."""

    ordinates: np.ndarray
    t_max: float
    source: str

    def __post_init__(self):
        ords = np.asarray(self.ordinates, dtype=float)
        ords.setflags(write=False)
        object.__setattr__(self, "ordinates", ords)
        if len(ords):
            if ords[0] <= 0.0:
                raise ValueError("ordinates must be positive")
            if np.any(np.diff(ords) <= 0.0):
                raise ValueError("ordinates must be strictly increasing")
            if self.t_max > ords[-1] + 1e-9 and self.source == "computed":
                raise ValueError("t_max beyond computed range")

    @property
    def count(self) -> int:
        return len(self.ordinates)

    def up_to(self, t: float) -> np.ndarray:
        """All ordinates <= t (t must not exceed coverage)."""
        if t > self.t_max + 1e-9:
            raise ValueError(f"T={t} exceeds table coverage t_max={self.t_max}")
        return self.ordinates[: int(np.searchsorted(self.ordinates, t, side="right"))]


def load_zeros(path, t_max: float = math.inf) -> ZeroTable:
    """Read ordinates <= t_max from a text file, one decimal per line."""
    path = Path(path)
    try:
        raw = path.read_text()
    except OSError as exc:
        raise OSError(f"cannot read zero file {path}: {exc}") from exc
    vals = []
    for ln, line in enumerate(raw.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            vals.append(float(line))
        except ValueError as exc:
            raise ValueError(f"{path}:{ln}: not a decimal ordinate: {line!r}") from exc
    if not vals:
        raise ValueError(f"{path}: no ordinates")
    arr = np.asarray(vals, dtype=float)
    if np.any(arr <= 0.0):
        raise ValueError(f"{path}: non-positive ordinate (corrupt dataset)")
    if np.any(np.diff(arr) < 0.0):
        raise ValueError(f"{path}: ordinates not ascending (corrupt dataset)")
    arr = np.unique(arr)
    arr = arr[arr <= t_max]
    if len(arr) == 0:
        raise ValueError(f"{path}: no ordinates at or below t_max={t_max}")
    eff_tmax = float(min(t_max, arr[-1]))
    return ZeroTable(ordinates=arr, t_max=eff_tmax, source=str(path))


def export_zeros(table: ZeroTable, path) -> None:
    """Write the table in the same text format (shortest round-trip decimals)."""
    path = Path(path)
    with path.open("w") as fh:
        for g in table.ordinates:
            fh.write(f"{float(g)!r}\n")


def compute_zeros(n: int, cap: int = DESK_SCALE_CAP) -> ZeroTable:
    """First n zero ordinates, each accurate to better than 1e-8.

    Raises if two zeros cannot be separated within a Gram block (bracketing
    fault) rather than ever skipping one.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n > cap:
        raise ValueError(f"n={n} exceeds the desk-scale cap {cap}; "
                         "pass a larger cap explicitly to override")
    if n == 0:
        return ZeroTable(ordinates=np.empty(0), t_max=0.0, source="computed")

    k_hi = n + 8
    ks = np.arange(0, k_hi + 1)
    g = zeta_eval.gram_points(ks)
    zg = zeta_eval.z_batch(g)
    good = (np.where(ks % 2 == 0, zg, -zg) > 0.0) & (np.abs(zg) > 1e-9)
    good_idx = np.nonzero(good)[0]
    if len(good_idx) < 2:
        raise RuntimeError("no usable Gram points found")

    blocks = []  # (t_lo, t_hi, expected_count)
    k0 = int(good_idx[0])
    blocks.append((10.0, float(g[k0]), k0 + 1))
    for a, b in zip(good_idx[:-1], good_idx[1:]):
        blocks.append((float(g[a]), float(g[b]), int(b - a)))

    lo_list, hi_list, slope_list = [], [], []
    for t_lo, t_hi, want in blocks:
        res = _bracket_block(t_lo, t_hi, want)
        lo_list.append(res[0])
        hi_list.append(res[1])
        slope_list.append(res[2])
    lo = np.concatenate(lo_list)
    hi = np.concatenate(hi_list)
    slope = np.concatenate(slope_list)

    gam = _bisect(lo, hi)
    gam = _polish_suspects(gam, slope)
    gam = gam[:n]
    if len(gam) < n:
        raise RuntimeError("Gram sweep produced fewer zeros than requested")
    table = ZeroTable(ordinates=gam, t_max=float(gam[-1]), source="computed")
    report = validate_count(table)
    if not report["ok"]:
        raise RuntimeError(f"zero count deviates from the counting function: {report}")
    return table


def _bracket_block(t_lo: float, t_hi: float, want: int):
    """Sign-change brackets for exactly `want` zeros inside [t_lo, t_hi]."""
    for level in range(2, _MAX_SPLIT_LEVEL):
        m = want * (1 << level) + 1
        ts = np.linspace(t_lo, t_hi, m)
        zs = zeta_eval.z_batch(ts)
        flips = np.nonzero(np.signbit(zs[:-1]) != np.signbit(zs[1:]))[0]
        if len(flips) == want:
            slope = (zs[flips + 1] - zs[flips]) / (ts[flips + 1] - ts[flips])
            return ts[flips], ts[flips + 1], slope
        if len(flips) > want:
            raise RuntimeError(
                f"{len(flips)} sign changes where {want} zeros expected in "
                f"[{t_lo:.6f}, {t_hi:.6f}]: bracketing fault")
    raise RuntimeError(
        f"failed to separate {want} zeros in [{t_lo:.6f}, {t_hi:.6f}] "
        f"(close pair beyond grid resolution); aborting rather than skipping")


def _bisect(lo: np.ndarray, hi: np.ndarray) -> np.ndarray:
    sign_lo = np.signbit(zeta_eval.z_batch(lo))
    lo = lo.copy()
    hi = hi.copy()
    for _ in range(64):
        if float(np.max(hi - lo)) <= _BISECT_TARGET:
            break
        mid = 0.5 * (lo + hi)
        same = np.signbit(zeta_eval.z_batch(mid)) == sign_lo
        lo = np.where(same, mid, lo)
        hi = np.where(same, hi, mid)
    return 0.5 * (lo + hi)


def _polish_suspects(gam: np.ndarray, slope: np.ndarray) -> np.ndarray:
    """Newton-polish (with the Euler-Maclaurin evaluator) any zero whose
    slope estimate is small: those are the close pairs where the fast
    evaluator's residual error is least comfortable."""
    suspects = np.nonzero((np.abs(slope) < _SUSPECT_SLOPE)
                          & (gam > zeta_eval.EM_SWITCH))[0]
    if len(suspects) == 0:
        return gam
    out = gam.copy()
    ts = gam[suspects]
    step = 1e-5
    zp = zeta_eval.z_em(ts + step)
    zm = zeta_eval.z_em(ts - step)
    z0 = zeta_eval.z_em(ts)
    deriv = (zp - zm) / (2.0 * step)
    ok = np.abs(deriv) > 1e-12
    out[suspects[ok]] = ts[ok] - z0[ok] / deriv[ok]
    return out


def validate_count(table: ZeroTable) -> dict:
    """Data-integrity report: observed count of ordinates <= t_max against
    the counting function (t/2pi) log(t/(2pi e)) + 7/8; |deviation| > 2
    flags corrupt or missing data."""
    t = float(table.t_max)
    if t > 0.0:
        predicted = (t / TWO_PI) * math.log(t / (TWO_PI * math.e)) + 7.0 / 8.0
    else:
        predicted = 0.0
    observed = int(np.searchsorted(table.ordinates, t, side="right"))
    deviation = observed - predicted
    return {
        "t_max": t,
        "observed_count": observed,
        "predicted_count": predicted,
        "deviation": deviation,
        "ok": bool(abs(deviation) <= 2.0),
        "source": table.source,
    }


def write_count_report(table: ZeroTable, path) -> dict:
    report = validate_count(table)
    Path(path).write_text(json.dumps(report, indent=2) + "\n")
    return report
