# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled twins of the hot kernels in _kernels_py.py.

Scalar loops over pairs and main sums; the pure-numpy fallback carries the
same signatures.  See benchmarks/bench_kernels.py for the speed comparison.
"""

from libc.math cimport cos, sin, exp, log, sqrt, ceil, M_PI

BACKEND = "cython"


def pair_sum_exact(double[::1] gam, double logx, double h, Py_ssize_t i0, Py_ssize_t i1):
    cdef Py_ssize_t n = gam.shape[0]
    cdef Py_ssize_t i, j
    cdef double total = 0.0, d, gi
    with nogil:
        for i in range(i0, i1):
            gi = gam[i]
            for j in range(n):
                d = gi - gam[j] - h
                total += cos(d * logx) * 4.0 / (4.0 + d * d)
    return total, (i1 - i0) * n


def pair_sum_window(double[::1] gam, double logx, double h, double w,
                    Py_ssize_t i0, Py_ssize_t i1):
    cdef Py_ssize_t n = gam.shape[0]
    cdef Py_ssize_t i, j, jlo = 0, jhi = 0
    cdef double total = 0.0, d, gi, lo_edge, hi_edge
    cdef long long npairs = 0
    with nogil:
        # two-pointer sweep: both edges move monotonically with i
        for i in range(i0, i1):
            gi = gam[i]
            lo_edge = gi - h - w
            hi_edge = gi - h + w
            while jlo < n and gam[jlo] < lo_edge:
                jlo += 1
            if jhi < jlo:
                jhi = jlo
            while jhi < n and gam[jhi] <= hi_edge:
                jhi += 1
            for j in range(jlo, jhi):
                d = gi - gam[j] - h
                total += cos(d * logx) * 4.0 / (4.0 + d * d)
            npairs += jhi - jlo
    return total, int(npairs)


def z_rs_group(double[::1] ts, double[::1] th, Py_ssize_t nmain,
               double[::1] tau, double[::1] p, coeffs):
    import numpy as np
    out_arr = np.empty(ts.shape[0])
    cdef double[::1] out = out_arr
    cdef double[::1] c0 = coeffs[0]
    cdef double[::1] c1 = coeffs[1]
    cdef double[::1] c2 = coeffs[2]
    cdef double[::1] c3 = coeffs[3]
    cdef Py_ssize_t m = ts.shape[0]
    cdef Py_ssize_t i, j
    cdef double main, z, corr, rt, scale, t, theta, sign
    sign = 1.0 if (nmain + 1) % 2 == 0 else -1.0
    with nogil:
        for i in range(m):
            t = ts[i]
            theta = th[i]
            main = 0.0
            for j in range(1, nmain + 1):
                main += cos(theta - t * log(<double> j)) / sqrt(<double> j)
            main *= 2.0
            z = 2.0 * p[i] - 1.0
            rt = 1.0 / sqrt(tau[i])
            corr = _clenshaw(z, c0)
            scale = rt
            corr += _clenshaw(z, c1) * scale
            scale *= rt
            corr += _clenshaw(z, c2) * scale
            scale *= rt
            corr += _clenshaw(z, c3) * scale
            out[i] = main + sign * corr / sqrt(sqrt(tau[i]))
    return out_arr


cdef inline double _clenshaw(double z, double[::1] c) noexcept nogil:
    cdef double b0 = 0.0, b1 = 0.0, tmp
    cdef Py_ssize_t k
    for k in range(c.shape[0] - 1, -1, -1):
        tmp = 2.0 * z * b0 - b1 + c[k]
        b1 = b0
        b0 = tmp
    return b0 - z * b1


def z_em_batch(double[::1] ts, double[::1] th, double[::1] bern, double ratio=1.8):
    import numpy as np
    out_arr = np.empty(ts.shape[0])
    cdef double[::1] out = out_arr
    cdef Py_ssize_t m = ts.shape[0]
    cdef Py_ssize_t i, j, k, bigk = bern.shape[0]
    cdef Py_ssize_t nem
    cdef double t, theta, logn, rs2
    cdef double complex s, mainz, tailz, corr, fac, npow, zv
    cdef double nf
    with nogil:
        for i in range(m):
            t = ts[i]
            theta = th[i]
            s = 0.5 + 1j * t
            nem = <Py_ssize_t> ceil(ratio * t / (2.0 * M_PI)) + 12
            mainz = 0.0
            for j in range(1, nem):
                logn = log(<double> j)
                mainz += exp(-0.5 * logn) * (cos(t * logn) - 1j * sin(t * logn))
            nf = <double> nem
            tailz = nf ** (1.0 - s) / (s - 1.0) + 0.5 * nf ** (-s)
            corr = 0.0
            fac = 1.0
            npow = nf ** (1.0 - s)
            rs2 = 1.0 / (nf * nf)
            for k in range(1, bigk):
                if k == 1:
                    fac = s
                else:
                    fac = fac * (s + <double> (2 * k - 3)) * (s + <double> (2 * k - 2))
                npow = npow * rs2
                corr = corr + bern[k] * fac * npow
            zv = mainz + tailz + corr
            out[i] = (zv * (cos(theta) + 1j * sin(theta))).real
    return out_arr
