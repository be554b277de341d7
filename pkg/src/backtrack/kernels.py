"""Hot numeric kernels: bilinear patch sampling and correlation response maps.

Each kernel has a pure-numpy implementation and a numba ``@njit`` twin.
The numba twins are used when numba imports cleanly and the environment
variable ``BACKTRACK_PURE_NUMPY`` is unset (any of ``1/true/yes`` forces
the numpy path). ``BACKEND`` reports which path is active.

``zncc_response_fft`` is the transform-domain variant of the direct
correlation kernel; it is always numpy (FFT) and must agree with the
direct kernel within 1e-5, which the test suite enforces.
"""

from __future__ import annotations

import os

import numpy as np

PURE_NUMPY_ENV = "BACKTRACK_PURE_NUMPY"


def _bilinear_sample_impl(img, x0, y0, x1, y1, out_h, out_w):
    """Crop [x0,x1)x[y0,y1) from img, bilinear, edge-replicated, pixel-center grid."""
    height, width = img.shape
    out = np.empty((out_h, out_w))
    sx = (x1 - x0) / out_w
    sy = (y1 - y0) / out_h
    for i in range(out_h):
        yf = y0 + (i + 0.5) * sy - 0.5
        if yf < 0.0:
            yf = 0.0
        elif yf > height - 1.0:
            yf = height - 1.0
        yi = int(yf)
        if yi > height - 2:
            yi = height - 2 if height > 1 else 0
        fy = yf - yi
        for j in range(out_w):
            xf = x0 + (j + 0.5) * sx - 0.5
            if xf < 0.0:
                xf = 0.0
            elif xf > width - 1.0:
                xf = width - 1.0
            xi = int(xf)
            if xi > width - 2:
                xi = width - 2 if width > 1 else 0
            fx = xf - xi
            p00 = img[yi, xi]
            if width > 1:
                p01 = img[yi, xi + 1]
            else:
                p01 = p00
            if height > 1:
                p10 = img[yi + 1, xi]
                p11 = img[yi + 1, xi + 1] if width > 1 else p10
            else:
                p10 = p00
                p11 = p01
            top = p00 + fx * (p01 - p00)
            bot = p10 + fx * (p11 - p10)
            out[i, j] = top + fy * (bot - top)
    return out


def bilinear_sample_numpy(img, x0, y0, x1, y1, out_h, out_w):
    """Vectorized twin of the bilinear sampling kernel."""
    height, width = img.shape
    xs = x0 + (np.arange(out_w) + 0.5) * ((x1 - x0) / out_w) - 0.5
    ys = y0 + (np.arange(out_h) + 0.5) * ((y1 - y0) / out_h) - 0.5
    xs = np.clip(xs, 0.0, width - 1.0)
    ys = np.clip(ys, 0.0, height - 1.0)
    xi = np.minimum(xs.astype(np.int64), max(width - 2, 0))
    yi = np.minimum(ys.astype(np.int64), max(height - 2, 0))
    fx = xs - xi
    fy = ys - yi
    xj = np.minimum(xi + 1, width - 1)
    yj = np.minimum(yi + 1, height - 1)
    p00 = img[np.ix_(yi, xi)]
    p01 = img[np.ix_(yi, xj)]
    p10 = img[np.ix_(yj, xi)]
    p11 = img[np.ix_(yj, xj)]
    top = p00 + fx[None, :] * (p01 - p00)
    bot = p10 + fx[None, :] * (p11 - p10)
    return top + fy[:, None] * (bot - top)


def _zncc_direct_impl(search, tpl, eps):
    """Zero-normalized cross-correlation at every valid alignment.

    Windows (or templates) whose per-pixel variance falls at or below
    ``eps`` produce response 0 there.
    """
    sh, sw = search.shape
    th, tw = tpl.shape
    oh = sh - th + 1
    ow = sw - tw + 1
    out = np.zeros((oh, ow))
    n = th * tw
    tmean = 0.0
    for u in range(th):
        for v in range(tw):
            tmean += tpl[u, v]
    tmean /= n
    ss_t = 0.0
    for u in range(th):
        for v in range(tw):
            d = tpl[u, v] - tmean
            ss_t += d * d
    if ss_t <= eps * n:
        return out
    for i in range(oh):
        for j in range(ow):
            s = 0.0
            s2 = 0.0
            num = 0.0
            for u in range(th):
                for v in range(tw):
                    p = search[i + u, j + v]
                    s += p
                    s2 += p * p
                    num += p * (tpl[u, v] - tmean)
            ss_w = s2 - s * s / n
            if ss_w > eps * n:
                out[i, j] = num / np.sqrt(ss_w * ss_t)
    return out


def zncc_direct_numpy(search, tpl, eps):
    """Vectorized twin of the direct correlation kernel (sliding windows)."""
    search = np.asarray(search, dtype=np.float64)
    tpl = np.asarray(tpl, dtype=np.float64)
    th, tw = tpl.shape
    n = th * tw
    t0 = tpl - tpl.mean()
    ss_t = float(np.sum(t0 * t0))
    oh = search.shape[0] - th + 1
    ow = search.shape[1] - tw + 1
    if ss_t <= eps * n:
        return np.zeros((oh, ow))
    win = np.lib.stride_tricks.sliding_window_view(search, (th, tw))
    num = np.einsum("ijkl,kl->ij", win, t0, optimize=True)
    s1 = _window_sums(search, th, tw)
    s2 = _window_sums(search * search, th, tw)
    ss_w = s2 - s1 * s1 / n
    out = np.zeros((oh, ow))
    ok = ss_w > eps * n
    out[ok] = num[ok] / np.sqrt(ss_w[ok] * ss_t)
    return out


def _window_sums(arr, th, tw):
    """Sum of every th x tw window via a padded integral image."""
    c = np.cumsum(np.cumsum(arr, axis=0, dtype=np.float64), axis=1)
    c = np.pad(c, ((1, 0), (1, 0)))
    return c[th:, tw:] - c[:-th, tw:] - c[th:, :-tw] + c[:-th, :-tw]


def zncc_response_fft(search, tpl, eps):
    """Transform-domain ZNCC, identical semantics to the direct kernel."""
    search = np.asarray(search, dtype=np.float64)
    tpl = np.asarray(tpl, dtype=np.float64)
    sh, sw = search.shape
    th, tw = tpl.shape
    n = th * tw
    oh = sh - th + 1
    ow = sw - tw + 1
    t0 = tpl - tpl.mean()
    ss_t = float(np.sum(t0 * t0))
    if ss_t <= eps * n:
        return np.zeros((oh, ow))
    s0 = search - search.mean()
    tpad = np.zeros_like(s0)
    tpad[:th, :tw] = t0
    # circular correlation; offsets 0..oh-1 never wrap, so the crop is exact
    num = np.fft.irfft2(np.fft.rfft2(s0) * np.conj(np.fft.rfft2(tpad)), s=(sh, sw))
    num = num[:oh, :ow]
    s1 = _window_sums(search, th, tw)
    s2 = _window_sums(search * search, th, tw)
    ss_w = s2 - s1 * s1 / n
    out = np.zeros((oh, ow))
    ok = ss_w > eps * n
    out[ok] = num[ok] / np.sqrt(ss_w[ok] * ss_t)
    return out


def _pick_backend():
    if os.environ.get(PURE_NUMPY_ENV, "").lower() in ("1", "true", "yes"):
        return "numpy"
    try:
        import numba  # noqa: F401
    except ImportError:
        return "numpy"
    return "numba"


BACKEND = _pick_backend()

if BACKEND == "numba":
    from numba import njit

    bilinear_sample_numba = njit(cache=True)(_bilinear_sample_impl)
    zncc_direct_numba = njit(cache=True)(_zncc_direct_impl)
    bilinear_sample = bilinear_sample_numba
    zncc_response_direct = zncc_direct_numba
else:
    bilinear_sample_numba = None
    zncc_direct_numba = None
    bilinear_sample = bilinear_sample_numpy
    zncc_response_direct = zncc_direct_numpy
