"""Golden-section maximisation, vectorised over many brackets at once."""
from __future__ import annotations

import numpy as np

INVPHI = (np.sqrt(5.0) - 1.0) / 2.0


def golden_max(f, lo, hi, tol: float, max_iter: int = 200,
               curvature: float | None = None, floor: float = 0.0):
    """Maximise a unimodal ``f`` on each bracket ``[lo[i], hi[i]]``.

    ``f`` takes a 1-d array of abscissae and returns the values; it is called
    once per iteration with one point per still-active bracket, which lets
    the caller batch expensive evaluations. Returns ``(x, fx)`` with the best
    interior point found in every bracket.

    With ``curvature = K`` the caller promises ``f'' >= -K``; a bracket then
    stops early once its best value plus ``K w^2 / 8`` (``w`` its width)
    cannot beat the best value seen anywhere by more than ``floor``. The
    bracket holding that best value always runs down to ``tol``.
    """
    a = np.atleast_1d(np.asarray(lo, dtype=float)).copy()
    b = np.atleast_1d(np.asarray(hi, dtype=float)).copy()
    c = b - INVPHI * (b - a)
    d = a + INVPHI * (b - a)
    fc = np.asarray(f(c), dtype=float)
    fd = np.asarray(f(d), dtype=float)
    for _ in range(max_iter):
        width = b - a
        keep = width > tol
        if curvature is not None:
            top = np.maximum(fc, fd)
            lead = int(np.argmax(top))
            hopeful = top + curvature * width * width / 8 > top[lead] + floor
            hopeful[lead] = True
            keep &= hopeful
        active = np.flatnonzero(keep)
        if active.size == 0:
            break
        left = fc[active] >= fd[active]
        li, ri = active[left], active[~left]
        # max lies in [a, d]: old c becomes the new d
        b[li] = d[li]
        d[li] = c[li]
        fd[li] = fc[li]
        c[li] = b[li] - INVPHI * (b[li] - a[li])
        # max lies in [c, b]: old d becomes the new c
        a[ri] = c[ri]
        c[ri] = d[ri]
        fc[ri] = fd[ri]
        d[ri] = a[ri] + INVPHI * (b[ri] - a[ri])
        xs = np.concatenate([c[li], d[ri]])
        vals = np.asarray(f(xs), dtype=float)
        fc[li] = vals[: li.size]
        fd[ri] = vals[li.size:]
    take_c = fc >= fd
    return np.where(take_c, c, d), np.where(take_c, fc, fd)
