"""Vectorized mask-table sweeps over all labeled graphs of a small order.

Every simple graph on n vertices is one integer mask over the C(n,2) edge
bits in graph6 column-major order, so a full labeled enumeration is just
``arange(2**E)`` plus bitwise arithmetic. This module computes per-mask
degree data, connectivity, triangle-freeness, the sigma indices, and (in
chunks) both spectra, and is the fast engine behind the order-6/7 searches;
the stream-based enumerator in :mod:`sigmat.oracle` is the reference
implementation it is validated against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import pair_order


@dataclass
class MaskTable:
    """Columns for the connected graphs in one mask range."""

    n: int
    masks: np.ndarray        # uint32, ascending
    deg: np.ndarray          # (n, k) uint8, degree of vertex v in column order
    m: np.ndarray            # int64 edge counts
    sigma_t: np.ndarray      # int64
    sigma: np.ndarray        # int64
    triangle_free: np.ndarray  # bool
    max_deg: np.ndarray      # int64
    min_deg: np.ndarray      # int64
    max_count: np.ndarray    # int64, multiplicity of the max degree
    gen_kpartite: np.ndarray  # bool: non-adjacent pairs all have equal degree


def connected_table(n: int, mask_lo: int = 0, mask_hi: int | None = None) -> MaskTable:
    """Build the table for every connected mask in [mask_lo, mask_hi)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > 16:
        raise ValueError(f"mask tables are for small orders, got n={n}")
    pairs = pair_order(n)
    nedges = len(pairs)
    if mask_hi is None:
        mask_hi = 1 << nedges
    masks = np.arange(mask_lo, mask_hi, dtype=np.uint32)

    bits = [((masks >> np.uint32(e)) & np.uint32(1)).astype(np.uint8) for e in range(nedges)]

    deg = np.zeros((n, masks.size), dtype=np.uint8)
    adjm = np.zeros((n, masks.size), dtype=np.uint16)
    for e, (i, j) in enumerate(pairs):
        deg[i] += bits[e]
        deg[j] += bits[e]
        adjm[i] |= bits[e].astype(np.uint16) << np.uint16(j)
        adjm[j] |= bits[e].astype(np.uint16) << np.uint16(i)

    reached = np.ones(masks.size, dtype=np.uint16)
    for _ in range(n - 1):
        for v in range(n):
            member = ((reached >> np.uint16(v)) & np.uint16(1)).astype(bool)
            reached |= np.where(member, adjm[v], np.uint16(0))
    connected = reached == np.uint16((1 << n) - 1)

    degw = deg.astype(np.int64)
    m = degw.sum(axis=0) >> 1
    m1 = (degw * degw).sum(axis=0)
    sigma_t = n * m1 - 4 * m * m

    sigma = np.zeros(masks.size, dtype=np.int64)
    tri = np.zeros(masks.size, dtype=bool)
    bad_pair = np.zeros(masks.size, dtype=bool)
    for e, (i, j) in enumerate(pairs):
        present = bits[e].astype(bool)
        diff = degw[i] - degw[j]
        sigma += np.where(present, diff * diff, 0)
        tri |= present & ((adjm[i] & adjm[j]) != 0)
        bad_pair |= ~present & (deg[i] != deg[j])

    keep = connected
    return MaskTable(
        n=n,
        masks=masks[keep],
        deg=deg[:, keep],
        m=m[keep],
        sigma_t=sigma_t[keep],
        sigma=sigma[keep],
        triangle_free=~tri[keep],
        max_deg=degw[:, keep].max(axis=0),
        min_deg=degw[:, keep].min(axis=0),
        max_count=(deg[:, keep] == deg[:, keep].max(axis=0)).sum(axis=0).astype(np.int64),
        gen_kpartite=~bad_pair[keep],
    )


def batched_spectra(n: int, masks: np.ndarray, chunk: int = 65536):
    """Energy, second-smallest and largest Laplacian eigenvalues for every
    mask, via chunked dense symmetric eigensolves.

    Returns (energy, mu2, mu_max) float64 arrays aligned with ``masks``.
    For n == 1 mu2 is reported as NaN.
    """
    pairs = pair_order(n)
    energy = np.empty(masks.size, dtype=np.float64)
    mu2 = np.empty(masks.size, dtype=np.float64)
    mu_max = np.empty(masks.size, dtype=np.float64)
    for lo in range(0, masks.size, chunk):
        part = masks[lo:lo + chunk]
        a = np.zeros((part.size, n, n), dtype=np.float64)
        for e, (i, j) in enumerate(pairs):
            bit = ((part >> np.uint32(e)) & np.uint32(1)).astype(np.float64)
            a[:, i, j] = bit
            a[:, j, i] = bit
        adj_eigs = np.linalg.eigvalsh(a)
        energy[lo:lo + part.size] = np.abs(adj_eigs).sum(axis=1)
        degs = a.sum(axis=2)
        lap = -a
        idx = np.arange(n)
        lap[:, idx, idx] = degs
        lap_eigs = np.linalg.eigvalsh(lap)
        mu2[lo:lo + part.size] = lap_eigs[:, 1] if n >= 2 else np.nan
        mu_max[lo:lo + part.size] = lap_eigs[:, -1]
    return energy, mu2, mu_max
