"""Row reduction over F_p on int64 arrays.

Two interchangeable backends: numba-compiled loops and a vectorized numpy
path. Set ``SRCORE_DISABLE_NUMBA=1`` to force the numpy path (also used when
numba is not importable).  All entries must lie in ``[0, p)`` and ``p`` must
satisfy ``p * p < 2**63`` so products never overflow.
"""
from __future__ import annotations

import os

import numpy as np

MAX_KERNEL_MODULUS = 3037000499  # floor(sqrt(2**63 - 1))

_DISABLED = os.environ.get("SRCORE_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}

try:
    if _DISABLED:
        raise ImportError("numba disabled by SRCORE_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]):
            return args[0]
        return lambda f: f


USE_NUMBA = HAVE_NUMBA


@njit(cache=True)
def _inv_mod(a, p):
    # extended Euclid; a is nonzero mod p
    t, new_t = 0, 1
    r, new_r = p, a % p
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    if t < 0:
        t += p
    return t


@njit(cache=True)
def _rref_inplace(R, p, reduced):
    m, n = R.shape
    pivots = np.empty(min(m, n), dtype=np.int64)
    r = 0
    for c in range(n):
        if r == m:
            break
        piv = -1
        for i in range(r, m):
            if R[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for k in range(c, n):
                tmp = R[r, k]
                R[r, k] = R[piv, k]
                R[piv, k] = tmp
        inv = _inv_mod(R[r, c], p)
        if inv != 1:
            for k in range(c, n):
                R[r, k] = (R[r, k] * inv) % p
        start = 0 if reduced else r + 1
        for i in range(start, m):
            if i == r:
                continue
            f = R[i, c]
            if f == 0:
                continue
            g = p - f
            for k in range(c, n):
                b = R[r, k]
                if b != 0:
                    R[i, k] = (R[i, k] + g * b) % p
        pivots[r] = c
        r += 1
    return pivots[:r]


@njit(cache=True)
def _rref_numba(A, p):
    R = A.copy()
    pivots = _rref_inplace(R, p, True)
    return R, pivots


@njit(cache=True)
def _rank_numba(A, p):
    R = A.copy()
    return _rref_inplace(R, p, False).shape[0]


@njit(cache=True)
def _batch_rref_numba(A, p):
    B = A.shape[0]
    R = A.copy()
    ranks = np.empty(B, dtype=np.int64)
    for b in range(B):
        ranks[b] = _rref_inplace(R[b], p, True).shape[0]
    return R, ranks


@njit(cache=True)
def _batch_rank_numba(A, p):
    B = A.shape[0]
    R = A.copy()
    ranks = np.empty(B, dtype=np.int64)
    for b in range(B):
        ranks[b] = _rref_inplace(R[b], p, False).shape[0]
    return ranks


def _pow_mod_vec(a: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.ones_like(a)
    base = a % p
    while e:
        if e & 1:
            result = result * base % p
        base = base * base % p
        e >>= 1
    return result


def _batch_rref_numpy(A: np.ndarray, p: int, reduced: bool = True):
    R = np.array(A, dtype=np.int64, copy=True)
    B, m, n = R.shape
    ranks = np.zeros(B, dtype=np.int64)
    if B == 0 or m == 0:
        return R, ranks
    rows = np.arange(m)
    for c in range(n):
        live = np.nonzero(ranks < m)[0]
        if live.size == 0:
            break
        col = R[live, :, c]
        mask = (col != 0) & (rows[None, :] >= ranks[live, None])
        has = mask.any(axis=1)
        if not has.any():
            continue
        sel = live[has]
        piv = mask[has].argmax(axis=1)
        top = ranks[sel]
        swap_from = R[sel, piv].copy()
        R[sel, piv] = R[sel, top]
        R[sel, top] = swap_from
        inv = _pow_mod_vec(R[sel, top, c], p - 2, p)
        R[sel, top] = R[sel, top] * inv[:, None] % p
        f = R[sel, :, c].copy()
        f[np.arange(sel.size), top] = 0
        if not reduced:
            f[rows[None, :] < top[:, None]] = 0
        pivot_rows = R[sel, top]
        R[sel] = (R[sel] + (p - f)[:, :, None] * pivot_rows[:, None, :]) % p
        ranks[sel] += 1
    return R, ranks


def _rref_single_numpy(A: np.ndarray, p: int, reduced: bool = True):
    """Row reduction of one matrix; only rows with a nonzero entry in the pivot column are touched."""
    R = np.array(A, dtype=np.int64, copy=True)
    m, n = R.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + nz[0]
        if k != r:
            R[[r, k]] = R[[k, r]]
        inv = pow(int(R[r, c]), p - 2, p)
        R[r, c:] = R[r, c:] * inv % p
        if reduced:
            targets = np.nonzero(R[:, c])[0]
            targets = targets[targets != r]
        else:
            targets = r + 1 + np.nonzero(R[r + 1 :, c])[0]
        if targets.size:
            f = p - R[targets, c]
            R[targets, c:] = (R[targets, c:] + f[:, None] * R[r, c:][None, :]) % p
        r += 1
    return R, r


def _pivots_of(R: np.ndarray, rank: int) -> np.ndarray:
    if rank == 0:
        return np.zeros(0, dtype=np.int64)
    return np.argmax(R[:rank] != 0, axis=1).astype(np.int64)


def rref_modp_numba(A: np.ndarray, p: int):
    R, piv = _rref_numba(np.ascontiguousarray(A, dtype=np.int64), np.int64(p))
    return R, piv


def rref_modp_numpy(A: np.ndarray, p: int):
    R, rank = _rref_single_numpy(np.asarray(A, dtype=np.int64), p)
    return R, _pivots_of(R, rank)


def rref_modp(A: np.ndarray, p: int):
    """Reduced row echelon form of ``A`` over F_p; returns ``(R, pivot_columns)``."""
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return A.copy(), np.zeros(0, dtype=np.int64)
    if USE_NUMBA:
        return rref_modp_numba(A, p)
    return rref_modp_numpy(A, p)


def rank_modp(A: np.ndarray, p: int) -> int:
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return 0
    if USE_NUMBA:
        return int(_rank_numba(np.ascontiguousarray(A), np.int64(p)))
    return _rref_single_numpy(A, p, reduced=False)[1]


def batch_rref_modp(A: np.ndarray, p: int):
    """RREF of every matrix in a ``(B, m, n)`` stack; returns ``(R, ranks)``."""
    A = np.asarray(A, dtype=np.int64)
    if A.shape[0] == 0 or A.shape[1] == 0 or A.shape[2] == 0:
        return A.copy(), np.zeros(A.shape[0], dtype=np.int64)
    if USE_NUMBA:
        return _batch_rref_numba(np.ascontiguousarray(A), np.int64(p))
    return _batch_rref_numpy(A, p)


def batch_rank_modp(A: np.ndarray, p: int) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    if A.shape[0] == 0 or A.shape[1] == 0 or A.shape[2] == 0:
        return np.zeros(A.shape[0], dtype=np.int64)
    if USE_NUMBA:
        return _batch_rank_numba(np.ascontiguousarray(A), np.int64(p))
    return _batch_rref_numpy(A, p, reduced=False)[1]


def set_backend(name: str) -> str:
    """Switch between ``"numba"`` and ``"numpy"`` at runtime; returns the previous name."""
    global USE_NUMBA
    previous = backend()
    if name == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend unavailable")
        USE_NUMBA = True
    elif name == "numpy":
        USE_NUMBA = False
    else:
        raise ValueError(f"unknown backend {name!r}")
    return previous


def backend() -> str:
    return "numba" if USE_NUMBA else "numpy"
