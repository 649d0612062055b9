"""In-repo eigenvalue oracles: implicit-shift QL and complex inverse iteration.

These are deliberately self-contained so every closed-form level in the
package can be cross-checked against an independent numerical route.  The
inner loops are jit-compiled when numba is importable and fall back to the
same pure-Python code otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DimensionError, SingularPivotError, UnsupportedError
from .operators import OperatorMatrix

try:
    from numba import njit
except ImportError:  # pragma: no cover - exercised only without numba
    def njit(*args, **kwargs):
        def wrap(func):
            return func
        return wrap

MAX_QL_SWEEPS = 50
_EPS = 2.220446049250313e-16


@njit(cache=True)
def _ql_eigenvalues(d, e):
    """Implicit-shift QL on (diagonal d, subdiagonal e); returns -1 or the stuck index.

    Eigenvalues only, no vector accumulation; d is overwritten, e is workspace
    of the same length as d with e[-1] unused.
    """
    n = d.shape[0]
    for l in range(n):
        sweeps = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= _EPS * dd:
                    break
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > MAX_QL_SWEEPS:
                return l
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            if g >= 0.0:
                g = d[m] - d[l] + e[l] / (g + r)
            else:
                g = d[m] - d[l] + e[l] / (g - r)
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if not underflow:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    return -1


@njit(cache=True)
def _thomas_solve(sub, diag, sup, rhs, x, work_c, work_y, cutoff):
    """Unpivoted tridiagonal elimination; returns the index of a tiny pivot or -1."""
    n = diag.shape[0]
    piv = diag[0]
    if abs(piv) < cutoff:
        return 0
    work_y[0] = rhs[0] / piv
    if n > 1:
        work_c[0] = sup[0] / piv
    for i in range(1, n):
        piv = diag[i] - sub[i - 1] * work_c[i - 1]
        if abs(piv) < cutoff:
            return i
        if i < n - 1:
            work_c[i] = sup[i] / piv
        work_y[i] = (rhs[i] - sub[i - 1] * work_y[i - 1]) / piv
    x[n - 1] = work_y[n - 1]
    for i in range(n - 2, -1, -1):
        x[i] = work_y[i] - work_c[i] * x[i + 1]
    return -1


@dataclass(frozen=True)
class EigenResult:
    """One converged eigenpair with its certificate."""

    eigenvalue: complex
    eigenvector: np.ndarray
    residual_norm: float
    iterations: int
    converged: bool


def symtridiag_eigenvalues(diag, offdiag) -> np.ndarray:
    """All eigenvalues of a real symmetric tridiagonal matrix, ascending.

    Deterministic: fixed sweep order, no randomization, so identical inputs
    give bit-identical outputs.
    """
    d = np.array(diag, dtype=np.float64, copy=True)
    off = np.asarray(offdiag, dtype=np.float64)
    if d.ndim != 1 or d.size < 1:
        raise DimensionError("diagonal must be a non-empty 1-d array")
    if off.shape != (d.size - 1,):
        raise DimensionError(
            f"offdiagonal length {off.shape} does not match diagonal length {d.size}"
        )
    e = np.zeros_like(d)
    e[:-1] = off
    stuck = _ql_eigenvalues(d, e)
    if stuck >= 0:
        raise ConvergenceError(
            f"eigenvalue {stuck} still moving after {MAX_QL_SWEEPS} implicit-shift sweeps"
        )
    d.sort()
    return d


def _start_vector(n: int) -> np.ndarray:
    # all-ones with a fixed ripple so no eigenvector is accidentally orthogonal
    v = 1.0 + 0.01 * np.sin(1.0 + np.arange(n))
    return (v / np.linalg.norm(v)).astype(complex)


def rayleigh_quotient(matrix: OperatorMatrix, v: np.ndarray) -> complex:
    """(v* M v) / (v* v) for any storage kind."""
    w = np.asarray(v, dtype=complex)
    if w.shape != (matrix.dim,):
        raise DimensionError(f"vector length {w.shape} does not match dim {matrix.dim}")
    nrm2 = np.vdot(w, w)
    if nrm2 == 0:
        raise DimensionError("rayleigh quotient of the zero vector")
    return complex(np.vdot(w, matrix.matvec(w)) / nrm2)


def inverse_iteration(
    matrix: OperatorMatrix,
    shift: complex,
    tol: float = 1e-8,
    max_iter: int = 100,
) -> EigenResult:
    """Converge to the eigenpair of a complex tridiagonal matrix nearest the shift.

    Fixed-shift iteration with a Rayleigh-quotient eigenvalue readout;
    convergence means the absolute residual ||M v - lambda v|| (unit v) drops
    below tol.  A shift landing on an eigenvalue makes the elimination break
    down; the shift is then nudged by a 1e-12-scale perturbation, growing
    tenfold over at most three retries.

    The linear solves are unpivoted, which is accurate for the diagonally
    dominant Schrodinger-style matrices this package builds; matrices whose
    shifted diagonal wanders through zero mid-elimination can stall at a
    solve-accuracy floor and end in ConvergenceError instead.
    """
    if matrix.bandwidth != 1:
        raise UnsupportedError("inverse iteration expects a tridiagonal matrix")
    sub, diag, sup = matrix.bands
    n = matrix.dim
    scale = float(max(np.max(np.abs(diag)), np.max(np.abs(sub), initial=0.0), 1.0))
    cutoff = 1e-300

    x = np.empty(n, dtype=complex)
    work_c = np.empty(max(n - 1, 1), dtype=complex)
    work_y = np.empty(n, dtype=complex)

    for attempt in range(4):
        sigma = shift + (1e-12 * scale * 10.0**(attempt - 1) if attempt else 0.0)
        shifted = diag - sigma
        v = _start_vector(n)
        eigenvalue = complex(shift)
        residual = math.inf
        broke = False
        for iteration in range(1, max_iter + 1):
            status = _thomas_solve(sub, shifted, sup, v, x, work_c, work_y, cutoff)
            if status >= 0 or not np.all(np.isfinite(x)):
                broke = True
                break
            v = x / np.linalg.norm(x)
            mv = matrix.matvec(v)
            eigenvalue = complex(np.vdot(v, mv))
            residual = float(np.linalg.norm(mv - eigenvalue * v))
            if residual <= tol:
                return EigenResult(eigenvalue, v.copy(), residual, iteration, True)
        if broke:
            continue
        raise ConvergenceError(
            f"inverse iteration at shift {shift} stalled: residual {residual:.3e} "
            f"after {max_iter} iterations (tol {tol:.1e})"
        )
    raise SingularPivotError(
        f"tridiagonal elimination kept breaking down near shift {shift} after 3 retries"
    )
