"""Numerical location of domination roots.

Pipeline for ``find_roots``:

1. divide out x**m exactly (m = min degree), giving the root 0 with
   multiplicity m;
2. split the rest into squarefree factors with exact integer arithmetic, so
   repeated roots never reach the float iteration;
3. run Aberth's simultaneous iteration on each factor in double precision,
   evaluating with compensated Horner;
4. report each root with the residual |f(z)| / (max|f_i| * max(1,|z|)**deg f),
   where f(z) is evaluated exactly at the binary value of z.

Nothing is random: starting points sit at fixed angles on circles whose
radii come from the Newton polygon of the coefficients, so results repeat
bit for bit.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from typing import Iterable, Sequence, TextIO

import numpy as np

from .errors import CapacityError, ConvergenceError, UndefinedDegreeError
from .graph import Graph
from .polynomial import Polynomial, squarefree_decomposition
from .recurrences import d_corona, d_kstar

DEFAULT_TOL = 1e-10
DEFAULT_EPS = 1e-8
MAX_FACTOR_DEGREE = 60
MAX_ITER = 500

_SPLITTER = 134217729.0  # 2**27 + 1
_U = 2.0 ** -53


@dataclass(frozen=True)
class RootSet:
    """Distinct roots of a polynomial with their multiplicities.

    ``residuals[i]`` is the normalised residual of ``roots[i]`` measured on
    the squarefree factor that produced it (0 for the exact root at 0).
    """

    roots: np.ndarray
    multiplicities: np.ndarray
    residuals: np.ndarray
    degree: int

    def __len__(self) -> int:
        return int(self.multiplicities.sum())

    def expanded(self) -> np.ndarray:
        """Every root repeated according to its multiplicity."""
        return np.repeat(self.roots, self.multiplicities)

    def max_residual(self) -> float:
        return float(self.residuals.max()) if len(self.residuals) else 0.0

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "roots": [
                {"re": _fmt(z.real), "im": _fmt(z.imag), "multiplicity": int(m), "residual": _fmt(r)}
                for z, m, r in zip(self.roots, self.multiplicities, self.residuals)
            ],
        }


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


# -- error-free transformations ----------------------------------------


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, al * bl - (((p - ah * bh) - al * bh) - ah * bl)


def _compensated_horner_rows(rows: np.ndarray, z: np.ndarray) -> np.ndarray:
    # rows: (k, d+1) real coefficients, highest degree first; z: (m,) complex
    zr, zi = z.real[None, :], z.imag[None, :]
    k, m = rows.shape[0], z.shape[0]
    sr = np.repeat(rows[:, :1], m, axis=1)
    si = np.zeros((k, m))
    cr = np.zeros((k, m))
    ci = np.zeros((k, m))
    zb = np.stack(np.broadcast_arrays(zr, zi, zi, zr))
    for j in range(1, rows.shape[1]):
        prod, err = _two_prod(np.stack([sr, si, sr, si]), zb)
        t, e5 = _two_sum(prod[0], -prod[1])
        new_r, e6 = _two_sum(t, rows[:, j:j + 1])
        new_i, e7 = _two_sum(prod[2], prod[3])
        err_r = err[0] - err[1] + e5 + e6
        err_i = err[2] + err[3] + e7
        cr, ci = cr * zr - ci * zi + err_r, cr * zi + ci * zr + err_i
        sr, si = new_r, new_i
    return (sr + cr) + 1j * (si + ci)


def compensated_horner(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    """Evaluate a real polynomial (highest degree first) at complex points.

    Each Horner step s*z + a is computed with error-free transformations
    and the rounding errors are run through a second Horner pass, which
    roughly doubles the working precision.
    """
    z = np.asarray(z, dtype=complex)
    return _compensated_horner_rows(np.asarray(coeffs, dtype=float)[None, :], z.ravel())[0].reshape(z.shape)


def _horner(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.full(z.shape, coeffs[0], dtype=complex)
    for a in coeffs[1:]:
        acc = acc * z + a
    return acc


def fujiwara_bound(coeffs: np.ndarray) -> float:
    """Upper bound on root moduli; coefficients highest degree first."""
    d = len(coeffs) - 1
    lead = abs(coeffs[0])
    terms = [abs(coeffs[i] / lead) ** (1.0 / i) for i in range(1, d)]
    terms.append(abs(coeffs[d] / (2 * lead)) ** (1.0 / d))
    return 2.0 * max(terms)


def initial_guesses(coeffs: np.ndarray) -> np.ndarray:
    """Starting points from the Newton polygon of log|coefficients|.

    Each edge of the upper convex hull of ``(i, log|a_i|)`` from i to j puts
    j - i points on a circle of radius ``|a_i / a_j| ** (1/(j-i))``, which
    tracks the root moduli much more closely than a single bound.
    Coefficients are highest degree first; the constant term is nonzero.
    """
    low_first = np.abs(coeffs[::-1])
    pts = [(i, math.log(c)) for i, c in enumerate(low_first) if c > 0]
    hull: list[tuple[int, float]] = []
    for p in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (x2 - x1) * (p[1] - y1) - (y2 - y1) * (p[0] - x1) >= 0:
                hull.pop()
            else:
                break
        hull.append(p)
    guesses = []
    for idx, ((i, yi), (j, yj)) in enumerate(zip(hull, hull[1:])):
        count = j - i
        radius = math.exp((yi - yj) / count)
        angles = 2 * np.pi * np.arange(count) / count + np.pi / (2 * count) + 0.7 * idx
        guesses.append(radius * np.exp(1j * angles))
    return np.concatenate(guesses)


def exact_residual(f: Polynomial, z: complex) -> float:
    """|f(z)| / (max|f_i| * max(1, |z|)**deg f) with f(z) computed exactly.

    z is taken at its exact binary value, written as (A + iB) / 2**e, and the
    evaluation runs on Gaussian integers.
    """
    ra, rb = float(z.real).as_integer_ratio(), float(z.imag).as_integer_ratio()
    e = max(ra[1], rb[1]).bit_length() - 1
    a = ra[0] << (e - (ra[1].bit_length() - 1))
    b = rb[0] << (e - (rb[1].bit_length() - 1))
    sr, si = 0, 0
    scale = 0
    for c in reversed(f.coeffs):
        sr, si = sr * a - si * b + (c << scale), sr * b + si * a
        scale += e
    denom = 1 << (e * f.degree)
    re, im = sr / denom, si / denom
    value = math.hypot(re, im)
    norm = float(f.max_norm()) * max(1.0, abs(z)) ** f.degree
    return value / norm


def _aberth(f: Polynomial, max_iter: int):
    coeffs = np.array([float(c) for c in reversed(f.coeffs)])
    coeffs = coeffs / coeffs[0]
    d = f.degree
    rows = np.vstack([coeffs, np.concatenate([[0.0], coeffs[:-1] * np.arange(d, 0, -1)])])
    abscoeffs = np.abs(coeffs)
    z = initial_guesses(coeffs)
    active = np.ones(d, dtype=bool)
    for _ in range(max_iter):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        za = z[idx]
        pv, dv = _compensated_horner_rows(rows, za)
        diff = za[:, None] - z[None, :]
        diff[np.arange(idx.size), idx] = 1.0
        inv = 1.0 / diff
        inv[np.arange(idx.size), idx] = 0.0
        s = inv.sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            ratio = pv / dv
            step = ratio / (1.0 - ratio * s)
        step = np.where(np.isfinite(step), step, 0.0)
        z[idx] = za - step
        absz = np.abs(za)
        # attainable accuracy of compensated evaluation is about u**2 * sum|a_i||z|**i
        floor_ = _U * _U * np.abs(_horner(abscoeffs, absz.astype(complex)))
        done = (np.abs(step) <= 4 * _U * np.maximum(absz, 1e-300)) | (np.abs(pv) <= floor_)
        active[idx[done]] = False
    residuals = np.array([exact_residual(f, complex(w)) for w in z])
    return z, residuals, bool(active.any())


def find_roots(p: Polynomial, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> RootSet:
    """All complex roots of ``p`` with multiplicities.

    Raises :class:`CapacityError` if a squarefree factor has degree above 60
    and :class:`ConvergenceError` (carrying the partial RootSet) if some
    root's residual stays above ``tol``.
    """
    if not p:
        raise UndefinedDegreeError("the zero polynomial has no root set")
    if p.degree < 1:
        raise ValueError("need a polynomial of degree at least 1")
    m = p.min_degree()
    roots: list[complex] = []
    mults: list[int] = []
    resid: list[float] = []
    if m:
        roots.append(0j)
        mults.append(m)
        resid.append(0.0)
    rest = p.shift_down(m)
    failed = False
    if rest.degree > 0:
        _, factors = squarefree_decomposition(rest)
        for f, mult in factors:
            if f.degree > MAX_FACTOR_DEGREE:
                raise CapacityError(
                    f"squarefree factor of degree {f.degree} exceeds {MAX_FACTOR_DEGREE}"
                )
            if f.degree == 1:
                z = np.array([complex(-f.coeffs[0] / f.coeffs[1])])
                r = np.array([exact_residual(f, complex(z[0]))])
            else:
                z, r, _ = _aberth(f, max_iter)
            roots.extend(complex(w) for w in z)
            mults.extend([mult] * len(z))
            resid.extend(float(v) for v in r)
            failed |= bool(np.any(r > tol))
    order = sorted(range(len(roots)), key=lambda i: (roots[i].real, roots[i].imag))
    rs = RootSet(
        roots=np.array([roots[i] for i in order], dtype=complex),
        multiplicities=np.array([mults[i] for i in order], dtype=int),
        residuals=np.array([resid[i] for i in order], dtype=float),
        degree=p.degree,
    )
    if failed:
        raise ConvergenceError(
            f"residual {rs.max_residual():.3g} above tolerance {tol:g}", partial=rs
        )
    return rs


def classify_real(rs: RootSet, eps: float = DEFAULT_EPS) -> tuple[int, list[float]]:
    """Count nonzero real roots (with multiplicity) and list them.

    A root is real when |im| <= eps * max(1, |re|) and zero when |z| <= eps.
    """
    count = 0
    reals = []
    for z, m in zip(rs.roots, rs.multiplicities):
        if abs(z) <= eps:
            continue
        if abs(z.imag) <= eps * max(1.0, abs(z.real)):
            count += int(m)
            reals.extend([float(z.real)] * int(m))
    return count, sorted(reals)


def dedupe(points: Iterable[complex], tol: float) -> list[complex]:
    """Collapse points closer than ``tol`` to one representative each."""
    out: list[complex] = []
    for z in sorted(points, key=lambda w: (w.real, w.imag)):
        if not any(abs(z - w) <= tol for w in out):
            out.append(z)
    return out


def root_sets_agree(a: RootSet, b: RootSet, tol: float = 1e-6) -> bool:
    """Same distinct roots up to ``tol``, ignoring multiplicities."""
    da = dedupe((complex(z) for z in a.roots), tol)
    db = dedupe((complex(z) for z in b.roots), tol)
    if len(da) != len(db):
        return False
    unused = list(db)
    for z in da:
        j = min(range(len(unused)), key=lambda i: abs(unused[i] - z))
        if abs(unused[j] - z) > tol:
            return False
        unused.pop(j)
    return True


def conjugate_symmetric(rs: RootSet, eps: float = DEFAULT_EPS) -> bool:
    """Every root has its conjugate in the set, with the same multiplicity."""
    pts = list(zip(rs.roots, rs.multiplicities))
    for z, m in pts:
        target = np.conj(z)
        if not any(abs(w - target) <= eps * max(1.0, abs(z)) and mw == m for w, mw in pts):
            return False
    return True


# -- sequences and sweeps ----------------------------------------------


def corona_sequence_polynomials(base: Graph, k: int, n: int, depth: int) -> list[Polynomial]:
    """D of G o S, (G o S) o S, ... with S = S_{k,n-k}, via the corona formula."""
    if depth < 1:
        raise ValueError("depth must be positive")
    if base.n < 1:
        raise ValueError("base graph needs at least one vertex")
    p_s = d_kstar(k, n)
    order = base.n
    polys = []
    for _ in range(depth):
        polys.append(d_corona(order, n, p_s))
        order *= 1 + n
    return polys


def corona_sequence_roots(base: Graph, k: int, n: int, depth: int,
                          tol: float = DEFAULT_TOL) -> list[RootSet]:
    """Root sets along the iterated corona sequence built on ``base``."""
    return [find_roots(p, tol) for p in corona_sequence_polynomials(base, k, n, depth)]


def kstar_sweep(k: int = 4, nmin: int = 5, nmax: int = 44,
                  tol: float = DEFAULT_TOL) -> list[tuple[int, RootSet]]:
    """Root sets of D(S_{k,n-k}) for every order n in ``nmin..nmax``."""
    return [(n, find_roots(d_kstar(k, n), tol)) for n in range(max(nmin, k + 1), nmax + 1)]


def scatter_rows(sweep: Sequence[tuple[int, RootSet]]) -> list[tuple[int, float, float]]:
    """One ``(n, re, im)`` row per root, multiplicities expanded."""
    rows = []
    for n, rs in sweep:
        for z in rs.expanded():
            rows.append((n, float(z.real), float(z.imag)))
    return rows


def write_scatter_csv(rows: Iterable[tuple[int, float, float]], fh: TextIO) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["n", "re", "im"])
    for n, re, im in rows:
        writer.writerow([n, _fmt(re), _fmt(im)])


def sweep_summary(sweep: Sequence[tuple[int, RootSet]], eps: float = DEFAULT_EPS):
    """Per-order ``(n, nonzero real count, real roots, max residual)``."""
    out = []
    for n, rs in sweep:
        count, reals = classify_real(rs, eps)
        out.append((n, count, reals, rs.max_residual()))
    return out
