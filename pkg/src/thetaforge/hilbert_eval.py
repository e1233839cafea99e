"""Numerical coset theta values on a product of upper half planes.

For an element x of O^n with y = sum_i x_i conj(x_i), the summand attached
to a point (z_1, ..., z_r) is exp(2 pi i sum_l z_l sigma_l(y) / p), the
sigma_l running over one embedding per conjugate pair.  Sums are taken
shell by shell in increasing norm until the worst-case contribution of a
shell drops below tail_tol/10; the enumeration bound grows on demand up to
the THETA_FORGE_MAX_NORM cap.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .codelattice import (
    enumerate_coset, lift_word, max_norm_cap, standard_lattice,
)
from .cyclotomic import check_prime
from .fpcode import Code


class HilbertPoint:
    """A tuple of r = (p-1)/2 points in the upper half plane."""

    __slots__ = ("p", "values")

    def __init__(self, p, values):
        check_prime(p)
        if p == 2:
            raise ValueError("need an odd prime")
        r = (p - 1) // 2
        values = tuple(complex(v) for v in values)
        if len(values) != r:
            raise ValueError("point needs %d components for p=%d" % (r, p))
        if any(v.imag <= 0 for v in values):
            raise ValueError("all components need positive imaginary part")
        self.p = p
        self.values = values

    @property
    def y_min(self):
        return min(v.imag for v in self.values)

    def __repr__(self):
        return "HilbertPoint(p=%d, %r)" % (self.p, list(self.values))


def as_point(p, z):
    if isinstance(z, HilbertPoint):
        if z.p != p:
            raise ValueError("point for the wrong prime")
        return z
    if isinstance(z, (list, tuple)):
        return HilbertPoint(p, z)
    return HilbertPoint(p, [z] * ((p - 1) // 2))


@lru_cache(maxsize=64)
def _coset_arrays(p, n, word, bound):
    """One enumeration pass over a coset: ambient power-basis coordinates
    and exact scaled norms, as numpy arrays.  Cached so that evaluating the
    same coset at several points enumerates once."""
    lat = standard_lattice(p, n)
    shift = lat.shift_in_basis(word)
    rows = []
    norms = []
    scale_box = [1]

    def emit(x, scaled, scale):
        rows.append(x)
        norms.append(scaled)
        scale_box[0] = scale

    enumerate_coset([list(r) for r in lat.gram], shift, bound, emit)
    d = p - 1
    if not rows:
        return (np.zeros((0, n * d), dtype=np.int64),
                np.zeros(0, dtype=np.int64), 1)
    basis = np.array(lat.basis, dtype=np.int64)
    coords = (np.array(rows, dtype=np.int64) @ basis
              + np.array(lift_word(word, p, n), dtype=np.int64))
    return coords, np.array(norms, dtype=np.int64), scale_box[0]


def _shell_sum(p, coords, norms_scaled, scale, point, tail_tol):
    """Shell-ordered sum of exp(2 pi i sum_l z_l sigma_l(y) / p) over the
    enumerated vectors, y = sum_i x_i conj(x_i).  sigma_l(y) is computed as
    sum_i |sigma_l(x_i)|^2 in floating point; the shell structure itself
    comes from the exact scaled norms.  Returns (value, finished)."""
    if coords.shape[0] == 0:
        return 0j, False
    d = p - 1
    n = coords.shape[1] // d
    blocks = coords.reshape(-1, n, d).astype(np.float64)
    phase = np.zeros(coords.shape[0], dtype=np.complex128)
    for l, z in enumerate(point.values, start=1):
        w = np.exp((2j * np.pi * l / p) * np.arange(d))
        emb = blocks @ w
        phase += z * (emb.real ** 2 + emb.imag ** 2).sum(axis=1)
    terms = np.exp((2j * np.pi / p) * phase)
    order = np.argsort(norms_scaled, kind="stable")
    uniq, starts, counts = np.unique(norms_scaled[order],
                                     return_index=True, return_counts=True)
    terms = terms[order]
    y_min = point.y_min
    total = 0j
    for u, s0, cnt in zip(uniq.tolist(), starts.tolist(), counts.tolist()):
        est = cnt * math.exp(-math.pi * y_min * (u / scale))
        if est < tail_tol / 10:
            return total, True
        total += complex(terms[s0:s0 + cnt].sum())
    return total, False


def _coset_value(p, n, word, point, tail_tol):
    # initial bound sized so the stop rule usually fires on the first pass
    cap = max_norm_cap()
    guess = 1.3 * math.log(10 / tail_tol) / (math.pi * point.y_min) + 2
    bound = Fraction(max(6, math.ceil(guess)))
    word = tuple(int(c) % p for c in word)
    while True:
        use = min(bound, cap)
        coords, norms, scale = _coset_arrays(p, n, word, use)
        value, finished = _shell_sum(p, coords, norms, scale, point,
                                     tail_tol)
        if finished:
            return value
        if use >= cap:
            raise ValueError(
                "tail still above %g at the enumeration cap %s; raise "
                "THETA_FORGE_MAX_NORM or loosen tail_tol" % (tail_tol, cap))
        bound = bound * 2


def theta_class_eval(p, j, z, tail_tol=1e-10):
    """Numerical theta value of the coset with digit j, one coordinate."""
    check_prime(p)
    point = as_point(p, z)
    return _coset_value(p, 1, (int(j) % p,), point, tail_tol)


def theta_code_eval(code, z, tail_tol=1e-10):
    """Numerical theta value of the union of cosets indexed by a code.

    Accepts a Code or a bare iterable of words; an empty iterable gives 0.
    """
    if isinstance(code, Code):
        p, n, words = code.p, code.n, code.words
    else:
        words = tuple(tuple(w) for w in code)
        if not words:
            return 0j
        raise ValueError("bare word lists need a Code for p and n")
    point = as_point(p, z)
    total = 0j
    for w in words:
        total += _coset_value(p, n, w, point, tail_tol)
    return total


def _enumerator_value(code, theta_values):
    """The symmetrized weight enumerator evaluated on numbers."""
    from .fpcode import weight_enumerator
    wenum = weight_enumerator(code)
    total = 0j
    for expo, cnt in wenum.coefficients.items():
        term = complex(cnt)
        for base, e in zip(theta_values, expo):
            if e:
                term *= base ** e
        total += term
    return total


def galois_permutation(p, k):
    """How zeta -> zeta^k permutes the r embedding classes."""
    r = (p - 1) // 2
    perm = []
    for l in range(1, r + 1):
        m = (k * l) % p
        perm.append(min(m, p - m) - 1)
    return perm


def verify_alpbach(code, points, tol=1e-8, tail_tol=None):
    """Compare the coset-sum theta against the enumerator composition.

    Returns a report dict with one entry per point carrying both values,
    the residual, a Galois z-permutation residual, and a verdict.
    """
    p = code.p
    r = (p - 1) // 2
    if tail_tol is None:
        tail_tol = tol / 100
    rows = []
    ok = True
    for z in points:
        point = as_point(p, z)
        lhs = theta_code_eval(code, point, tail_tol)
        thetas = [theta_class_eval(p, j, point, tail_tol)
                  for j in range(r + 1)]
        rhs = _enumerator_value(code, thetas)
        residual = abs(lhs - rhs)
        galois_residual = 0.0
        if r >= 2:
            perm = galois_permutation(p, 2)
            permuted = HilbertPoint(
                p, [point.values[perm[l]] for l in range(r)])
            lhs_perm = theta_code_eval(code, permuted, tail_tol)
            galois_residual = abs(lhs_perm - lhs)
        passed = residual < tol and galois_residual < tol
        ok = ok and passed
        rows.append({
            "point": [[v.real, v.imag] for v in point.values],
            "lhs": [lhs.real, lhs.imag],
            "rhs": [rhs.real, rhs.imag],
            "residual": residual,
            "galois_residual": galois_residual,
            "pass": passed,
        })
    return {"prime": p, "tol": tol, "points": rows, "pass": ok}


def verify_sl2f3_action(z, tol=1e-7, tail_tol=None):
    """Check the weight-one transformation rules of the two classes at p=3.

    The inversion z -> -1/z mixes the classes through the matrix
    [[1, 2], [1, -1]] times z*(-1-2 zeta)/3; the translation z -> z+1
    fixes class 0 and multiplies class 1 by zeta.  Applying the inversion
    rule twice must return the inputs.
    """
    if tail_tol is None:
        tail_tol = tol / 100
    z = complex(z)
    if z.imag <= 0:
        raise ValueError("need Im(z) > 0")
    zeta = cmath.exp(2j * cmath.pi / 3)
    t0 = theta_class_eval(3, 0, z, tail_tol)
    t1 = theta_class_eval(3, 1, z, tail_tol)
    sz = -1 / z
    factor = z * (-1 - 2 * zeta) / 3
    s_res = [
        abs(theta_class_eval(3, 0, sz, tail_tol) - factor * (t0 + 2 * t1)),
        abs(theta_class_eval(3, 1, sz, tail_tol) - factor * (t0 - t1)),
    ]
    t_res = [
        abs(theta_class_eval(3, 0, z + 1, tail_tol) - t0),
        abs(theta_class_eval(3, 1, z + 1, tail_tol) - zeta * t1),
    ]
    # inversion applied twice, purely through the transformation rule
    factor_s = sz * (-1 - 2 * zeta) / 3
    u0 = factor * (t0 + 2 * t1)
    u1 = factor * (t0 - t1)
    ss_res = [
        abs(factor_s * (u0 + 2 * u1) - t0),
        abs(factor_s * (u0 - u1) - t1),
    ]
    residuals = s_res + t_res + ss_res
    return {
        "z": [z.real, z.imag],
        "s_residuals": s_res,
        "t_residuals": t_res,
        "double_inversion_residuals": ss_res,
        "max_residual": max(residuals),
        "pass": max(residuals) < tol,
    }


def parse_points_text(text, p):
    """Point file: one point per line, r complex numbers, '#' comments."""
    r = (p - 1) // 2
    points = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != r:
            raise ValueError("expected %d components per line, got %r"
                             % (r, body))
        points.append(HilbertPoint(p, [complex(s) for s in parts]))
    if not points:
        raise ValueError("no points in file")
    return points
