"""Floating-point evaluation of nested polylogarithm series inside the unit disk.

Covers the nested series for multi-indexed polylogarithms, their
log-regularized extension to all words, truncated zeta-type values with an
integral tail estimate, the generating sums over words of fixed weight,
depth and height, the Gauss hypergeometric series with its six local
solutions, and the two parameter-series expansions of the regular solutions
at the origin.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, Tuple, Union

import numpy as np

from .errors import DomainError
from .words import (
    EMPTY_WORD,
    LinComb,
    MultiIndex,
    Word,
    enumerate_g,
    g_vanishes,
    x_decomposition,
)

Index = Union[MultiIndex, Tuple[int, ...]]


@dataclass(frozen=True)
class EvalParams:
    """Truncation and tolerance knobs for the series evaluators."""

    series_terms: int = 256
    mzv_terms: int = 10_000_000
    tolerance: float = 1e-9

    def __post_init__(self):
        if self.series_terms < 1 or self.mzv_terms < 4 or self.tolerance <= 0:
            raise ValueError("invalid evaluation parameters")


DEFAULT_PARAMS = EvalParams()


@dataclass(frozen=True)
class ValueWithError:
    """A computed value together with a truncation error bound.

    The bound covers series truncation only, not floating-point roundoff.
    """

    value: complex
    error_bound: float

    def __complex__(self) -> complex:
        return complex(self.value)


@dataclass(frozen=True)
class ParamSet:
    """Hypergeometric parameters (alpha, beta, gamma) and derived quantities."""

    alpha: complex
    beta: complex
    gamma: complex

    @property
    def p(self) -> complex:
        return 1 - self.gamma

    @property
    def q(self) -> complex:
        return self.alpha + self.beta + 1 - self.gamma

    @property
    def r(self) -> complex:
        return (self.alpha + 1 - self.gamma) * (self.beta + 1 - self.gamma)

    def convergence_regime(self) -> bool:
        """|p|, |alpha+1-gamma|, |beta+1-gamma|, |q| all below 1/2."""
        g = self.gamma
        return all(
            abs(v) < 0.5
            for v in (1 - g, self.alpha + 1 - g, self.beta + 1 - g, self.q)
        )

    def is_generic(self, tol: float = 1e-9) -> bool:
        """alpha, beta, gamma and gamma-alpha-beta all stay away from integers."""
        vals = (self.alpha, self.beta, self.gamma, self.gamma - self.alpha - self.beta)
        for v in vals:
            v = complex(v)
            if abs(v.imag) < tol and abs(v.real - round(v.real)) < tol:
                return False
        return True


def _as_parts(index: Index) -> Tuple[int, ...]:
    if isinstance(index, MultiIndex):
        return index.parts
    return MultiIndex(index).parts


# ---------------------------------------------------------------------------
# nested series
# ---------------------------------------------------------------------------

@lru_cache(maxsize=4096)
def _mpl_coeffs(parts: Tuple[int, ...], n_terms: int) -> np.ndarray:
    """Coefficient array c[m] of z^m for the nested sum, m = 0..n_terms."""
    m = np.arange(0, n_terms + 1, dtype=np.float64)
    m[0] = 1.0  # avoid division by zero; slot 0 is cleared below
    inv = 1.0 / m
    s = inv ** parts[-1]
    s[0] = 0.0
    for k in parts[-2::-1]:
        excl = np.concatenate(([0.0], np.cumsum(s)[:-1]))
        s = (inv ** k) * excl
        s[0] = 0.0
    return s


@lru_cache(maxsize=4096)
def _z_powers(z: complex, n_terms: int) -> np.ndarray:
    out = np.empty(n_terms + 1, dtype=np.complex128)
    out[0] = 1.0
    out[1:] = z
    return np.cumprod(out)


def mpl(index: Index, z: complex, params: EvalParams = DEFAULT_PARAMS) -> ValueWithError:
    """Nested polylogarithm series at z, |z| < 1.

    Computed with iterated cumulative sums in O(depth * N); the attached
    bound covers the tail beyond the truncation point.
    """
    parts = _as_parts(index)
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError(f"series evaluation requires |z| < 1, got |z| = {abs(z):.4f}")
    if z == 0:
        return ValueWithError(0.0, 0.0)
    n = params.series_terms
    c = _mpl_coeffs(parts, n)
    value = complex(np.dot(c, _z_powers(z, n)))
    az = abs(z)
    # |c[m]| is bounded by the inner-sum mass, which the truncated mass
    # tracks up to slowly varying growth; 2x covers that growth for az < 0.9
    if len(parts) == 1:
        worst = 1.0
    else:
        inner = _mpl_coeffs(parts[1:], n)
        worst = max(1.0, 2.0 * float(np.sum(inner)))
    bound = az ** (n + 1) / (1.0 - az) * worst
    return ValueWithError(value, bound)


def _log_principal(z: complex) -> complex:
    return cmath.log(z)


def mpl_extended(w: Union[Word, LinComb], z: complex, params: EvalParams = DEFAULT_PARAMS) -> ValueWithError:
    """Log-regularized polylogarithm of an arbitrary word (or combination).

    For w = u x^n with u ending in y, the value is
    sum_j Li(reg1(u x^(n-j)); z) log(z)^j / j! on the principal branch.
    """
    if isinstance(w, Word):
        w = LinComb.of(w)
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError(f"series evaluation requires |z| < 1, got |z| = {abs(z):.4f}")
    total = 0.0 + 0.0j
    bound = 0.0
    for u, cu in w.terms.items():
        if u.is_empty:
            total += complex(cu)
            continue
        has_trailing_x = u.s[-1] == "x"
        if z == 0 and has_trailing_x:
            raise DomainError(f"word {u} has a log singularity at z = 0")
        if z == 0:
            continue
        logz = _log_principal(z)
        for j, vj in x_decomposition(u).items():
            factor = logz ** j / math.factorial(j)
            for v, cv in vj.terms.items():
                coeff = complex(cu * cv) * factor
                if v.is_empty:
                    total += coeff
                    continue
                r = mpl(MultiIndex.from_word(v), z, params)
                total += coeff * r.value
                bound += abs(coeff) * r.error_bound
    return ValueWithError(total, bound)


# ---------------------------------------------------------------------------
# zeta-type values
# ---------------------------------------------------------------------------

@lru_cache(maxsize=512)
def _mzv_cached(parts: Tuple[int, ...], n_terms: int) -> ValueWithError:
    m = np.arange(1, n_terms + 1, dtype=np.float64)
    inv = 1.0 / m
    s = inv ** parts[-1]
    prev = None
    for k in parts[-2::-1]:
        prev = s
        excl = np.concatenate(([0.0], np.cumsum(s)[:-1]))
        s = (inv ** k) * excl
    k1 = parts[0]
    half = n_terms // 2

    def total_with_tail(upto: int) -> float:
        partial = float(np.sum(s[:upto]))
        if prev is None:
            c_m, slope = 1.0, 0.0
        else:
            c_m = float(np.sum(prev[:upto]))
            slope = upto * float(prev[upto - 1])  # dC/d(log m) at the cut
        tail = c_m * upto ** (1 - k1) / (k1 - 1) + slope * upto ** (1 - k1) / (k1 - 1) ** 2
        return partial + tail

    v_full = total_with_tail(n_terms)
    v_half = total_with_tail(half)
    err = 2.0 * abs(v_full - v_half) + 1e-12 * (1.0 + abs(v_full))
    return ValueWithError(v_full, err)


def mzv(index: Index, params: EvalParams = DEFAULT_PARAMS) -> ValueWithError:
    """Truncated nested sum at z = 1 for an admissible index, plus a tail estimate."""
    parts = _as_parts(index)
    if parts[0] < 2:
        raise DomainError(f"index {parts} is not admissible (leading part must be >= 2)")
    return _mzv_cached(parts, params.mzv_terms)


# ---------------------------------------------------------------------------
# fixed-statistics generating sums
# ---------------------------------------------------------------------------

@lru_cache(maxsize=65536)
def _g_cached(i: int, k: int, n: int, s: int, z: complex, series_terms: int, mzv_terms: int) -> ValueWithError:
    params = EvalParams(series_terms=series_terms, mzv_terms=mzv_terms)
    total = 0.0 + 0.0j
    bound = 0.0
    for w, _ in enumerate_g(i, k, n, s).items():
        if z == 1:
            r = mzv(MultiIndex.from_word(w), params)
        else:
            r = mpl(MultiIndex.from_word(w), z, params)
        total += r.value
        bound += r.error_bound
    return ValueWithError(total, bound)


def G(i: int, k: int, n: int, s: int, z: complex, params: EvalParams = DEFAULT_PARAMS) -> ValueWithError:
    """Sum of polylogarithms over all words of weight k, depth n, height s in h_i.

    At z = 1 only i = 0 is allowed (every member index is then admissible);
    elsewhere |z| < 1 is required.
    """
    if g_vanishes(i, k, n, s):
        return ValueWithError(0.0, 0.0)
    z = complex(z)
    if z == 1:
        if i != 0:
            raise DomainError("z = 1 evaluation is only defined for the h0 family")
    elif abs(z) >= 1:
        raise DomainError(f"series evaluation requires |z| < 1, got |z| = {abs(z):.4f}")
    return _g_cached(i, k, n, s, z, params.series_terms, params.mzv_terms)


# ---------------------------------------------------------------------------
# fast family evaluation of the generating sums
# ---------------------------------------------------------------------------
#
# The sums G_i(k,n,s;z) for all k <= K are computed together by a power
# series recursion on the first letter: splitting the h1 words by whether
# they start with x or y gives
#     Ax(k,n,s)' = (Ax + Ay)(k-1,n,s) / z
#     Ay(k,n,s)' = (Ax(k-1,n-1,s-1) + Ay(k-1,n-1,s) + [k=n=s=1]) / (1-z)
# with G0 = Ax and G1 = Ax + Ay.  This avoids enumerating the
# exponentially many words of large weight.

def _g_family_values(z: complex, K: int, n_terms: int) -> Dict[Tuple[int, int, int, int], complex]:
    zp = _z_powers(z, n_terms)
    m = np.arange(0, n_terms + 1, dtype=np.float64)
    m[0] = 1.0
    invm = 1.0 / m

    values: Dict[Tuple[int, int, int, int], complex] = {}
    prev_ax: Dict[Tuple[int, int], np.ndarray] = {}
    prev_ay: Dict[Tuple[int, int], np.ndarray] = {}
    for k in range(1, K + 1):
        cur_ax: Dict[Tuple[int, int], np.ndarray] = {}
        cur_ay: Dict[Tuple[int, int], np.ndarray] = {}
        for n in range(1, k + 1):
            for s in range(1, n + 1):
                # x-started words need weight >= n + s
                if k >= n + s:
                    src = None
                    a = prev_ax.get((n, s))
                    b = prev_ay.get((n, s))
                    if a is not None or b is not None:
                        src = (a if a is not None else 0) + (b if b is not None else 0)
                    if src is not None:
                        cur_ax[(n, s)] = src * invm
                # y-started words
                B = None
                if k == 1 and n == 1 and s == 1:
                    B = np.zeros(n_terms + 1)
                    B[0] = 1.0
                else:
                    a = prev_ax.get((n - 1, s - 1))
                    b = prev_ay.get((n - 1, s))
                    if a is not None or b is not None:
                        B = (a if a is not None else 0) + (b if b is not None else 0)
                if B is not None:
                    excl = np.concatenate(([0.0], np.cumsum(B)[:-1]))
                    cur_ay[(n, s)] = excl * invm
        for (n, s), arr in cur_ax.items():
            values[(0, k, n, s)] = complex(np.dot(arr, zp))
        for n in range(1, k + 1):
            for s in range(1, n + 1):
                a = cur_ax.get((n, s))
                b = cur_ay.get((n, s))
                if a is None and b is None:
                    continue
                tot = (a if a is not None else 0) + (b if b is not None else 0)
                values[(1, k, n, s)] = complex(np.dot(tot, zp))
        prev_ax, prev_ay = cur_ax, cur_ay
    return values


_G_FAMILY_CACHE: Dict[Tuple[complex, int, int], Dict] = {}


def g_family(z: complex, K: int, params: EvalParams = DEFAULT_PARAMS) -> Dict[Tuple[int, int, int, int], complex]:
    """All G_i(k,n,s;z) values for k <= K, keyed by (i, k, n, s)."""
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError(f"series evaluation requires |z| < 1, got |z| = {abs(z):.4f}")
    key = (z, K, params.series_terms)
    if key not in _G_FAMILY_CACHE:
        if len(_G_FAMILY_CACHE) > 8:
            _G_FAMILY_CACHE.clear()
        _G_FAMILY_CACHE[key] = _g_family_values(z, K, params.series_terms)
    return _G_FAMILY_CACHE[key]


# ---------------------------------------------------------------------------
# Gauss hypergeometric series and the six local solutions
# ---------------------------------------------------------------------------

def _near_nonpositive_int(c: complex, tol: float = 1e-12) -> bool:
    c = complex(c)
    return abs(c.imag) < tol and c.real <= 0.5 and abs(c.real - round(c.real)) < tol


def hypergeom_2f1(a: complex, b: complex, c: complex, z: complex,
                  terms: int = 256) -> ValueWithError:
    """Truncated Gauss series sum_n (a)_n (b)_n / ((c)_n n!) z^n, |z| < 1."""
    z = complex(z)
    if abs(z) >= 1:
        raise DomainError(f"hypergeometric series requires |z| < 1, got |z| = {abs(z):.4f}")
    if _near_nonpositive_int(c):
        raise DomainError(f"series parameter c = {c} is a nonpositive integer")
    total = 1.0 + 0.0j
    term = 1.0 + 0.0j
    for n in range(terms):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        total += term
        if abs(term) < 1e-18 * max(1.0, abs(total)) and n > 4:
            break
    az = abs(z)
    bound = abs(term) * az / (1.0 - az) if az > 0 else 0.0
    return ValueWithError(total, bound)


def hypergeom_2f1_ps(ps: ParamSet, z: complex, terms: int = 256) -> ValueWithError:
    return hypergeom_2f1(ps.alpha, ps.beta, ps.gamma, z, terms)


def _f(a, b, c, z, terms=256) -> complex:
    return hypergeom_2f1(a, b, c, z, terms).value


def local_solution(ps: ParamSet, point: Union[int, str], j: int, z: complex,
                   terms: int = 256) -> complex:
    """The six local solutions around 0, 1 and infinity, principal branches.

    point is 0, 1 or "inf"; j selects the exponent (0 or 1) at that point.
    """
    al, be, ga = ps.alpha, ps.beta, ps.gamma
    z = complex(z)
    if point == 0:
        if abs(z) >= 1:
            raise DomainError("local solutions at 0 need |z| < 1")
        if j == 0:
            return _f(al, be, ga, z, terms)
        return z ** (1 - ga) * _f(al + 1 - ga, be + 1 - ga, 2 - ga, z, terms)
    if point == 1:
        if abs(1 - z) >= 1:
            raise DomainError("local solutions at 1 need |1 - z| < 1")
        if j == 0:
            return _f(al, be, al + be + 1 - ga, 1 - z, terms)
        return (1 - z) ** (ga - al - be) * _f(ga - al, ga - be, ga - al - be + 1, 1 - z, terms)
    if point in ("inf", "infty", "oo"):
        if abs(z) <= 1:
            raise DomainError("local solutions at infinity need |z| > 1")
        if j == 0:
            return z ** (-al) * _f(al, al + 1 - ga, al - be + 1, 1 / z, terms)
        return z ** (-be) * _f(be, be + 1 - ga, be - al + 1, 1 / z, terms)
    raise ValueError(f"unknown expansion point {point!r}")


def local_solution_dz(ps: ParamSet, point: Union[int, str], j: int, z: complex,
                      terms: int = 256) -> complex:
    """Analytic z-derivative of the corresponding local solution."""
    al, be, ga = ps.alpha, ps.beta, ps.gamma
    z = complex(z)

    def fp(a, b, c, w):  # d/dw of the hypergeometric series
        return a * b / c * _f(a + 1, b + 1, c + 1, w, terms)

    if point == 0:
        if j == 0:
            return fp(al, be, ga, z)
        a, b, c = al + 1 - ga, be + 1 - ga, 2 - ga
        return (1 - ga) * z ** (-ga) * _f(a, b, c, z, terms) + z ** (1 - ga) * fp(a, b, c, z)
    if point == 1:
        t = 1 - z
        if j == 0:
            return -fp(al, be, al + be + 1 - ga, t)
        a, b, c = ga - al, ga - be, ga - al - be + 1
        e = ga - al - be
        return -(e * t ** (e - 1) * _f(a, b, c, t, terms) + t ** e * fp(a, b, c, t))
    if point in ("inf", "infty", "oo"):
        u = 1 / z
        if j == 0:
            a, b, c, e = al, al + 1 - ga, al - be + 1, -al
        else:
            a, b, c, e = be, be + 1 - ga, be - al + 1, -be
        return e * z ** (e - 1) * _f(a, b, c, u, terms) + z ** e * fp(a, b, c, u) * (-1 / z ** 2)
    raise ValueError(f"unknown expansion point {point!r}")


def fundamental_phi(ps: ParamSet, point: Union[int, str], z: complex,
                    terms: int = 256) -> np.ndarray:
    """Local fundamental solution matrix [[phi0, phi1], [z phi0'/beta, z phi1'/beta]]."""
    z = complex(z)
    m = np.empty((2, 2), dtype=complex)
    for j in (0, 1):
        m[0, j] = local_solution(ps, point, j, z, terms)
        m[1, j] = z / ps.beta * local_solution_dz(ps, point, j, z, terms)
    return m


# ---------------------------------------------------------------------------
# the parameter-series expansions of the regular solutions at 0
# ---------------------------------------------------------------------------

def _weighted_g_sum(z: complex, K: int, mono, prefactor: complex,
                    params: EvalParams, ratio: float) -> ValueWithError:
    """1 + prefactor * sum over (k,n,s) of G0(k,n,s;z) * mono(k,n,s), k <= K."""
    fam = g_family(z, K, params)
    total = 1.0 + 0.0j
    shell_prev = 0.0
    shell_last = 0.0
    for k in range(1, K + 1):
        shell = 0.0 + 0.0j
        for n in range(1, k + 1):
            for s in range(1, n + 1):
                v = fam.get((0, k, n, s))
                if v is not None:
                    shell += v * mono(k, n, s)
        shell *= prefactor
        total += shell
        shell_prev, shell_last = shell_last, abs(shell)
    if ratio < 1:
        geo = max(shell_last, shell_prev * ratio) * ratio / (1 - ratio)
    else:
        geo = float("inf")
    return ValueWithError(total, geo)


def convergence_ratio(ps: ParamSet) -> float:
    """Geometric majorant ratio 2*max(|p|, |q|, sqrt|r|) for the shell tails."""
    return 2.0 * max(abs(ps.p), abs(ps.q), math.sqrt(abs(ps.r)))


def theorem_series_regular(ps: ParamSet, z: complex, K: int,
                           params: EvalParams = DEFAULT_PARAMS,
                           allow_outside_regime: bool = False) -> ValueWithError:
    """Expansion of the regular solution at 0 as a weighted sum of G0 values:

        1 + alpha*beta * sum G0(k,n,s;z) p^(k-n-s) q^(n-s) r^(s-1).
    """
    if not ps.convergence_regime() and not allow_outside_regime:
        raise DomainError("parameters violate the |.| < 1/2 convergence regime")
    p, q, r = ps.p, ps.q, ps.r
    pref = ps.alpha * ps.beta

    def mono(k, n, s):
        return p ** (k - n - s) * q ** (n - s) * r ** (s - 1)

    return _weighted_g_sum(complex(z), K, mono, pref, params, convergence_ratio(ps))


def corollary_series_exponent(ps: ParamSet, z: complex, K: int,
                              params: EvalParams = DEFAULT_PARAMS,
                              allow_outside_regime: bool = False) -> ValueWithError:
    """Expansion of the solution with exponent 1-gamma at 0:

        z^(1-gamma) (1 + (alpha+1-gamma)(beta+1-gamma)
                     * sum G0(k,n,s;z) (gamma-1)^(k-n-s) q^(n-s) (alpha*beta)^(s-1)).
    """
    if not ps.convergence_regime() and not allow_outside_regime:
        raise DomainError("parameters violate the |.| < 1/2 convergence regime")
    q = ps.q
    gm1 = ps.gamma - 1
    ab = ps.alpha * ps.beta
    pref = (ps.alpha + 1 - ps.gamma) * (ps.beta + 1 - ps.gamma)

    def mono(k, n, s):
        return gm1 ** (k - n - s) * q ** (n - s) * ab ** (s - 1)

    z = complex(z)
    inner = _weighted_g_sum(z, K, mono, pref, params, convergence_ratio(ps))
    zz = z ** (1 - ps.gamma)
    return ValueWithError(zz * inner.value, abs(zz) * inner.error_bound)


# ---------------------------------------------------------------------------
# uniform bound on any compact set, after the path-length estimate
# ---------------------------------------------------------------------------

def boundedness_constant(re_lo: float, re_hi: float) -> float:
    """exp(l/p + max |log z|) for the real interval [re_lo, re_hi] in (0, 1).

    p is the smaller of 1/2 and the distance of the interval to {0, 1}; l is
    the length of the within-distance-p real path from the anchor point p.
    """
    if not (0 < re_lo <= re_hi < 1):
        raise DomainError("interval must sit inside (0, 1)")
    p = min(re_lo, 1 - re_hi, 0.5)
    length = max(re_hi - p, abs(re_lo - p))
    max_log = max(abs(math.log(re_lo)), abs(math.log(re_hi)))
    return math.exp(length / p + max_log)


# ---------------------------------------------------------------------------
# extended-polylog family over all words up to a weight cutoff
# ---------------------------------------------------------------------------
#
# Values of the extended polylogarithm for every word of weight <= K are
# built by one integration step per word: coefficients live on the basis
# t^m log(t)^j / j!, and prepending a letter maps the parent's coefficient
# arrays through the closed-form primitives of t^(m-1) log^j t / j! (for x)
# and of the 1/(1-t)-multiplied series (for y).

def _integrate_x_step(arrs: Dict[int, np.ndarray], n_terms: int) -> Dict[int, np.ndarray]:
    # primitive of F(t)/t: t^(m-1) log^j/j! integrates (m >= 1) to
    # sum_{i<=j} (-1)^(j-i) m^-(j-i+1) t^m log^i/i!; the m = 0 part raises
    # the log degree by one
    out: Dict[int, np.ndarray] = {}
    mm = np.arange(1, n_terms + 1, dtype=np.float64)
    for j, A in arrs.items():
        body = A[1:]
        for i in range(j + 1):
            tgt = out.setdefault(i, np.zeros(n_terms + 1))
            tgt[1:] += ((-1.0) ** (j - i)) * body / mm ** (j - i + 1)
        if A[0]:
            tgt = out.setdefault(j + 1, np.zeros(n_terms + 1))
            tgt[0] += A[0]
    return out


def _integrate_y_step(arrs: Dict[int, np.ndarray], n_terms: int) -> Dict[int, np.ndarray]:
    # primitive of F(t)/(1-t): multiply each log-level series by 1/(1-t)
    # (cumulative sums), then integrate t^m log^j/j! termwise
    out: Dict[int, np.ndarray] = {}
    mp1 = np.arange(1, n_terms + 1, dtype=np.float64)
    for j, A in arrs.items():
        tilde = np.cumsum(A)[:-1]  # coefficient at t^m, m = 0..N-1
        for i in range(j + 1):
            tgt = out.setdefault(i, np.zeros(n_terms + 1))
            tgt[1:] += ((-1.0) ** (j - i)) * tilde / mp1 ** (j - i + 1)
    return out


def _li_family_values(z: complex, K: int, n_terms: int) -> Dict[str, complex]:
    logz = _log_principal(z)
    zp = _z_powers(z, n_terms)
    logpow = [logz ** j / math.factorial(j) for j in range(K + 2)]

    root = {0: np.concatenate(([1.0], np.zeros(n_terms)))}
    values: Dict[str, complex] = {"": 1.0 + 0.0j}
    prev_layer: Dict[str, Dict[int, np.ndarray]] = {"": root}
    for _ in range(K):
        cur_layer: Dict[str, Dict[int, np.ndarray]] = {}
        for v, arrs in prev_layer.items():
            for a in ("x", "y"):
                if a == "x":
                    res = _integrate_x_step(arrs, n_terms)
                else:
                    res = _integrate_y_step(arrs, n_terms)
                cur_layer[a + v] = res
                val = 0.0 + 0.0j
                for j, A in res.items():
                    val += logpow[j] * complex(np.dot(A, zp))
                values[a + v] = val
        prev_layer = cur_layer
    return values


_LI_FAMILY_CACHE: Dict[Tuple[complex, int, int], Dict[str, complex]] = {}


def li_family(z: complex, K: int, params: EvalParams = DEFAULT_PARAMS) -> Dict[str, complex]:
    """Extended polylogarithm values for every word of weight <= K, keyed by string."""
    z = complex(z)
    if abs(z) >= 1 or z == 0:
        raise DomainError("the word family needs 0 < |z| < 1")
    key = (z, K, params.series_terms)
    if key not in _LI_FAMILY_CACHE:
        if len(_LI_FAMILY_CACHE) > 2:
            _LI_FAMILY_CACHE.clear()
        _LI_FAMILY_CACHE[key] = _li_family_values(z, K, params.series_terms)
    return _LI_FAMILY_CACHE[key]
