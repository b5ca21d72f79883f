"""Numerical-radius upper-bound catalog.

Every bound is an evaluable operation returning a BoundResult with the
engine's w-power for the same input, the bound's right side, slack and a
holds flag. Bounds whose right side contains a power of the bounded
quantity itself ("implicit" bounds) come in two modes:

* ``inequality-check``   - the literal statement, with the engine value
  substituted on the right side;
* ``explicit-certificate`` - the implicit inequality u^2 <= a u + b resolved
  to u <= (a + sqrt(a^2 + 4b))/2, a bound usable without knowing u.

Right sides are homographic in the free parameter lam: rhs(lam) =
(P + Q lam)/(1 + lam), so their infimum over lam is min(P, Q) attained at a
boundary; resolved certificates lose that structure and are minimized
numerically. All engine terms (w(T), w(T^2), norms of |T|-power sums, ...)
are computed once per matrix and shared across bounds, modes and lam values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import (
    DimensionMismatchError,
    NegativeCoefficientError,
    UnknownBoundError,
    UnknownChainError,
)
from .linalg import adjoint, as_matrix, numerical_radius
from .scalar_ineq import BoundParams

RADIUS_TOL = 1e-10
HOLDS_RTOL = 1e-8
CHAIN_RTOL = 1e-9

MODE_INEQUALITY = "inequality-check"
MODE_CERTIFICATE = "explicit-certificate"

SINGLE_BOUNDS = ("op_norm", "kittaneh", "el_haddad", "abu_omar", "bhunia",
                 "th3", "th4", "th5", "th6", "cor_bomi")
PRODUCT_BOUNDS = ("dragomir", "al_dolat", "th2")
ALL_BOUNDS = SINGLE_BOUNDS + PRODUCT_BOUNDS

CHAIN_IDS = ("th2_dragomir", "th2_aldolat", "th3_elhaddad",
             "th4_elhaddad", "th5_elhaddad", "bomi_elhaddad")
PRODUCT_CHAINS = ("th2_dragomir", "th2_aldolat")

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class BoundResult:
    bound_name: str
    params: BoundParams
    rhs_value: float
    exponent_p: float
    w_power_value: float
    slack: float
    holds: bool
    mode: str


@dataclass(frozen=True)
class ChainResult:
    chain_name: str
    links: tuple[tuple[str, float], ...]
    holds: bool


@dataclass(frozen=True)
class LambdaOptimum:
    bound_name: str
    mode: str
    infimum: float
    lambda_star: float | None
    boundary: str  # "lambda->0" | "lambda->inf" | "flat" | "interior"


def resolve_implicit_quadratic(a: float, b: float) -> float:
    """Positive root of u^2 = a u + b: every u with u^2 <= a u + b satisfies
    u <= (a + sqrt(a^2 + 4b))/2. Monotone in both coefficients."""
    if not (math.isfinite(a) and math.isfinite(b)) or a < 0 or b < 0:
        raise NegativeCoefficientError(f"coefficients must be finite and >= 0, got a={a} b={b}")
    return 0.5 * (a + math.sqrt(a * a + 4.0 * b))


# --------------------------------------------------------------------------
# Coefficient families (pure arithmetic, exposed for specialization checks)

def th2_coefficients(lam: float) -> tuple[float, float, float]:
    """Multipliers of (w^r(T*S) ||T^2r+S^2r||, ||T^4r+S^4r||, w(|S|^2r |T|^2r))."""
    d = 1.0 + lam
    return 1.0 / (2.0 * d), lam / (4.0 * d), lam / (2.0 * d)


def th3_coefficients(lam: float) -> tuple[float, float, float]:
    """Multipliers of (||g^4+h^4||, w(h^2 g^2), w(T) ||g^2+h^2||)."""
    d = 1.0 + lam
    return lam / (4.0 * d), lam / (2.0 * d), 1.0 / (2.0 * d)


def th4_coefficients(lam: float) -> tuple[float, float, float]:
    d = 1.0 + lam
    return (2.0 + 3.0 * lam) / (32.0 * d), (2.0 + 3.0 * lam) / (16.0 * d), \
        (6.0 + 5.0 * lam) / (16.0 * d)


def th5_coefficients(lam: float) -> tuple[float, ...]:
    d = 1.0 + lam
    return (lam / (16.0 * d), lam / (8.0 * d), lam / (4.0 * d),
            lam / (4.0 * d), 1.0 / (4.0 * d), 1.0 / (2.0 * d))


def th6_coefficients(lam: float, n: int) -> tuple[float, float, float, float]:
    """Multipliers of (||T^4n+T*^4n||, w(|T*|^2n |T|^2n),
    ||T^2n+T*^2n|| w^n(T^2), binomial sum)."""
    d = 1.0 + lam
    lead = (1.0 + 2.0 * lam) / d
    return (lead / 2.0 ** (2 * n + 2), lead / 2.0 ** (2 * n + 1),
            1.0 / (d * 2.0 ** (2 * n + 1)), 1.0 / 2.0 ** (2 * n + 1))


def cor_bomi_coefficients(lam: float) -> tuple[float, float]:
    d = 1.0 + lam
    return (1.0 + 2.0 * lam) / (8.0 * d), (3.0 + 2.0 * lam) / (8.0 * d)


def al_dolat_coefficients(lam: float) -> tuple[float, float]:
    d = 1.0 + lam
    return 1.0 / (2.0 * d), lam / (2.0 * d)


# --------------------------------------------------------------------------
# Cached engine terms

def _herm_norm(x: np.ndarray) -> float:
    ev = np.linalg.eigvalsh((x + x.conj().T) / 2.0)
    return float(max(-ev[0], ev[-1]))


class _Side:
    """Spectral data of M*M (or M M* for the adjoint side), powering |M|^p."""

    def __init__(self, gram: np.ndarray):
        vals, vecs = np.linalg.eigh((gram + gram.conj().T) / 2.0)
        self.vals = np.maximum(vals, 0.0)
        self.vecs = vecs
        self._pows: dict[float, np.ndarray] = {}

    def power(self, p: float) -> np.ndarray:
        if p not in self._pows:
            v = self.vecs
            r = (v * self.vals ** (p / 2.0)) @ v.conj().T
            self._pows[p] = (r + r.conj().T) / 2.0
        return self._pows[p]


class MatrixTerms:
    """Engine quantities for one matrix, computed lazily and cached."""

    def __init__(self, t: np.ndarray):
        self.t = t
        self._plain = _Side(t.conj().T @ t)   # |T|
        self._star = _Side(t @ t.conj().T)    # |T*|
        self._cache: dict = {}

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def w(self) -> float:
        return self._memo("w", lambda: numerical_radius(self.t, RADIUS_TOL))

    @property
    def op_norm(self) -> float:
        return math.sqrt(float(self._plain.vals[-1]))

    @property
    def w_square(self) -> float:
        """w(T^2)."""
        return self._memo("w_sq", lambda: numerical_radius(self.t @ self.t, RADIUS_TOL))

    def abs_pow(self, p: float) -> np.ndarray:
        return self._plain.power(p)

    def abs_star_pow(self, p: float) -> np.ndarray:
        return self._star.power(p)

    def norm_sum(self, p_plain: float, p_star: float) -> float:
        """|| |T|^p_plain + |T*|^p_star ||."""
        return self._memo(("ns", p_plain, p_star),
                          lambda: _herm_norm(self.abs_pow(p_plain) + self.abs_star_pow(p_star)))

    def w_cross(self, p_star: float, p_plain: float) -> float:
        """w(|T*|^p_star |T|^p_plain)."""
        return self._memo(("wc", p_star, p_plain),
                          lambda: numerical_radius(self.abs_star_pow(p_star) @ self.abs_pow(p_plain),
                                                   RADIUS_TOL))


class PairTerms:
    """Engine quantities for an ordered pair (T, S) entering product bounds."""

    def __init__(self, t: np.ndarray, s: np.ndarray):
        self.t, self.s = t, s
        self._t_side = _Side(t.conj().T @ t)  # |T|
        self._s_side = _Side(s.conj().T @ s)  # |S|
        self._cache: dict = {}

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def w_prod(self) -> float:
        """w(T*S); equal to w(S*T) since w is adjoint-invariant."""
        return self._memo("wp", lambda: numerical_radius(adjoint(self.t) @ self.s, RADIUS_TOL))

    def norm_sum(self, p: float) -> float:
        """|| |T|^p + |S|^p ||."""
        return self._memo(("ns", p),
                          lambda: _herm_norm(self._t_side.power(p) + self._s_side.power(p)))

    def w_cross(self, p: float) -> float:
        """w(|S|^p |T|^p)."""
        return self._memo(("wc", p),
                          lambda: numerical_radius(self._s_side.power(p) @ self._t_side.power(p),
                                                   RADIUS_TOL))


@lru_cache(maxsize=64)
def _terms_cached(key: bytes, dim: int) -> MatrixTerms:
    a = np.frombuffer(key, dtype=np.complex128).reshape(dim, dim).copy()
    return MatrixTerms(a)


@lru_cache(maxsize=64)
def _pair_cached(key_t: bytes, key_s: bytes, dim: int) -> PairTerms:
    t = np.frombuffer(key_t, dtype=np.complex128).reshape(dim, dim).copy()
    s = np.frombuffer(key_s, dtype=np.complex128).reshape(dim, dim).copy()
    return PairTerms(t, s)


def matrix_terms(t) -> MatrixTerms:
    a = as_matrix(t)
    return _terms_cached(a.tobytes(), a.shape[0])


def pair_terms(t, s) -> PairTerms:
    a, b = as_matrix(t), as_matrix(s)
    if a.shape != b.shape:
        raise DimensionMismatchError(f"shapes {a.shape} and {b.shape} differ")
    return _pair_cached(a.tobytes(), b.tobytes(), a.shape[0])


# --------------------------------------------------------------------------
# Mode evaluations

@dataclass(frozen=True)
class _ModeEval:
    rhs: Callable[[float], float]
    w_power: float
    exponent: float
    homographic: bool


def _positive_lam(lam: float) -> float:
    lam = float(lam)
    if not (math.isfinite(lam) and lam > 0):
        raise ValueError(f"lam must be finite and > 0, got {lam}")
    return lam


def _check_r(r: float) -> float:
    if not (math.isfinite(r) and r >= 1):
        raise ValueError(f"r must be >= 1, got {r}")
    return float(r)


def _check_n(n: int) -> int:
    if int(n) != n or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n}")
    if n > 15:
        raise OverflowError("n > 15 not supported (binomial exactness cap)")
    return int(n)


def _check_alpha(alpha: float) -> float:
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    return float(alpha)


def _modes_for(name: str, t, s, params: BoundParams) -> dict[str, _ModeEval]:
    """All evaluable modes of one catalog bound, with engine terms fixed."""
    if name not in ALL_BOUNDS:
        raise UnknownBoundError(f"unknown bound {name!r}; catalog: {ALL_BOUNDS}")

    if name in PRODUCT_BOUNDS:
        pt = pair_terms(t, t if s is None else s)
        return _product_modes(name, pt, params)
    mt = matrix_terms(t)
    return _single_modes(name, mt, params)


def _single_modes(name: str, mt: MatrixTerms, params: BoundParams) -> dict[str, _ModeEval]:
    if name == "op_norm":
        val = mt.op_norm
        return {MODE_CERTIFICATE: _ModeEval(lambda lam: val, mt.w, 1.0, True)}

    if name == "kittaneh":
        val = 0.5 * mt.norm_sum(1.0, 1.0)
        return {MODE_CERTIFICATE: _ModeEval(lambda lam: val, mt.w, 1.0, True)}

    if name == "el_haddad":
        r = _check_r(params.r)
        val = 0.5 * mt.norm_sum(2.0 * r, 2.0 * r)
        return {MODE_CERTIFICATE: _ModeEval(lambda lam: val, mt.w ** (2.0 * r), 2.0 * r, True)}

    if name == "abu_omar":
        # The second absolute-value term enters squared, matching the
        # companion bound below; some statements drop that square.
        val = 0.25 * mt.norm_sum(2.0, 2.0) + 0.5 * mt.w_square
        return {MODE_CERTIFICATE: _ModeEval(lambda lam: val, mt.w**2, 2.0, True)}

    if name == "bhunia":
        val = 0.25 * mt.norm_sum(2.0, 2.0) + 0.5 * mt.w_cross(1.0, 1.0)
        return {MODE_CERTIFICATE: _ModeEval(lambda lam: val, mt.w**2, 2.0, True)}

    if name == "th3":
        alpha = _check_alpha(params.alpha)
        n4 = mt.norm_sum(4.0 * alpha, 4.0 * (1.0 - alpha))
        wc = mt.w_cross(2.0 * (1.0 - alpha), 2.0 * alpha)
        n2 = mt.norm_sum(2.0 * alpha, 2.0 * (1.0 - alpha))
        w = mt.w

        def rhs_ineq(lam: float) -> float:
            c1, c2, c3 = th3_coefficients(lam)
            return c1 * n4 + c2 * wc + c3 * w * n2

        def rhs_cert(lam: float) -> float:
            c1, c2, c3 = th3_coefficients(lam)
            return resolve_implicit_quadratic(c3 * n2, c1 * n4 + c2 * wc)

        return {
            MODE_INEQUALITY: _ModeEval(rhs_ineq, w**2, 2.0, True),
            MODE_CERTIFICATE: _ModeEval(rhs_cert, w, 1.0, False),
        }

    if name == "th4":
        n4 = mt.norm_sum(4.0, 4.0)
        wc = mt.w_cross(2.0, 2.0)
        n2 = mt.norm_sum(2.0, 2.0)
        w2t = mt.w_square

        def rhs(lam: float) -> float:
            c1, c2, c3 = th4_coefficients(lam)
            return c1 * n4 + c2 * wc + c3 * w2t * n2

        return {MODE_CERTIFICATE: _ModeEval(rhs, mt.w**4, 4.0, True)}

    if name == "th5":
        n4 = mt.norm_sum(4.0, 4.0)
        wc = mt.w_cross(2.0, 2.0)
        n2 = mt.norm_sum(2.0, 2.0)
        w2t = mt.w_square
        w = mt.w

        def rhs_ineq(lam: float) -> float:
            c = th5_coefficients(lam)
            return (c[0] * n4 + c[1] * wc + c[2] * w2t**2 + c[3] * n2 * w2t
                    + c[4] * w**2 * n2 + c[5] * w**2 * w2t)

        def rhs_cert(lam: float) -> float:
            # v = w^2: v^2 <= A + B v
            c = th5_coefficients(lam)
            a_const = c[0] * n4 + c[1] * wc + c[2] * w2t**2 + c[3] * n2 * w2t
            b_lin = c[4] * n2 + c[5] * w2t
            return resolve_implicit_quadratic(b_lin, a_const)

        return {
            MODE_INEQUALITY: _ModeEval(rhs_ineq, w**4, 4.0, True),
            MODE_CERTIFICATE: _ModeEval(rhs_cert, w**2, 2.0, False),
        }

    if name == "th6":
        n = _check_n(params.n)
        n4n = mt.norm_sum(4.0 * n, 4.0 * n)
        wcn = mt.w_cross(2.0 * n, 2.0 * n)
        n2n = mt.norm_sum(2.0 * n, 2.0 * n)
        w2t = mt.w_square
        binom_sum = sum(
            math.comb(2 * n, j) * mt.norm_sum(2.0 * j, 2.0 * j) * w2t ** (2 * n - j)
            for j in range(1, 2 * n)
        )

        def rhs(lam: float) -> float:
            c1, c2, c3, c4 = th6_coefficients(lam, n)
            return c1 * n4n + c2 * wcn + c3 * n2n * w2t**n + c4 * binom_sum

        return {MODE_CERTIFICATE: _ModeEval(rhs, mt.w ** (4.0 * n), 4.0 * n, True)}

    if name == "cor_bomi":
        n4 = mt.norm_sum(4.0, 4.0)
        n2 = mt.norm_sum(2.0, 2.0)
        w2t = mt.w_square

        def rhs(lam: float) -> float:
            c1, c2 = cor_bomi_coefficients(lam)
            return c1 * n4 + c2 * n2 * w2t

        return {MODE_CERTIFICATE: _ModeEval(rhs, mt.w**4, 4.0, True)}

    raise UnknownBoundError(name)


def _product_modes(name: str, pt: PairTerms, params: BoundParams) -> dict[str, _ModeEval]:
    if name == "dragomir":
        r = _check_r(params.r)
        val = 0.5 * pt.norm_sum(2.0 * r)
        return {MODE_CERTIFICATE: _ModeEval(lambda lam: val, pt.w_prod**r, r, True)}

    if name == "al_dolat":
        n2 = pt.norm_sum(2.0)
        n4 = pt.norm_sum(4.0)
        wp = pt.w_prod

        def rhs_ineq(lam: float) -> float:
            c1, c2 = al_dolat_coefficients(lam)
            return c1 * n2 * wp + c2 * n4

        def rhs_cert(lam: float) -> float:
            c1, c2 = al_dolat_coefficients(lam)
            return resolve_implicit_quadratic(c1 * n2, c2 * n4)

        return {
            MODE_INEQUALITY: _ModeEval(rhs_ineq, wp**2, 2.0, True),
            MODE_CERTIFICATE: _ModeEval(rhs_cert, wp, 1.0, False),
        }

    if name == "th2":
        r = _check_r(params.r)
        k2 = pt.norm_sum(2.0 * r)
        k4 = pt.norm_sum(4.0 * r)
        wc = pt.w_cross(2.0 * r)
        wp = pt.w_prod

        def rhs_ineq(lam: float) -> float:
            c1, c2, c3 = th2_coefficients(lam)
            return c1 * wp**r * k2 + c2 * k4 + c3 * wc

        def rhs_cert(lam: float) -> float:
            # u = w^r(T*S): u^2 <= a u + b
            c1, c2, c3 = th2_coefficients(lam)
            return resolve_implicit_quadratic(c1 * k2, c2 * k4 + c3 * wc)

        return {
            MODE_INEQUALITY: _ModeEval(rhs_ineq, wp ** (2.0 * r), 2.0 * r, True),
            MODE_CERTIFICATE: _ModeEval(rhs_cert, wp**r, r, False),
        }

    raise UnknownBoundError(name)


def _result(name: str, params: BoundParams, ev: _ModeEval, lam: float, mode: str) -> BoundResult:
    rhs = float(ev.rhs(lam))
    slack = rhs - ev.w_power
    holds = slack >= -HOLDS_RTOL * max(1.0, rhs, ev.w_power)
    return BoundResult(bound_name=name, params=params, rhs_value=rhs,
                       exponent_p=ev.exponent, w_power_value=ev.w_power,
                       slack=slack, holds=holds, mode=mode)


def bound_modes(name: str) -> tuple[str, ...]:
    """Modes a catalog bound supports, inequality-check first."""
    if name in ("th2", "th3", "th5", "al_dolat"):
        return (MODE_INEQUALITY, MODE_CERTIFICATE)
    if name in ALL_BOUNDS:
        return (MODE_CERTIFICATE,)
    raise UnknownBoundError(name)


def uses_lambda(name: str) -> bool:
    return name in ("al_dolat", "th2", "th3", "th4", "th5", "th6", "cor_bomi")


def evaluate_bound(name: str, t, s=None, params: BoundParams | None = None,
                   mode: str | None = None) -> tuple[BoundResult, ...]:
    """Evaluate one catalog bound in the requested mode (or all its modes).

    ``params.lam`` must be > 0 for the lam-parameterized bounds, except
    al_dolat which admits lam = 0. Product bounds read ``s``; with s omitted
    the matrix is paired with itself.
    """
    params = params if params is not None else BoundParams(lam=1.0)
    if name not in ALL_BOUNDS:
        raise UnknownBoundError(f"unknown bound {name!r}; catalog: {ALL_BOUNDS}")
    if uses_lambda(name):
        if name == "al_dolat":
            if not (math.isfinite(params.lam) and params.lam >= 0):
                raise ValueError("al_dolat requires lam >= 0")
        else:
            _positive_lam(params.lam)
    evs = _modes_for(name, t, s, params)
    modes = (mode,) if mode is not None else bound_modes(name)
    out = []
    for m in modes:
        if m not in evs:
            raise ValueError(f"bound {name!r} has no mode {m!r}")
        out.append(_result(name, params, evs[m], params.lam, m))
    return tuple(out)


# --------------------------------------------------------------------------
# Spec'd operation surface

def bound_classical(t, name: str, r: float = 1.0) -> BoundResult:
    """Classical single-matrix bounds: op_norm, kittaneh, el_haddad (uses r),
    abu_omar, bhunia."""
    if name not in ("op_norm", "kittaneh", "el_haddad", "abu_omar", "bhunia"):
        raise UnknownBoundError(f"unknown classical bound {name!r}")
    return evaluate_bound(name, t, params=BoundParams(lam=1.0, r=r))[0]


def bound_product_classical(t, s, name: str, r: float = 1.0, lam: float = 0.0) -> BoundResult:
    """Classical product bounds: dragomir (uses r), al_dolat (uses lam >= 0)."""
    if name not in ("dragomir", "al_dolat"):
        raise UnknownBoundError(f"unknown classical product bound {name!r}")
    return evaluate_bound(name, t, s, params=BoundParams(lam=lam, r=r),
                          mode=MODE_INEQUALITY if name == "al_dolat" else None)[0]


def bound_th2(t, s, r: float, lam: float, mode: str = MODE_INEQUALITY) -> BoundResult:
    return evaluate_bound("th2", t, s, BoundParams(lam=lam, r=r), mode=mode)[0]


def bound_th3(t, alpha: float, lam: float, mode: str = MODE_INEQUALITY) -> BoundResult:
    return evaluate_bound("th3", t, params=BoundParams(lam=lam, alpha=alpha), mode=mode)[0]


def bound_th4(t, lam: float) -> BoundResult:
    return evaluate_bound("th4", t, params=BoundParams(lam=lam))[0]


def bound_th5(t, lam: float, mode: str = MODE_INEQUALITY) -> BoundResult:
    return evaluate_bound("th5", t, params=BoundParams(lam=lam), mode=mode)[0]


def bound_th6(t, n: int, lam: float) -> BoundResult:
    return evaluate_bound("th6", t, params=BoundParams(lam=lam, n=n))[0]


def bound_cor_bomi(t, lam: float) -> BoundResult:
    return evaluate_bound("cor_bomi", t, params=BoundParams(lam=lam))[0]


# --------------------------------------------------------------------------
# Lambda optimization

def _golden_min(f: Callable[[float], float], lo: float, hi: float, tol: float):
    c = hi - (hi - lo) * _INVPHI
    d = lo + (hi - lo) * _INVPHI
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc < fd:
            hi, d, fd = d, c, fc
            c = hi - (hi - lo) * _INVPHI
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + (hi - lo) * _INVPHI
            fd = f(d)
    return (c, fc) if fc <= fd else (d, fd)


def optimize_lambda(name: str, t, s=None, *, r: float = 1.0, n: int = 1,
                    alpha: float = 0.5, mode: str | None = None,
                    method: str = "auto") -> LambdaOptimum:
    """Infimum of a bound's right side over lam in (0, inf), engine terms fixed.

    Homographic right sides get the closed form min(P, Q) with a boundary
    flag (P = lam->0 limit, Q = lam->inf limit); resolved certificates are
    minimized by golden-section search over lam = exp(sigma), sigma in
    [-20, 20], tolerance 1e-9 in sigma. ``method`` can force either path.
    """
    if name not in ALL_BOUNDS:
        raise UnknownBoundError(f"unknown bound {name!r}; catalog: {ALL_BOUNDS}")
    if method not in ("auto", "closed-form", "golden-section"):
        raise ValueError(f"unknown method {method!r}")
    params = BoundParams(lam=1.0, r=r, n=n, alpha=alpha)
    evs = _modes_for(name, t, s, params)
    if mode is None:
        mode = MODE_INEQUALITY if MODE_INEQUALITY in evs else MODE_CERTIFICATE
    if mode not in evs:
        raise ValueError(f"bound {name!r} has no mode {mode!r}")
    ev = evs[mode]

    use_closed = ev.homographic if method == "auto" else (method == "closed-form")
    if use_closed:
        if not ev.homographic:
            raise ValueError(f"bound {name!r} mode {mode!r} rhs is not homographic")
        p_lim = float(ev.rhs(0.0))
        q_lim = 2.0 * float(ev.rhs(1.0)) - p_lim  # rhs(1)*(1+1) = P + Q
        scale = max(1.0, abs(p_lim), abs(q_lim))
        if abs(p_lim - q_lim) <= 1e-12 * scale:
            return LambdaOptimum(name, mode, p_lim, 1.0, "flat")
        if p_lim < q_lim:
            return LambdaOptimum(name, mode, p_lim, None, "lambda->0")
        return LambdaOptimum(name, mode, q_lim, None, "lambda->inf")

    f = lambda sigma: float(ev.rhs(math.exp(sigma)))
    lo, hi = -20.0, 20.0
    s_star, f_star = _golden_min(f, lo, hi, 1e-9)
    for edge in (lo, hi):
        fe = f(edge)
        if fe < f_star:
            s_star, f_star = edge, fe
    scale = max(1.0, abs(f(lo)), abs(f(hi)))
    if abs(f(lo) - f(hi)) <= 1e-12 * scale and abs(f(0.0) - f_star) <= 1e-12 * scale:
        return LambdaOptimum(name, mode, f_star, 1.0, "flat")
    if s_star <= lo + 1e-6:
        return LambdaOptimum(name, mode, f_star, None, "lambda->0")
    if s_star >= hi - 1e-6:
        return LambdaOptimum(name, mode, f_star, None, "lambda->inf")
    return LambdaOptimum(name, mode, f_star, math.exp(s_star), "interior")


# --------------------------------------------------------------------------
# Refinement chains

def _chain(name: str, links: list[tuple[str, float]]) -> ChainResult:
    holds = all(
        links[i][1] <= links[i + 1][1]
        + CHAIN_RTOL * max(1.0, abs(links[i][1]), abs(links[i + 1][1]))
        for i in range(len(links) - 1)
    )
    return ChainResult(chain_name=name, links=tuple(links), holds=holds)


def refinement_chain(t, s, chain_id: str, params: BoundParams) -> ChainResult:
    """One corollary chain: (w-power, refined bound, classical bound).

    Product chains (th2_dragomir, th2_aldolat) read ``s`` and pair the matrix
    with itself when s is None. th2_aldolat fixes r = 1 and th3_elhaddad
    fixes alpha = 1/2, the values the corollaries are stated for.
    """
    if chain_id not in CHAIN_IDS:
        raise UnknownChainError(f"unknown chain {chain_id!r}; catalog: {CHAIN_IDS}")
    lam = _positive_lam(params.lam)

    if chain_id in PRODUCT_CHAINS:
        pt = pair_terms(t, t if s is None else s)
        if chain_id == "th2_dragomir":
            r = _check_r(params.r)
            ev = _product_modes("th2", pt, params)[MODE_INEQUALITY]
            return _chain(chain_id, [
                ("w_power", pt.w_prod ** (2.0 * r)),
                ("refined", float(ev.rhs(lam))),
                ("classical", 0.5 * pt.norm_sum(4.0 * r)),
            ])
        # th2_aldolat: r = 1 by the corollary's statement
        p1 = BoundParams(lam=lam, r=1.0)
        th2_ev = _product_modes("th2", pt, p1)[MODE_INEQUALITY]
        ald_ev = _product_modes("al_dolat", pt, p1)[MODE_INEQUALITY]
        return _chain(chain_id, [
            ("w_power", pt.w_prod**2),
            ("refined", float(th2_ev.rhs(lam))),
            ("classical", float(ald_ev.rhs(lam))),
        ])

    mt = matrix_terms(t)
    if chain_id == "th3_elhaddad":
        ev = _single_modes("th3", mt, BoundParams(lam=lam, alpha=0.5))[MODE_INEQUALITY]
        return _chain(chain_id, [
            ("w_power", mt.w**2),
            ("refined", float(ev.rhs(lam))),
            ("classical", 0.5 * mt.norm_sum(2.0, 2.0)),
        ])
    if chain_id == "th4_elhaddad":
        ev = _single_modes("th4", mt, params)[MODE_CERTIFICATE]
        return _chain(chain_id, [
            ("w_power", mt.w**4),
            ("refined", float(ev.rhs(lam))),
            ("classical", 0.5 * mt.norm_sum(4.0, 4.0)),
        ])
    if chain_id == "th5_elhaddad":
        ev = _single_modes("th5", mt, params)[MODE_INEQUALITY]
        return _chain(chain_id, [
            ("w_power", mt.w**4),
            ("refined", float(ev.rhs(lam))),
            ("classical", 0.5 * mt.norm_sum(4.0, 4.0)),
        ])
    # bomi_elhaddad
    ev = _single_modes("cor_bomi", mt, params)[MODE_CERTIFICATE]
    return _chain(chain_id, [
        ("w_power", mt.w**4),
        ("refined", float(ev.rhs(lam))),
        ("classical", 0.5 * mt.norm_sum(4.0, 4.0)),
    ])
