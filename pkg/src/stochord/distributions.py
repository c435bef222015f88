"""Parametric lifetime families with closed-form cdf, survival, density,
hazard, reversed hazard and quantile.

Families
--------
``Frechet(mu, lam, alpha)``
    cdf(x) = exp(-((x - mu)/lam)**-alpha) on x > mu.
``ScaleFamily(baseline, lam)``
    cdf(x) = G(lam * x) for a baseline cdf G on (0, inf).
``ExpScale(baseline, alpha, lam)``
    cdf(x) = G(lam * x)**alpha (exponentiated scale).
``GE(alpha, lam)``
    cdf(x) = (1 - exp(-lam * x))**alpha; the exponentiated-scale family
    over the standard exponential baseline.
``Weibull(shape, scale)``
    cdf(x) = 1 - exp(-(x / scale)**shape).

Baselines: ``StdExponential`` (G(x) = 1 - e**-x), ``StdWeibull(shape)``
(G(x) = 1 - exp(-x**shape)) and ``GenGamma(p, q)`` with density
g(x) = p / Gamma(q/p) * x**(q-1) * exp(-x**p).

Evaluation convention: every method is vectorized.  Scalar input returns a
float and raises :class:`~stochord.errors.DegeneratePointError` where the
quantity is undefined (hazards outside the support, ratios whose
denominator underflows past 1e-300); array input marks such points NaN so
grid scans can skip and count them.  cdf/sf/pdf are total: cdf is 0 at and
left of the support, pdf is 0 outside.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

import numpy as np
from scipy import special

from ._numeric import invert_increasing, richardson_derivative
from .errors import DegeneratePointError, InvalidParameterError, SpecParseError

__all__ = [
    "StdExponential",
    "StdWeibull",
    "GenGamma",
    "Frechet",
    "ScaleFamily",
    "ExpScale",
    "GE",
    "Weibull",
    "ge_h",
    "es_q",
    "evaluate",
    "parse_baseline",
    "parse_distribution",
    "FN_NAMES",
]

FN_NAMES = ("cdf", "sf", "pdf", "hazard", "rev_hazard")

#: denominators below this are treated as degenerate, not inverted
DENOM_FLOOR = 1e-300


def _prep(x):
    arr = np.asarray(x, dtype=float)
    scalar = arr.ndim == 0
    return np.atleast_1d(arr), scalar


def _finish(values: np.ndarray, scalar: bool, what: str = "value"):
    if scalar:
        v = float(values[0])
        if math.isnan(v):
            raise DegeneratePointError(f"{what} undefined at the requested point")
        return v
    return values


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise InvalidParameterError(msg)


def _fmt(v: float) -> str:
    return repr(float(v))


# ---------------------------------------------------------------------------
# Baselines on (0, inf)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StdExponential:
    """Standard exponential baseline, G(x) = 1 - e**-x."""

    exact_quantile = True

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x > 0, -np.expm1(-np.maximum(x, 0.0)), 0.0)

    def log_cdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore"):
            return np.where(x > 0, np.log1p(-np.exp(-np.maximum(x, 0.0))), -np.inf)

    def sf(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x > 0, np.exp(-np.maximum(x, 0.0)), 1.0)

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x > 0, np.exp(-np.maximum(x, 0.0)), 0.0)

    def hazard(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x > 0, 1.0, np.nan)

    def hazard_derivative(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x > 0, 0.0, np.nan)

    def rev_hazard(self, x):
        # 1 / (e**x - 1)
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", over="ignore"):
            out = 1.0 / np.expm1(np.maximum(x, 0.0))
        return np.where(x > 0, out, np.nan)

    def quantile(self, p):
        p = np.asarray(p, dtype=float)
        return -np.log1p(-p)

    def label(self) -> str:
        return "exp"


@dataclass(frozen=True)
class StdWeibull:
    """Standard Weibull baseline, G(x) = 1 - exp(-x**shape)."""

    shape: float

    exact_quantile = True

    def __post_init__(self):
        _require(self.shape > 0, "weibull shape must be > 0")

    def _z(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(invalid="ignore"):
            return np.power(np.maximum(x, 0.0), self.shape)

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x > 0, -np.expm1(-self._z(x)), 0.0)

    def log_cdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore"):
            return np.where(x > 0, np.log1p(-np.exp(-self._z(x))), -np.inf)

    def sf(self, x):
        x = np.asarray(x, dtype=float)
        return np.where(x > 0, np.exp(-self._z(x)), 1.0)

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        k = self.shape
        with np.errstate(invalid="ignore", divide="ignore"):
            out = k * np.power(np.maximum(x, 1e-320), k - 1.0) * np.exp(-self._z(x))
        return np.where(x > 0, out, 0.0)

    def hazard(self, x):
        x = np.asarray(x, dtype=float)
        k = self.shape
        with np.errstate(invalid="ignore", divide="ignore"):
            out = k * np.power(np.maximum(x, 1e-320), k - 1.0)
        return np.where(x > 0, out, np.nan)

    def hazard_derivative(self, x):
        x = np.asarray(x, dtype=float)
        k = self.shape
        with np.errstate(invalid="ignore", divide="ignore"):
            out = k * (k - 1.0) * np.power(np.maximum(x, 1e-320), k - 2.0)
        return np.where(x > 0, out, np.nan)

    def rev_hazard(self, x):
        # k x**(k-1) / (exp(x**k) - 1)
        x = np.asarray(x, dtype=float)
        k = self.shape
        with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
            out = k * np.power(np.maximum(x, 1e-320), k - 1.0) / np.expm1(self._z(x))
        return np.where(x > 0, out, np.nan)

    def quantile(self, p):
        p = np.asarray(p, dtype=float)
        return np.power(-np.log1p(-p), 1.0 / self.shape)

    def label(self) -> str:
        return f"weibull({_fmt(self.shape)})"


@dataclass(frozen=True)
class GenGamma:
    """Generalized gamma baseline with density
    g(x) = p / Gamma(q/p) * x**(q-1) * exp(-x**p).

    The density is evaluated in log space with scipy's log-gamma; the cdf
    is the regularized incomplete gamma at (q/p, x**p).  Quantiles fall
    back to bracketed bisection (no closed form).
    """

    p: float
    q: float

    exact_quantile = False

    def __post_init__(self):
        _require(self.p > 0 and self.q > 0, "gengamma needs p > 0 and q > 0")

    @property
    def _a(self) -> float:
        return self.q / self.p

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(invalid="ignore"):
            out = special.gammainc(self._a, np.power(np.maximum(x, 0.0), self.p))
        return np.where(x > 0, out, 0.0)

    def log_cdf(self, x):
        with np.errstate(divide="ignore"):
            return np.log(self.cdf(x))

    def sf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(invalid="ignore"):
            out = special.gammaincc(self._a, np.power(np.maximum(x, 0.0), self.p))
        return np.where(x > 0, out, 1.0)

    def _log_pdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            lx = np.log(np.maximum(x, 1e-320))
            return (
                math.log(self.p)
                - special.gammaln(self._a)
                + (self.q - 1.0) * lx
                - np.power(np.maximum(x, 0.0), self.p)
            )

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        with np.errstate(over="ignore"):
            out = np.exp(self._log_pdf(x))
        return np.where(x > 0, out, 0.0)

    def hazard(self, x):
        x = np.asarray(x, dtype=float)
        sf = self.sf(x)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            out = np.exp(self._log_pdf(x) - np.log(sf))
        return np.where((x > 0) & (sf > DENOM_FLOOR), out, np.nan)

    def hazard_derivative(self, x):
        # no tractable closed form; Richardson-extrapolated central difference
        return richardson_derivative(self.hazard, np.asarray(x, dtype=float))

    def rev_hazard(self, x):
        x = np.asarray(x, dtype=float)
        cdf = self.cdf(x)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            out = np.exp(self._log_pdf(x) - np.log(cdf))
        return np.where((x > 0) & (cdf > DENOM_FLOOR), out, np.nan)

    def quantile(self, p):
        p = np.asarray(p, dtype=float)
        return invert_increasing(self.cdf, p, 1e-12, 10.0)

    def label(self) -> str:
        return f"gg({_fmt(self.p)},{_fmt(self.q)})"


# ---------------------------------------------------------------------------
# Distribution families
# ---------------------------------------------------------------------------


class _Distribution:
    """Shared scalar/array plumbing; subclasses implement _xxx(arr)."""

    support: tuple[float, float]
    exact_quantile: bool

    def cdf(self, x):
        arr, scalar = _prep(x)
        return _finish(self._cdf(arr), scalar, "cdf")

    def sf(self, x):
        arr, scalar = _prep(x)
        return _finish(self._sf(arr), scalar, "sf")

    def pdf(self, x):
        arr, scalar = _prep(x)
        return _finish(self._pdf(arr), scalar, "pdf")

    def hazard(self, x):
        arr, scalar = _prep(x)
        return _finish(self._hazard(arr), scalar, "hazard")

    def rev_hazard(self, x):
        arr, scalar = _prep(x)
        return _finish(self._rev_hazard(arr), scalar, "reversed hazard")

    def quantile(self, p):
        arr, scalar = _prep(p)
        if np.any(arr <= 0.0) or np.any(arr >= 1.0):
            raise InvalidParameterError("quantile needs p in (0, 1)")
        return _finish(self._quantile(arr), scalar, "quantile")


@dataclass(frozen=True)
class Frechet(_Distribution):
    """Frechet distribution: cdf = exp(-((x - mu)/lam)**-alpha), x > mu.

    mu is a location, lam > 0 a scale and alpha > 0 a shape parameter.
    The reversed hazard has the closed form
    (alpha/lam) * ((x - mu)/lam)**(-alpha - 1).
    """

    mu: float
    lam: float
    alpha: float

    exact_quantile = True

    def __post_init__(self):
        _require(self.lam > 0, "frechet scale lam must be > 0")
        _require(self.alpha > 0, "frechet shape alpha must be > 0")
        _require(math.isfinite(self.mu), "frechet location mu must be finite")

    @property
    def support(self) -> tuple[float, float]:
        return (self.mu, math.inf)

    def _w(self, x):
        # w = ((x - mu)/lam)**-alpha, the exponent of the cdf
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            z = (x - self.mu) / self.lam
            return np.power(np.maximum(z, 1e-320), -self.alpha)

    def _cdf(self, x):
        with np.errstate(over="ignore"):
            out = np.exp(-self._w(x))
        return np.where(x > self.mu, out, 0.0)

    def _sf(self, x):
        out = -np.expm1(-self._w(x))
        return np.where(x > self.mu, out, 1.0)

    def _pdf(self, x):
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            z = np.maximum((x - self.mu) / self.lam, 1e-320)
            out = (
                self.alpha
                / self.lam
                * np.power(z, -self.alpha - 1.0)
                * np.exp(-self._w(x))
            )
        return np.where(x > self.mu, out, 0.0)

    def _rev_hazard(self, x):
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            z = np.maximum((x - self.mu) / self.lam, 1e-320)
            out = self.alpha / self.lam * np.power(z, -self.alpha - 1.0)
        return np.where(x > self.mu, out, np.nan)

    def _hazard(self, x):
        # pdf/sf = rev_hazard / (exp(w) - 1), stable at both tails
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            out = self._rev_hazard(x) / np.expm1(self._w(x))
        return np.where(x > self.mu, out, np.nan)

    def _quantile(self, p):
        return self.mu + self.lam * np.power(-np.log(p), -1.0 / self.alpha)

    def label(self) -> str:
        return (
            f"frechet:mu={_fmt(self.mu)},lambda={_fmt(self.lam)},"
            f"alpha={_fmt(self.alpha)}"
        )


@dataclass(frozen=True)
class ScaleFamily(_Distribution):
    """Scale model: cdf(x) = G(lam * x) for a baseline G."""

    baseline: object
    lam: float

    def __post_init__(self):
        _require(self.lam > 0, "scale parameter lam must be > 0")

    @property
    def support(self) -> tuple[float, float]:
        return (0.0, math.inf)

    @property
    def exact_quantile(self) -> bool:
        return self.baseline.exact_quantile

    def _cdf(self, x):
        return self.baseline.cdf(self.lam * x)

    def _sf(self, x):
        return self.baseline.sf(self.lam * x)

    def _pdf(self, x):
        return self.lam * self.baseline.pdf(self.lam * x)

    def _hazard(self, x):
        return self.lam * self.baseline.hazard(self.lam * x)

    def _rev_hazard(self, x):
        return self.lam * self.baseline.rev_hazard(self.lam * x)

    def _quantile(self, p):
        return self.baseline.quantile(p) / self.lam

    def label(self) -> str:
        return f"scale:base={self.baseline.label()},lambda={_fmt(self.lam)}"


@dataclass(frozen=True)
class ExpScale(_Distribution):
    """Exponentiated scale family: cdf(x) = G(lam * x)**alpha.

    The reversed hazard is alpha * lam * rev_hazard_G(lam x); the survival
    is computed as -expm1(alpha * log G) to keep the right tail exact.
    """

    baseline: object
    alpha: float
    lam: float

    def __post_init__(self):
        _require(self.alpha > 0, "tilt alpha must be > 0")
        _require(self.lam > 0, "scale parameter lam must be > 0")

    @property
    def support(self) -> tuple[float, float]:
        return (0.0, math.inf)

    @property
    def exact_quantile(self) -> bool:
        return self.baseline.exact_quantile

    def _logG(self, x):
        return self.baseline.log_cdf(self.lam * x)

    def _cdf(self, x):
        with np.errstate(over="ignore"):
            return np.exp(self.alpha * self._logG(x))

    def _sf(self, x):
        return -np.expm1(self.alpha * self._logG(x))

    def _pdf(self, x):
        g = self.baseline.pdf(self.lam * x)
        with np.errstate(over="ignore", invalid="ignore"):
            tilt = np.exp((self.alpha - 1.0) * self._logG(x))
            out = self.alpha * self.lam * g * tilt
        return np.where(np.isfinite(out), out, 0.0)

    def _hazard(self, x):
        sf = self._sf(x)
        pdf = self._pdf(x)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = pdf / sf
        return np.where((x > 0) & (sf > DENOM_FLOOR), out, np.nan)

    def _rev_hazard(self, x):
        out = self.alpha * self.lam * self.baseline.rev_hazard(self.lam * x)
        return np.where(x > 0, out, np.nan)

    def _quantile(self, p):
        with np.errstate(divide="ignore"):
            root = np.exp(np.log(p) / self.alpha)
        return self.baseline.quantile(root) / self.lam

    def label(self) -> str:
        return (
            f"es:base={self.baseline.label()},alpha={_fmt(self.alpha)},"
            f"lambda={_fmt(self.lam)}"
        )


@dataclass(frozen=True)
class GE(_Distribution):
    """Generalized exponential: cdf(x) = (1 - exp(-lam x))**alpha.

    Identical to ExpScale over the standard exponential baseline, kept as
    its own family with fully closed forms (including the quantile).
    """

    alpha: float
    lam: float

    exact_quantile = True

    def __post_init__(self):
        _require(self.alpha > 0, "GE shape alpha must be > 0")
        _require(self.lam > 0, "GE scale lam must be > 0")

    @property
    def support(self) -> tuple[float, float]:
        return (0.0, math.inf)

    def _logu(self, x):
        # log(1 - exp(-lam x))
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.log1p(-np.exp(-self.lam * np.maximum(x, 0.0)))

    def _cdf(self, x):
        with np.errstate(over="ignore", invalid="ignore"):
            out = np.exp(self.alpha * self._logu(x))
        return np.where(x > 0, out, 0.0)

    def _sf(self, x):
        out = -np.expm1(self.alpha * self._logu(x))
        return np.where(x > 0, out, 1.0)

    def _pdf(self, x):
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            out = (
                self.alpha
                * self.lam
                * np.exp(-self.lam * np.maximum(x, 0.0))
                * np.exp((self.alpha - 1.0) * self._logu(x))
            )
        return np.where(x > 0, out, 0.0)

    def _hazard(self, x):
        sf = self._sf(x)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = self._pdf(x) / sf
        return np.where((x > 0) & (sf > DENOM_FLOOR), out, np.nan)

    def _rev_hazard(self, x):
        # alpha * lam / (exp(lam x) - 1)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            out = self.alpha * self.lam / np.expm1(self.lam * np.maximum(x, 0.0))
        return np.where(x > 0, out, np.nan)

    def _quantile(self, p):
        with np.errstate(divide="ignore"):
            root = np.exp(np.log(p) / self.alpha)
        return -np.log1p(-root) / self.lam

    def label(self) -> str:
        return f"ge:alpha={_fmt(self.alpha)},lambda={_fmt(self.lam)}"


@dataclass(frozen=True)
class Weibull(_Distribution):
    """Weibull with shape k and scale sigma: cdf = 1 - exp(-(x/sigma)**k)."""

    shape: float
    scale: float

    exact_quantile = True

    def __post_init__(self):
        _require(self.shape > 0, "weibull shape must be > 0")
        _require(self.scale > 0, "weibull scale must be > 0")

    @property
    def support(self) -> tuple[float, float]:
        return (0.0, math.inf)

    @property
    def _std(self) -> StdWeibull:
        return StdWeibull(self.shape)

    def _cdf(self, x):
        return self._std.cdf(x / self.scale)

    def _sf(self, x):
        return self._std.sf(x / self.scale)

    def _pdf(self, x):
        return self._std.pdf(x / self.scale) / self.scale

    def _hazard(self, x):
        return self._std.hazard(x / self.scale) / self.scale

    def _rev_hazard(self, x):
        return self._std.rev_hazard(x / self.scale) / self.scale

    def _quantile(self, p):
        return self.scale * self._std.quantile(p)

    def label(self) -> str:
        return f"weibull:shape={_fmt(self.shape)},scale={_fmt(self.scale)}"


# ---------------------------------------------------------------------------
# Scalar functions from the exponentiated-scale analysis
# ---------------------------------------------------------------------------


def ge_h(alpha: float, t):
    """h(alpha, t) = alpha * (1 - t) * t**(alpha-1) / (1 - t**alpha) on (0, 1).

    Computed as alpha*(1-t)*exp((alpha-1)*log t) / (-expm1(alpha*log t)),
    which is exact at alpha = 1 (constant 1) and stable as t -> 1.
    Nonincreasing in t for alpha <= 1, nondecreasing for alpha >= 1.
    """
    _require(alpha > 0, "ge_h needs alpha > 0")
    arr, scalar = _prep(t)
    if np.any(arr <= 0.0) or np.any(arr >= 1.0):
        raise InvalidParameterError("ge_h needs t in (0, 1)")
    lt = np.log(arr)
    with np.errstate(divide="ignore", over="ignore"):
        out = alpha * (1.0 - arr) * np.exp((alpha - 1.0) * lt) / (-np.expm1(alpha * lt))
    return _finish(out, scalar, "ge_h")


def es_q(baseline, alpha: float, x):
    """q(alpha, x) = alpha * rev_hazard_G(x) * G(x)**alpha / (1 - G(x)**alpha).

    The sign of its monotonicity in x drives the exponentiated-scale
    minimum comparison in the usual stochastic order.  For the standard
    exponential baseline it equals ge_h(alpha, 1 - exp(-x)).  Points where
    G(x) is 0 or 1 to within the floating floor are degenerate.
    """
    _require(alpha > 0, "es_q needs alpha > 0")
    arr, scalar = _prep(x)
    logG = np.asarray(baseline.log_cdf(arr), dtype=float)
    rh = np.asarray(baseline.rev_hazard(arr), dtype=float)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        # G**alpha / (1 - G**alpha) = -1 / expm1(alpha * log G) * exp(...)
        out = alpha * rh * np.exp(alpha * logG) / (-np.expm1(alpha * logG))
    degenerate = (~np.isfinite(logG)) | (logG >= -1e-16) | (arr <= 0.0)
    out = np.where(degenerate, np.nan, out)
    return _finish(out, scalar, "es_q")


def evaluate(dist, fn: str, x):
    """Evaluate one of cdf/sf/pdf/hazard/rev_hazard by name."""
    if fn not in FN_NAMES:
        raise InvalidParameterError(f"unknown function {fn!r}; expected {FN_NAMES}")
    return getattr(dist, fn)(x)


# ---------------------------------------------------------------------------
# Canonical textual forms
# ---------------------------------------------------------------------------

_BASELINE_RE = re.compile(r"^(exp|weibull\(([^)]*)\)|gg\(([^)]*)\))$")


def parse_baseline(text: str):
    """Parse a baseline token: ``exp``, ``weibull(K)`` or ``gg(P,Q)``."""
    text = text.strip()
    m = _BASELINE_RE.match(text)
    if not m:
        raise SpecParseError(f"unknown baseline {text!r}")
    if text == "exp":
        return StdExponential()
    if text.startswith("weibull"):
        try:
            return StdWeibull(float(m.group(2)))
        except (TypeError, ValueError) as exc:
            raise SpecParseError(f"bad weibull baseline {text!r}") from exc
    parts = m.group(3).split(",")
    if len(parts) != 2:
        raise SpecParseError(f"gg baseline needs two parameters: {text!r}")
    try:
        return GenGamma(float(parts[0]), float(parts[1]))
    except ValueError as exc:
        raise SpecParseError(f"bad gg baseline {text!r}") from exc


def _split_fields(args: str) -> dict[str, str]:
    """Split ``k=v,k=v`` respecting parentheses inside values."""
    fields: dict[str, str] = {}
    depth = 0
    start = 0
    items = []
    for i, ch in enumerate(args):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            items.append(args[start:i])
            start = i + 1
    items.append(args[start:])
    for item in items:
        if "=" not in item:
            raise SpecParseError(f"expected key=value, got {item!r}")
        k, _, v = item.partition("=")
        k = k.strip()
        if k in fields:
            raise SpecParseError(f"duplicate key {k!r}")
        fields[k] = v.strip()
    return fields


def _float_field(fields: dict[str, str], key: str, context: str) -> float:
    try:
        return float(fields[key])
    except (KeyError, ValueError) as exc:
        raise SpecParseError(f"missing or bad {key!r} in {context!r}") from exc


def parse_distribution(text: str):
    """Parse the canonical textual form of a distribution spec.

    Examples: ``frechet:mu=0,lambda=2,alpha=1.5``, ``ge:alpha=0.6,lambda=1``,
    ``es:base=exp,alpha=2,lambda=3``, ``scale:base=weibull(2),lambda=1``,
    ``weibull:shape=2,scale=1``.  Unknown keys are rejected.
    """
    text = text.strip()
    family, sep, args = text.partition(":")
    if not sep:
        raise SpecParseError(f"missing ':' in distribution spec {text!r}")
    fields = _split_fields(args)

    def expect_keys(keys: set[str]) -> None:
        if set(fields) != keys:
            raise SpecParseError(
                f"{family} spec needs keys {sorted(keys)}, got {sorted(fields)}"
            )

    if family == "frechet":
        expect_keys({"mu", "lambda", "alpha"})
        return Frechet(
            _float_field(fields, "mu", text),
            _float_field(fields, "lambda", text),
            _float_field(fields, "alpha", text),
        )
    if family == "ge":
        expect_keys({"alpha", "lambda"})
        return GE(_float_field(fields, "alpha", text), _float_field(fields, "lambda", text))
    if family == "es":
        expect_keys({"base", "alpha", "lambda"})
        return ExpScale(
            parse_baseline(fields["base"]),
            _float_field(fields, "alpha", text),
            _float_field(fields, "lambda", text),
        )
    if family == "scale":
        expect_keys({"base", "lambda"})
        return ScaleFamily(parse_baseline(fields["base"]), _float_field(fields, "lambda", text))
    if family == "weibull":
        expect_keys({"shape", "scale"})
        return Weibull(
            _float_field(fields, "shape", text), _float_field(fields, "scale", text)
        )
    raise SpecParseError(f"unknown distribution family {family!r}")
