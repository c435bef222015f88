"""Vector preorders: majorization and its weak, log, p-, reciprocal and
exp variants, unified by coordinate-wise monotone maps.

Every checker in this module evaluates a relation of the form
``x ⪯ y`` ("x is dominated by y"), with the left argument on the small
side.  Writing ``x↑`` for the increasing and ``x↓`` for the decreasing
rearrangement, the nine order kinds test:

====================  ==========================================================
kind                  defining inequalities (all j = 1..n unless noted)
====================  ==========================================================
``weak_sub``          sum of j largest:   Σ x↓[1..j] <= Σ y↓[1..j]
``weak_super``        sum of j smallest:  Σ x↑[1..j] >= Σ y↑[1..j]
``majorize``          weak_sub for j < n, total sums equal
``log_weak``          product of j largest:  Π x↓[1..j] <= Π y↓[1..j]
``log``               log_weak for j < n, total products equal
``p_larger``          product of j smallest: Π x↑[1..j] >= Π y↑[1..j]
``reciprocal``        Σ 1/x↑[1..j] <= Σ 1/y↑[1..j]
``exp_weak``          weak_sub applied to exp(x), exp(y)
``exp``               exp_weak plus equal total sums of exponentials
====================  ==========================================================

With this single orientation the classical implication chain holds for
every positive pair with the *same* argument order::

    majorize => weak_super => p_larger => reciprocal,   majorize => weak_sub

and the monotone-map identities are exact:
``p_larger(x, y) == check_f_majorization(x, y, log, weak_super)`` and
``reciprocal(x, y) == check_f_majorization(x, y, reciprocal, weak_sub)``.
Note that ``p_larger(x, y)`` therefore reads "y is p-larger than x": the
relation whose partial products of smallest entries favour the left side.

Inequality tolerance is scale-aware: ``lhs <= rhs`` is accepted when
``lhs <= rhs + tol * max(1, |rhs|)``; equality is the two-sided version.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, InvalidParameterError

ORDER_KINDS = (
    "weak_sub",
    "weak_super",
    "majorize",
    "log_weak",
    "log",
    "p_larger",
    "reciprocal",
    "exp_weak",
    "exp",
)

#: kinds whose definitions require strictly positive entries
POSITIVE_ORDER_KINDS = frozenset({"log_weak", "log", "p_larger", "reciprocal"})

F_FLAVORS = ("weak_sub", "weak_super", "major")

DEFAULT_TOL = 1e-9


def leq_within(lhs: float, rhs: float, tol: float) -> bool:
    """Scale-aware one-sided comparison: lhs <= rhs within tol."""
    return lhs <= rhs + tol * max(1.0, abs(rhs))


def eq_within(lhs: float, rhs: float, tol: float) -> bool:
    """Scale-aware two-sided comparison."""
    scale = max(1.0, abs(rhs))
    return abs(lhs - rhs) <= tol * scale


@dataclass(frozen=True)
class ParamVector:
    """A finite vector of real parameters.

    ``positivity_required`` marks vectors used in log / p-larger /
    reciprocal contexts, where every entry must be > 0.
    """

    values: tuple[float, ...]
    positivity_required: bool = False

    def __post_init__(self) -> None:
        if len(self.values) < 1:
            raise InvalidParameterError("ParamVector needs at least one entry")
        vals = tuple(float(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if not all(math.isfinite(v) for v in vals):
            raise InvalidParameterError(f"non-finite entry in {vals}")
        if self.positivity_required and not all(v > 0.0 for v in vals):
            raise InvalidParameterError(
                f"positive entries required, got {vals}"
            )

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.values, dtype=float)


def as_param_vector(x, positive: bool = False) -> ParamVector:
    """Coerce a sequence (or ParamVector) to a validated ParamVector."""
    if isinstance(x, ParamVector):
        if positive and not x.positivity_required:
            return ParamVector(x.values, positivity_required=True)
        return x
    if isinstance(x, (int, float)):
        raise InvalidParameterError("expected a vector, got a scalar")
    return ParamVector(tuple(float(v) for v in x), positivity_required=positive)


# ---------------------------------------------------------------------------
# Monotone coordinate maps (the closed catalog behind f-majorization)
# ---------------------------------------------------------------------------

_MAP_KINDS = ("identity", "log", "reciprocal", "exp", "power", "affine")


@dataclass(frozen=True)
class MonotoneMap:
    """A strictly monotone map from a closed catalog, with exact closed-form
    inverse and derivatives.

    Kinds: ``identity``, ``log``, ``reciprocal`` (1/t), ``exp``,
    ``power`` (t**p, p != 0, domain (0, inf)) and ``affine`` (a*t + b,
    a != 0).  The catalog is closed on purpose: theorem hypotheses need
    (f^-1)' in closed form, and finite-differencing an arbitrary callable
    would contaminate the verification results.
    """

    kind: str
    p: float = 0.0
    a: float = 0.0
    b: float = 0.0

    def __post_init__(self) -> None:
        if self.kind not in _MAP_KINDS:
            raise InvalidParameterError(f"unknown map kind {self.kind!r}")
        if self.kind == "power" and self.p == 0.0:
            raise InvalidParameterError("power map needs p != 0")
        if self.kind == "affine" and self.a == 0.0:
            raise InvalidParameterError("affine map needs a != 0")

    # -- catalog constructors ------------------------------------------------

    @classmethod
    def identity(cls) -> "MonotoneMap":
        return cls("identity")

    @classmethod
    def log(cls) -> "MonotoneMap":
        return cls("log")

    @classmethod
    def reciprocal(cls) -> "MonotoneMap":
        return cls("reciprocal")

    @classmethod
    def exp(cls) -> "MonotoneMap":
        return cls("exp")

    @classmethod
    def power(cls, p: float) -> "MonotoneMap":
        return cls("power", p=float(p))

    @classmethod
    def affine(cls, a: float, b: float) -> "MonotoneMap":
        return cls("affine", a=float(a), b=float(b))

    # -- properties ----------------------------------------------------------

    @property
    def domain(self) -> tuple[float, float]:
        """Open interval on which the map is defined."""
        if self.kind in ("log", "reciprocal", "power"):
            return (0.0, math.inf)
        return (-math.inf, math.inf)

    @property
    def range(self) -> tuple[float, float]:
        """Open interval of attained values."""
        if self.kind == "identity":
            return (-math.inf, math.inf)
        if self.kind == "log":
            return (-math.inf, math.inf)
        if self.kind == "reciprocal":
            return (0.0, math.inf)
        if self.kind == "exp":
            return (0.0, math.inf)
        if self.kind == "power":
            return (0.0, math.inf)
        return (-math.inf, math.inf)

    @property
    def increasing(self) -> bool:
        """Sign of the (constant-sign) derivative."""
        if self.kind == "reciprocal":
            return False
        if self.kind == "power":
            return self.p > 0
        if self.kind == "affine":
            return self.a > 0
        return True

    # -- evaluation ----------------------------------------------------------

    def _check_in(self, t, interval: tuple[float, float], what: str) -> None:
        lo, hi = interval
        arr = np.asarray(t, dtype=float)
        if not np.all(np.isfinite(arr)):
            raise DomainError(f"non-finite {what} for map {self.label()}")
        if np.any(arr <= lo) or np.any(arr >= hi):
            raise DomainError(
                f"{what} outside open interval ({lo}, {hi}) for map {self.label()}"
            )

    def apply(self, t):
        """Evaluate f(t); accepts scalars or arrays inside the open domain."""
        self._check_in(t, self.domain, "argument")
        t = np.asarray(t, dtype=float)
        if self.kind == "identity":
            out = t.copy()
        elif self.kind == "log":
            out = np.log(t)
        elif self.kind == "reciprocal":
            out = 1.0 / t
        elif self.kind == "exp":
            out = np.exp(t)
        elif self.kind == "power":
            out = np.power(t, self.p)
        else:
            out = self.a * t + self.b
        return out if out.ndim else float(out)

    __call__ = apply

    def inverse(self, u):
        """Evaluate f^-1(u) for u in the open range."""
        self._check_in(u, self.range, "value")
        u = np.asarray(u, dtype=float)
        if self.kind == "identity":
            out = u.copy()
        elif self.kind == "log":
            out = np.exp(u)
        elif self.kind == "reciprocal":
            out = 1.0 / u
        elif self.kind == "exp":
            out = np.log(u)
        elif self.kind == "power":
            out = np.power(u, 1.0 / self.p)
        else:
            out = (u - self.b) / self.a
        return out if out.ndim else float(out)

    def derivative(self, t):
        """f'(t)."""
        self._check_in(t, self.domain, "argument")
        t = np.asarray(t, dtype=float)
        if self.kind == "identity":
            out = np.ones_like(t)
        elif self.kind == "log":
            out = 1.0 / t
        elif self.kind == "reciprocal":
            out = -1.0 / (t * t)
        elif self.kind == "exp":
            out = np.exp(t)
        elif self.kind == "power":
            out = self.p * np.power(t, self.p - 1.0)
        else:
            out = np.full_like(t, self.a)
        return out if out.ndim else float(out)

    def inverse_derivative(self, u):
        """(f^-1)'(u), closed form: 1 / f'(f^-1(u))."""
        self._check_in(u, self.range, "value")
        u = np.asarray(u, dtype=float)
        if self.kind == "identity":
            out = np.ones_like(u)
        elif self.kind == "log":
            out = np.exp(u)
        elif self.kind == "reciprocal":
            out = -1.0 / (u * u)
        elif self.kind == "exp":
            out = 1.0 / u
        elif self.kind == "power":
            q = 1.0 / self.p
            out = q * np.power(u, q - 1.0)
        else:
            out = np.full_like(u, 1.0 / self.a)
        return out if out.ndim else float(out)

    def label(self) -> str:
        """Canonical textual form (used by the CLI)."""
        if self.kind == "power":
            return f"power:p={self.p!r}"
        if self.kind == "affine":
            return f"affine:a={self.a!r},b={self.b!r}"
        return self.kind


def parse_map(text: str) -> MonotoneMap:
    """Parse the canonical textual form of a monotone map."""
    text = text.strip()
    if ":" not in text:
        if text in ("identity", "log", "reciprocal", "exp"):
            return MonotoneMap(text)
        raise DomainError(f"unknown map spec {text!r}")
    head, _, args = text.partition(":")
    kv = {}
    for item in args.split(","):
        if "=" not in item:
            raise DomainError(f"bad map argument {item!r} in {text!r}")
        k, _, v = item.partition("=")
        try:
            kv[k.strip()] = float(v)
        except ValueError as exc:
            raise DomainError(f"bad numeric value in map spec {text!r}") from exc
    if head == "power" and set(kv) == {"p"}:
        return MonotoneMap.power(kv["p"])
    if head == "affine" and set(kv) == {"a", "b"}:
        return MonotoneMap.affine(kv["a"], kv["b"])
    raise DomainError(f"unknown map spec {text!r}")


def map_apply(f: MonotoneMap, t):
    """f(t); thin functional alias for MonotoneMap.apply."""
    return f.apply(t)


def map_inverse(f: MonotoneMap, u):
    """f^-1(u)."""
    return f.inverse(u)


def map_derivative(f: MonotoneMap, t):
    """f'(t)."""
    return f.derivative(t)


# ---------------------------------------------------------------------------
# Order checks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MajorizationVerdict:
    """Outcome of a single order check.

    When ``holds`` is False, ``failed_index`` is the 1-based count of
    entries in the first violated partial aggregation (index ``n`` marks a
    failed total-equality constraint) and ``lhs_partial`` / ``rhs_partial``
    reproduce the two sides of the violated inequality.  When the relation
    holds they record the most binding partial pair instead.
    """

    holds: bool
    failed_index: int | None
    lhs_partial: float
    rhs_partial: float
    tolerance: float

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "failed_index": self.failed_index,
            "lhs_partial": self.lhs_partial,
            "rhs_partial": self.rhs_partial,
            "tolerance": self.tolerance,
        }


def _scan_leq(lhs: np.ndarray, rhs: np.ndarray, tol: float) -> tuple[int | None, int]:
    """First index (0-based) violating lhs[k] <= rhs[k], plus binding index."""
    margins = (rhs - lhs) / np.maximum(1.0, np.abs(rhs))
    binding = int(np.argmin(margins))
    for k in range(len(lhs)):
        if not leq_within(float(lhs[k]), float(rhs[k]), tol):
            return k, binding
    return None, binding


def _verdict_from_scan(
    lhs: np.ndarray,
    rhs: np.ndarray,
    tol: float,
    equality_pair: tuple[float, float] | None = None,
) -> MajorizationVerdict:
    """Build a verdict from partial aggregates requiring lhs <= rhs, with an
    optional trailing total-equality constraint (reported at index n)."""
    bad, binding = _scan_leq(lhs, rhs, tol)
    if bad is not None:
        return MajorizationVerdict(
            False, bad + 1, float(lhs[bad]), float(rhs[bad]), tol
        )
    if equality_pair is not None:
        lt, rt = equality_pair
        if not eq_within(lt, rt, tol):
            n = len(lhs) + 1
            return MajorizationVerdict(False, n, lt, rt, tol)
    return MajorizationVerdict(
        True, None, float(lhs[binding]), float(rhs[binding]), tol
    )


def check_majorization(x, y, order: str, tol: float = DEFAULT_TOL) -> MajorizationVerdict:
    """Check the preorder ``x ⪯ y`` for one of the nine order kinds.

    See the module docstring for the exact partial-sum / partial-product
    inequalities behind each kind.  Raises on length mismatch, non-finite
    entries, and nonpositive entries where the kind requires positivity.
    """
    if order not in ORDER_KINDS:
        raise InvalidParameterError(
            f"unknown order kind {order!r}; expected one of {ORDER_KINDS}"
        )
    positive = order in POSITIVE_ORDER_KINDS
    xv = as_param_vector(x, positive=positive).as_array()
    yv = as_param_vector(y, positive=positive).as_array()
    if xv.shape != yv.shape:
        raise InvalidParameterError(
            f"length mismatch: {xv.shape[0]} vs {yv.shape[0]}"
        )

    xs = np.sort(xv)  # increasing arrangement; ties cannot affect partial sums
    ys = np.sort(yv)

    if order in ("weak_sub", "majorize"):
        # sums of the j largest entries, dominated by y
        lhs = np.cumsum(xs[::-1])
        rhs = np.cumsum(ys[::-1])
        if order == "weak_sub":
            return _verdict_from_scan(lhs, rhs, tol)
        return _verdict_from_scan(
            lhs[:-1], rhs[:-1], tol, equality_pair=(float(lhs[-1]), float(rhs[-1]))
        )

    if order == "weak_super":
        # sums of the j smallest entries, dominating y's
        lhs = np.cumsum(ys)  # require y's bottom sums <= x's
        rhs = np.cumsum(xs)
        return _verdict_from_scan(lhs, rhs, tol)

    if order in ("log_weak", "log"):
        # products of the j largest entries (decreasing arrangement)
        lhs = np.cumprod(xs[::-1])
        rhs = np.cumprod(ys[::-1])
        if order == "log_weak":
            return _verdict_from_scan(lhs, rhs, tol)
        return _verdict_from_scan(
            lhs[:-1], rhs[:-1], tol, equality_pair=(float(lhs[-1]), float(rhs[-1]))
        )

    if order == "p_larger":
        # products of the j smallest entries of x dominate y's
        lhs = np.cumprod(ys)
        rhs = np.cumprod(xs)
        return _verdict_from_scan(lhs, rhs, tol)

    if order == "reciprocal":
        # partial sums of reciprocals of the j smallest entries
        lhs = np.cumsum(1.0 / xs)
        rhs = np.cumsum(1.0 / ys)
        return _verdict_from_scan(lhs, rhs, tol)

    # exp variants: weak submajorization of the exponentials
    ex = np.cumsum(np.exp(xs)[::-1])
    ey = np.cumsum(np.exp(ys)[::-1])
    if order == "exp_weak":
        return _verdict_from_scan(ex, ey, tol)
    return _verdict_from_scan(
        ex[:-1], ey[:-1], tol, equality_pair=(float(ex[-1]), float(ey[-1]))
    )


def check_f_majorization(
    x, y, f: MonotoneMap, flavor: str, tol: float = DEFAULT_TOL
) -> MajorizationVerdict:
    """Check ``x ⪯ y`` after mapping both vectors through f coordinatewise.

    ``flavor`` is one of ``weak_sub``, ``weak_super``, ``major``.  With
    f = identity this reproduces the plain orders exactly; with f = log and
    flavor = weak_super it coincides with ``p_larger``; with f = reciprocal
    and flavor = weak_sub it coincides with ``reciprocal``.
    """
    if flavor not in F_FLAVORS:
        raise InvalidParameterError(
            f"unknown flavor {flavor!r}; expected one of {F_FLAVORS}"
        )
    xv = as_param_vector(x).as_array()
    yv = as_param_vector(y).as_array()
    fx = np.atleast_1d(np.asarray(f.apply(xv), dtype=float))
    fy = np.atleast_1d(np.asarray(f.apply(yv), dtype=float))
    kind = "majorize" if flavor == "major" else flavor
    return check_majorization(fx, fy, kind, tol=tol)


# Implications of the preorder lattice, checked by implication_chain.
CHAIN_IMPLICATIONS: tuple[tuple[str, str], ...] = (
    ("majorize", "weak_super"),
    ("weak_super", "p_larger"),
    ("p_larger", "reciprocal"),
    ("majorize", "weak_sub"),
    ("log_weak", "weak_sub"),
    ("weak_sub", "exp_weak"),
)


@dataclass(frozen=True)
class ChainReport:
    """Verdicts for every order kind on one pair, plus any violated
    implications (antecedent holds, consequent fails)."""

    verdicts: dict[str, MajorizationVerdict]
    violations: tuple[tuple[str, str], ...]

    @property
    def consistent(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "verdicts": {k: v.to_json() for k, v in self.verdicts.items()},
            "violations": [list(v) for v in self.violations],
            "consistent": self.consistent,
        }


def implication_chain(x, y, tol: float = DEFAULT_TOL) -> ChainReport:
    """Evaluate all order kinds on a positive pair and audit the chain

        majorize => weak_super => p_larger => reciprocal,
        majorize => weak_sub,  log_weak => weak_sub => exp_weak.

    Any reported violation falsifies the implementation, not the theory;
    the fixture suites require this list to stay empty.
    """
    xv = as_param_vector(x, positive=True)
    yv = as_param_vector(y, positive=True)
    verdicts = {k: check_majorization(xv, yv, k, tol=tol) for k in ORDER_KINDS}
    violations = tuple(
        (a, b)
        for a, b in CHAIN_IMPLICATIONS
        if verdicts[a].holds and not verdicts[b].holds
    )
    return ChainReport(verdicts=verdicts, violations=violations)
