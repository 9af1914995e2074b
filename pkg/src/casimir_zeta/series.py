"""Truncated Laurent series and second order nilpotent jets.

A :class:`LaurentSeries` stores the coefficients of
``t**min_order, ..., t**(trunc_order - 1)``; everything at or above
``trunc_order`` is unknown and asking for it raises
:class:`OutOfTruncationWindow`.  Arithmetic keeps the windows honest, so a
coefficient that comes out of a long computation is always backed by enough
input terms.

A :class:`JetSeries` is a polynomial of total degree at most two in up to six
perturbation variables whose coefficients are either exact floats or
Laurent series.  Products drop every monomial of degree three or more, which
is what one needs to carry first and second derivatives through closed form
kernels.
"""

from __future__ import annotations

import math
import os
from itertools import combinations_with_replacement
from numbers import Real

import numpy as np

from .errors import (
    DomainViolation,
    NegativeLeadingCoefficient,
    OddLeadingOrder,
    OutOfTruncationWindow,
    ZeroLeadingCoefficient,
)

DEFAULT_TERMS = 16
MIN_TERMS = 6


def default_terms() -> int:
    """Number of retained coefficients, overridable with ``CASIMIR_TRUNC_ORDER``."""
    raw = os.environ.get("CASIMIR_TRUNC_ORDER")
    if raw is None:
        return DEFAULT_TERMS
    try:
        n = int(raw)
    except ValueError as exc:
        raise ValueError(f"CASIMIR_TRUNC_ORDER must be an integer, got {raw!r}") from exc
    return max(n, MIN_TERMS)


def _is_scalar(x) -> bool:
    return isinstance(x, Real) and not isinstance(x, bool)


class LaurentSeries:
    """Truncated Laurent series ``sum_k c_k t**k`` with ``min_order <= k < trunc_order``.

    Parameters
    ----------
    min_order : int
        Lowest retained power.
    coeffs : sequence of float
        ``coeffs[k]`` multiplies ``t**(min_order + k)``.  A shorter sequence is
        padded with exact zeros (the input is then a polynomial known up to the
        window), a longer one is cut.
    trunc_order : int, optional
        First unknown power.  Defaults to ``min_order + default_terms()``.
    """

    __slots__ = ("min_order", "coeffs", "trunc_order")

    def __init__(self, min_order: int, coeffs, trunc_order: int | None = None):
        min_order = int(min_order)
        c = np.array(coeffs, dtype=float).ravel()
        if trunc_order is None:
            trunc_order = min_order + max(default_terms(), len(c))
        trunc_order = int(trunc_order)
        n = trunc_order - min_order
        if n <= 0:
            raise ValueError("trunc_order must exceed min_order")
        if len(c) > n:
            c = c[:n].copy()
        elif len(c) < n:
            c = np.concatenate([c, np.zeros(n - len(c))])
        c.setflags(write=False)
        object.__setattr__(self, "min_order", min_order)
        object.__setattr__(self, "coeffs", c)
        object.__setattr__(self, "trunc_order", trunc_order)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentSeries is immutable")

    # constructors

    @classmethod
    def constant(cls, c: float, trunc_order: int | None = None) -> "LaurentSeries":
        return cls(0, [c], trunc_order)

    @classmethod
    def monomial(cls, k: int, c: float = 1.0, trunc_order: int | None = None) -> "LaurentSeries":
        return cls(k, [c], trunc_order)

    @classmethod
    def from_function(cls, coefficient, min_order: int, trunc_order: int) -> "LaurentSeries":
        """Build a series from ``coefficient(k)`` for every power in the window."""
        return cls(min_order, [coefficient(k) for k in range(min_order, trunc_order)], trunc_order)

    # inspection

    @property
    def num_terms(self) -> int:
        return self.trunc_order - self.min_order

    def coefficient(self, k: int) -> float:
        k = int(k)
        if k >= self.trunc_order:
            raise OutOfTruncationWindow(
                f"coefficient of t^{k} requested, series known only below t^{self.trunc_order}"
            )
        if k < self.min_order:
            return 0.0
        return float(self.coeffs[k - self.min_order])

    def residue(self) -> float:
        return self.coefficient(-1)

    def valuation(self) -> int | None:
        nz = np.flatnonzero(self.coeffs)
        if len(nz) == 0:
            return None
        return self.min_order + int(nz[0])

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def trim(self) -> "LaurentSeries":
        """Drop leading coefficients that are exactly zero."""
        v = self.valuation()
        if v is None:
            return LaurentSeries(self.trunc_order - 1, [0.0], self.trunc_order)
        if v == self.min_order:
            return self
        return LaurentSeries(v, self.coeffs[v - self.min_order:], self.trunc_order)

    def truncate(self, trunc_order: int) -> "LaurentSeries":
        trunc_order = min(int(trunc_order), self.trunc_order)
        if trunc_order == self.trunc_order:
            return self
        return LaurentSeries(self.min_order, self.coeffs, trunc_order)

    def evaluate(self, t):
        """Sum of the retained terms at ``t`` (complex allowed)."""
        powers = np.arange(self.min_order, self.trunc_order)
        return np.sum(self.coeffs * np.power(complex(t) if np.iscomplexobj(t) else float(t), powers))

    def allclose(self, other: "LaurentSeries", rtol: float = 1e-13, atol: float = 0.0) -> bool:
        lo = min(self.min_order, other.min_order)
        hi = min(self.trunc_order, other.trunc_order)
        a = np.array([self.coefficient(k) for k in range(lo, hi)])
        b = np.array([other.coefficient(k) for k in range(lo, hi)])
        scale = max(np.max(np.abs(a), initial=0.0), np.max(np.abs(b), initial=0.0))
        return bool(np.all(np.abs(a - b) <= atol + rtol * scale))

    def __repr__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs[:6]):
            if c != 0.0:
                parts.append(f"{c:.6g}*t^{self.min_order + k}")
        body = " + ".join(parts) if parts else "0"
        return f"LaurentSeries({body} + O(t^{self.trunc_order}))"

    # helpers

    def _window(self, lo: int, hi: int) -> np.ndarray:
        out = np.zeros(hi - lo)
        a = max(lo, self.min_order)
        b = min(hi, self.trunc_order)
        if b > a:
            out[a - lo:b - lo] = self.coeffs[a - self.min_order:b - self.min_order]
        return out

    def _add_scalar(self, c: float) -> "LaurentSeries":
        if c == 0 or self.trunc_order <= 0:
            return self
        lo = min(self.min_order, 0)
        w = self._window(lo, self.trunc_order)
        w[-lo] += c
        return LaurentSeries(lo, w, self.trunc_order)

    # ring operations

    def __add__(self, other):
        if _is_scalar(other):
            return self._add_scalar(float(other))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        lo = min(self.min_order, other.min_order)
        hi = min(self.trunc_order, other.trunc_order)
        if hi <= lo:
            hi = lo + 1
        return LaurentSeries(lo, self._window(lo, hi) + other._window(lo, hi), hi)

    __radd__ = __add__

    def __neg__(self) -> "LaurentSeries":
        return LaurentSeries(self.min_order, -self.coeffs, self.trunc_order)

    def __sub__(self, other):
        if _is_scalar(other):
            return self._add_scalar(-float(other))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if _is_scalar(other):
            return (-self)._add_scalar(float(other))
        return NotImplemented

    def __mul__(self, other):
        if _is_scalar(other):
            return LaurentSeries(self.min_order, self.coeffs * float(other), self.trunc_order)
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        lo = self.min_order + other.min_order
        hi = min(self.trunc_order + other.min_order, other.trunc_order + self.min_order)
        prod = np.convolve(self.coeffs, other.coeffs)[: hi - lo]
        return LaurentSeries(lo, prod, hi)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (1.0 / float(other))
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return self * other.invert()

    def __rtruediv__(self, other):
        if _is_scalar(other):
            return self.invert() * float(other)
        return NotImplemented

    def __pow__(self, beta):
        if isinstance(beta, int) or (_is_scalar(beta) and float(beta).is_integer() and abs(beta) < 64):
            n = int(beta)
            if n < 0:
                return self.invert() ** (-n)
            if n == 0:
                return LaurentSeries.constant(1.0, self.num_terms)
            out = self
            for _ in range(n - 1):
                out = out * self
            return out
        return self.pow_real(float(beta))

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by ``t**k``."""
        return LaurentSeries(self.min_order + k, self.coeffs, self.trunc_order + k)

    def rescale(self, lam: float) -> "LaurentSeries":
        """Substitute ``t -> lam * t``."""
        powers = np.arange(self.min_order, self.trunc_order)
        return LaurentSeries(self.min_order, self.coeffs * float(lam) ** powers, self.trunc_order)

    def derivative(self) -> "LaurentSeries":
        powers = np.arange(self.min_order, self.trunc_order)
        return LaurentSeries(self.min_order - 1, self.coeffs * powers, self.trunc_order - 1)

    # transcendental operations

    def _normalized(self) -> tuple[int, float, np.ndarray]:
        """Return ``(m, c, q)`` with ``self = c t^m (1 + q_1 t + ...)``."""
        s = self.trim()
        c = float(s.coeffs[0])
        if c == 0.0:
            raise ZeroLeadingCoefficient("series is identically zero inside its window")
        return s.min_order, c, s.coeffs / c

    def invert(self) -> "LaurentSeries":
        m, c, q = self._normalized()
        n = len(q)
        b = np.zeros(n)
        b[0] = 1.0
        for k in range(1, n):
            b[k] = -np.dot(q[1:k + 1], b[k - 1::-1][:k])
        return LaurentSeries(-m, b / c, -m + n)

    def pow_real(self, beta: float) -> "LaurentSeries":
        """``self ** beta`` for the real branch that is positive at small ``t > 0``."""
        m, c, q = self._normalized()
        beta = float(beta)
        mb = m * beta
        if abs(mb - round(mb)) > 1e-12:
            raise DomainViolation(f"t^{m} raised to {beta} is not a Laurent series")
        if c < 0 and not beta.is_integer():
            raise DomainViolation("negative leading coefficient under a non-integer power")
        n = len(q)
        b = np.zeros(n)
        b[0] = 1.0
        for j in range(1, n):
            k = np.arange(1, j + 1)
            b[j] = np.dot(((beta + 1.0) * k - j) * q[1:j + 1], b[j - 1::-1][:j]) / j
        lead = c ** beta
        mm = int(round(mb))
        return LaurentSeries(mm, b * lead, mm + n)

    def sqrt(self) -> "LaurentSeries":
        s = self.trim()
        if s.coeffs[0] == 0.0:
            raise ZeroLeadingCoefficient("square root of a vanishing series")
        if s.min_order % 2:
            raise OddLeadingOrder(f"leading order {s.min_order} is odd")
        if s.coeffs[0] < 0:
            raise NegativeLeadingCoefficient("leading coefficient is negative")
        return s.pow_real(0.5)

    def exp(self) -> "LaurentSeries":
        s = self.trim()
        if s.min_order < 0 and not s.is_zero():
            raise DomainViolation("exp needs a series without negative powers")
        n = s.trunc_order
        if n <= 0:
            raise DomainViolation("exp of a series with no known constant term")
        a = s._window(0, n)
        b = np.zeros(n)
        b[0] = math.exp(a[0])
        k = np.arange(1, n)
        for j in range(1, n):
            b[j] = np.dot(k[:j] * a[1:j + 1], b[j - 1::-1][:j]) / j
        return LaurentSeries(0, b, n)

    def log1p(self) -> "LaurentSeries":
        s = self.trim()
        if s.is_zero():
            return s
        if s.min_order < 1:
            raise DomainViolation("log1p needs a series vanishing at t = 0")
        n = s.trunc_order
        w = s._window(0, n)
        out = np.zeros(n)
        for j in range(1, n):
            acc = j * w[j]
            for k in range(1, j):
                acc -= k * out[k] * w[j - k]
            out[j] = acc / j
        return LaurentSeries(1, out[1:], n)

    def cosh(self) -> "LaurentSeries":
        e = self.exp()
        return ((e + e.invert()) * 0.5).trim()

    def sinh(self) -> "LaurentSeries":
        e = self.exp()
        return ((e - e.invert()) * 0.5).trim()


def series_coefficient(x, k: int) -> float:
    """Coefficient of ``t**k`` of a jet coefficient, which may be an exact float."""
    if isinstance(x, LaurentSeries):
        return x.coefficient(k)
    return float(x) if k == 0 else 0.0


def as_series(x, trunc_order: int | None = None) -> LaurentSeries:
    if isinstance(x, LaurentSeries):
        return x
    return LaurentSeries.constant(float(x), trunc_order)


# ---------------------------------------------------------------------------
# jets


def _degree(mi: tuple) -> int:
    return sum(mi)


def _add_mi(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def _is_coeff(x) -> bool:
    return _is_scalar(x) or isinstance(x, LaurentSeries)


class JetSeries:
    """Polynomial of total degree <= 2 in ``num_vars`` nilpotent variables.

    ``terms`` maps multi-indices to coefficients, each either an exact float or
    a :class:`LaurentSeries`.  Missing keys are exact zeros.
    """

    __slots__ = ("num_vars", "terms")

    MAX_VARS = 6
    MAX_DEGREE = 2

    def __init__(self, num_vars: int, terms: dict | None = None):
        if not 1 <= num_vars <= self.MAX_VARS:
            raise ValueError(f"num_vars must be in 1..{self.MAX_VARS}")
        self.num_vars = num_vars
        clean = {}
        for mi, c in (terms or {}).items():
            mi = tuple(int(i) for i in mi)
            if len(mi) != num_vars or _degree(mi) > self.MAX_DEGREE:
                continue
            if _is_scalar(c) and c == 0:
                continue
            clean[mi] = float(c) if _is_scalar(c) else c
        self.terms = clean

    @property
    def zero_index(self) -> tuple:
        return (0,) * self.num_vars

    @classmethod
    def const(cls, num_vars: int, c) -> "JetSeries":
        return cls(num_vars, {(0,) * num_vars: c})

    @classmethod
    def variable(cls, i: int, num_vars: int, center=0.0) -> "JetSeries":
        mi = tuple(1 if j == i else 0 for j in range(num_vars))
        return cls(num_vars, {(0,) * num_vars: center, mi: 1.0})

    def constant(self):
        return self.terms.get(self.zero_index, 0.0)

    def nilpotent(self) -> "JetSeries":
        z = self.zero_index
        return JetSeries(self.num_vars, {k: v for k, v in self.terms.items() if k != z})

    def coefficient(self, mi: tuple):
        return self.terms.get(tuple(mi), 0.0)

    def partial(self, mi: tuple):
        """Mixed partial derivative ``m! * coefficient(m)`` at the centre."""
        mi = tuple(mi)
        if len(mi) != self.num_vars or _degree(mi) > self.MAX_DEGREE:
            raise ValueError(f"multi-index {mi} outside the jet")
        fac = 1
        for k in mi:
            fac *= math.factorial(k)
        return self.coefficient(mi) * fac

    def map(self, fn) -> "JetSeries":
        return JetSeries(self.num_vars, {k: fn(v) for k, v in self.terms.items()})

    def trim_constant(self) -> "JetSeries":
        c = self.constant()
        if isinstance(c, LaurentSeries):
            t = dict(self.terms)
            t[self.zero_index] = c.trim()
            return JetSeries(self.num_vars, t)
        return self

    def _check(self, other: "JetSeries"):
        if other.num_vars != self.num_vars:
            raise ValueError("jets over different variable sets")

    def __add__(self, other):
        if _is_coeff(other):
            other = JetSeries.const(self.num_vars, other)
        if not isinstance(other, JetSeries):
            return NotImplemented
        self._check(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t[k] + v if k in t else v
        return JetSeries(self.num_vars, t)

    __radd__ = __add__

    def __neg__(self) -> "JetSeries":
        return JetSeries(self.num_vars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if _is_coeff(other):
            return self + (-other)
        if not isinstance(other, JetSeries):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_coeff(other):
            if _is_scalar(other) and other == 0:
                return JetSeries(self.num_vars)
            return JetSeries(self.num_vars, {k: v * other for k, v in self.terms.items()})
        if not isinstance(other, JetSeries):
            return NotImplemented
        self._check(other)
        t: dict = {}
        for ka, va in self.terms.items():
            da = _degree(ka)
            for kb, vb in other.terms.items():
                if da + _degree(kb) > self.MAX_DEGREE:
                    continue
                k = _add_mi(ka, kb)
                p = va * vb
                t[k] = t[k] + p if k in t else p
        return JetSeries(self.num_vars, t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return self * (1.0 / float(other))
        if isinstance(other, LaurentSeries):
            return self * other.invert()
        if isinstance(other, JetSeries):
            return self * jinv(other)
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_coeff(other):
            return jinv(self) * other
        return NotImplemented

    def compose(self, f0, f1, f2) -> "JetSeries":
        """``f(c + n) = f0 + f1 n + f2 n^2 / 2`` for the nilpotent part ``n``.

        ``f0, f1, f2`` are ``f`` and its first two derivatives at the constant
        part ``c``.
        """
        n = self.nilpotent()
        out = JetSeries.const(self.num_vars, f0)
        if n.terms:
            out = out + n * f1
            if f2 is not None:
                out = out + (n * n) * (f2 * 0.5 if not _is_scalar(f2) else 0.5 * float(f2))
        return out

    def __repr__(self) -> str:
        return f"JetSeries(num_vars={self.num_vars}, terms={len(self.terms)})"


def jinv(f: JetSeries) -> JetSeries:
    c = f.constant()
    if isinstance(c, LaurentSeries):
        inv = c.invert()
    else:
        if c == 0:
            raise ZeroLeadingCoefficient("jet with vanishing constant part")
        inv = 1.0 / c
    inv2 = inv * inv
    return f.compose(inv, -inv2, 2.0 * (inv2 * inv))


def jpow(f: JetSeries, beta: float) -> JetSeries:
    c = f.constant()
    if isinstance(c, LaurentSeries):
        p = c.pow_real(beta)
        inv = c.invert()
    else:
        if c <= 0:
            raise DomainViolation("real power of a non-positive constant")
        p = c ** beta
        inv = 1.0 / c
    d1 = p * inv * beta
    d2 = d1 * inv * (beta - 1.0)
    return f.compose(p, d1, d2)


def jsqrt(f: JetSeries) -> JetSeries:
    c = f.constant()
    if isinstance(c, LaurentSeries):
        s = c.sqrt()
        inv = c.invert()
    else:
        if c <= 0:
            raise NegativeLeadingCoefficient("square root of a non-positive constant")
        s = math.sqrt(c)
        inv = 1.0 / c
    d1 = s * inv * 0.5
    d2 = d1 * inv * (-0.5)
    return f.compose(s, d1, d2)


def jlog1p(f: JetSeries) -> JetSeries:
    c = f.constant()
    if isinstance(c, LaurentSeries):
        l0 = c.log1p()
        inv = (c + 1.0).invert()
    else:
        l0 = math.log1p(c)
        inv = 1.0 / (1.0 + c)
    return f.compose(l0, inv, -(inv * inv))


def jexp(f: JetSeries) -> JetSeries:
    c = f.constant()
    e = c.exp() if isinstance(c, LaurentSeries) else math.exp(c)
    return f.compose(e, e, e)


def jcosh_sinh(f: JetSeries) -> tuple[JetSeries, JetSeries]:
    """Jets of ``cosh f`` and ``sinh f``; the constant part must vanish at ``t = 0``."""
    c = f.constant()
    if isinstance(c, LaurentSeries):
        ch, sh = c.cosh(), c.sinh()
    else:
        ch, sh = math.cosh(c), math.sinh(c)
    return f.compose(ch, sh, ch), f.compose(sh, ch, sh)


def snapped_cos_sin(phi: float, tol: float = 1e-12) -> tuple[float, float]:
    """``(cos phi, sin phi)`` with exact values near multiples of pi/2.

    Boundary evaluations land on angles such as ``2*pi`` where the library
    sine returns ``-2.4e-16`` instead of zero; that residue would otherwise
    leak into series whose leading term must cancel exactly.
    """
    q = phi / (0.5 * math.pi)
    k = round(q)
    if abs(q - k) * 0.5 * math.pi < tol:
        return [(1.0, 0.0), (0.0, 1.0), (-1.0, 0.0), (0.0, -1.0)][k % 4]
    return math.cos(phi), math.sin(phi)


def jcos_sin(f: JetSeries, phi0: float) -> tuple[JetSeries, JetSeries]:
    """Jets of ``cos`` and ``sin`` of ``phi0 + n`` where ``f`` supplies ``n``.

    Only the nilpotent part of ``f`` is used; ``phi0`` is the exact angle.
    """
    c, s = snapped_cos_sin(phi0)
    return f.compose(c, -s, -c), f.compose(s, c, -s)


def monomials(num_vars: int, max_degree: int = 2):
    """All multi-indices of total degree <= ``max_degree``."""
    out = [(0,) * num_vars]
    for deg in range(1, max_degree + 1):
        for combo in combinations_with_replacement(range(num_vars), deg):
            mi = [0] * num_vars
            for i in combo:
                mi[i] += 1
            out.append(tuple(mi))
    return out


# ---------------------------------------------------------------------------
# functional interface


def ls_ring(a: LaurentSeries, b: LaurentSeries, op: str) -> LaurentSeries:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown ring operation {op!r}")


def ls_invert(a: LaurentSeries) -> LaurentSeries:
    return a.invert()


def ls_sqrt(a: LaurentSeries) -> LaurentSeries:
    return a.sqrt()


def ls_exp_log(a: LaurentSeries, op: str, beta: float | None = None) -> LaurentSeries:
    if op == "exp":
        return a.exp()
    if op == "log1p":
        return a.log1p()
    if op == "pow_real":
        if beta is None:
            raise ValueError("pow_real needs an exponent")
        s = a.trim()
        if s.min_order < 0:
            raise DomainViolation("pow_real needs min_order >= 0 after factoring")
        return s.pow_real(beta)
    raise ValueError(f"unknown operation {op!r}")


def ls_coefficient(a: LaurentSeries, k: int) -> float:
    return a.coefficient(k)


def jet_lift(f, center, num_vars: int | None = None) -> JetSeries:
    """Evaluate ``f`` on jets ``center[i] + delta_i``."""
    center = list(center)
    n = num_vars if num_vars is not None else len(center)
    if len(center) != n:
        raise ValueError("center has the wrong length")
    args = [JetSeries.variable(i, n, center[i]) for i in range(n)]
    out = f(*args)
    if not isinstance(out, JetSeries):
        out = JetSeries.const(n, out)
    return out


def jet_partial(j: JetSeries, multi_index) -> LaurentSeries:
    return as_series(j.partial(tuple(multi_index)))
