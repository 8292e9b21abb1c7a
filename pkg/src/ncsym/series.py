"""Truncated power series and shape-marker polynomials.

Everything here is exact: TruncSeries holds rational coefficients up to a
fixed precision, and ShapePoly holds integer coefficients on formal markers
q_mu = q_{mu_1} q_{mu_2} ... indexed by integer partitions, truncated by
weight.  The module produces the dimension series of the main graded spaces
and cross-checks them against direct enumeration where feasible.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import factorial

from .errors import InternalCheckError, VerificationFailure
from .partitions import Partition, check_partition, partitions_of, union
from .setpartitions import set_partitions


class TruncSeries:
    """A power series in t known exactly up to degree `precision`."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least its constant term")

    @property
    def precision(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, precision) -> "TruncSeries":
        return cls([1] + [0] * precision)

    @classmethod
    def zero(cls, precision) -> "TruncSeries":
        return cls([0] * (precision + 1))

    def __getitem__(self, d) -> Fraction:
        return self.coeffs[d]

    def __eq__(self, other):
        return isinstance(other, TruncSeries) and self.coeffs == other.coeffs

    def truncate(self, precision) -> "TruncSeries":
        if precision <= self.precision:
            return TruncSeries(self.coeffs[: precision + 1])
        return TruncSeries(self.coeffs + (Fraction(0),) * (precision - self.precision))

    def __add__(self, other):
        p = min(self.precision, other.precision)
        return TruncSeries([self[i] + other[i] for i in range(p + 1)])

    def __sub__(self, other):
        p = min(self.precision, other.precision)
        return TruncSeries([self[i] - other[i] for i in range(p + 1)])

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            c = Fraction(other)
            return TruncSeries([c * x for x in self.coeffs])
        p = min(self.precision, other.precision)
        out = [Fraction(0)] * (p + 1)
        for i in range(p + 1):
            if not self[i]:
                continue
            for j in range(p + 1 - i):
                out[i + j] += self[i] * other[j]
        return TruncSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncSeries":
        """Reciprocal of a series with invertible constant term."""
        if not self.coeffs[0]:
            raise ValueError("cannot invert a series with zero constant term")
        out = [Fraction(1) / self.coeffs[0]]
        for d in range(1, self.precision + 1):
            acc = sum(
                (self[i] * out[d - i] for i in range(1, d + 1)), Fraction(0)
            )
            out.append(-acc / self.coeffs[0])
        return TruncSeries(out)

    def integer_coefficients(self) -> list[int]:
        if any(c.denominator != 1 for c in self.coeffs):
            raise InternalCheckError(f"series is not integral: {self.coeffs}")
        return [int(c) for c in self.coeffs]

    def __repr__(self):
        return f"TruncSeries({[str(c) for c in self.coeffs]})"


def _one_minus_power(i, precision) -> TruncSeries:
    coeffs = [Fraction(0)] * (precision + 1)
    coeffs[0] = Fraction(1)
    if i <= precision:
        coeffs[i] = Fraction(-1)
    return TruncSeries(coeffs)


def _geometric(ratio, precision) -> TruncSeries:
    # 1 / (1 - ratio*t)
    out, acc = [], Fraction(1)
    for _ in range(precision + 1):
        out.append(acc)
        acc *= ratio
    return TruncSeries(out)


# -- dimension series -----------------------------------------------------------


def hilb_sym(n, precision) -> TruncSeries:
    """Dimension series of the symmetric polynomials on n variables:
    the product of 1/(1-t^i) for i up to n."""
    top = precision if n == math.inf else min(int(n), precision)
    out = TruncSeries.one(precision)
    for i in range(1, top + 1):
        out = out * _one_minus_power(i, precision).inverse()
    return out


def coinvariant_poly(n) -> TruncSeries:
    """The t-analog of n!: the product of (1 + t + ... + t^(i-1)) for i <= n."""
    if n == math.inf:
        raise ValueError("the coinvariant polynomial needs a finite alphabet")
    n = int(n)
    precision = n * (n - 1) // 2
    out = TruncSeries.one(precision)
    for i in range(1, n + 1):
        out = out * TruncSeries([1] * i).truncate(precision)
    return out


def hilb_ncsym(n, precision) -> TruncSeries:
    """Ordinary generating function of the length restricted Bell numbers:
    1 + sum over k <= n of t^k / ((1-t)(1-2t)...(1-kt))."""
    top = precision if n == math.inf else min(int(n), precision)
    out = TruncSeries.one(precision)
    block = TruncSeries.one(precision)
    for k in range(1, top + 1):
        block = block * _geometric(k, precision)
        shifted = [Fraction(0)] * k + list(block.coeffs[: precision + 1 - k])
        out = out + TruncSeries(shifted)
    return out


def hilb_cosym(n, precision) -> TruncSeries:
    """Dimension series of the coinvariant factor: the Bell series times the
    product of (1-t^i) over the alphabet.  That this has nonnegative
    coefficients is part of what the decomposition machinery certifies, so a
    negative coefficient raises VerificationFailure."""
    out = hilb_ncsym(n, precision)
    top = precision if n == math.inf else min(int(n), precision)
    for i in range(1, top + 1):
        out = out * _one_minus_power(i, precision)
    for d, c in enumerate(out.coeffs):
        if c < 0:
            raise VerificationFailure(
                f"negative coefficient {c} at degree {d}", degree=d, alphabet=n
            )
    return out


# -- shape marker polynomials ------------------------------------------------------


class ShapePoly:
    """Integer combinations of markers q_mu, truncated beyond a weight bound.

    Markers multiply by merging their part multisets: q_lam * q_mu is the
    marker of the union of lam and mu.
    """

    __slots__ = ("terms", "max_weight")

    def __init__(self, terms=None, max_weight=0):
        self.max_weight = int(max_weight)
        clean = {}
        for mu, coeff in (terms or {}).items():
            mu = check_partition(mu)
            coeff = int(coeff)
            if coeff and sum(mu) <= self.max_weight:
                clean[mu] = coeff
        self.terms = clean

    @classmethod
    def one(cls, max_weight) -> "ShapePoly":
        return cls({(): 1}, max_weight)

    def coefficient(self, mu) -> int:
        return self.terms.get(check_partition(mu), 0)

    def support(self) -> list[Partition]:
        return sorted(self.terms, key=lambda mu: (sum(mu), tuple(-p for p in mu)))

    def __eq__(self, other):
        return (
            isinstance(other, ShapePoly)
            and self.max_weight == other.max_weight
            and self.terms == other.terms
        )

    def __add__(self, other):
        w = min(self.max_weight, other.max_weight)
        out: dict[Partition, int] = {}
        for src in (self.terms, other.terms):
            for mu, c in src.items():
                out[mu] = out.get(mu, 0) + c
        return ShapePoly(out, w)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return ShapePoly(
            {mu: int(scalar) * c for mu, c in self.terms.items()}, self.max_weight
        )

    def __mul__(self, other):
        if not isinstance(other, ShapePoly):
            return int(other) * self
        w = min(self.max_weight, other.max_weight)
        out: dict[Partition, int] = {}
        for lam, cl in self.terms.items():
            for mu, cm in other.terms.items():
                if sum(lam) + sum(mu) > w:
                    continue
                key = union(lam, mu)
                out[key] = out.get(key, 0) + cl * cm
        return ShapePoly(out, w)

    def weight_component(self, d) -> dict[Partition, int]:
        return {mu: c for mu, c in self.terms.items() if sum(mu) == d}

    def specialize_degree(self, precision=None) -> TruncSeries:
        """Send q_i to t^i, so each marker q_mu becomes t^|mu|."""
        p = self.max_weight if precision is None else precision
        coeffs = [Fraction(0)] * (p + 1)
        for mu, c in self.terms.items():
            if sum(mu) <= p:
                coeffs[sum(mu)] += c
        return TruncSeries(coeffs)

    def __repr__(self):
        bits = []
        for mu in self.support():
            c = self.terms[mu]
            name = "1" if not mu else "q" + "".join(f"[{p}]" for p in mu)
            bits.append(name if c == 1 and mu else f"{c}*{name}")
        return " + ".join(bits) if bits else "0"


def _egf_shape_counts(d, n) -> dict[Partition, int]:
    # Coefficient extraction from the exponential generating function: the
    # inner series is sum_k q_k t^k / k!, and set partitions into at most n
    # blocks are sum_{m <= n} inner^m / m!.  Returns d! times the t^d
    # coefficient, which must be integral.
    inner: list[dict[Partition, Fraction]] = [dict() for _ in range(d + 1)]
    for k in range(1, d + 1):
        inner[k] = {(k,): Fraction(1, factorial(k))}

    def poly_mul(p, q):
        out: list[dict[Partition, Fraction]] = [dict() for _ in range(d + 1)]
        for i, pi in enumerate(p):
            for j, qj in enumerate(q):
                if i + j > d:
                    break
                for lam, cl in pi.items():
                    for mu, cm in qj.items():
                        key = union(lam, mu)
                        out[i + j][key] = out[i + j].get(key, Fraction(0)) + cl * cm
        return out

    power: list[dict[Partition, Fraction]] = [dict() for _ in range(d + 1)]
    power[0] = {(): Fraction(1)}
    total: dict[Partition, Fraction] = {(): Fraction(1)} if d == 0 else {}
    top = d if n == math.inf else min(int(n), d)
    for m in range(1, top + 1):
        power = poly_mul(power, inner)
        scale = Fraction(1, factorial(m))
        for mu, c in power[d].items():
            total[mu] = total.get(mu, Fraction(0)) + scale * c
    counts = {}
    for mu, c in total.items():
        value = c * factorial(d)
        if value.denominator != 1:
            raise InternalCheckError(f"non-integral shape count at {mu}: {value}")
        if value:
            counts[mu] = int(value)
    return counts


def shape_hilb_ncsym(d, n) -> ShapePoly:
    """Shape enumerator of set partitions of [d] with at most n blocks,
    computed from the exponential generating function and cross-checked
    against direct enumeration."""
    from_egf = _egf_shape_counts(d, n)
    from_enumeration: dict[Partition, int] = {}
    for a in set_partitions(d, n):
        mu = a.shape()
        from_enumeration[mu] = from_enumeration.get(mu, 0) + 1
    if from_egf != from_enumeration:
        raise InternalCheckError(
            f"shape counts disagree at d={d}, n={n}: {from_egf} vs {from_enumeration}"
        )
    return ShapePoly(from_egf, d)


def shape_hilb_sym(max_weight) -> ShapePoly:
    """Every marker q_mu exactly once: the shape enumerator of the
    commutative monomial basis."""
    terms = {}
    for d in range(max_weight + 1):
        for mu in partitions_of(d):
            terms[mu] = 1
    return ShapePoly(terms, max_weight)


def shape_hilb_cosym_inf(max_weight) -> ShapePoly:
    """Shape enumerator of the coinvariant factor at the unbounded alphabet:
    the set partition shape enumerator times the product of (1 - q_i)."""
    bell = ShapePoly({}, max_weight)
    for d in range(max_weight + 1):
        bell = bell + ShapePoly(_egf_shape_counts(d, math.inf), max_weight)
    factor = ShapePoly.one(max_weight)
    for i in range(1, max_weight + 1):
        factor = factor * ShapePoly({(): 1, (i,): -1}, max_weight)
    return bell * factor
