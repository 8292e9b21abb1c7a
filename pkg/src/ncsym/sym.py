"""Symmetric polynomials in commuting variables, in the monomial basis.

Elements are rational combinations of monomials indexed by integer
partitions, again tagged with an alphabet size n; a monomial with more than
n parts is zero.  The two maps connecting this ring with its noncommutative
counterpart live here: `abelianize` lets the variables commute, and
`lift_symmetric` is its canonical right inverse sending each monomial to the
matching place-action invariant.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import cache

from . import ncsym as nc
from .partitions import (
    Partition,
    check_partition,
    format_partition,
    multiplicity_factorial,
    multiplicities,
    parse_partition,
)
from .tensor import Tensor


def _sort_key(mu):
    # weight first, then decreasing lexicographic within a weight
    return (sum(mu), tuple(-p for p in mu))


class SymElement:
    """A rational linear combination of monomial symmetric polynomials."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, terms=None, alphabet=math.inf):
        self.alphabet = nc._check_alphabet(alphabet)
        clean = {}
        for mu, coeff in (terms or {}).items():
            mu = check_partition(mu)
            coeff = Fraction(coeff)
            if not coeff or len(mu) > self.alphabet:
                continue
            clean[mu] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, alphabet=math.inf) -> "SymElement":
        return cls({}, alphabet)

    @classmethod
    def one(cls, alphabet=math.inf) -> "SymElement":
        return cls({(): Fraction(1)}, alphabet)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mu) -> Fraction:
        return self.terms.get(check_partition(mu), Fraction(0))

    def support(self) -> list[Partition]:
        return sorted(self.terms, key=_sort_key)

    def degrees(self) -> set[int]:
        return {sum(mu) for mu in self.terms}

    def _require_same_alphabet(self, other):
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, SymElement)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __add__(self, other):
        self._require_same_alphabet(other)
        out = dict(self.terms)
        for mu, coeff in other.terms.items():
            out[mu] = out.get(mu, Fraction(0)) + coeff
        return SymElement(out, self.alphabet)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return SymElement({mu: scalar * c for mu, c in self.terms.items()}, self.alphabet)

    def __mul__(self, other):
        if isinstance(other, SymElement):
            return multiply(self, other)
        return Fraction(other) * self

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for mu in self.support():
            c = self.terms[mu]
            name = f"m[{format_partition(mu)}]"
            bits.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(bits)

    def __repr__(self):
        return f"<SymElement {self} @ n={self.alphabet}>"


def monomial(mu, alphabet=math.inf) -> SymElement:
    return SymElement({check_partition(mu): Fraction(1)}, alphabet)


# -- the two maps ---------------------------------------------------------------


def abelianize(f: nc.NCSymElement) -> SymElement:
    """Let the variables commute: m_A maps to (multiplicity factorial of its
    shape) times the commutative monomial of that shape."""
    out: dict[Partition, Fraction] = {}
    for a, coeff in f.terms.items():
        mu = a.shape()
        out[mu] = out.get(mu, Fraction(0)) + coeff * multiplicity_factorial(mu)
    return SymElement(out, f.alphabet)


def lift_symmetric(f: SymElement) -> nc.NCSymElement:
    """The coalgebra splitting of abelianize, sending each commutative
    monomial to the place-action invariant of its shape."""
    out = nc.NCSymElement.zero(f.alphabet)
    for mu, coeff in f.terms.items():
        out = out + coeff * nc.place_invariant(mu, f.alphabet)
    return out


# -- product ----------------------------------------------------------------------


@cache
def _basis_product(lam, mu) -> tuple:
    # structure constants at the unbounded alphabet, as a tuple of items
    prod = nc.multiply(nc.place_invariant(lam), nc.place_invariant(mu))
    return tuple(abelianize(prod).terms.items())


def multiply(f: SymElement, g: SymElement) -> SymElement:
    """Product computed by lifting both factors, multiplying upstairs with the
    quasi-shuffle at the unbounded alphabet, abelianizing, and truncating to
    the common alphabet.  Monomials with too many parts drop out at the end."""
    f._require_same_alphabet(g)
    out: dict[Partition, Fraction] = {}
    for lam, cl in f.terms.items():
        for mu, cm in g.terms.items():
            for kappa, c in _basis_product(lam, mu):
                out[kappa] = out.get(kappa, Fraction(0)) + cl * cm * c
    return SymElement(out, f.alphabet)


# -- coalgebra ---------------------------------------------------------------------


def coproduct(f: SymElement) -> Tensor:
    """Sum over ordered pairs of complementary sub-multisets of each index;
    a pair of multisets is counted once however the repeated parts are chosen."""
    out: dict[tuple, Fraction] = {}
    for mu, coeff in f.terms.items():
        mult = multiplicities(mu)
        sizes = sorted(mult, reverse=True)
        choices = [range(mult[s] + 1) for s in sizes]
        for picks in itertools.product(*choices):
            left, right = [], []
            for size, take in zip(sizes, picks):
                left.extend([size] * take)
                right.extend([size] * (mult[size] - take))
            key = (tuple(left), tuple(right))
            out[key] = out.get(key, Fraction(0)) + coeff
    return Tensor(2, out)


def counit(f: SymElement) -> Fraction:
    return f.coefficient(())


# -- explicit polynomial expansion ---------------------------------------------------


def expand_oracle(f: SymElement, k) -> dict[tuple, Fraction]:
    """Expand f in k commuting variables; keys are exponent vectors of length k.

    A monomial of shape mu contributes every vector obtained by placing the
    parts of mu, in some arrangement, on a subset of the variables.  This is
    the definition of the monomial basis and is used to validate the product
    independently of the quasi-shuffle machinery.
    """
    if not (isinstance(k, int) and k >= 1):
        raise ValueError("need a finite positive number of variables")
    out: dict[tuple, Fraction] = {}
    for mu, coeff in f.terms.items():
        r = len(mu)
        if r > k:
            continue
        arrangements = sorted(set(itertools.permutations(mu)))
        for positions in itertools.combinations(range(k), r):
            for arr in arrangements:
                vec = [0] * k
                for pos, e in zip(positions, arr):
                    vec[pos] = e
                key = tuple(vec)
                out[key] = out.get(key, Fraction(0)) + coeff
    return {v: c for v, c in out.items() if c}


def poly_product(p: dict, q: dict) -> dict:
    """Product of two exponent-vector polynomials (exponents add)."""
    out: dict[tuple, Fraction] = {}
    for v1, c1 in p.items():
        for v2, c2 in q.items():
            key = tuple(a + b for a, b in zip(v1, v2))
            out[key] = out.get(key, Fraction(0)) + Fraction(c1) * Fraction(c2)
    return {v: c for v, c in out.items() if c}


def collect_exponents(poly: dict, k) -> SymElement:
    """Regroup an exponent-vector polynomial in k variables into monomials.

    Raises when the polynomial is not symmetric (coefficients within one
    sorted-exponent class must agree, and the class must be complete).
    """
    grouped: dict[Partition, dict] = {}
    for vec, coeff in poly.items():
        coeff = Fraction(coeff)
        if not coeff:
            continue
        mu = tuple(sorted((e for e in vec if e), reverse=True))
        grouped.setdefault(mu, {})[vec] = coeff
    terms = {}
    for mu, bucket in grouped.items():
        values = set(bucket.values())
        count = math.comb(k, len(mu)) * (
            math.factorial(len(mu)) // multiplicity_factorial(mu)
        )
        if len(values) != 1 or len(bucket) != count:
            raise ValueError(f"polynomial is not symmetric at shape {mu}")
        terms[mu] = values.pop()
    return SymElement(terms, k)


# -- serialization -------------------------------------------------------------------


def element_to_dict(f: SymElement) -> dict:
    return {
        "alphabet": nc.format_alphabet(f.alphabet),
        "terms": [
            {"partition": format_partition(mu), "coeff": str(f.terms[mu])}
            for mu in f.support()
        ],
    }


def element_from_dict(data: dict) -> SymElement:
    terms = {
        parse_partition(item["partition"]): Fraction(item["coeff"])
        for item in data["terms"]
    }
    return SymElement(terms, nc.parse_alphabet(data["alphabet"]))
