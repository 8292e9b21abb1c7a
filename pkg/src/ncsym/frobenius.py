"""Character calculus for the place action: power sums, plethysm, Schur
expansions, and a brute-force fixed point counter.

Symmetric functions here live in infinitely many variables and are stored as
rational combinations of power sums p_mu.  Schur coefficients are recovered
through symmetric group characters computed with the border-strip recursion
on beta-sets (first-column hook lengths), which is exact and fast at the
degrees this library targets.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import cache
from math import factorial

from .partitions import (
    Partition,
    Permutation,
    centralizer_order,
    check_partition,
    multiplicities,
    partitions_of,
)
from .setpartitions import set_partitions


class PExpansion:
    """A rational combination of power sum symmetric functions."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for mu, coeff in (terms or {}).items():
            mu = check_partition(mu)
            coeff = Fraction(coeff)
            if coeff:
                clean[mu] = coeff
        self.terms = clean

    @classmethod
    def zero(cls) -> "PExpansion":
        return cls()

    @classmethod
    def one(cls) -> "PExpansion":
        return cls({(): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mu) -> Fraction:
        return self.terms.get(check_partition(mu), Fraction(0))

    def homogeneous_weight(self) -> int | None:
        ws = {sum(mu) for mu in self.terms}
        return ws.pop() if len(ws) == 1 else None

    def component(self, d) -> "PExpansion":
        return PExpansion({mu: c for mu, c in self.terms.items() if sum(mu) == d})

    def __eq__(self, other):
        return isinstance(other, PExpansion) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out.get(mu, Fraction(0)) + c
        return PExpansion(out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return PExpansion({mu: scalar * c for mu, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, PExpansion):
            out: dict[Partition, Fraction] = {}
            for lam, cl in self.terms.items():
                for mu, cm in other.terms.items():
                    key = tuple(sorted(lam + mu, reverse=True))
                    out[key] = out.get(key, Fraction(0)) + cl * cm
            return PExpansion(out)
        return Fraction(other) * self

    def __repr__(self):
        return f"PExpansion({self.terms!r})"


def h_in_p(k) -> PExpansion:
    """The complete homogeneous function of degree k: sum over mu of p_mu / z_mu."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    return PExpansion({mu: Fraction(1, centralizer_order(mu)) for mu in partitions_of(k)})


def _scale_parts(g: PExpansion, k) -> PExpansion:
    # plethysm by a single power sum: every part of every index is multiplied by k
    return PExpansion({tuple(k * p for p in mu): c for mu, c in g.terms.items()})


def plethysm(f: PExpansion, g: PExpansion) -> PExpansion:
    """Plethysm f[g], linear in f, with p_k[g] substituting p_j -> p_{jk}."""
    out = PExpansion.zero()
    for lam, coeff in f.terms.items():
        term = PExpansion.one()
        for part in lam:
            term = term * _scale_parts(g, part)
        out = out + coeff * term
    return out


def frob_shape(mu) -> PExpansion:
    """Frobenius characteristic of the span of monomials with block sizes mu:
    the product over part sizes i of h_{a_i}[h_i], where a_i counts parts of
    size i."""
    mu = check_partition(mu)
    out = PExpansion.one()
    for i, a in sorted(multiplicities(mu).items()):
        out = out * plethysm(h_in_p(a), h_in_p(i))
    return out


# -- characters and Schur coefficients -------------------------------------------


def _beta_set(lam) -> tuple:
    n = len(lam)
    return tuple(lam[i] + (n - 1 - i) for i in range(n))


def _partition_from_beta(beta) -> Partition:
    beta = sorted(beta, reverse=True)
    n = len(beta)
    lam = [beta[i] - (n - 1 - i) for i in range(n)]
    return tuple(p for p in lam if p)


@cache
def character(lam, mu) -> int:
    """Irreducible character value chi^lam(mu) by border-strip removal.

    A strip of size k is removed by lowering one beta-number by k; the sign
    is (-1) raised to the number of beta-numbers jumped over.
    """
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("character needs partitions of equal weight")
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    beta = set(_beta_set(lam))
    total = 0
    for b in beta:
        if b >= k and (b - k) not in beta:
            height = sum(1 for c in beta if b - k < c < b)
            smaller = _partition_from_beta((beta - {b}) | {b - k})
            total += (-1) ** height * character(smaller, rest)
    return total


def p_to_schur(f: PExpansion) -> dict[Partition, Fraction]:
    """Schur coefficients of a homogeneous power sum expansion."""
    d = f.homogeneous_weight()
    if d is None:
        raise ValueError("Schur conversion needs a homogeneous input")
    out: dict[Partition, Fraction] = {}
    for lam in partitions_of(d):
        val = sum(
            (character(lam, mu) * c for mu, c in f.terms.items()), Fraction(0)
        )
        if val:
            out[lam] = val
    return out


def schur_dim(lam) -> int:
    """Number of standard tableaux of shape lam, by the hook length formula."""
    lam = check_partition(lam)
    if not lam:
        return 1
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])]
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(sum(lam)) // hooks


# -- fixed points of the place action ----------------------------------------------


def fixed_points(d, mu, max_blocks=math.inf) -> int:
    """Number of set partitions of [d] (with at most max_blocks blocks) fixed
    by the canonical permutation of cycle type mu."""
    mu = check_partition(mu)
    if sum(mu) != d:
        raise ValueError("cycle type must have weight d")
    sigma = Permutation.from_cycle_type(mu)
    return sum(
        1 for a in set_partitions(d, max_blocks) if a.apply_permutation(sigma) == a
    )
