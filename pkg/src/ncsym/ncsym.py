"""The algebra of symmetric functions in noncommuting variables.

Elements are finitely supported rational combinations of monomials m_A
indexed by set partitions of initial segments, tagged with an alphabet size
n (a positive integer, or math.inf for the unbounded alphabet).  A monomial
whose index has more than n blocks is zero; products truncate accordingly.

The product is the quasi-shuffle rule, the coproduct splits blocks into
complementary subsets, and the symmetric group acts on the right by
permuting word positions (the place action).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import cache

from .partitions import Permutation, check_partition, multiplicity_factorial
from .setpartitions import (
    EMPTY,
    SetPartition,
    count_of_shape,
    partitions_of_shape,
    prec_key,
    quasi_shuffle,
)
from .tensor import Tensor


def _check_alphabet(n):
    if n == math.inf or (isinstance(n, int) and n >= 1):
        return n
    raise ValueError(f"alphabet size must be a positive integer or math.inf, got {n!r}")


class NCSymElement:
    """A rational linear combination of set partition monomials."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, terms=None, alphabet=math.inf):
        self.alphabet = _check_alphabet(alphabet)
        clean = {}
        for sp, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if not coeff or len(sp) > self.alphabet:
                continue
            if not sp.is_standard:
                raise ValueError(f"basis indices must partition [d], got {sp!r}")
            clean[sp] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, alphabet=math.inf) -> "NCSymElement":
        return cls({}, alphabet)

    @classmethod
    def one(cls, alphabet=math.inf) -> "NCSymElement":
        return cls({EMPTY: Fraction(1)}, alphabet)

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, sp) -> Fraction:
        return self.terms.get(sp, Fraction(0))

    def support(self) -> list[SetPartition]:
        return sorted(self.terms, key=lambda a: prec_key(a.word()))

    def degrees(self) -> set[int]:
        return {a.size for a in self.terms}

    def homogeneous_degree(self) -> int | None:
        """The common degree of all terms, or None for 0 or mixed elements."""
        ds = self.degrees()
        return ds.pop() if len(ds) == 1 else None

    def component(self, d) -> "NCSymElement":
        return NCSymElement(
            {a: c for a, c in self.terms.items() if a.size == d}, self.alphabet
        )

    def coefficient_sum(self) -> Fraction:
        return sum(self.terms.values(), Fraction(0))

    # -- linear structure ---------------------------------------------------

    def _require_same_alphabet(self, other):
        if self.alphabet != other.alphabet:
            raise ValueError("alphabet mismatch")

    def __eq__(self, other):
        return (
            isinstance(other, NCSymElement)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __add__(self, other):
        self._require_same_alphabet(other)
        out = dict(self.terms)
        for sp, coeff in other.terms.items():
            out[sp] = out.get(sp, Fraction(0)) + coeff
        return NCSymElement(out, self.alphabet)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return NCSymElement(
            {sp: scalar * c for sp, c in self.terms.items()}, self.alphabet
        )

    def __mul__(self, other):
        if isinstance(other, NCSymElement):
            return multiply(self, other)
        return Fraction(other) * self

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for sp in self.support():
            c = self.terms[sp]
            name = f"m[{sp}]"
            bits.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(bits)

    def __repr__(self):
        return f"<NCSymElement {self} @ n={self.alphabet}>"


def monomial(a: SetPartition, alphabet=math.inf) -> NCSymElement:
    """The basis element m_A; zero when A has more blocks than the alphabet."""
    return NCSymElement({a: Fraction(1)}, alphabet)


def multiply(f: NCSymElement, g: NCSymElement) -> NCSymElement:
    """Bilinear extension of the quasi-shuffle rule, truncated to the alphabet."""
    f._require_same_alphabet(g)
    out: dict[SetPartition, Fraction] = {}
    for a, ca in f.terms.items():
        for b, cb in g.terms.items():
            c = ca * cb
            for sp in quasi_shuffle(a, b):
                out[sp] = out.get(sp, Fraction(0)) + c
    return NCSymElement(out, f.alphabet)


def lie_bracket(f: NCSymElement, g: NCSymElement) -> NCSymElement:
    return multiply(f, g) - multiply(g, f)


# -- coalgebra ----------------------------------------------------------------


def coproduct(f: NCSymElement) -> Tensor:
    """Split each index into complementary block subsets, standardizing both."""
    out: dict[tuple, Fraction] = {}
    for a, coeff in f.terms.items():
        blocks = a.blocks
        for r in range(len(blocks) + 1):
            for picked in itertools.combinations(range(len(blocks)), r):
                chosen = set(picked)
                left = SetPartition(blocks[i] for i in picked).standardize()
                right = SetPartition(
                    blocks[i] for i in range(len(blocks)) if i not in chosen
                ).standardize()
                key = (left, right)
                out[key] = out.get(key, Fraction(0)) + coeff
    return Tensor(2, out)


def counit(f: NCSymElement) -> Fraction:
    return f.coefficient(EMPTY)


def reduced_coproduct(f: NCSymElement) -> Tensor:
    """The coproduct with the two trivial terms f x 1 and 1 x f removed."""
    if counit(f):
        raise ValueError("reduced coproduct needs a counit-free element")
    full = coproduct(f)
    out = {
        key: c
        for key, c in full.terms.items()
        if key[0] != EMPTY and key[1] != EMPTY
    }
    return Tensor(2, out)


def iterated_reduced_coproduct(f: NCSymElement, r) -> Tensor:
    """The r-fold tensor obtained by applying the reduced coproduct r-1 times,
    always expanding the leftmost slot.

    On a monomial with r blocks this produces the sum over all orderings of
    the blocks of the tensor of their standardizations.
    """
    if r < 1:
        raise ValueError("tensor arity must be at least 1")
    if counit(f):
        raise ValueError("iterated reduced coproduct needs a counit-free element")
    current = Tensor(1, {(a,): c for a, c in f.terms.items()})
    for _ in range(r - 1):
        out: dict[tuple, Fraction] = {}
        for key, coeff in current.terms.items():
            head = reduced_coproduct(monomial(key[0], f.alphabet))
            for (left, right), c in head.terms.items():
                new = (left, right) + key[1:]
                out[new] = out.get(new, Fraction(0)) + coeff * c
        current = Tensor(current.arity + 1, out)
    return current


# -- place action ---------------------------------------------------------------


def place_act(f: NCSymElement, rho: Permutation) -> NCSymElement:
    """Right action permuting word positions: m_A . rho = m with blocks rho^{-1}(A_i).

    Acting by rho and then by sigma equals acting by rho.compose(sigma).
    """
    d = len(rho)
    if any(a.size != d for a in f.terms):
        raise ValueError("degree mismatch between element and permutation")
    inv = rho.inverse()
    out: dict[SetPartition, Fraction] = {}
    for a, coeff in f.terms.items():
        image = a.apply_permutation(inv)
        out[image] = out.get(image, Fraction(0)) + coeff
    return NCSymElement(out, f.alphabet)


def place_invariant(mu, alphabet=math.inf) -> NCSymElement:
    """The canonical place-action invariant of shape mu: the sum of all
    monomials of that shape, divided by (number of such partitions) times the
    multiplicity factorial of mu.  Abelianizing it gives the commutative
    monomial of mu."""
    return _place_invariant(check_partition(mu), _check_alphabet(alphabet))


@cache
def _place_invariant(mu, alphabet):
    if len(mu) > alphabet:
        return NCSymElement.zero(alphabet)
    norm = Fraction(1, count_of_shape(mu) * multiplicity_factorial(mu))
    return NCSymElement({a: norm for a in partitions_of_shape(mu)}, alphabet)


# -- leading terms ------------------------------------------------------------


def leading_term(f: NCSymElement) -> tuple[SetPartition, Fraction]:
    """Support index minimal in the length-then-lexicographic word order."""
    if f.is_zero():
        raise ValueError("the zero element has no leading term")
    a = min(f.terms, key=lambda sp: prec_key(sp.word()))
    return a, f.terms[a]


# -- expansion into honest words ------------------------------------------------


def word_expansion(f: NCSymElement, k) -> dict[tuple, Fraction]:
    """Expand f as a polynomial in k noncommuting variables.

    Keys are words over {1..k} (variable indices per position); a monomial
    m_A contributes one word for each injection of its blocks into the
    variables.  Used as an independent oracle for the product.
    """
    if not (isinstance(k, int) and k >= 1):
        raise ValueError("need a finite positive number of variables")
    out: dict[tuple, Fraction] = {}
    for a, coeff in f.terms.items():
        for chosen in itertools.permutations(range(1, k + 1), len(a)):
            word = [0] * a.size
            for var, block in zip(chosen, a.blocks):
                for pos in block:
                    word[pos - 1] = var
            key = tuple(word)
            out[key] = out.get(key, Fraction(0)) + coeff
    return {w: c for w, c in out.items() if c}


def collect_by_type(words: dict, alphabet) -> NCSymElement:
    """Regroup an explicit word polynomial over {1..k} into monomials.

    Every word is assigned to the set partition of its equal-letter
    positions; all words of one type must occur, with a common coefficient,
    or the polynomial is not symmetric and a ValueError is raised.
    """
    if alphabet == math.inf or not isinstance(alphabet, int):
        raise ValueError("collecting types needs the finite variable count used to expand")
    grouped: dict[SetPartition, dict] = {}
    for w, coeff in words.items():
        coeff = Fraction(coeff)
        if not coeff:
            continue
        fibers: dict[int, list[int]] = {}
        for pos, letter in enumerate(w, start=1):
            fibers.setdefault(letter, []).append(pos)
        sp = SetPartition(fibers.values())
        grouped.setdefault(sp, {})[w] = coeff
    terms = {}
    for sp, bucket in grouped.items():
        values = set(bucket.values())
        expected = math.perm(alphabet, len(sp))
        if len(values) != 1 or len(bucket) != expected:
            raise ValueError(f"polynomial is not symmetric at type {sp}")
        terms[sp] = values.pop()
    return NCSymElement(terms, alphabet)


# -- serialization ---------------------------------------------------------------


def format_alphabet(n) -> str:
    return "inf" if n == math.inf else str(n)


def parse_alphabet(text):
    text = text.strip().lower()
    if text in ("inf", "infinity", "oo"):
        return math.inf
    n = int(text)
    if n < 1:
        raise ValueError("alphabet size must be positive")
    return n


def element_to_dict(f: NCSymElement) -> dict:
    return {
        "alphabet": format_alphabet(f.alphabet),
        "terms": [
            {"sp": str(a), "coeff": str(f.terms[a])} for a in f.support()
        ],
    }


def element_from_dict(data: dict) -> NCSymElement:
    terms = {
        SetPartition.parse(item["sp"]): Fraction(item["coeff"])
        for item in data["terms"]
    }
    return NCSymElement(terms, parse_alphabet(data["alphabet"]))
