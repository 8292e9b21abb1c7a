"""Finitely supported tensors over basis labels.

Coproducts land here: a Tensor maps r-tuples of basis labels (set partitions,
integer partitions, or a mix) to exact rational coefficients.  Only linear
structure lives on this class; slot-wise multiplication is done by the
callers that know what the labels mean.
"""

from __future__ import annotations

from fractions import Fraction


class Tensor:
    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        self.arity = int(arity)
        clean = {}
        for key, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if not coeff:
                continue
            if len(key) != self.arity:
                raise ValueError(f"key {key!r} does not have arity {self.arity}")
            clean[key] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, arity) -> "Tensor":
        return cls(arity)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key) -> Fraction:
        return self.terms.get(tuple(key), Fraction(0))

    def __eq__(self, other):
        return (
            isinstance(other, Tensor)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __add__(self, other):
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + coeff
        return Tensor(self.arity, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def __rmul__(self, scalar):
        scalar = Fraction(scalar)
        return Tensor(self.arity, {k: scalar * v for k, v in self.terms.items()})

    def __repr__(self):
        return f"Tensor({self.arity}, {self.terms!r})"


def tensor_of(*factor_terms) -> Tensor:
    """Tensor product of finitely supported maps label -> coefficient."""
    keys = [((), Fraction(1))]
    for terms in factor_terms:
        keys = [
            (key + (label,), coeff * c)
            for key, coeff in keys
            for label, c in terms.items()
        ]
    return Tensor(len(factor_terms), dict(keys))
