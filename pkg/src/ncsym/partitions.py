"""Integer partitions and permutations.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the unique partition of 0.  Everything downstream (set partition
shapes, symmetric function indices, shape markers) keys off these tuples.
"""

from __future__ import annotations

import math
from math import factorial

Partition = tuple[int, ...]


def check_partition(mu) -> Partition:
    """Validate and normalise a partition given as any iterable of parts."""
    parts = tuple(int(p) for p in mu)
    for i, p in enumerate(parts):
        if p < 1:
            raise ValueError(f"partition parts must be positive integers, got {parts!r}")
        if i and parts[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing, got {parts!r}")
    return parts


def multiplicities(mu) -> dict[int, int]:
    """Map part size i to the number a_i of parts equal to i."""
    out: dict[int, int] = {}
    for p in mu:
        out[p] = out.get(p, 0) + 1
    return out


def dominance_leq(lam, mu) -> bool:
    """Dominance order: every prefix sum of lam is at most the matching one of mu.

    Only partitions of equal weight are comparable; unequal weights raise
    instead of returning False so that a degree mix-up cannot pass silently.
    """
    lam, mu = check_partition(lam), check_partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("incomparable weights")
    acc_l = acc_m = 0
    for k in range(max(len(lam), len(mu))):
        acc_l += lam[k] if k < len(lam) else 0
        acc_m += mu[k] if k < len(mu) else 0
        if acc_l > acc_m:
            return False
    return True


def union(lam, mu) -> Partition:
    """Multiset union of parts, re-sorted into canonical decreasing order."""
    return tuple(sorted(check_partition(lam) + check_partition(mu), reverse=True))


def part_sum(lam, mu) -> Partition:
    """Componentwise sum, the shorter operand padded with zeros."""
    lam, mu = check_partition(lam), check_partition(mu)
    n = max(len(lam), len(mu))
    lam += (0,) * (n - len(lam))
    mu += (0,) * (n - len(mu))
    return tuple(a + b for a, b in zip(lam, mu))


def multiplicity_factorial(mu) -> int:
    """Product a_1! a_2! ... over the part multiplicities of mu."""
    out = 1
    for a in multiplicities(check_partition(mu)).values():
        out *= factorial(a)
    return out


def centralizer_order(mu) -> int:
    """Order of the centralizer of a permutation of cycle type mu: prod i^(a_i) a_i!."""
    out = 1
    for i, a in multiplicities(check_partition(mu)).items():
        out *= i**a * factorial(a)
    return out


def partitions_of(d, max_parts=None) -> list[Partition]:
    """All partitions of d with at most max_parts parts, in decreasing
    lexicographic order, e.g. partitions_of(4) = [(4,), (3,1), (2,2), (2,1,1), (1,1,1,1)].
    """
    if d < 0:
        raise ValueError("weight must be nonnegative")
    if max_parts is None or max_parts == math.inf:
        max_parts = d
    out: list[Partition] = []

    def emit(remaining, bound, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        room = max_parts - len(prefix)
        if room <= 0:
            return
        for p in range(min(bound, remaining), 0, -1):
            if p * room < remaining:
                break
            prefix.append(p)
            emit(remaining - p, p, prefix)
            prefix.pop()

    emit(d, d, [])
    return out


def format_partition(mu) -> str:
    """Comma-joined decreasing parts; the empty partition is the empty string."""
    return ",".join(str(p) for p in mu)


def parse_partition(text) -> Partition:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse partition from {text!r}") from None
    return check_partition(parts)


class Permutation:
    """A permutation of [d], stored as the tuple of images (sigma(1), ..., sigma(d))."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images!r}")
        self.images = images

    @classmethod
    def identity(cls, d) -> "Permutation":
        return cls(range(1, d + 1))

    @classmethod
    def from_cycle_type(cls, mu) -> "Permutation":
        """Canonical representative with cycles (1..mu_1)(mu_1+1..mu_1+mu_2)..."""
        mu = check_partition(mu)
        images = list(range(1, sum(mu) + 1))
        start = 0
        for p in mu:
            for j in range(p):
                images[start + j] = start + 1 + (j + 1) % p
            start += p
        return cls(images)

    def __call__(self, i) -> int:
        return self.images[i - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def compose(self, other) -> "Permutation":
        """Function composition self after other: i -> self(other(i)).

        This is the composite that acts on the right through repeated
        place-actions: acting by self, then by other, equals acting by
        self.compose(other).
        """
        if len(self) != len(other):
            raise ValueError("size mismatch")
        return Permutation(self(other(i)) for i in range(1, len(self) + 1))

    def cycle_type(self) -> Partition:
        seen = [False] * len(self.images)
        sizes = []
        for i in range(1, len(self.images) + 1):
            if seen[i - 1]:
                continue
            size, j = 0, i
            while not seen[j - 1]:
                seen[j - 1] = True
                size += 1
                j = self(j)
            sizes.append(size)
        return tuple(sorted(sizes, reverse=True))
