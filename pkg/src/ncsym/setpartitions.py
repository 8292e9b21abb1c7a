"""Set partitions and restricted growth words.

A set partition is stored canonically: each block a sorted tuple, blocks
ordered by their minimum element.  Ground sets may be arbitrary finite sets
of positive integers (shifted partitions occur inside products and
coproducts); only partitions of an initial segment [d] index basis elements.

Restricted growth words are plain tuples of positive integers w with w_1 = 1
and w_i <= 1 + max(w_1..w_{i-1}); they encode set partitions of [d]
bijectively (letter k at position i means i lies in the k-th block).
"""

from __future__ import annotations

import math
from functools import cache
from math import factorial

from .partitions import Partition, check_partition, multiplicity_factorial

Word = tuple[int, ...]


class SetPartition:
    """Pairwise disjoint nonempty blocks of positive integers, canonically ordered."""

    __slots__ = ("blocks", "_hash")

    def __init__(self, blocks):
        seen: set[int] = set()
        clean = []
        for block in blocks:
            b = tuple(sorted(int(x) for x in block))
            if not b:
                raise ValueError("blocks must be nonempty")
            if b[0] < 1:
                raise ValueError("elements must be positive integers")
            if seen.intersection(b):
                raise ValueError(f"blocks are not disjoint: {blocks!r}")
            seen.update(b)
            clean.append(b)
        clean.sort(key=lambda b: b[0])
        self.blocks = tuple(clean)
        self._hash = hash(self.blocks)

    # -- basic structure -------------------------------------------------

    def __len__(self) -> int:
        """Number of blocks."""
        return len(self.blocks)

    @property
    def size(self) -> int:
        """Number of elements in the ground set."""
        return sum(len(b) for b in self.blocks)

    def ground_set(self) -> tuple[int, ...]:
        return tuple(sorted(x for b in self.blocks for x in b))

    @property
    def is_standard(self) -> bool:
        """True when the ground set is exactly {1, ..., d}."""
        g = self.ground_set()
        return g == tuple(range(1, len(g) + 1))

    def shape(self) -> Partition:
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    def __eq__(self, other):
        return isinstance(other, SetPartition) and self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    # -- moving the ground set -------------------------------------------

    def shift(self, k) -> "SetPartition":
        """Add k to every element."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return SetPartition(tuple(x + k for x in b) for b in self.blocks)

    def standardize(self) -> "SetPartition":
        """Pull back along the unique increasing bijection [d] -> ground set."""
        rank = {x: i for i, x in enumerate(self.ground_set(), start=1)}
        return SetPartition(tuple(rank[x] for x in b) for b in self.blocks)

    def apply_permutation(self, perm) -> "SetPartition":
        """Replace every element x by perm(x)."""
        return SetPartition(tuple(perm(x) for x in b) for b in self.blocks)

    # -- words ------------------------------------------------------------

    def word(self) -> Word:
        """The restricted growth word of a partition of [d]."""
        if not self.is_standard:
            raise ValueError("words are defined for partitions of an initial segment")
        w = [0] * self.size
        for k, block in enumerate(self.blocks, start=1):
            for x in block:
                w[x - 1] = k
        return tuple(w)

    # -- text forms ---------------------------------------------------------

    def __str__(self):
        return "/".join(",".join(str(x) for x in b) for b in self.blocks)

    def compact(self) -> str:
        """Dotted shorthand like 13.2, valid when all elements are single digits."""
        if any(x > 9 for b in self.blocks for x in b):
            raise ValueError("compact form needs single-digit elements")
        return ".".join("".join(str(x) for x in b) for b in self.blocks)

    def __repr__(self):
        return f"SetPartition({str(self)!r})"

    @classmethod
    def parse(cls, text) -> "SetPartition":
        """Accepts the canonical form "1,3/2" and the dotted shorthand "13.2"."""
        text = text.strip()
        if not text:
            return cls(())
        if "/" in text or "," in text:
            return cls(part.split(",") for part in text.split("/"))
        if text.replace(".", "").isdigit():
            return cls(list(part) for part in text.split("."))
        raise ValueError(f"cannot parse set partition from {text!r}")


EMPTY = SetPartition(())


# -- enumeration -----------------------------------------------------------


def rg_words(d, max_letter=math.inf):
    """All restricted growth words of length d with letters at most max_letter,
    in lexicographic order."""
    if d == 0:
        yield ()
        return

    def extend(prefix, top):
        if len(prefix) == d:
            yield tuple(prefix)
            return
        for letter in range(1, min(top + 1, max_letter) + 1):
            prefix.append(letter)
            yield from extend(prefix, max(top, letter))
            prefix.pop()

    yield from extend([], 0)


def set_partitions(d, max_blocks=math.inf):
    """All set partitions of [d] with at most max_blocks blocks (word order)."""
    for w in rg_words(d, max_blocks):
        yield from_rgword(w)


@cache
def _stirling2(d, k) -> int:
    if d == 0:
        return 1 if k == 0 else 0
    if k == 0:
        return 0
    return k * _stirling2(d - 1, k) + _stirling2(d - 1, k - 1)


def bell_restricted(d, max_blocks=math.inf) -> int:
    """Number of set partitions of [d] with at most max_blocks blocks."""
    top = d if max_blocks == math.inf else min(d, int(max_blocks))
    return sum(_stirling2(d, k) for k in range(top + 1))


def count_of_shape(mu) -> int:
    """Number of set partitions of [d] whose block sizes form the partition mu."""
    mu = check_partition(mu)
    denom = multiplicity_factorial(mu)
    for p in mu:
        denom *= factorial(p)
    return factorial(sum(mu)) // denom


def partitions_of_shape(mu) -> list[SetPartition]:
    """All set partitions of [|mu|] with block sizes mu, sorted by word order."""
    mu = check_partition(mu)
    out = [a for a in set_partitions(sum(mu)) if a.shape() == mu]
    out.sort(key=lambda a: prec_key(a.word()))
    return out


# -- the quasi-shuffle ------------------------------------------------------


@cache
def _merge_blocks(ablocks, bblocks):
    # All partitions obtained by joining each block of `ablocks` with at most
    # one block of `bblocks` and vice versa.  Recursion on the first a-block:
    # either it stays alone or it absorbs one of the remaining b-blocks.
    if not ablocks:
        return (bblocks,)
    if not bblocks:
        return (ablocks,)
    head, rest = ablocks[0], ablocks[1:]
    out = []
    for tail in _merge_blocks(rest, bblocks):
        out.append((head,) + tail)
    for i, b in enumerate(bblocks):
        merged = tuple(sorted(head + b))
        for tail in _merge_blocks(rest, bblocks[:i] + bblocks[i + 1 :]):
            out.append((merged,) + tail)
    return tuple(out)


def quasi_shuffle(a: SetPartition, b: SetPartition) -> list[SetPartition]:
    """Quasi-shuffles of a partition of [c] with a partition of [d].

    The second operand is shifted up by c, then every way of merging blocks
    pairwise (each block of one operand joining at most one block of the
    other) produces a partition of [c+d].  The result is duplicate-free and
    sorted by word order, so products built from it are reproducible.
    """
    if not (a.is_standard and b.is_standard):
        raise ValueError("quasi-shuffle operands must partition initial segments")
    shifted = b.shift(a.size)
    results = [SetPartition(bls) for bls in _merge_blocks(a.blocks, shifted.blocks)]
    results.sort(key=lambda sp: prec_key(sp.word()))
    return results


# -- word <-> partition -----------------------------------------------------


def is_rgword(w) -> bool:
    top = 0
    for x in w:
        if not 1 <= x <= top + 1:
            return False
        top = max(top, x)
    return True


def from_rgword(w) -> SetPartition:
    w = tuple(int(x) for x in w)
    if not is_rgword(w):
        raise ValueError(f"not a restricted growth word: {w!r}")
    blocks: dict[int, list[int]] = {}
    for pos, letter in enumerate(w, start=1):
        blocks.setdefault(letter, []).append(pos)
    return SetPartition(blocks.values())


def to_rgword(a: SetPartition) -> Word:
    return a.word()


def format_word(w) -> str:
    return ",".join(str(x) for x in w)


def parse_word(text) -> Word:
    """Accepts "1,2,1" and, when every letter is a single digit, bare "121"."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        w = tuple(int(x) for x in text.split(","))
    elif text.isdigit():
        w = tuple(int(c) for c in text)
    else:
        raise ValueError(f"cannot parse word from {text!r}")
    if not is_rgword(w):
        raise ValueError(f"not a restricted growth word: {text!r}")
    return w


# -- word order -------------------------------------------------------------


def prec_key(w):
    """Sort key for the length-then-lexicographic order on words."""
    return (len(w), w)


def prec_compare(u, v) -> int:
    """-1, 0 or 1 according to the length-then-lexicographic order."""
    ku, kv = prec_key(tuple(u)), prec_key(tuple(v))
    return -1 if ku < kv else (0 if ku == kv else 1)


# -- structure of words ------------------------------------------------------


def convex_word(mu) -> Word:
    """The word 1^(mu_1) 2^(mu_2) ... k^(mu_k) of a partition mu.

    This is the length+lex minimal restricted growth word among all words of
    shape mu.
    """
    mu = check_partition(mu)
    out: list[int] = []
    for letter, count in enumerate(mu, start=1):
        out.extend([letter] * count)
    return tuple(out)


def is_convex(w) -> bool:
    """True when w is convex_word(mu) for some partition mu: the letters are
    the runs 1, 2, ..., k in order with weakly decreasing run lengths."""
    runs: list[int] = []
    prev = 0
    for x in w:
        if x == prev:
            runs[-1] += 1
        elif x == prev + 1:
            runs.append(1)
            prev = x
        else:
            return False
    return all(runs[i] >= runs[i + 1] for i in range(len(runs) - 1))


def primary_splitting(w) -> list[Word]:
    """Maximal deconcatenation of w into primary words.

    A cut is placed before every position whose suffix is itself a restricted
    growth word; each resulting piece then has no proper suffix that is one.
    """
    w = tuple(w)
    if not is_rgword(w):
        raise ValueError(f"not a restricted growth word: {w!r}")
    cuts = [0] + [i for i in range(1, len(w)) if is_rgword(w[i:])] + [len(w)]
    return [w[a:b] for a, b in zip(cuts, cuts[1:]) if b > a]


def is_primary(w) -> bool:
    """True when w is a nonempty restricted growth word with no proper suffix
    that is again one."""
    w = tuple(w)
    return bool(w) and is_rgword(w) and len(primary_splitting(w)) == 1


def bimodal_decompose(w) -> tuple[list[Word], Word]:
    """Split w into bimodal factors followed by a convex tail.

    Working left to right through the primary factors of w, an accumulator
    collects factors while their concatenation stays convex; the first factor
    that breaks convexity closes a bimodal word (convex prefix plus one
    primary word) and the accumulator restarts.  Whatever remains at the end
    is the tail.  In particular a word that is itself convex is all tail, and
    a bimodal word is its own single factor.
    """
    factors: list[Word] = []
    acc: Word = ()
    for piece in primary_splitting(w):
        extended = acc + piece
        if is_convex(extended):
            acc = extended
        else:
            factors.append(extended)
            acc = ()
    return factors, acc


def is_bimodal(w) -> bool:
    w = tuple(w)
    return bool(w) and bimodal_decompose(w) == ([w], ())


def is_tail_free(w) -> bool:
    return bimodal_decompose(w)[1] == ()


# -- atomic structure ---------------------------------------------------------


def _cut_positions(a: SetPartition) -> list[int]:
    # Indices s such that the first s blocks partition an initial segment.
    seen = 0
    top = 0
    cuts = []
    for s, block in enumerate(a.blocks, start=1):
        seen += len(block)
        top = max(top, block[-1])
        if top == seen:
            cuts.append(s)
    return cuts


def is_atomic(a: SetPartition) -> bool:
    """True when no proper prefix of blocks partitions an initial segment [c]."""
    if not a.is_standard:
        raise ValueError("atomicity is defined for partitions of [d]")
    if len(a) == 0:
        return False
    return _cut_positions(a) == [len(a)]


def atomic_splitting(a: SetPartition) -> list[SetPartition]:
    """The unique maximal splitting of a into standardized atomic factors."""
    if not a.is_standard:
        raise ValueError("atomic splitting is defined for partitions of [d]")
    cuts = [0] + _cut_positions(a)
    return [
        SetPartition(a.blocks[lo:hi]).standardize()
        for lo, hi in zip(cuts, cuts[1:])
    ]
