"""Hirzebruch-Jung continued fractions and resolution-diagram formatting.

A chain ``[b1, ..., bs]`` stands for ``b1 - 1/(b2 - 1/(...))``.  Chains with
all entries >= 2 are exactly the dual resolution graphs of cyclic quotient
surface singularities; chains containing 1s appear only as ambient-curve
configurations and may be evaluated but never emitted by expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DegenerateChain, InvalidInput

Chain = tuple[int, ...]


def hj_expand(m: int, q: int) -> Chain:
    """Expand m/q, 1 <= q < m, gcd(m, q) = 1, into a chain of entries >= 2."""
    if m < 2 or not 1 <= q < m:
        raise InvalidInput(f"need 1 <= q < m with m >= 2, got m={m}, q={q}")
    if gcd(m, q) != 1:
        raise InvalidInput(f"gcd({m}, {q}) != 1")
    entries = []
    while q > 0:
        b = -(-m // q)  # ceil(m / q)
        entries.append(b)
        m, q = q, b * q - m
    return tuple(entries)


def hj_eval(chain: Chain) -> tuple[int, int]:
    """Evaluate a chain to a coprime pair (num, den) with value num/den.

    Entries >= 1 are allowed; a zero denominator raises
    :class:`DegenerateChain` (this can only happen with entries <= 1).
    """
    if not chain:
        raise InvalidInput("empty chain")
    if any(b < 1 for b in chain):
        raise InvalidInput("entries must be >= 1")
    num, den = chain[-1], 1
    for b in reversed(chain[:-1]):
        if num == 0:
            raise DegenerateChain(f"zero denominator while evaluating {list(chain)}")
        num, den = b * num - den, num
    return num, den


def conjugate(m: int, q: int) -> tuple[int, int]:
    """The conjugate singularity parameters (m, m - q); an involution."""
    hj_expand(m, q)  # validates
    return m, m - q


def reverse(chain: Chain) -> Chain:
    return tuple(reversed(chain))


# -- display -----------------------------------------------------------------
#
# Diagrams are alternating sequences of chains (tuples of self-intersection
# negatives) and single curves (their actual self-intersection, <= -1).
# Rendering is whitespace-free ASCII, e.g. "[4]-(-1)-[6,2,2]"; empty chains
# are dropped.

Piece = Chain | int


def format_chain(chain: Chain) -> str:
    return "[" + ",".join(str(b) for b in chain) + "]"


def format_diagram(pieces: tuple[Piece, ...]) -> str:
    parts = []
    for piece in pieces:
        if isinstance(piece, int):
            parts.append(f"({piece})")
        elif piece:
            parts.append(format_chain(piece))
    return "-".join(parts)


@dataclass(frozen=True)
class MarkedChain:
    """A chain of curves with one marked curve of self-intersection ``mark``."""

    left: Chain
    mark: int
    right: Chain

    def __post_init__(self):
        if self.mark > -1:
            raise InvalidInput("marked curve must have self-intersection <= -1")
        if any(b < 2 for b in self.left) or any(b < 2 for b in self.right):
            raise InvalidInput("side chains must have entries >= 2")

    def display(self) -> str:
        return format_diagram((self.left, self.mark, self.right))


def format_marked(chain: MarkedChain) -> str:
    return chain.display()
