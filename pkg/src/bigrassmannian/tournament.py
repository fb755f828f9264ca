"""Tournaments on [n] as bit tables over the pairs i < j.

Bit r is 1 when the edge between the r-th pair (i, j) points j -> i (an
inversion) and 0 when it points i -> j.  Pairs are ranked lexicographically:
(1,2), (1,3), ..., (1,n), (2,3), ...  Serialized form is the bit string in
that order, e.g. "011" for n = 3.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import Iterator

from .errors import BoundExceeded, NotTransitive
from .permstat import Permutation, inversions

ENUMERATION_BOUND = 7
MATCHING_BOUND = 6


@lru_cache(maxsize=None)
def pair_list(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(
        (i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1))


@lru_cache(maxsize=None)
def pair_rank(n: int) -> dict[tuple[int, int], int]:
    return {p: r for r, p in enumerate(pair_list(n))}


class Tournament:
    """Immutable orientation of the complete graph on [n]."""

    __slots__ = ("n", "bits")

    def __init__(self, n: int, bits: int):
        if bits < 0 or bits >> (n * (n - 1) // 2):
            raise ValueError("bit table out of range")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, *_):
        raise AttributeError("Tournament is immutable")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Tournament)
                and self.n == other.n and self.bits == other.bits)

    def __hash__(self) -> int:
        return hash((self.n, self.bits))

    def __repr__(self) -> str:
        return f"Tournament({self.n}, 0b{self.bits:0{self.n*(self.n-1)//2}b})"

    def inverted(self, i: int, j: int) -> bool:
        """True when the edge between i < j points j -> i."""
        return bool(self.bits >> pair_rank(self.n)[(i, j)] & 1)

    def to_bit_string(self) -> str:
        m = self.n * (self.n - 1) // 2
        return "".join(
            "1" if self.bits >> r & 1 else "0" for r in range(m))

    @staticmethod
    def from_bit_string(n: int, text: str) -> "Tournament":
        m = n * (n - 1) // 2
        if len(text) != m or set(text) - {"0", "1"}:
            raise ValueError(f"expected {m} bits for n={n}")
        bits = 0
        for r, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << r
        return Tournament(n, bits)


def enumerate_tn(n: int, max_n: int = ENUMERATION_BOUND) -> Iterator[Tournament]:
    """All 2^(n(n-1)/2) tournaments in increasing bit-table order."""
    if n > max_n:
        raise BoundExceeded(f"T_{n} enumeration above bound {max_n}")
    for bits in range(1 << (n * (n - 1) // 2)):
        yield Tournament(n, bits)


def t_length(g: Tournament) -> int:
    return bin(g.bits).count("1")


def t_beta(g: Tournament) -> int:
    """Sum of j - i over inverted edges j -> i."""
    total = 0
    for r, (i, j) in enumerate(pair_list(g.n)):
        if g.bits >> r & 1:
            total += j - i
    return total


def outdegree(g: Tournament, v: int) -> int:
    deg = 0
    rank = pair_rank(g.n)
    for u in range(1, g.n + 1):
        if u == v:
            continue
        if u < v:
            deg += g.bits >> rank[(u, v)] & 1
        else:
            deg += 1 - (g.bits >> rank[(v, u)] & 1)
    return deg


def outdegrees(g: Tournament) -> tuple[int, ...]:
    degs = [0] * (g.n + 1)
    for r, (i, j) in enumerate(pair_list(g.n)):
        if g.bits >> r & 1:
            degs[j] += 1
        else:
            degs[i] += 1
    return tuple(degs[1:])


def is_cycle(g: Tournament, i: int, j: int, k: int) -> int:
    """0 when (i,j,k) is transitive, +1 positive cycle, -1 negative cycle."""
    dij = g.inverted(i, j)
    djk = g.inverted(j, k)
    dik = g.inverted(i, k)
    if dij == djk and dik != dij:
        return 1 if dij else -1
    return 0


def find_cycles(g: Tournament) -> list[tuple[tuple[int, int, int], int]]:
    """All cyclic triples i < j < k with their sign, lexicographic order."""
    out = []
    for i in range(1, g.n + 1):
        for j in range(i + 1, g.n + 1):
            for k in range(j + 1, g.n + 1):
                s = is_cycle(g, i, j, k)
                if s:
                    out.append(((i, j, k), s))
    return out


def is_transitive(g: Tournament) -> bool:
    # a tournament is transitive iff its outdegrees are 0, 1, ..., n-1
    return sorted(outdegrees(g)) == list(range(g.n))


def c_involution(g: Tournament, i: int, j: int, k: int) -> Tournament:
    """Reverse the (i,j,k) cycle when there is one, else return g."""
    if not i < j < k:
        raise ValueError("triple must satisfy i < j < k")
    if not is_cycle(g, i, j, k):
        return g
    rank = pair_rank(g.n)
    mask = (1 << rank[(i, j)]) | (1 << rank[(j, k)]) | (1 << rank[(i, k)])
    return Tournament(g.n, g.bits ^ mask)


def to_tournament(w: Permutation) -> Tournament:
    """The transitive tournament with the same inversion set as w."""
    bits = 0
    rank = pair_rank(w.n)
    for i, j in inversions(w):
        bits |= 1 << rank[(i, j)]
    return Tournament(w.n, bits)


def from_transitive(g: Tournament) -> Permutation:
    """Inverse of to_tournament; vertices sorted by outdegree.

    In a transitive tournament the outdegree of v is n - position of v, so
    the word is recovered directly.  Raises NotTransitive otherwise.
    """
    degs = outdegrees(g)
    if sorted(degs) != list(range(g.n)):
        raise NotTransitive(f"outdegrees {degs} are not 0..{g.n - 1}")
    word = [0] * g.n
    for v, d in enumerate(degs, start=1):
        word[g.n - d - 1] = v
    w = Permutation(word)
    if to_tournament(w) != g:
        raise NotTransitive("tournament contains a 3-cycle")
    return w


def triples(n: int) -> list[tuple[int, int, int]]:
    return [
        (i, j, k)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        for k in range(j + 1, n + 1)
    ]


def _triple_masks(n: int) -> list[tuple[tuple[int, int, int], int]]:
    rank = pair_rank(n)
    return [
        (t, (1 << rank[(t[0], t[1])])
            | (1 << rank[(t[1], t[2])])
            | (1 << rank[(t[0], t[2])]))
        for t in triples(n)
    ]


def perfect_matching(
    n: int, max_n: int = MATCHING_BOUND
) -> list[tuple[Tournament, Tournament]]:
    """Pair off the non-transitive tournaments by reversing 3-cycles.

    Triples are processed in lexicographic order; at the stage for (i,j,k)
    every still-unmatched tournament with a cycle on (i,j,k) whose image
    under the cycle reversal is also unmatched gets paired with that image.
    A tournament can be stranded when all its reversal partners were
    consumed at earlier stages (this first happens at n = 5); stranded
    tournaments are then placed by alternating-path augmentation over the
    same cycle-reversal moves, which always succeeds because reversals flip
    the parity of the length, making the move graph bipartite.

    The result partitions T_n minus the transitive tournaments into 2-sets
    joined by one cycle reversal, hence with equal beta and lengths of
    opposite parity.
    """
    if n > max_n:
        raise BoundExceeded(f"perfect matching above bound {max_n}")
    m = n * (n - 1) // 2
    tmasks = _triple_masks(n)
    cycle_moves: dict[int, list[int]] = {}
    for bits in range(1 << m):
        g = Tournament(n, bits)
        moves = [bits ^ mask for (t, mask) in tmasks if is_cycle(g, *t)]
        if moves:
            cycle_moves[bits] = moves
    partner: dict[int, int] = {}
    for t, mask in tmasks:
        for bits, moves in cycle_moves.items():
            if bits in partner:
                continue
            other = bits ^ mask
            if other not in moves or other in partner:
                continue
            partner[bits] = other
            partner[other] = bits
    for bits in sorted(cycle_moves):
        if bits not in partner:
            _augment(bits, cycle_moves, partner)
    pairs = [
        (Tournament(n, bits), Tournament(n, other))
        for bits, other in partner.items()
        if bits < other
    ]
    return sorted(pairs, key=lambda p: p[0].bits)


def _augment(start: int, moves: dict[int, list[int]],
             partner: dict[int, int]) -> None:
    """Flip one alternating path from `start` to some other free tournament."""
    prev: dict[int, int | None] = {start: None}
    queue = deque([start])
    end = None
    while queue and end is None:
        x = queue.popleft()
        for v in moves[x]:
            if v in prev:
                continue
            prev[v] = x
            if v not in partner:
                end = v
                break
            p = partner[v]
            if p not in prev:
                prev[p] = v
                queue.append(p)
    if end is None:
        raise AssertionError("no augmenting path; matching cannot be completed")
    v = end
    while v is not None:
        x = prev[v]
        nxt = prev[x]
        partner[v] = x
        partner[x] = v
        v = nxt
