"""Invariants of a two-component handlebody-link from its linking matrix.

The linking invariant is the multiset of elementary divisors of the
linking matrix (the zero marker when the matrix has rank zero).  The two
quotient groups are the first homology of one component's complement
modulo the cycles of the other component; the linking matrix and its
transpose are their presentation matrices.
"""

from dataclasses import dataclass
from typing import Literal

from .exactla import IntMatrix, elementary_divisors

__all__ = [
    "LkInvariant",
    "AbelianGroup",
    "handlebody_linking",
    "quotient_group",
    "reconstruct_lk",
]


@dataclass(frozen=True)
class LkInvariant:
    """Divisor multiset {d_1, ..., d_l}, or the zero marker {0} when empty.

    Kept as a multiset rather than a set: repeated divisors carry real
    information about the chain.  Use :meth:`collapsed` for the strict
    set reading.
    """

    divisors: tuple[int, ...] = ()

    def __post_init__(self):
        for d in self.divisors:
            if d < 1:
                raise ValueError(f"divisors must be positive, got {d}")
        for prev, cur in zip(self.divisors, self.divisors[1:]):
            if cur % prev:
                raise ValueError(f"broken divisibility chain: {prev} does not divide {cur}")

    @property
    def is_zero(self) -> bool:
        return not self.divisors

    def collapsed(self) -> "LkInvariant":
        """Set view: repeated divisors collapsed to one occurrence."""
        seen = []
        for d in self.divisors:
            if not seen or seen[-1] != d:
                seen.append(d)
        return LkInvariant(tuple(seen))

    def __str__(self):
        if not self.divisors:
            return "{0}"
        return "{" + ", ".join(str(d) for d in self.divisors) + "}"


@dataclass(frozen=True)
class AbelianGroup:
    """Finitely generated abelian group Z^free_rank (+) Z/t_1 (+) Z/t_2 ...

    Torsion coefficients are at least 2 (trivial Z/1 factors are dropped)
    and each divides the next.
    """

    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"torsion coefficients must be >= 2, got {t}")
        for prev, cur in zip(self.torsion, self.torsion[1:]):
            if cur % prev:
                raise ValueError(f"broken torsion chain: {prev} does not divide {cur}")

    def __str__(self):
        if not self.torsion:
            return f"Z^{self.free_rank}" if self.free_rank else "0"
        return " (+) ".join([f"Z^{self.free_rank}"] + [f"Z/{t}" for t in self.torsion])


def handlebody_linking(m: IntMatrix) -> LkInvariant:
    """The linking invariant of the pair whose linking matrix is ``m``.

    Separated components give a zero matrix, hence the {0} marker.
    """
    return LkInvariant(tuple(elementary_divisors(m)))


def quotient_group(m: IntMatrix, side: Literal["first", "second"]) -> AbelianGroup:
    """Complement homology of one component modulo the other's cycles.

    ``side='first'`` presents the group by ``m`` itself (rows index the
    first component's basis), giving free rank ``rows - l`` where ``l`` is
    the rank of ``m``;  ``side='second'`` presents by the transpose,
    giving free rank ``cols - l``.  Both share the torsion coefficients:
    the elementary divisors greater than 1.
    """
    if side == "first":
        presentation = m
        generators = m.rows
    elif side == "second":
        presentation = m.transpose()
        generators = m.cols
    else:
        raise ValueError(f"side must be 'first' or 'second', got {side!r}")
    divisors = elementary_divisors(presentation)
    return AbelianGroup(
        free_rank=generators - len(divisors),
        torsion=tuple(d for d in divisors if d > 1),
    )


def reconstruct_lk(g: AbelianGroup, l: int) -> LkInvariant:
    """Recover the linking invariant from a quotient group and the chain length.

    The group alone loses the unit divisors; ``l`` (the rank drop of the
    presentation) restores them as leading 1s.  ``l = 0`` gives the zero
    marker.
    """
    if l < len(g.torsion):
        raise ValueError(
            f"chain length {l} is shorter than the torsion list ({len(g.torsion)} entries)"
        )
    if l == 0:
        return LkInvariant()
    return LkInvariant((1,) * (l - len(g.torsion)) + g.torsion)
