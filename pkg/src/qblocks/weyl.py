"""Symmetric-group machinery: plain and shifted (dot) actions, orbits,
inversion sets, and the blowup guard for exhaustive sweeps."""

from __future__ import annotations

import itertools
import os
from typing import Iterable, Iterator, Optional

from qblocks.lattice import Root, Weight, _same_rank, rho

DEFAULT_MAX_RANK = 8
ENV_MAX_RANK = "QBLOCKS_MAX_RANK"


class GuardError(RuntimeError):
    """A request would enumerate too large a symmetric group."""


def rank_limit(override: Optional[int] = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get(ENV_MAX_RANK)
    if env:
        return int(env)
    return DEFAULT_MAX_RANK


def check_rank(n: int, limit: Optional[int] = None) -> None:
    cap = rank_limit(limit)
    if n > cap:
        raise GuardError(
            f"rank {n} exceeds the resource guard ({cap}); "
            f"set {ENV_MAX_RANK} to raise it"
        )


class Perm:
    """A permutation of {1, ..., n} stored in one-line image notation."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        imgs = tuple(int(i) for i in images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs!r}")
        self.images = imgs

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(1, n + 1))

    @classmethod
    def parse(cls, text: str) -> "Perm":
        """Read whitespace-separated images, e.g. ``2 1 3``."""
        parts = text.split()
        if not parts:
            raise ValueError("empty permutation text")
        return cls(parts)

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.rank:
            raise ValueError(f"index {i} out of range 1..{self.rank}")
        return self.images[i - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        """Composition, self applied after other."""
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")
        return Perm(self.images[other.images[i] - 1] for i in range(self.rank))

    def inverse(self) -> "Perm":
        out = [0] * self.rank
        for i, img in enumerate(self.images, start=1):
            out[img - 1] = i
        return Perm(out)

    def act(self, lam: Weight) -> Weight:
        """Plain action: coordinate i of lam moves to coordinate w(i)."""
        if self.rank != lam.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {lam.rank}")
        out = [None] * self.rank
        for i in range(self.rank):
            out[self.images[i] - 1] = lam.coords[i]
        return Weight(out)

    def dot(self, lam: Weight) -> Weight:
        """Shifted action: w . lam = w(lam + rho) - rho."""
        r = rho(lam.rank)
        return self.act(lam + r) - r

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other: "Perm") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __str__(self) -> str:
        return " ".join(str(i) for i in self.images)

    def __repr__(self) -> str:
        return f"Perm('{self}')"


def all_perms(n: int, limit: Optional[int] = None) -> Iterator[Perm]:
    """All n! permutations in lexicographic order of their image tuples."""
    check_rank(n, limit)
    for images in itertools.permutations(range(1, n + 1)):
        yield Perm(images)


def orbit(lam: Weight, limit: Optional[int] = None) -> frozenset[Weight]:
    """Distinct images of lam under the plain action (coordinate shuffles)."""
    check_rank(lam.rank, limit)
    return frozenset(Weight(p) for p in itertools.permutations(lam.coords))


def dot_orbit(lam: Weight, limit: Optional[int] = None) -> frozenset[Weight]:
    """Distinct images of lam under the dot action."""
    check_rank(lam.rank, limit)
    r = rho(lam.rank)
    shifted = (lam + r).coords
    return frozenset(Weight(p) - r for p in itertools.permutations(shifted))


def inversion_roots(w: Perm) -> frozenset[Root]:
    """Positive roots e_i - e_j (i < j) whose order w reverses."""
    n = w.rank
    return frozenset(
        Root(i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if w(i) > w(j)
    )


def rho_defect(w: Perm) -> Weight:
    """The weight rho - w(rho), as a sum of positive roots.

    With w acting by e_i -> e_{w(i)}, the roots that contribute are the
    inversions of the inverse permutation: rho - w(rho) counts positive
    roots sent out of the positive cone by w^{-1}.
    """
    n = w.rank
    coords = [0] * n
    for i, j in inversion_roots(w.inverse()):
        coords[i - 1] += 1
        coords[j - 1] -= 1
    out = Weight(coords)
    assert out == rho(n) - w.act(rho(n))
    return out


def same_block(mu: Weight, nu: Weight, limit: Optional[int] = None) -> bool:
    """Whether two integral weights lie in one dot orbit."""
    _same_rank(mu, nu)
    if not (mu.is_integral() and nu.is_integral()):
        raise ValueError("block membership is defined here for integral weights")
    return nu in dot_orbit(mu, limit)
