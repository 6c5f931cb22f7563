"""Residue-vector analysis modulo d.

For a form g and a residue class a mod d, residue_vectors finds every
coset v in (Z/dZ)^3 with g(v) = a (mod d); the congruence is evaluated on
the doubled Gram matrix, v (2M_g) v^t = 2a (mod 2d), to stay in integers.

A coset is *good* for a transform set R = {T : T^t M_f T = d^2 M_g} when
some T in R maps it to an integral vector, (1/d) v T^t in Z^3; that vector
then represents the same value under f.  When every coset of a class is
good, each value of g in the progression { d n + a } is a value of f.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import lcm

import numpy as np

from .forms import QuadForm, Vector3
from .isometry import TransformSet, find_transforms


class IncompleteTransformSet(ValueError):
    """Raised when a good/bad classification is attempted with a truncated set."""


@dataclass(frozen=True, order=True)
class ResidueClass:
    """The arithmetic progression {d n + a : n >= 0}."""

    d: int
    a: int

    def __post_init__(self):
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "a", int(self.a))
        if self.d < 1:
            raise ValueError("modulus d must be a positive integer")
        if not 0 <= self.a < self.d:
            raise ValueError(f"residue must satisfy 0 <= a < d, got ({self.d}, {self.a})")

    def __str__(self):
        return f"{self.d}n+{self.a}"


@lru_cache(maxsize=16)  # grids are d^3 int64 entries, up to ~24 MB at d = 144
def _value_grid(g: QuadForm, d: int):
    """d^3 grid of 2*g(v) mod 2d, index order (x, y, z)."""
    rng = np.arange(d, dtype=np.int64)
    X, Y, Z = np.meshgrid(rng, rng, rng, indexing="ij")
    vals = 2 * (
        g.a * X * X + g.b * Y * Y + g.c * Z * Z
        + g.r * Y * Z + g.s * X * Z + g.t * X * Y
    )
    grid = vals % (2 * d)
    grid.setflags(write=False)
    return grid


def _residue_array(g: QuadForm, cls: ResidueClass):
    grid = _value_grid(g, cls.d)
    return np.argwhere(grid == (2 * cls.a) % (2 * cls.d)).astype(np.int64)


def residue_vectors(g: QuadForm, cls: ResidueClass) -> list:
    """All cosets v in (Z/dZ)^3 with g(v) = a (mod d), lexicographic."""
    return [Vector3(*map(int, row)) for row in _residue_array(g, cls)]


def attainable_residues(g: QuadForm, modulus: int) -> tuple:
    """Residues mod `modulus` that g attains on (Z/modulus Z)^3."""
    grid = _value_grid(g, int(modulus))
    return tuple(int(v) // 2 for v in np.unique(grid))


@dataclass(frozen=True)
class GoodVectorReport:
    """Partition of the cosets of a residue class into good and bad.

    good holds (coset, index) pairs, the index naming the first transform
    in `transforms` whose image of the coset is divisible by d; bad holds
    the cosets with no such transform.
    """

    f: QuadForm
    g: QuadForm
    cls: ResidueClass
    transforms: TransformSet
    good: tuple
    bad: tuple

    @property
    def all_good(self) -> bool:
        return not self.bad

    def __repr__(self):
        return (
            f"GoodVectorReport(cls=({self.cls.d},{self.cls.a}), "
            f"good={len(self.good)}, bad={len(self.bad)})"
        )


def classify_good(f: QuadForm, g: QuadForm, cls: ResidueClass,
                  transforms: TransformSet) -> GoodVectorReport:
    """Split the cosets of the class by existence of an integral transport.

    `transforms` must be the complete set for (f, g, cls.d); with a
    truncated set a coset could be declared bad wrongly.
    """
    if not transforms.complete:
        raise IncompleteTransformSet("good/bad classification needs the complete transform set")
    if (transforms.f, transforms.g, transforms.d) != (f, g, cls.d):
        raise ValueError("transform set does not match (f, g, d)")
    V = _residue_array(g, cls)
    d = cls.d
    witness = np.full(len(V), -1, dtype=np.int64)
    for idx, T in enumerate(transforms.matrices):
        pending = witness < 0
        if not pending.any():
            break
        hits = (V[pending] @ np.asarray(T, dtype=np.int64).T) % d == 0
        sel = np.flatnonzero(pending)[hits.all(axis=1)]
        witness[sel] = idx
    good = tuple(
        (Vector3(*map(int, V[i])), int(witness[i]))
        for i in np.flatnonzero(witness >= 0)
    )
    bad = tuple(Vector3(*map(int, V[i])) for i in np.flatnonzero(witness < 0))
    return GoodVectorReport(f, g, cls, transforms, good, bad)


def precedes(f: QuadForm, g: QuadForm, cls: ResidueClass) -> GoodVectorReport:
    """Decide whether every coset of the class is good (report.all_good).

    When it is, every value of g congruent to a mod d is also a value of
    f; the transform set is computed internally and is complete.
    """
    return classify_good(f, g, cls, find_transforms(f, g, cls.d))


def transport(v, T, d: int):
    """(1/d) v T^t as an integer vector, or None if not divisible.

    For T in the transform set of (f, g, d), a defined transport w
    satisfies f(w) = g(v).
    """
    w = tuple(
        T[i][0] * v[0] + T[i][1] * v[1] + T[i][2] * v[2] for i in range(3)
    )
    if any(c % d for c in w):
        return None
    return Vector3(*(c // d for c in w))


@dataclass(frozen=True)
class CoverReport:
    """Result of checking residue classes against the attainable residues of g."""

    ok: bool
    modulus: int
    attainable: tuple
    uncovered: tuple

    def __bool__(self):
        return self.ok


def cover_check(g: QuadForm, classes) -> CoverReport:
    """Do the classes cover every residue g can attain?

    With L the lcm of all moduli, every residue mod L attainable by g on
    (Z/LZ)^3 must lie in some class.  Covering the attainable residues
    covers every value of g, so this is a sound (conservative) test.
    """
    classes = list(classes)
    if not classes:
        raise ValueError("cover_check needs at least one residue class")
    L = 1
    for cls in classes:
        L = lcm(L, cls.d)
    attain = attainable_residues(g, L)
    uncovered = tuple(
        rho for rho in attain
        if not any(rho % cls.d == cls.a for cls in classes)
    )
    return CoverReport(not uncovered, L, attain, uncovered)
