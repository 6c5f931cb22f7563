"""Complete bounded enumeration of lattice points of a definite ternary form.

The region f(v) <= N is sliced along z.  For each slice the admissible
y and x ranges come from eliminating one variable at a time:

    min over x of f(x, y, z)  <=  N
    <=>  (4ab - t^2) y^2 + (4ar - 2st) z y + (4ac - s^2) z^2 <= 4 a N

and symmetrically for x.  All interval endpoints are computed with
integer square roots, widened by one, and every candidate is re-checked
exactly, so no lattice point can be missed.  Bulk work (marking a bitset,
histogramming values) is done per slice with numpy int64; the magnitudes
involved are asserted to fit comfortably.

Only z >= 0 is scanned: v and -v take the same value, and negation maps
the slice at z to the slice at -z.
"""

from __future__ import annotations

from math import gcd, isqrt

import numpy as np

from .forms import (
    QuadForm,
    RepSet,
    Vector3,
    doubled_gram,
    require_positive_definite,
)
from . import _mat

_INT64_SAFE = 2**62


def _ceil_div(p, q):
    return -((-p) // q)


def _quad_interval(P, Q, R):
    """Integer range [lo, hi] containing {x : P x^2 + Q x + R <= 0}, P > 0.

    Widened by one on each side; callers re-check candidates exactly.
    Returns lo > hi when the interval is empty.
    """
    D = Q * Q - 4 * P * R
    if D < 0:
        return 1, 0
    iD = isqrt(D)
    lo = _ceil_div(-Q - iD, 2 * P) - 1
    hi = (-Q + iD) // (2 * P) + 1
    return lo, hi


class _SliceScan:
    """Per-form constants for the z-slice sweep."""

    def __init__(self, form: QuadForm, bound: int):
        require_positive_definite(form)
        if bound < 0:
            raise ValueError("bound must be nonnegative")
        a, b, c, r, s, t = form.coefficients
        self.form = form
        self.bound = bound
        self.beta = 4 * a * b - t * t
        self.det_doubled = _mat.det(doubled_gram(form))
        self.gy, self.dy = 4 * a * r - 2 * s * t, 4 * a * c - s * s
        self.gx, self.dx = 4 * b * s - 2 * r * t, 4 * b * c - r * r
        self.z_max = isqrt((2 * bound * self.beta) // self.det_doubled) + 1

    def slices(self):
        """Yield (z, ys, xs, vals) rectangles covering the slice z >= 0."""
        a, b, c, r, s, t = self.form.coefficients
        N = self.bound
        for z in range(self.z_max + 1):
            ylo, yhi = _quad_interval(self.beta, self.gy * z, self.dy * z * z - 4 * a * N)
            if ylo > yhi:
                continue
            xlo, xhi = _quad_interval(self.beta, self.gx * z, self.dx * z * z - 4 * b * N)
            if xlo > xhi:
                continue
            xm = max(abs(xlo), abs(xhi))
            ym = max(abs(ylo), abs(yhi))
            worst = (
                a * xm * xm + b * ym * ym + c * z * z
                + abs(r) * ym * z + abs(s) * xm * z + abs(t) * xm * ym
            )
            if worst >= _INT64_SAFE:
                raise OverflowError("slice values would not fit in int64")
            ys = np.arange(ylo, yhi + 1, dtype=np.int64)
            xs = np.arange(xlo, xhi + 1, dtype=np.int64)
            qy = b * ys * ys + (r * z) * ys + (c * z * z)
            ly = t * ys + (s * z)
            vals = (a * xs * xs)[None, :] + np.outer(ly, xs) + qy[:, None]
            yield z, ys, xs, vals


# (form, primitive) -> (bound, read-only bool mask of length bound + 1)
_mask_cache: dict = {}


def represented_mask(form: QuadForm, bound: int, primitive: bool = False) -> np.ndarray:
    """Boolean mask m with m[n] = True iff n <= bound is represented.

    With primitive=True only vectors with coprime coordinates count.
    Results are cached per form; the returned array is read-only.
    """
    bound = int(bound)
    key = (form, primitive)
    hit = _mask_cache.get(key)
    if hit is not None and hit[0] >= bound:
        return hit[1][: bound + 1]
    seen = np.zeros(bound + 2, dtype=bool)  # slot bound+1 absorbs clipped values
    scan = _SliceScan(form, bound)
    for z, ys, xs, vals in scan.slices():
        capped = np.minimum(vals, bound + 1)
        if primitive:
            g = np.gcd(np.gcd(np.abs(ys)[:, None], np.abs(xs)[None, :]), abs(z))
            capped = np.where(g == 1, capped, bound + 1)
        seen[capped.ravel()] = True
    mask = seen[: bound + 1]
    mask.setflags(write=False)
    if hit is None or hit[0] < bound:
        _mask_cache[key] = (bound, mask)
    return mask


def clear_cache() -> None:
    _mask_cache.clear()


def represented_set(form: QuadForm, bound: int, primitive: bool = False) -> RepSet:
    """All represented integers in [0, bound] as a RepSet."""
    mask = represented_mask(form, bound, primitive=primitive)
    return RepSet(bound, np.flatnonzero(mask))


def representations(form: QuadForm, n: int) -> list:
    """The complete set {v : f(v) = n}, in lexicographic order."""
    require_positive_definite(form)
    n = int(n)
    if n < 0:
        return []
    if n == 0:
        return [Vector3(0, 0, 0)]
    a, b, c, r, s, t = form.coefficients
    beta = 4 * a * b - t * t
    detG = _mat.det(doubled_gram(form))
    zb = isqrt((2 * n * beta) // detG) + 1
    gy, dy = 4 * a * r - 2 * s * t, 4 * a * c - s * s
    out = []
    for z in range(-zb, zb + 1):
        ylo, yhi = _quad_interval(beta, gy * z, dy * z * z - 4 * a * n)
        for y in range(ylo, yhi + 1):
            # a x^2 + (t y + s z) x + (b y^2 + c z^2 + r y z - n) = 0
            B = t * y + s * z
            C = b * y * y + c * z * z + r * y * z - n
            D = B * B - 4 * a * C
            if D < 0:
                continue
            iD = isqrt(D)
            if iD * iD != D:
                continue
            if (-B + iD) % (2 * a) == 0:
                out.append(Vector3((-B + iD) // (2 * a), y, z))
            if iD != 0 and (-B - iD) % (2 * a) == 0:
                out.append(Vector3((-B - iD) // (2 * a), y, z))
    return sorted(out)


def rep_count(form: QuadForm, n: int) -> int:
    """r(n, f) = number of integer representations of n."""
    return len(representations(form, n))


def primitive_representations(form: QuadForm, n: int) -> list:
    """Representations whose coordinates are coprime."""
    return [v for v in representations(form, n) if gcd(gcd(abs(v.x), abs(v.y)), abs(v.z)) == 1]


class ThetaSeries:
    """Representation counts coeffs[n] = r(n, f) for 0 <= n <= bound."""

    __slots__ = ("form", "bound", "coeffs")

    def __init__(self, form: QuadForm, bound: int, coeffs):
        self.form = form
        self.bound = int(bound)
        arr = np.asarray(coeffs, dtype=np.int64)
        arr.setflags(write=False)
        self.coeffs = arr

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, n):
        return int(self.coeffs[n])

    def __eq__(self, other):
        if not isinstance(other, ThetaSeries):
            return NotImplemented
        return self.bound == other.bound and np.array_equal(self.coeffs, other.coeffs)

    def __repr__(self):
        head = ", ".join(str(int(x)) for x in self.coeffs[:8])
        return f"ThetaSeries(bound={self.bound}, coeffs=[{head}{', ...' if self.bound > 7 else ''}])"


def theta(form: QuadForm, bound: int, primitive: bool = False) -> ThetaSeries:
    """All counts r(n, f), n <= bound, in one slice sweep.

    The z > 0 slices are counted twice (negation symmetry); z = 0 once.
    With primitive=True only coprime-coordinate vectors are counted.
    """
    bound = int(bound)
    counts = np.zeros(bound + 2, dtype=np.int64)
    scan = _SliceScan(form, bound)
    for z, ys, xs, vals in scan.slices():
        capped = np.minimum(vals, bound + 1)
        if primitive:
            g = np.gcd(np.gcd(np.abs(ys)[:, None], np.abs(xs)[None, :]), abs(z))
            capped = np.where(g == 1, capped, bound + 1)
        cnt = np.bincount(capped.ravel(), minlength=bound + 2)
        counts += cnt if z == 0 else 2 * cnt
    return ThetaSeries(form, bound, counts[: bound + 1])
