"""W-stable oriented hyperplane arrangements on root coordinates.

An oriented hyperplane is stored as its integer functional l (the kernel
is implicit); fundamental members must satisfy the orientation condition
l(-alpha) >= 0 against every simple root, i.e. all entries <= 0.
Functionals are kept exactly as supplied: the classifying map reads its
saturation constants off the raw rows, so a scaled functional 3l is
meaningful data, while the Weyl orbit output is canonicalized to
gcd-reduced representatives (sign preserved - it is the orientation).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional, Union

from . import exactla, rootsys

ORBIT_CAP = 100_000
IMPLICIT = "implicit"


class DegenerateArrangementError(ValueError):
    """Arrangement violating nonzero/orientation/nondegeneracy conditions."""


class ArrangementFormatError(ValueError):
    """Malformed arrangement file."""


def _reduced(functional) -> tuple:
    """Divide by the gcd, preserving sign (the orientation)."""
    g = 0
    for c in functional:
        g = gcd(g, c)
    if g <= 1:
        return tuple(functional)
    return tuple(c // g for c in functional)


@dataclass(frozen=True)
class OrientedHyperplane:
    """Integer functional on root coordinates; kernel = {l = 0}."""

    functional: tuple

    def __post_init__(self):
        f = tuple(self.functional)
        if not f or not all(isinstance(c, int) for c in f):
            raise DegenerateArrangementError("functional must be a nonempty integer vector")
        if not any(f):
            raise DegenerateArrangementError("zero functional")
        object.__setattr__(self, "functional", f)

    def __call__(self, x) -> Fraction:
        return exactla.vec_dot(exactla.vec(self.functional), exactla.vec(x))


@dataclass(frozen=True)
class Arrangement:
    """Fundamental-domain members plus (optionally) their full Weyl orbit.

    full is None until weyl_orbit runs, a tuple of OrientedHyperplane when
    the orbit fits the cap, or the IMPLICIT marker with partial_size set.
    """

    rs: rootsys.RootSystem
    fundamental: tuple
    full: Union[tuple, str, None] = None
    partial_size: Optional[int] = None

    def __post_init__(self):
        fund = tuple(
            h if isinstance(h, OrientedHyperplane) else OrientedHyperplane(tuple(h))
            for h in self.fundamental
        )
        object.__setattr__(self, "fundamental", fund)
        n = self.rs.rank
        for h in fund:
            if len(h.functional) != n:
                raise DegenerateArrangementError(
                    f"functional {h.functional} has length {len(h.functional)}, rank is {n}"
                )
            if any(c > 0 for c in h.functional):
                raise DegenerateArrangementError(
                    f"functional {h.functional} violates the orientation condition l(-alpha) >= 0"
                )
        seen = {}
        for h in fund:
            key = _reduced(h.functional)
            if key in seen:
                raise DegenerateArrangementError(
                    f"functionals {seen[key]} and {h.functional} are positive multiples (degenerate)"
                )
            seen[key] = h.functional


def canonical_arrangement(rs: rootsys.RootSystem) -> Arrangement:
    """One hyperplane per simple root alpha: kernel spanned by the other
    simple roots, functional -e_alpha."""
    n = rs.rank
    fund = tuple(
        OrientedHyperplane(tuple(-1 if j == a else 0 for j in range(n))) for a in range(n)
    )
    return Arrangement(rs=rs, fundamental=fund)


@lru_cache(maxsize=None)
def _reflection_rows(rs: rootsys.RootSystem) -> tuple:
    """Integer matrices of the simple reflections, for the right action on functionals."""
    out = []
    for a in range(rs.rank):
        m = rootsys.simple_reflection(rs, a).matrix
        out.append(tuple(tuple(int(v) for v in row) for row in m))
    return tuple(out)


def weyl_orbit(arr: Arrangement, cap: int = ORBIT_CAP) -> Arrangement:
    """Close the fundamental functionals under all simple reflections.

    Members are deduplicated as gcd-reduced (sign-preserving) integer
    functionals. If the orbit exceeds cap the returned Arrangement carries
    the IMPLICIT marker and the partial size explored.
    """
    mats = _reflection_rows(arr.rs)
    n = arr.rs.rank
    seen = {_reduced(h.functional) for h in arr.fundamental}
    queue = list(seen)
    while queue:
        f = queue.pop()
        for m in mats:
            g = _reduced(tuple(sum(f[k] * m[k][j] for k in range(n)) for j in range(n)))
            if g not in seen:
                if len(seen) >= cap:
                    return Arrangement(
                        rs=arr.rs,
                        fundamental=arr.fundamental,
                        full=IMPLICIT,
                        partial_size=len(seen),
                    )
                seen.add(g)
                queue.append(g)
    full = tuple(OrientedHyperplane(f) for f in sorted(seen))
    return Arrangement(rs=arr.rs, fundamental=arr.fundamental, full=full)


@dataclass(frozen=True)
class ClassifyingMap:
    """Rows -l_i(alpha) over the simple roots, plus row gcds k."""

    a_star: tuple
    k: tuple


def classifying_map(arr: Arrangement) -> ClassifyingMap:
    if not arr.fundamental:
        raise DegenerateArrangementError("empty arrangement")
    rows = []
    ks = []
    for h in arr.fundamental:
        row = tuple(-c for c in h.functional)
        if any(c < 0 for c in row):
            raise DegenerateArrangementError(
                f"functional {h.functional} violates the orientation condition"
            )
        g = 0
        for c in row:
            g = gcd(g, c)
        if g == 0:
            raise DegenerateArrangementError("all-zero classifying row")
        rows.append(row)
        ks.append(g)
    return ClassifyingMap(a_star=tuple(rows), k=tuple(ks))


def env_augmented_cone_member(rs: rootsys.RootSystem, chi, lam) -> bool:
    """(chi, lam) lies in the augmented-cone lattice: lam dominant and
    chi - lam a nonnegative integer combination of simple roots."""
    chi = exactla.vec(chi)
    lam = exactla.vec(lam)
    if len(chi) != rs.rank or len(lam) != rs.rank:
        raise ValueError(f"vectors must have length {rs.rank}")
    if not rootsys.dominant_in_root_coords(rs, lam):
        raise ValueError("lam is not dominant")
    diff = exactla.vec_sub(chi, lam)
    return all(c.denominator == 1 and c >= 0 for c in diff)


def parse_arrangement(text: str) -> Arrangement:
    """Parse the line-oriented arrangement format.

    Header `type <family><rank>`, then one line of space-separated integers
    per fundamental functional; `#` starts a comment.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ArrangementFormatError("empty arrangement file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "type":
        raise ArrangementFormatError(f"expected 'type <simple type>' header, got {lines[0]!r}")
    try:
        rs = rootsys.build(head[1])
    except rootsys.UnsupportedTypeError as exc:
        raise ArrangementFormatError(str(exc)) from None
    functionals = []
    for line in lines[1:]:
        try:
            functionals.append(tuple(int(tok) for tok in line.split()))
        except ValueError:
            raise ArrangementFormatError(f"non-integer functional line {line!r}") from None
    if not functionals:
        raise ArrangementFormatError("no functional lines")
    return Arrangement(rs=rs, fundamental=tuple(functionals))


def format_arrangement(arr: Arrangement) -> str:
    lines = [f"type {arr.rs.stype}"]
    for h in arr.fundamental:
        lines.append(" ".join(str(c) for c in h.functional))
    return "\n".join(lines) + "\n"
