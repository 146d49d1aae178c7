"""Parameter scanning, boundary finding, and CSV emission.

Boundaries are always located on continuous scalar witnesses (entropy minus
its threshold, largest eigenvalue minus 1/d, ...) rather than on booleans,
which removes grid aliasing from the reported endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoSignChange
from .tolerances import BISECTION_TOL


@dataclass(frozen=True)
class Interval:
    """A maximal parameter range on which a predicate holds; the witness
    equals its threshold at the refined endpoints (up to bisection width)."""

    lo: float
    hi: float
    predicate_name: str
    witness_lo: float
    witness_hi: float


@dataclass(frozen=True)
class SweepGrid:
    """Dense evaluation of a scalar over named axes (first axis outermost)."""

    axes: tuple  # ((name, values), ...)
    values: np.ndarray


def find_boundary(f, bracket, target: float, tol: float = BISECTION_TOL) -> float:
    """Bisect f(x) = target inside the bracket.

    The bracket endpoints must produce values on opposite sides of the
    target (an endpoint sitting exactly on it is returned directly);
    orientation of the bracket does not matter.
    """
    a, b = float(bracket[0]), float(bracket[1])
    if a > b:
        a, b = b, a
    fa = f(a) - target
    fb = f(b) - target
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0) == (fb > 0):
        raise NoSignChange(f"f - target has the same sign at {a} and {b}")
    while b - a > tol:
        mid = 0.5 * (a + b)
        fm = f(mid) - target
        if fm == 0.0:
            return mid
        if (fm > 0) == (fa > 0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


def intervals(
    f,
    lo: float,
    hi: float,
    target: float,
    sense: str,
    points: int = 2001,
    tol: float = BISECTION_TOL,
    name: str = "",
) -> list[Interval]:
    """Maximal sub-intervals of [lo, hi] where f >= target (sense ">=") or
    f <= target (sense "<="), endpoints refined by bisection.

    Returns an empty list when the predicate never holds on the grid.
    """
    if sense not in (">=", "<="):
        raise ValueError(f'sense must be ">=" or "<=", got {sense!r}')
    xs = np.linspace(lo, hi, points)
    vals = np.array([f(x) for x in xs])
    ok = vals >= target if sense == ">=" else vals <= target
    found: list[Interval] = []
    i = 0
    while i < points:
        if not ok[i]:
            i += 1
            continue
        j = i
        while j + 1 < points and ok[j + 1]:
            j += 1
        left = xs[i] if i == 0 else find_boundary(f, (xs[i - 1], xs[i]), target, tol)
        right = xs[j] if j == points - 1 else find_boundary(f, (xs[j], xs[j + 1]), target, tol)
        found.append(Interval(float(left), float(right), name, f(left), f(right)))
        i = j + 1
    return found


def _as_axis(axis) -> tuple[str, np.ndarray]:
    name, values = axis
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise ValueError(f"axis {name!r} is empty")
    return str(name), values


def scan_2d(f, axis1, axis2) -> SweepGrid:
    """Evaluate f(x1, x2) on the product grid, axis1 outermost."""
    n1, v1 = _as_axis(axis1)
    n2, v2 = _as_axis(axis2)
    values = np.array([[f(x, y) for y in v2] for x in v1])
    return SweepGrid(((n1, v1), (n2, v2)), values)


def scan_3d(f, axis1, axis2, axis3) -> SweepGrid:
    """Evaluate f(x1, x2, x3) on the product grid, axis1 outermost."""
    n1, v1 = _as_axis(axis1)
    n2, v2 = _as_axis(axis2)
    n3, v3 = _as_axis(axis3)
    values = np.array([[[f(x, y, z) for z in v3] for y in v2] for x in v1])
    return SweepGrid(((n1, v1), (n2, v2), (n3, v3)), values)


def format_number(x: float) -> str:
    """Decimal rendering at 9 significant digits, shared by all CSV output."""
    return f"{float(x):.9g}"


def write_csv_rows(path, header, rows) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(c if isinstance(c, str) else format_number(c) for c in row) + "\n")


def emit_csv(obj, path) -> None:
    """Write a SweepGrid or a list of Intervals as UTF-8 CSV.

    Grids get one row per point (axis columns then value); interval lists
    get one row per interval.
    """
    if isinstance(obj, SweepGrid):
        names = [name for name, _ in obj.axes]
        grids = [values for _, values in obj.axes]
        rows = []
        for idx in np.ndindex(*obj.values.shape):
            coords = [grids[k][i] for k, i in enumerate(idx)]
            rows.append(coords + [obj.values[idx]])
        write_csv_rows(path, names + ["value"], rows)
    else:
        rows = [
            [iv.predicate_name, iv.lo, iv.hi, iv.witness_lo, iv.witness_hi] for iv in obj
        ]
        write_csv_rows(path, ["predicate", "lo", "hi", "witness_lo", "witness_hi"], rows)
