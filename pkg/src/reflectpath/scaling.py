"""Empirical growth study of the mirror construction.

Counts mirrors, layers, and per-edge revisits across instance families and
fits log-log exponents of total mirror count against polygon size.  The
exponents are reported, never asserted: only reproducibility (same seeds,
same counts) is a hard property.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import InputError
from .generators import gen_random_simple, gen_spiral
from .geom import Point
from .instances import Instance
from .mirrors import run
from .polygon import Polygon
from .region import Frame

CLASSES = ("convex", "random", "spiral")


@dataclass(frozen=True)
class ScalingRecord:
    cls: str
    n: int
    rep: int
    mirrors: int
    layers: int
    max_edge_revisits: int
    seconds: float

    def key(self) -> tuple:
        """Identity of the measurement with wall time excluded."""
        return (self.cls, self.n, self.rep, self.mirrors, self.layers,
                self.max_edge_revisits)


def gen_convex(n: int, seed: int = 0) -> Instance:
    """Convex polygon with n rational points on the unit circle.

    Uses the tangent half-angle parameterization, so all coordinates are
    exact rationals and increasing parameters walk the circle monotonically.
    """
    if n < 3:
        raise InputError("convex polygon needs n >= 3")
    params = [Fraction(2 * i + 1 + (seed % 7), n + 13) * 4 - 2
              for i in range(n)]
    verts = []
    for u in params:
        den = 1 + u * u
        verts.append(Point.from_xy((1 - u * u) / den, 2 * u / den))
    poly = Polygon(verts)
    if poly.signed_area2() < 0:
        poly = Polygon(list(reversed(verts)))
    c = poly.vertices
    s = Point.from_xy((c[0].x * 3 + c[1].x) / 4 * Fraction(9, 10),
                      (c[0].y * 3 + c[1].y) / 4 * Fraction(9, 10))
    mid = n // 2
    t = Point.from_xy((c[mid].x * 3 + c[mid - 1].x) / 4 * Fraction(9, 10),
                      (c[mid].y * 3 + c[mid - 1].y) / 4 * Fraction(9, 10))
    return Instance(poly, s, t, name=f"convex-n{n}-s{seed}")


def _instance_for(cls: str, n: int, rep: int) -> Instance:
    if cls == "convex":
        return gen_convex(n, seed=rep)
    if cls == "spiral":
        return gen_spiral(n)
    if cls == "random":
        for retry in range(40):
            try:
                return gen_random_simple(n, seed=100_000 * rep + 137 * retry + 1)
            except InputError:
                continue
        raise InputError(f"no random instance materialized for n={n} rep={rep}")
    raise InputError(f"unknown scaling class {cls!r}")


def measure(inst: Instance, cls: str, rep: int) -> ScalingRecord:
    t0 = time.perf_counter()
    frame = Frame(inst.polygon, inst.source, inst.target)
    system = run(frame)
    dt = time.perf_counter() - t0
    per_edge: dict[int, int] = {}
    total = 0
    for m in system.all_mirrors():
        total += 1
        per_edge[m.edge] = per_edge.get(m.edge, 0) + 1
    return ScalingRecord(
        cls=cls,
        n=inst.polygon.n,
        rep=rep,
        mirrors=total,
        layers=len(system.layers),
        max_edge_revisits=max(per_edge.values(), default=0),
        seconds=dt,
    )


def run_scaling(classes=CLASSES, ns=range(8, 41, 8), reps: int = 2) -> list[ScalingRecord]:
    records = []
    for cls in classes:
        for n in ns:
            if cls == "spiral" and n % 2 != 0:
                continue
            for rep in range(reps):
                inst = _instance_for(cls, n, rep)
                records.append(measure(inst, cls, rep))
    return records


def table(records: list[ScalingRecord], timings: bool = False) -> str:
    cols = ["class", "n", "rep", "mirrors", "layers", "max_edge_revisits"]
    if timings:
        cols.append("seconds")
    lines = ["\t".join(cols)]
    for r in records:
        row = [r.cls, str(r.n), str(r.rep), str(r.mirrors), str(r.layers),
               str(r.max_edge_revisits)]
        if timings:
            row.append(f"{r.seconds:.6f}")
        lines.append("\t".join(row))
    return "\n".join(lines) + "\n"


def signature(records: list[ScalingRecord]) -> tuple:
    return tuple(sorted(r.key() for r in records))


def fitted_exponents(records: list[ScalingRecord]) -> dict[str, float]:
    """Least-squares slope of log(mirrors) against log(n) per class.

    Zero-mirror measurements carry no growth information and are skipped; a
    class with fewer than two usable sizes reports exponent 0.0.
    """
    out: dict[str, float] = {}
    by_cls: dict[str, dict[int, list[int]]] = {}
    for r in records:
        by_cls.setdefault(r.cls, {}).setdefault(r.n, []).append(r.mirrors)
    for cls, per_n in by_cls.items():
        pts = [(math.log(n), math.log(sum(v) / len(v)))
               for n, v in sorted(per_n.items()) if sum(v) > 0]
        if len(pts) < 2:
            out[cls] = 0.0
            continue
        mx = sum(x for x, _ in pts) / len(pts)
        my = sum(y for _, y in pts) / len(pts)
        sxx = sum((x - mx) ** 2 for x, _ in pts)
        sxy = sum((x - mx) * (y - my) for x, y in pts)
        out[cls] = sxy / sxx if sxx else 0.0
    return out
