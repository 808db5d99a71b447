"""Grid sweeps that lift pointwise results to surface-level verdicts."""

from dataclasses import dataclass, field

import numpy as np

from ..errors import LslError
from ..forms import align_frame, first_form, normal_frame
from ..jets import eval_jet2
from .point import DEFAULT_TOLERANCES, CensusKind, classify_point

VERDICTS = ("planar", "pseudo_planar", "pseudo_umbilic", "umbilic", "maximal")
MAX_JUMP = np.pi / 8


@dataclass(frozen=True)
class GridSpec:
    nu: int
    nv: int

    def __post_init__(self):
        if self.nu < 2 or self.nv < 2:
            raise ValueError(f"grid must be at least 2x2, got {self.nu}x{self.nv}")

    def axes(self, domain):
        (u0, u1), (v0, v1) = domain
        return np.linspace(u0, u1, self.nu), np.linspace(v0, v1, self.nv)


def traversal(nu, nv):
    """Row-major order with the parent of each cell.

    The parent of ``(i, j)`` is ``(i, j-1)``, or ``(i-1, 0)`` at the start
    of a row; these edges form a spanning tree of the grid.
    """
    for i in range(nu):
        for j in range(nv):
            if j > 0:
                yield (i, j), (i, j - 1)
            elif i > 0:
                yield (i, j), (i - 1, 0)
            else:
                yield (i, j), None


def point_record(pc):
    """Serializable per-point record of a :class:`PointClassification`."""
    c = pc.census
    w = pc.witness
    return {
        "u": pc.u,
        "v": pc.v,
        "census": c.kind.value,
        "coeffs": list(c.coeffs),
        "discriminant": c.discriminant,
        "near_double": c.near_double,
        "roots": [[r.lam, r.mu] for r in c.roots],
        "root_residuals": list(pc.root_residuals),
        "asymptotics": ["whole-plane" if a.whole_plane else [float(x) for x in a.coeffs] for a in pc.asymptotics],
        "umbilic": pc.is_umbilic,
        "pseudo_umbilic": None if w is None else {
            "direction": [w.direction.lam, w.direction.mu],
            "k": w.k,
            "residual": w.residual,
            "flat": pc.is_flat_witnessed,
        },
        "semi_umbilic": pc.is_semi_umbilic,
        "flat": pc.is_flat,
        "maximal": pc.is_maximal,
        "orthogonal_asymptotics": pc.orthogonal_asymptotics,
        "normal_curvature": pc.normal_curvature,
        "mean_curvature": [float(x) for x in pc.mean_curvature],
        "warnings": list(pc.warnings),
        "error": None,
    }


def error_record(u, v, exc):
    return {"u": float(u), "v": float(v), "census": None, "error": f"{type(exc).__name__}: {exc}"}


def track_field(candidates, nu, nv, max_jump=MAX_JUMP):
    """Choose one direction per cell so that neighbours vary continuously.

    ``candidates[i][j]`` is a list of unit 2-vectors, ``None`` for a cell
    where any direction is admissible, or an empty list when no direction
    is.  Returns ``(ok, info)``; ``info`` names the first failing cell or
    edge.
    """
    chosen = [[None] * nv for _ in range(nu)]
    wild = [[False] * nv for _ in range(nu)]
    for (i, j), parent in traversal(nu, nv):
        cands = candidates[i][j]
        prev = None if parent is None else chosen[parent[0]][parent[1]]
        if cands is None:
            wild[i][j] = True
            chosen[i][j] = prev
            continue
        if len(cands) == 0:
            return False, {"reason": "no admissible direction", "cell": [i, j]}
        if prev is None:
            pick = np.asarray(cands[0], float)
        else:
            dots = [float(np.dot(c, prev)) for c in cands]
            k = int(np.argmax(np.abs(dots)))
            pick = np.asarray(cands[k], float) * (1.0 if dots[k] >= 0 else -1.0)
        chosen[i][j] = pick

    cos_jump = np.cos(max_jump)
    for i in range(nu):
        for j in range(nv):
            for di, dj in ((1, 0), (0, 1)):
                a, b = i + di, j + dj
                if a >= nu or b >= nv or wild[i][j] or wild[a][b]:
                    continue
                x, y = chosen[i][j], chosen[a][b]
                if x is None or y is None:
                    continue
                c = float(np.dot(x, y))
                if abs(c) < cos_jump:
                    return False, {"reason": "discontinuous field", "edge": [[i, j], [a, b]], "cos": c}
                if c < 0:
                    return False, {"reason": "sign obstruction", "edge": [[i, j], [a, b]], "cos": c}
    return True, None


def _point_ref(rec):
    return {"u": rec["u"], "v": rec["v"]}


def _verdict(records, predicate):
    bad = next((r for r in records if r.get("error") or not predicate(r)), None)
    if bad is None:
        return {"value": True, "witness": _point_ref(records[0]), "counterexample": None}
    return {"value": False, "witness": None, "counterexample": _point_ref(bad)}


def aggregate(records, nu, nv, max_jump=MAX_JUMP):
    """Global verdicts from per-point records in traversal order."""
    grid = [[records[i * nv + j] for j in range(nv)] for i in range(nu)]
    verdicts = {
        "planar": _verdict(records, lambda r: r["census"] == CensusKind.ALL.value),
        "umbilic": _verdict(records, lambda r: r["umbilic"]),
        "maximal": _verdict(records, lambda r: r["maximal"]),
    }

    pp = _verdict(records, lambda r: r["census"] != CensusKind.ZERO.value)
    if pp["value"]:
        cands = [[None if r["census"] == CensusKind.ALL.value else r["roots"] for r in row] for row in grid]
        ok, info = track_field(cands, nu, nv, max_jump)
        if not ok:
            pp = {"value": False, "witness": None, "counterexample": _cell_ref(grid, info), "obstruction": info}
    verdicts["pseudo_planar"] = pp

    pu = _verdict(records, lambda r: r["pseudo_umbilic"] is not None)
    if pu["value"]:
        # at umbilic or flat points every direction is a witness
        cands = [[None if r["flat"] or r["umbilic"] else [r["pseudo_umbilic"]["direction"]] for r in row] for row in grid]
        ok, info = track_field(cands, nu, nv, max_jump)
        if not ok:
            pu = {"value": False, "witness": None, "counterexample": _cell_ref(grid, info), "obstruction": info}
    verdicts["pseudo_umbilic"] = pu
    return {k: verdicts[k] for k in VERDICTS}


def _cell_ref(grid, info):
    cell = info.get("cell") or info["edge"][0]
    return _point_ref(grid[cell[0]][cell[1]])


def histogram(records):
    h = {k.value: 0 for k in CensusKind}
    h["error"] = 0
    for r in records:
        h["error" if r.get("error") else r["census"]] += 1
    return h


@dataclass
class RegionReport:
    chart: str
    family: str
    domain: tuple
    grid: GridSpec
    tolerances: dict
    records: list
    verdicts: dict
    census_histogram: dict
    near_double: int
    flat_points: list
    errors: list
    points: list = field(default_factory=list, repr=False)

    @property
    def kinds(self):
        return [r["census"] for r in self.records]

    def to_dict(self):
        (u0, u1), (v0, v1) = self.domain
        return {
            "chart": self.chart,
            "family": self.family,
            "domain": {"u": [u0, u1], "v": [v0, v1]},
            "grid": {"nu": self.grid.nu, "nv": self.grid.nv},
            "tolerances": self.tolerances,
            "verdicts": self.verdicts,
            "census_histogram": self.census_histogram,
            "near_double": self.near_double,
            "flat_points": self.flat_points,
            "errors": self.errors,
            "points": self.records,
        }


def classify_region(chart, grid, tol=DEFAULT_TOLERANCES, max_jump=MAX_JUMP):
    """Classify every grid point of ``chart`` and aggregate verdicts.

    Frames are aligned with the parent cell of the traversal, so the
    reported ``(lam : mu)`` coordinates vary continuously.
    """
    if not isinstance(grid, GridSpec):
        grid = GridSpec(*grid)
    us, vs = grid.axes(chart.domain)
    frames = {}
    records, points, errors = [], [], []
    for (i, j), parent in traversal(grid.nu, grid.nv):
        u, v = us[i], vs[j]
        try:
            jet = eval_jet2(chart, u, v)
            first_form(jet, tol.spacelike)  # report NotSpacelike before any frame trouble
            frame = normal_frame(jet)
            if parent is not None and parent in frames:
                frame = align_frame(frame, frames[parent])
            frames[(i, j)] = frame
            pc = classify_point(jet, tol, frame)
        except LslError as exc:
            rec = error_record(u, v, exc)
            records.append(rec)
            points.append(None)
            errors.append({"i": i, "j": j, "u": float(u), "v": float(v), "error": rec["error"]})
            continue
        records.append(point_record(pc))
        points.append(pc)

    ok_records = [r for r in records if not r.get("error")]
    return RegionReport(
        chart=chart.name,
        family=chart.family,
        domain=chart.domain,
        grid=grid,
        tolerances=tol.as_dict(),
        records=records,
        verdicts=aggregate(records, grid.nu, grid.nv, max_jump),
        census_histogram=histogram(records),
        near_double=sum(1 for r in ok_records if r["near_double"]),
        flat_points=[_point_ref(r) for r in ok_records if r["flat"]],
        errors=errors,
        points=points,
    )
