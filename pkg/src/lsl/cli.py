"""Command-line front end.

Usage::

    lsl families
    lsl analyze --family example-1.1 --grid 32x32
    lsl analyze --family rs --f "u^2" --g "u" --domain "u:1.1..3,v:0.1..6.2" --format text
    lsl analyze --config run.json --out report.json

The exit code is 0 when every grid point was classified, 1 when some
point raised a hard error (recorded in the report), and 2 when the
configuration itself is invalid.
"""

import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass, field, replace

from . import __version__
from . import families as fam
from .classify import DEFAULT_TOLERANCES, VERDICTS, classify_region
from .errors import LslError, ParseError, ValidationError
from .profiles import CurveProfile, Profile, split_components

SCHEMA = "lsl-report/1"
FORMATS = ("json", "csv", "text")
DEFAULT_GRID = (32, 32)

# family -> profile parameters it accepts
FAMILY_PARAMS = {
    "example-1.1": (),
    "example-1.2": (),
    "ruled": ("curve", "director"),
    "rh": ("f", "g", "rho"),
    "rs": ("f", "g", "alpha", "beta"),
    "rs-4b": (),
    "rs-4c": (),
    "rs-4d": (),
}
PARAM_NAMES = ("f", "g", "rho", "alpha", "beta", "curve", "director")

PARAM_DEFAULTS = {
    "ruled": {"curve": "0, 0, sinh(u), cosh(u)", "director": "cos(u), sin(u), 0, 0"},
    "rh": {"f": "sqrt(1.25)*sin(u + 0.15)", "g": "-sqrt(1.25)*cos(u + 0.15)", "rho": "2 + 0.5*u"},
    "rs": {"f": "exp(2*u)", "g": "exp(-u)", "alpha": 1.0, "beta": 1.0},
}

CONFIG_KEYS = ("family", "domain", "grid", "tol_root", "tol_disc", "format", "out") + PARAM_NAMES

CSV_HEADER = (
    "u", "v", "census", "discriminant", "near_double", "n_roots",
    "root1_lam", "root1_mu", "root2_lam", "root2_mu", "max_root_residual",
    "umbilic", "pseudo_umbilic", "witness_lam", "witness_mu", "witness_k",
    "semi_umbilic", "flat", "maximal", "orthogonal_asymptotics", "normal_curvature",
    "H1", "H2", "H3", "H4", "error",
)


@dataclass(frozen=True)
class RunConfig:
    family: str
    params: dict = field(default_factory=dict)
    domain: tuple | None = None
    grid: tuple = DEFAULT_GRID
    tol_root: float = DEFAULT_TOLERANCES.root
    tol_disc: float = DEFAULT_TOLERANCES.disc
    format: str = "json"
    out: str | None = None

    def echo(self):
        return {
            "family": self.family,
            "params": dict(sorted(self.params.items())),
            "domain": None if self.domain is None else {"u": list(self.domain[0]), "v": list(self.domain[1])},
            "grid": {"nu": self.grid[0], "nv": self.grid[1]},
            "tol_root": self.tol_root,
            "tol_disc": self.tol_disc,
            "format": self.format,
        }


# -- parsing ------------------------------------------------------------------

_NUMBER = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_INTERVAL = re.compile(rf"\s*([uv])\s*:\s*({_NUMBER})\s*\.\.\s*({_NUMBER})\s*")
_GRID = re.compile(r"\s*(\d+)\s*[xX]\s*(\d+)\s*")


def parse_grid(text):
    """``"32x32"`` -> ``(32, 32)``; both sizes must be at least 2."""
    m = _GRID.fullmatch(text)
    if m is None:
        bad = next((i for i, ch in enumerate(text) if not (ch.isdigit() or ch in "xX ")), len(text))
        raise ParseError(f"grid must look like NxM, got {text!r}", bad)
    nu, nv = int(m.group(1)), int(m.group(2))
    if nu < 2 or nv < 2:
        raise ValidationError("grid", f"resolution must be at least 2x2, got {nu}x{nv}")
    return nu, nv


def parse_domain(text):
    """``"u:1.1..3,v:0.1..6.2"`` -> ``((1.1, 3.0), (0.1, 6.2))``."""
    out, pos = {}, 0
    for part in text.split(","):
        m = _INTERVAL.fullmatch(part)
        if m is None:
            raise ParseError(f"expected 'u:a..b' or 'v:a..b', got {part.strip()!r}", pos)
        axis, a, b = m.group(1), float(m.group(2)), float(m.group(3))
        if axis in out:
            raise ParseError(f"axis {axis} given twice", pos + m.start(1))
        if not a < b:
            raise ValidationError("domain", f"{axis} interval must satisfy a < b, got {a}..{b}")
        out[axis] = (a, b)
        pos += len(part) + 1
    if set(out) != {"u", "v"}:
        raise ValidationError("domain", "both u and v intervals are required")
    return out["u"], out["v"]


def _positive(name, value):
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise ValidationError(name, f"expected a number, got {value!r}") from None
    if not (x > 0 and math.isfinite(x)):
        raise ValidationError(name, f"must be positive and finite, got {value!r}")
    return x


def config_from_mapping(data):
    """Validate a mapping of config fields (CLI flags or a JSON config)."""
    unknown = sorted(set(data) - set(CONFIG_KEYS))
    if unknown:
        raise ValidationError(unknown[0], "unknown field")
    family = data.get("family")
    if family is None:
        raise ValidationError("family", "is required")
    if family not in FAMILY_PARAMS:
        raise ValidationError("family", f"unknown family {family!r}; see `lsl families`")
    allowed = FAMILY_PARAMS[family]
    params = dict(PARAM_DEFAULTS.get(family, {}))
    for name in PARAM_NAMES:
        value = data.get(name)
        if value is None:
            continue
        if name not in allowed:
            raise ValidationError(name, f"not used by family {family!r}")
        params[name] = _positive(name, value) if name in ("alpha", "beta") else str(value)

    domain = data.get("domain")
    if domain is not None:
        domain = parse_domain(domain) if isinstance(domain, str) else _domain_from_object(domain)
    grid = data.get("grid", DEFAULT_GRID)
    grid = parse_grid(grid) if isinstance(grid, str) else _grid_from_object(grid)
    fmt = data.get("format", "json")
    if fmt not in FORMATS:
        raise ValidationError("format", f"must be one of {', '.join(FORMATS)}, got {fmt!r}")
    return RunConfig(
        family=family,
        params=params,
        domain=domain,
        grid=grid,
        tol_root=_positive("tol_root", data.get("tol_root", DEFAULT_TOLERANCES.root)),
        tol_disc=_positive("tol_disc", data.get("tol_disc", DEFAULT_TOLERANCES.disc)),
        format=fmt,
        out=data.get("out"),
    )


def _domain_from_object(obj):
    try:
        u, v = obj["u"], obj["v"]
        dom = (float(u[0]), float(u[1])), (float(v[0]), float(v[1]))
    except (KeyError, TypeError, IndexError, ValueError):
        raise ValidationError("domain", f"expected {{'u': [a, b], 'v': [c, d]}}, got {obj!r}") from None
    for axis, (a, b) in zip("uv", dom):
        if not a < b:
            raise ValidationError("domain", f"{axis} interval must satisfy a < b")
    return dom


def _grid_from_object(obj):
    try:
        nu, nv = (int(x) for x in obj)
    except (TypeError, ValueError):
        raise ValidationError("grid", f"expected 'NxM' or [N, M], got {obj!r}") from None
    if nu < 2 or nv < 2:
        raise ValidationError("grid", f"resolution must be at least 2x2, got {nu}x{nv}")
    return nu, nv


def parse_config_text(text):
    """Parse a JSON config document; keys are the ``analyze`` flag names."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid config: {exc.msg}", exc.pos) from None
    if not isinstance(data, dict):
        raise ValidationError("config", "top level must be an object")
    return config_from_mapping(data)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError("argv", message)


def build_parser():
    p = _Parser(prog="lsl", description="Bi-normal census and umbilicity of spacelike surfaces in R^4_1.")
    p.add_argument("--version", action="version", version=f"lsl {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sub.add_parser("families", help="list built-in surface families")

    a = sub.add_parser("analyze", help="classify a surface over a parameter grid")
    a.add_argument("--config", help="JSON file with the fields below (only --out and --format may be combined with it)")
    a.add_argument("--family", help="built-in family name (see `lsl families`)")
    a.add_argument("--f", help="profile f(u) (rh, rs)")
    a.add_argument("--g", help="profile g(u) (rh, rs)")
    a.add_argument("--rho", help="profile rho(u) (rh)")
    a.add_argument("--alpha", help="Euclidean rotation rate (rs, default 1)")
    a.add_argument("--beta", help="hyperbolic rotation rate (rs, default 1)")
    a.add_argument("--curve", help="base curve, 4 comma-separated expressions in u (ruled)")
    a.add_argument("--director", help="ruling director, 4 comma-separated expressions in u (ruled)")
    a.add_argument("--domain", help="parameter rectangle 'u:a..b,v:c..d' (default: family domain)")
    a.add_argument("--grid", help="grid resolution NxM, at least 2x2 (default 32x32)")
    a.add_argument("--tol-root", dest="tol_root", help=f"relative 'All' threshold (default {DEFAULT_TOLERANCES.root:g})")
    a.add_argument("--tol-disc", dest="tol_disc", help=f"relative discriminant band (default {DEFAULT_TOLERANCES.disc:g})")
    a.add_argument("--format", help="json | csv | text (default json)")
    a.add_argument("--out", help="output path (default stdout)")
    return p


def parse_config(argv):
    """Parse ``analyze`` arguments (without the subcommand) into a :class:`RunConfig`."""
    ns = build_parser().parse_args(["analyze", *argv])
    data = {k: v for k, v in vars(ns).items() if v is not None and k not in ("command", "config")}
    if ns.config is not None:
        if set(data) - {"out", "format"}:
            raise ValidationError("config", "surface flags cannot be combined with --config")
        with open(ns.config) as fh:
            cfg = parse_config_text(fh.read())
        return replace(cfg, **{k: data[k] for k in ("out", "format") if k in data})
    return config_from_mapping(data)


# -- running --------------------------------------------------------------------


def _profile(name, text):
    try:
        return Profile.from_expr(text)
    except ParseError as exc:
        raise ParseError(f"--{name}: {exc.reason}", exc.position) from None


def _curve(name, text):
    parts = split_components(text)
    if len(parts) != 4:
        raise ValidationError(name, f"needs 4 comma-separated components, got {len(parts)}")
    try:
        return CurveProfile.from_exprs(parts)
    except ParseError as exc:
        raise ParseError(f"--{name}: {exc.reason}", exc.position) from None


def build_chart(config):
    family, p = config.family, config.params
    if family == "ruled":
        chart = fam.make_ruled(_curve("curve", p["curve"]), _curve("director", p["director"]),
                               config.domain or ((-1.0, 1.0), (-1.0, 1.0)))
    elif family == "rh":
        chart = fam.make_rh(_profile("f", p["f"]), _profile("g", p["g"]), _profile("rho", p["rho"]),
                            config.domain or ((0.0, 1.2), (-1.0, 1.0)))
    elif family == "rs":
        chart = fam.make_rs(_profile("f", p["f"]), _profile("g", p["g"]), p["alpha"], p["beta"],
                            config.domain or ((1.1, 2.0), (0.1, 6.2)))
    else:
        chart = fam.BUILTINS[family]() if config.domain is None else fam.BUILTINS[family](domain=config.domain)
    return chart


def run(config):
    """Classify the configured surface and return the report as a dict."""
    chart = build_chart(config)
    tol = replace(DEFAULT_TOLERANCES, root=config.tol_root, disc=config.tol_disc)
    region = classify_region(chart, config.grid, tol)
    report = {"schema": SCHEMA, "tool": {"name": "lsl", "version": __version__}, "config": config.echo()}
    report.update(region.to_dict())
    return report


# -- emitting -------------------------------------------------------------------


def _number(x):
    if math.isnan(x):
        return "NaN"
    if math.isinf(x):
        return "Infinity" if x > 0 else "-Infinity"
    return format(x, ".17g")


def dumps_json(obj, indent=1, _level=0):
    """Deterministic JSON: insertion key order, floats with 17 significant digits."""
    pad, inner = " " * (indent * _level), " " * (indent * (_level + 1))
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _number(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(str(k))}: {dumps_json(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in obj):
            return "[" + ", ".join(dumps_json(x) for x in obj) + "]"
        return "[\n" + ",\n".join(inner + dumps_json(x, indent, _level + 1) for x in obj) + "\n" + pad + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return dumps_json(obj.item(), indent, _level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _cell(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return _number(x)
    return str(x)


def csv_rows(report):
    for r in report["points"]:
        if r.get("error"):
            row = {"u": r["u"], "v": r["v"], "error": r["error"]}
        else:
            roots = r["roots"] + [[None, None]] * (2 - len(r["roots"]))
            w = r["pseudo_umbilic"] or {}
            wd = w.get("direction", [None, None])
            row = {
                "u": r["u"], "v": r["v"], "census": r["census"],
                "discriminant": r["discriminant"], "near_double": r["near_double"],
                "n_roots": len(r["roots"]),
                "root1_lam": roots[0][0], "root1_mu": roots[0][1],
                "root2_lam": roots[1][0], "root2_mu": roots[1][1],
                "max_root_residual": max(r["root_residuals"]) if r["root_residuals"] else None,
                "umbilic": r["umbilic"], "pseudo_umbilic": bool(w),
                "witness_lam": wd[0], "witness_mu": wd[1], "witness_k": w.get("k"),
                "semi_umbilic": r["semi_umbilic"], "flat": r["flat"], "maximal": r["maximal"],
                "orthogonal_asymptotics": r["orthogonal_asymptotics"],
                "normal_curvature": r["normal_curvature"],
                "H1": r["mean_curvature"][0], "H2": r["mean_curvature"][1],
                "H3": r["mean_curvature"][2], "H4": r["mean_curvature"][3],
                "error": None,
            }
        yield [_cell(row.get(k)) for k in CSV_HEADER]


def dumps_csv(report):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    w.writerows(csv_rows(report))
    return buf.getvalue()


def _where(p):
    return "" if p is None else f"u={p['u']:.6g} v={p['v']:.6g}"


def dumps_text(report):
    nu, nv = report["grid"]["nu"], report["grid"]["nv"]
    (u0, u1), (v0, v1) = report["domain"]["u"], report["domain"]["v"]
    lines = [
        f"surface  {report['chart']} ({report['family']})",
        f"domain   u in [{u0:g}, {u1:g}], v in [{v0:g}, {v1:g}], grid {nu}x{nv}",
        "",
    ]
    for name in VERDICTS:
        v = report["verdicts"][name]
        if v["value"]:
            tail = f"witness {_where(v['witness'])}"
        else:
            tail = f"counterexample {_where(v['counterexample'])}"
            if v.get("obstruction"):
                tail += f" ({v['obstruction']['reason']})"
        lines.append(f"verdict {name:<15} {'yes' if v['value'] else 'no':<4} {tail}")
    lines.append("")
    for kind, n in report["census_histogram"].items():
        lines.append(f"census  {kind:<6} {n}")
    lines.append(f"near-double points {report['near_double']}, flat points {len(report['flat_points'])}, "
                 f"errors {len(report['errors'])}")
    return "\n".join(lines) + "\n"


def emit(report, fmt="json", path=None):
    text = {"json": lambda r: dumps_json(r) + "\n", "csv": dumps_csv, "text": dumps_text}[fmt](report)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    return text


def list_families():
    width = max(len(k) for k in fam.DESCRIPTIONS)
    return "".join(f"{k:<{width}}  {d}\n" for k, d in fam.DESCRIPTIONS.items())


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        if argv[:1] == ["analyze"]:
            config = parse_config(argv[1:])
        else:
            ns = build_parser().parse_args(argv)
            if ns.command == "families":
                sys.stdout.write(list_families())
                return 0
        report = run(config)
        emit(report, config.format, config.out)
    except (ParseError, ValidationError, OSError) as exc:
        print(f"lsl: error: {exc}", file=sys.stderr)
        return 2
    except LslError as exc:
        print(f"lsl: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if report["errors"]:
        print(f"lsl: {len(report['errors'])} grid point(s) failed; see 'errors' in the report", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
