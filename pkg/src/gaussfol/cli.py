"""Command-line front end.

Exit codes: 0 success, 1 property failure, 2 inconclusive, 3 input error,
4 Gröbner budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import catalog
from .foliation import (
    EulerFails,
    Foliation,
    FoliationError,
    NotHomogeneous,
    NotIntegrable,
    foliation_from_json,
    foliation_to_json,
    make_foliation,
    pullback_foliation,
)
from .gauss import (
    ComponentData,
    GaussError,
    Inconclusive,
    NonIsolated,
    NotDominant,
    OracleFailure,
    RationalMap,
    component_from_json,
    contracted_divisor,
    gauss_map,
    invert_birational,
    is_dominant,
    local_multiplicity,
    map_bidegree,
    map_from_json,
    push_forward,
    tdg_by_formula,
    tdg_oracle_report,
    transverse_multiplicity,
    verify_component,
    verify_inverse,
)
from .groebner import Budget, BudgetExceeded, Ideal, projective_degree
from .polyring import PolynomialError, VarRing, as_rational

EXIT_OK, EXIT_PROPERTY, EXIT_INCONCLUSIVE, EXIT_INPUT, EXIT_BUDGET = range(5)

VERBS = ("check", "gauss", "invert", "tdg", "milnor", "transmult", "classify-monomial", "pullback",
         "pushforward", "logdeg", "degree-ideal", "catalog", "bidegree")


class InputError(ValueError):
    pass


class PropertyFailure(Exception):
    def __init__(self, message: str, report: dict | None = None):
        super().__init__(message)
        self.report = report or {}


@dataclass
class Command:
    verb: str
    options: argparse.Namespace

    @property
    def method(self):
        return getattr(self.options, "method", None)


def _add_foliation_source(p: argparse.ArgumentParser):
    g = p.add_argument_group("foliation source (exactly one)")
    g.add_argument("--form", help="coefficients separated by ';'")
    g.add_argument("--file", help="JSON file {vars, coefficients}")
    g.add_argument("--catalog", dest="catalog_key", help="catalog key")


def _add_map_source(p: argparse.ArgumentParser):
    g = p.add_argument_group("map source (alternative to a foliation)")
    g.add_argument("--map", dest="map_text", help="components separated by ';'")
    g.add_argument("--map-file", help="JSON file {vars, components}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", help="comma-separated variable names (default x,y,z,t)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=None, help="maximum Groebner reduction steps")
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    parser = argparse.ArgumentParser(prog="gaussfol", parents=[common],
                                     description="Gauss maps of codimension-one foliations.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    p = verb("check", "validate a 1-form and report its degree")
    _add_foliation_source(p)
    p = verb("gauss", "print the Gauss map and decide dominance")
    _add_foliation_source(p)
    p = verb("invert", "invert a birational Gauss map")
    _add_foliation_source(p)
    _add_map_source(p)
    p.add_argument("--chart", help="l,m chart pair to try first")
    p = verb("tdg", "topological degree of the Gauss map")
    _add_foliation_source(p)
    p.add_argument("--method", choices=("formula", "oracle", "both"), default="oracle")
    p.add_argument("--components", help="JSON file with a list of components")
    p = verb("milnor", "local intersection multiplicity of two curves")
    p.add_argument("--curves", required=True, help="'A;B'")
    p.add_argument("--point", help="comma-separated coordinates (default origin)")
    p = verb("transmult", "transverse multiplicity along a codimension-two component")
    _add_foliation_source(p)
    p.add_argument("--component", help="JSON component file")
    p.add_argument("--generators", help="component generators separated by ';'")
    p.add_argument("--witness", help="comma-separated witness point")
    p.add_argument("--trials", type=int, default=3)
    p = verb("classify-monomial", "classify a monomial foliation on P^3")
    _add_foliation_source(p)
    p = verb("pullback", "pull a foliation back along a polynomial map")
    _add_foliation_source(p)
    _add_map_source(p)
    p.add_argument("--map-vars", help="source variables of the map")
    p = verb("pushforward", "image of a foliation under its birational Gauss map")
    _add_foliation_source(p)
    p = verb("logdeg", "closed-form topological degree of a generic logarithmic foliation on P^3")
    p.add_argument("degrees", help="comma-separated degrees p_1,...,p_k")
    p = verb("degree-ideal", "degree and dimension of a projective scheme")
    p.add_argument("--generators", required=True, help="generators separated by ';'")
    p = verb("catalog", "list or emit catalog items")
    p.add_argument("action", choices=("list", "emit"))
    p.add_argument("key", nargs="?")
    p = verb("bidegree", "degrees of a birational Gauss map and of its inverse")
    _add_foliation_source(p)
    _add_map_source(p)
    p.add_argument("--inverse-file", help="JSON map file with the inverse")
    return parser


class _ArgumentError(Exception):
    pass


def parse_args(argv: Sequence[str]) -> Command:
    """Parse argv into a Command; raises InputError on usage problems."""
    parser = build_parser()
    _silence(parser)
    try:
        ns = parser.parse_args(list(argv))
    except _ArgumentError as exc:
        raise InputError(str(exc)) from None
    sources = [s for s in ("form", "file", "catalog_key") if getattr(ns, s, None)]
    maps = [s for s in ("map_text", "map_file") if getattr(ns, s, None)]
    if len(sources) > 1:
        raise InputError("give exactly one of --form, --file, --catalog")
    if ns.verb in ("invert", "bidegree"):
        if len(sources) + len(maps) != 1:
            raise InputError("give exactly one foliation or map source")
    elif ns.verb == "pullback":
        if len(sources) != 1 or len(maps) != 1:
            raise InputError("pullback needs one foliation source and one map source")
    elif ns.verb in ("check", "gauss", "tdg", "transmult", "classify-monomial", "pushforward"):
        if len(sources) != 1:
            raise InputError("give exactly one of --form, --file, --catalog")
    if ns.verb == "catalog" and ns.action == "emit" and not ns.key:
        raise InputError("catalog emit needs a key")
    return Command(ns.verb, ns)


def _silence(parser: argparse.ArgumentParser):
    def error(message):
        raise _ArgumentError(message)

    parser.error = error
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for sp in action.choices.values():
                sp.error = error


# ---------------------------------------------------------------------------
# input helpers


def _ring(ns, n: int | None = None) -> VarRing:
    if ns.vars:
        return VarRing.of(ns.vars)
    if n is None or n == 4:
        return catalog.P3
    return catalog.projective_ring(n - 1)


def _split(text: str) -> list[str]:
    return [s.strip() for s in text.split(";") if s.strip()]


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from None


def _foliation(ns, validate_only: bool = False):
    """Return (Foliation, CatalogItem | None)."""
    if ns.catalog_key:
        item = catalog.get(ns.catalog_key, seed=ns.seed)
        return item.foliation, item
    if ns.file:
        return foliation_from_json(_load_json(ns.file)), None
    parts = _split(ns.form)
    ring = _ring(ns, len(parts))
    coeffs = [ring.parse(s) for s in parts]
    if len(coeffs) != ring.nvars:
        raise InputError(f"need {ring.nvars} coefficients, got {len(coeffs)}")
    return make_foliation(coeffs, ring), None


def _map(ns) -> RationalMap:
    if ns.map_file:
        return map_from_json(_load_json(ns.map_file))
    parts = _split(ns.map_text)
    ring = VarRing.of(ns.map_vars) if getattr(ns, "map_vars", None) else _ring(ns, len(parts))
    return RationalMap([ring.parse(s) for s in parts])


def _point(text: str | None, n: int):
    if not text:
        return tuple([0] * n)
    vals = tuple(as_rational(v.strip()) for v in text.split(","))
    if len(vals) != n:
        raise InputError(f"point needs {n} coordinates")
    return vals


def _budget(ns) -> Budget:
    return Budget(max_reductions=ns.budget) if ns.budget else Budget()


# ---------------------------------------------------------------------------
# verbs


def _check(ns):
    try:
        F, _ = _foliation(ns)
    except (NotHomogeneous, EulerFails, NotIntegrable) as exc:
        kind = {NotHomogeneous: "homogeneous", EulerFails: "euler", NotIntegrable: "integrable"}[type(exc)]
        raise PropertyFailure(str(exc), {"failed": kind})
    return {"degree": F.degree, "ambient": F.ambient, "homogeneous": "ok", "euler": "ok", "integrable": "ok",
            "coefficients": [str(c) for c in F.coefficients], "vars": list(F.ring.names)}


def _gauss(ns):
    F, _ = _foliation(ns)
    G = gauss_map(F)
    dom, J = is_dominant(G)
    return {"map": [str(c) for c in G.components], "degree": G.degree, "dominant": dom,
            "jacobian_degree": J.total_degree() if J.terms else None}


def _source_map(ns):
    if getattr(ns, "map_text", None) or getattr(ns, "map_file", None):
        return _map(ns), None, None
    F, item = _foliation(ns)
    return gauss_map(F), F, item


def _invert(ns):
    G, F, _ = _source_map(ns)
    budget = _budget(ns)
    charts = None
    if ns.chart:
        l, m = (int(v) for v in ns.chart.split(","))
        n1 = G.source.nvars
        rest = [(a, b) for a in range(n1 - 1, -1, -1) for b in range(n1 - 1, -1, -1) if (a, b) != (l, m)]
        charts = [(l, m)] + rest
    res = invert_birational(G, charts, budget)
    divisor = contracted_divisor(G, res.inverse, F, res.factor)
    return {"inverse": [str(c) for c in res.inverse.components], "target_vars": list(res.inverse.target.names),
            "factor": str(res.factor), "chart": list(res.chart),
            "charts_tried": [[list(c), s] for c, s in res.charts_tried],
            "divisor": [{"factor": str(d.factor), "multiplicity": d.multiplicity, "invariant": d.invariant}
                        for d in divisor],
            "bidegree": [G.degree, res.inverse.degree], "budget": res.budget}


def _components(ns, F: Foliation, item) -> list[ComponentData]:
    if ns.components:
        data = _load_json(ns.components)
        if isinstance(data, dict):
            data = data.get("components", [])
        return [component_from_json(c, F.ring) for c in data]
    if item is not None and item.components:
        return list(item.components)
    if item is not None and "component_data" in item.extra:
        return item.extra["component_data"]
    raise InputError("the formula method needs --components")


def _tdg(ns):
    F, item = _foliation(ns)
    budget = _budget(ns)
    report = {"degree": F.degree, "seed": ns.seed, "method": ns.method}
    if ns.method in ("formula", "both"):
        comps = []
        for c in _components(ns, F, item):
            if isinstance(c, ComponentData):
                c = verify_component(F, c, budget)
                if c.mu is None:
                    c = ComponentData(c.ideal, c.witness, c.degree,
                                      transverse_multiplicity(F, c, seed=ns.seed, budget=budget), c.name)
                comps.append(c)
            else:
                comps.append(tuple(c))
        report["components"] = [
            {"name": c.name, "degree": c.degree, "mu": c.mu} if isinstance(c, ComponentData)
            else {"degree": c[0], "mu": c[1]} for c in comps]
        report["formula"] = tdg_by_formula(F.degree, comps)
    if ns.method in ("oracle", "both"):
        orc = tdg_oracle_report(F, ns.seed, budget)
        report["oracle"] = orc.value
        report["planes"] = [{"matrix": p["matrix"], "value": p["value"], "retries": p["retries"]} for p in orc.planes]
    report["budget"] = budget.report()
    if ns.method == "both" and report["formula"] != report["oracle"]:
        raise PropertyFailure("formula and oracle disagree", report)
    report["tdg"] = report.get("oracle", report.get("formula"))
    return report


def _milnor(ns):
    parts = _split(ns.curves)
    if len(parts) != 2:
        raise InputError("--curves needs two polynomials 'A;B'")
    ring = VarRing.of(ns.vars) if ns.vars else VarRing(("x", "y"))
    A, B = (ring.parse(s) for s in parts)
    pt = _point(ns.point, ring.nvars)
    return {"milnor": local_multiplicity(A, B, pt, _budget(ns)), "point": [str(v) for v in pt]}


def _transmult(ns):
    F, item = _foliation(ns)
    if ns.component:
        comps = [component_from_json(_load_json(ns.component), F.ring)]
    elif ns.generators:
        if not ns.witness:
            raise InputError("--generators needs --witness")
        gens = [F.ring.parse(s) for s in _split(ns.generators)]
        comps = [ComponentData(Ideal(gens, F.ring), _point(ns.witness, F.ring.nvars))]
    elif item is not None and item.components:
        comps = item.components
    else:
        raise InputError("give --component or --generators/--witness")
    out = []
    for c in comps:
        mu = transverse_multiplicity(F, c, ns.trials, ns.seed, _budget(ns))
        out.append({"name": c.name, "generators": [str(g) for g in c.ideal.generators], "mu": mu})
    return {"components": out, "seed": ns.seed, "trials": ns.trials}


def _classify(ns):
    F, _ = _foliation(ns)
    res = catalog.classify_monomial(F)
    rep = {"verdict": res.verdict}
    if res.verdict == "PullbackUV":
        rep.update({"p": res.p, "q": res.q, "raw": list(res.raw), "ratio": str(res.ratio),
                    "u": list(res.pairs[0]), "v": list(res.pairs[1])})
    if res.verdict == "Log1111":
        rep["residues"] = [str(r) for r in res.residues]
    return rep


def _pullback(ns):
    F, _ = _foliation(ns)
    phi = _map(ns)
    if len(phi.components) != F.ring.nvars:
        raise InputError("map arity does not match the foliation")
    P = pullback_foliation(F, phi.components)
    return foliation_to_json(P)


def _pushforward(ns):
    F, _ = _foliation(ns)
    G = gauss_map(F)
    res = invert_birational(G, budget=_budget(ns))
    D = push_forward(F, G, res.inverse)
    out = foliation_to_json(D)
    out["chart"] = list(res.chart)
    return out


def _logdeg(ns):
    try:
        degs = [int(v) for v in ns.degrees.split(",")]
    except ValueError:
        raise InputError("degrees must be integers") from None
    if len(degs) < 2 or any(p < 1 for p in degs):
        raise InputError("need at least two positive degrees")
    return {"degrees": degs, "ell": catalog.log_formula(degs), "foliation_degree": sum(degs) - 2}


def _degree_ideal(ns):
    parts = _split(ns.generators)
    ring = _ring(ns)
    gens = [ring.parse(s) for s in parts]
    pd = projective_degree(Ideal(gens, ring), _budget(ns))
    return {"degree": pd.degree, "dimension": pd.dimension, "empty": pd.empty}


def _catalog(ns):
    if ns.action == "list":
        return {"keys": [{"key": k, "description": d} for k, d in catalog.keys()]}
    item = catalog.get(ns.key, seed=ns.seed)
    out = foliation_to_json(item.foliation)
    out["key"] = item.key
    out["description"] = item.description
    if item.inverse is not None:
        out["inverse"] = {"vars": list(item.inverse.source.names),
                          "components": [str(c) for c in item.inverse.components]}
    if item.components:
        out["components"] = [{"name": c.name, "generators": [str(g) for g in c.ideal.generators],
                              "degree": c.degree, "mu": c.mu, "witness": [str(w) for w in c.witness]}
                             for c in item.components]
    if item.expected_tdg is not None:
        out["expected_tdg"] = item.expected_tdg
    return out


def _bidegree(ns):
    G, F, item = _source_map(ns)
    if ns.inverse_file:
        H = map_from_json(_load_json(ns.inverse_file))
    elif item is not None and item.inverse is not None:
        H = item.inverse
    else:
        H = invert_birational(G, budget=_budget(ns)).inverse
    if verify_inverse(G, H) is None:
        raise PropertyFailure("the supplied inverse does not invert the map")
    return {"bidegree": list(map_bidegree(G, H, verify=False))}


_HANDLERS = {
    "check": _check, "gauss": _gauss, "invert": _invert, "tdg": _tdg, "milnor": _milnor,
    "transmult": _transmult, "classify-monomial": _classify, "pullback": _pullback,
    "pushforward": _pushforward, "logdeg": _logdeg, "degree-ideal": _degree_ideal,
    "catalog": _catalog, "bidegree": _bidegree,
}


def execute(cmd: Command) -> tuple[dict, int]:
    """Run a command; returns the report and the exit code."""
    ns = cmd.options
    try:
        report = _HANDLERS[cmd.verb](ns)
        return {"verb": cmd.verb, "status": "ok", **report}, EXIT_OK
    except PropertyFailure as exc:
        return {"verb": cmd.verb, "status": "failed", "error": str(exc), **exc.report}, EXIT_PROPERTY
    except NotDominant as exc:
        return {"verb": cmd.verb, "status": "failed", "error": f"not dominant: {exc}"}, EXIT_PROPERTY
    except (Inconclusive, OracleFailure, NonIsolated) as exc:
        return {"verb": cmd.verb, "status": "inconclusive", "error": str(exc)}, EXIT_INCONCLUSIVE
    except BudgetExceeded as exc:
        return {"verb": cmd.verb, "status": "budget", "error": str(exc)}, EXIT_BUDGET
    except (InputError, PolynomialError, FoliationError, GaussError, catalog.CatalogError) as exc:
        return {"verb": cmd.verb, "status": "input-error", "error": f"{type(exc).__name__}: {exc}"}, EXIT_INPUT


def _jsonable(v):
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (int, float, str, bool)) or v is None:
        return v
    return str(v)


def render(report: dict, as_json: bool) -> str:
    report = _jsonable(report)
    if as_json:
        return json.dumps(report, sort_keys=True, indent=2)
    lines = []
    for k, v in report.items():
        if isinstance(v, list) and v and isinstance(v[0], (dict, list)):
            lines.append(f"{k}:")
            lines.extend(f"  {json.dumps(x, sort_keys=True)}" for x in v)
        elif isinstance(v, (dict, list)):
            lines.append(f"{k}: {json.dumps(v, sort_keys=True)}")
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] in ("-h", "--help"):
        build_parser().print_help()
        return EXIT_OK if argv else EXIT_INPUT
    try:
        cmd = parse_args(argv)
    except InputError as exc:
        print(f"gaussfol: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    report, code = execute(cmd)
    print(render(report, cmd.options.json))
    return code


if __name__ == "__main__":
    sys.exit(main())
