"""Command-line interface: ``grassblow {lattice,certify,identities,atlas}``.

Exit codes: 0 success, 2 parameter error, 3 unsupported case (r < 3 for
certify and identities), 4 verification failure (a result that contradicts an
exact self-check, or an identity residual not on the shipped fixture list).
"""

from __future__ import annotations

import argparse
import os
import sys

from . import atlas, cone, lattice, restriction
from .errors import ParameterError, UnsupportedCase, VerificationFailure
from .exact import RationalSampler
from .fixtures import expected_discrepancy, load_fixtures
from .grassmann import ASCENDING, LISTED, Parameters
from .report import Report, RunConfig, dumps

EXIT_OK = 0
EXIT_PARAMETER = 2
EXIT_UNSUPPORTED = 3
EXIT_VERIFICATION = 4


def _triples(max_n: int, min_r: int = 1):
    """Normalized (s, p, n) with n <= max_n and r >= min_r, in a fixed order."""
    out = []
    for n in range(2, max_n + 1):
        for p in range(1, n // 2 + 1):
            for s in range((n + 1) // 2, n):
                params = Parameters(s, p, n)
                if params.is_normalized and params.r >= min_r:
                    out.append(params)
    return out


def _normalized_from(config: RunConfig) -> tuple[Parameters, tuple[str, ...]]:
    if config.s is None or config.p is None or config.n is None:
        raise ParameterError("--s, --p and --n are required")
    s, p, n, log = lattice.normalize_parameters(config.s, config.p, config.n)
    return Parameters(s, p, n), log


def _targets(config: RunConfig, min_r: int) -> tuple[list[Parameters], dict]:
    """Parameter triples for a command: one (normalized) triple or a sweep."""
    if config.max_n is not None:
        if config.max_n < 2:
            raise ParameterError("--max-n must be at least 2")
        return _triples(config.max_n, min_r), {"sweep_max_n": config.max_n}
    params, log = _normalized_from(config)
    return [params], {"normalization": list(log), "normalized": list(params.as_tuple())}


def _sides(config: RunConfig):
    return [config.side] if config.side else list(restriction.SIDES)


def _js(config: RunConfig, r: int):
    if config.j is None:
        return list(range(1, r + 1))
    if not 1 <= config.j <= r:
        raise ParameterError(f"--j must be in 1..{r}")
    return [config.j]


# ---------------------------------------------------------------------------
# commands


def cmd_lattice(config: RunConfig) -> tuple[Report, int]:
    targets, info = _targets(config, 1)
    entries = []
    for params in targets:
        r, regime = lattice.level_and_regime(params)
        minus_k = lattice.anticanonical_class(params)
        entries.append(
            {
                "triple": list(params.as_tuple()),
                "r": r,
                "regime": str(regime),
                "B": [
                    {
                        "j": j,
                        "class": lattice.class_of_B(params, j),
                        "coincides_with": lattice.boundary_coincidence(params, j),
                    }
                    for j in range(r + 1)
                ],
                "anticanonical_terms": [[c, label] for c, label in lattice.anticanonical_terms(params)],
                "anticanonical": minus_k,
                "anticanonical_H": minus_k.h,
                "orbit_pairs": len(lattice.enumerate_orbit_pairs(r)),
            }
        )
    return Report(config, {"results": entries}, [], info), EXIT_OK


def cmd_certify(config: RunConfig) -> tuple[Report, int]:
    targets, info = _targets(config, 3)
    if config.max_n is None and targets[0].r < 3:
        raise UnsupportedCase(f"r = {targets[0].r}: outside the standing assumption r >= 3")
    entries = []
    code = EXIT_OK
    for params in targets:
        r, regime = lattice.level_and_regime(params)
        for side in _sides(config):
            for j in _js(config, r):
                gens = cone.generator_set(params, side, j)
                target = cone.restricted_anticanonical_target(params, side, j)
                lp = cone.certify_interior(target, gens)
                item = {
                    "triple": list(params.as_tuple()),
                    "regime": str(regime),
                    "side": side,
                    "j": j,
                    "generators": gens.labels,
                    "target": target,
                    "lp": lp.as_dict(),
                }
                ok = lp.status == cone.INTERIOR
                if regime in (lattice.Regime.R1, lattice.Regime.R3):
                    delta = cone.delta_certificate(params, side, j)
                    item["delta"] = delta.as_dict()
                    ok = ok and delta.status == cone.INTERIOR
                if not ok:
                    code = EXIT_VERIFICATION
                entries.append(item)
    body = {"results": entries, "interior": sum(e["lp"]["status"] == cone.INTERIOR for e in entries), "total": len(entries)}
    return Report(config, body, [], info), code


def cmd_identities(config: RunConfig) -> tuple[Report, int]:
    targets, info = _targets(config, 3)
    if config.max_n is None and targets[0].r < 3:
        raise UnsupportedCase(f"r = {targets[0].r}: outside the standing assumption r >= 3")
    findings = []
    counts = {restriction.HOLDS: 0, restriction.DISCREPANCY: 0, restriction.NOT_STATED: 0}
    code = EXIT_OK
    for params in targets:
        r, regime = lattice.level_and_regime(params)
        for side in _sides(config):
            for j in _js(config, r):
                for res in restriction.identity_suite(params, side, j):
                    counts[res.status] += 1
                    if res.status != restriction.DISCREPANCY:
                        continue
                    entry = expected_discrepancy(regime, side, res.family, j, r)
                    fixed = res.corrected_residual is not None and res.corrected_residual.is_zero()
                    if entry is None or not fixed:
                        code = EXIT_VERIFICATION
                    findings.append(
                        {
                            "id": res.id,
                            "triple": list(params.as_tuple()),
                            "residual": res.residual,
                            "expected": entry is not None,
                            "corrected_vanishes": fixed,
                            "reading": None if entry is None else entry["reading"],
                        }
                    )
    body = {"counts": counts, "triples": len(targets)}
    return Report(config, body, findings, info), code


def cmd_atlas(config: RunConfig) -> tuple[Report, int]:
    params, log = _normalized_from(config)
    l = 1 if config.l is None else config.l
    charts = atlas.enumerate_charts(params, l)
    points = config.points if config.points is not None else load_fixtures()["points_per_pair"]
    if points < 1:
        raise ParameterError("--points must be positive")
    convention = config.sign_convention
    mismatched = atlas.g48_compare()
    checked = consistent = skipped = 0
    routes: dict[str, int] = {}
    first_witness = None
    for a, src in enumerate(charts):
        for b, dst in enumerate(charts):
            res = atlas.transition_sweep(src, dst, points, config.seed + 1000 * a + b, convention)
            checked += res.checked
            consistent += res.consistent
            skipped += res.skipped
            for route, k in res.routes:
                routes[route] = routes.get(route, 0) + k
            if first_witness is None and res.witness is not None:
                first_witness = {"src": a, "dst": b, "pair": list(res.witness)}
    # rho_{j-1} on the level-(j-1) charts, j = l + 1
    rho_ok = rho_total = 0
    sampler = RationalSampler(config.seed)
    for tau in charts:
        for _ in range(points):
            pt = atlas.random_chart_point(tau, sampler)
            rho_total += 1
            rho_ok += atlas.rho_eval(params, l + 1, tau, l, pt, convention) == 1
    body = {
        "triple": list(params.as_tuple()),
        "level": l,
        "charts": len(charts),
        "coordinates": params.p * (params.n - params.p),
        "golden_g48": {"matches": not mismatched, "mismatched_entries": [list(e) for e in mismatched]},
        "transitions": {
            "checked": checked,
            "consistent": consistent,
            "skipped_outside_overlap": skipped,
            "routes": routes,
            "first_witness": first_witness,
        },
        "rho_frame": {"checked": rho_total, "equal_one": rho_ok},
    }
    ok = not mismatched and consistent == checked and rho_ok == rho_total
    return Report(config, body, [], {"normalization": list(log)}), EXIT_OK if ok else EXIT_VERIFICATION


COMMANDS = {"lattice": cmd_lattice, "certify": cmd_certify, "identities": cmd_identities, "atlas": cmd_atlas}


# ---------------------------------------------------------------------------
# human-readable summaries


def _human(report: Report) -> str:
    d = report.as_dict()
    body, cfg = d["body"], report.config
    lines = [f"grassblow {cfg.command}  seed={cfg.seed}  sign={cfg.sign_convention}"]
    if d["header"].get("normalization"):
        lines.append("normalization: " + ", ".join(d["header"]["normalization"]))
    if cfg.command == "lattice":
        for e in report.body["results"]:
            lines.append(f"(s,p,n)={tuple(e['triple'])}  r={e['r']}  regime={e['regime']}")
            for b in e["B"]:
                tag = f"  [= {b['coincides_with']}]" if b["coincides_with"] else ""
                lines.append(f"  B{b['j']} = {b['class']}{tag}")
            lines.append(f"  -K = {e['anticanonical']}")
            lines.append(f"  orbit pairs: {e['orbit_pairs']}")
    elif cfg.command == "certify":
        for e in report.body["results"]:
            lp = e["lp"]
            line = f"{tuple(e['triple'])} {e['side']} j={e['j']}: {lp['status']} slack={lp['slack']} rank={lp['rank']}/{lp['dimension']}"
            if "delta" in e:
                deltas = e["delta"]["deltas"]
                shown = "" if deltas is None else " (" + ", ".join(str(d) for d in deltas) + ")"
                line += f"  delta: {e['delta']['status']}{shown}"
            lines.append(line)
        lines.append(f"{report.body['interior']}/{report.body['total']} interior")
    elif cfg.command == "identities":
        lines.append(f"triples: {report.body['triples']}  counts: {report.body['counts']}")
        for f in report.findings:
            tag = "expected" if f["expected"] else "UNEXPECTED"
            lines.append(f"  {tuple(f['triple'])} {f['id']}: {tag}, residual {f['residual']}")
    else:
        b = report.body
        t = b["transitions"]
        lines.append(f"(s,p,n)={tuple(b['triple'])} level {b['level']}: {b['charts']} charts, {b['coordinates']} coordinates each")
        lines.append(f"G(4,8) worked example matches: {b['golden_g48']['matches']}")
        lines.append(
            f"transitions: {t['consistent']}/{t['checked']} consistent "
            f"({t['skipped_outside_overlap']} points outside the overlap skipped; routes {t['routes']})"
        )
        lines.append(f"rho on the frame block equals 1: {b['rho_frame']['equal_one']}/{b['rho_frame']['checked']}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grassblow", description="Exact computations on canonical blow-ups of Grassmannians.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, helptext in (
        ("lattice", "normalization, regime, B classes and -K"),
        ("certify", "interior certificates for restricted -K"),
        ("identities", "evaluate the restricted identity suite"),
        ("atlas", "chart counts, worked example and transition checks"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--s", type=int)
        sp.add_argument("--p", type=int)
        sp.add_argument("--n", type=int)
        if name != "atlas":
            sp.add_argument("--max-n", type=int, dest="max_n", help="sweep all normalized triples with n <= MAX_N")
        if name in ("certify", "identities"):
            sp.add_argument("--side", choices=list(restriction.SIDES))
            sp.add_argument("--j", type=int)
        if name == "atlas":
            sp.add_argument("--l", type=int, help="chart level (default 1)")
            sp.add_argument("--points", type=int, help="seeded points per chart pair")
        sp.add_argument("--seed", type=int, help="random seed (default: $GRASSBLOW_SEED or the fixture seed)")
        sp.add_argument("--sign", choices=[LISTED, ASCENDING], default=LISTED, help="Plücker column-order convention")
        sp.add_argument("--json", action="store_true", help="emit the JSON report")
    return parser


def _seed(arg: int | None) -> int:
    if arg is not None:
        return arg
    env = os.environ.get("GRASSBLOW_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParameterError(f"GRASSBLOW_SEED must be an integer, got {env!r}") from None
    return load_fixtures()["seeds"]["default"]


def run(argv=None) -> tuple[Report, int]:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        command=args.command,
        s=args.s,
        p=args.p,
        n=args.n,
        max_n=getattr(args, "max_n", None),
        side=getattr(args, "side", None),
        j=getattr(args, "j", None),
        l=getattr(args, "l", None),
        points=getattr(args, "points", None),
        sign_convention=args.sign,
        output="json" if args.json else "human",
    )
    try:
        config.seed = _seed(args.seed)
        return COMMANDS[args.command](config)
    except ParameterError as exc:
        return _error_report(config, "parameter", exc), EXIT_PARAMETER
    except UnsupportedCase as exc:
        return _error_report(config, "unsupported", exc), EXIT_UNSUPPORTED
    except VerificationFailure as exc:
        return _error_report(config, "verification", exc), EXIT_VERIFICATION


def _error_report(config: RunConfig, kind: str, exc: Exception) -> Report:
    return Report(config, {"error": {"kind": kind, "message": str(exc)}}, [])


def main(argv=None) -> int:
    report, code = run(argv)
    if report.config.output == "json":
        print(dumps(report))
    elif "error" in report.body:
        print(f"error ({report.body['error']['kind']}): {report.body['error']['message']}", file=sys.stderr)
    else:
        print(_human(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
