"""Command-line interface.

Subcommands:
  analyze  closed-form cycle structure for one (q, n), optional brute check
  graph    full functional graph of one system, as DOT or JSON
  sweep    prime-averaged period counts against the analytic mean
  ffield   function-field densities, means and oscillation series
  verify   the cross-validation battery (quick or full scope)

Exit codes: 0 success, 1 invariant violation or failed verification,
2 bad input, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import finite_field, function_field, graph_engine, mean_values, monomial
from .errors import InputRangeError, InvariantViolation, ResourceCapError
from .numtheory import prime_power_base
from .reporting import comment_header, envelope, ff_csv, render_json, sweep_csv
from .verify import run_verification


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monodyn",
        description="cycle structure of monomial maps on finite fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="closed-form structure of x -> a x^n")
    pa.add_argument("--q", type=int, required=True, help="prime power field size")
    pa.add_argument("--n", type=int, required=True, help="exponent, >= 2")
    pa.add_argument(
        "--a", type=int, default=1, help="coefficient index, 1 <= a < q"
    )
    pa.add_argument(
        "--brute",
        action="store_true",
        help="also enumerate the graph and cross-check",
    )

    pg = sub.add_parser("graph", help="full functional graph of one system")
    pg.add_argument("--q", type=int, required=True)
    pg.add_argument("--n", type=int, required=True)
    pg.add_argument("--a", type=int, default=1)
    pg.add_argument("--format", choices=("dot", "json"), default="json")

    ps = sub.add_parser("sweep", help="prime-averaged period counts")
    ps.add_argument("--r", type=int, required=True, help="exact period")
    ps.add_argument("--s", type=int, default=1, help="field degree p^s")
    ps.add_argument("--n", type=int, required=True)
    ps.add_argument("--t", type=int, required=True, help="prime bound")
    ps.add_argument(
        "--checkpoints",
        type=str,
        default=None,
        help="comma-separated report points, e.g. 100,1000,10000",
    )
    ps.add_argument("--format", choices=("json", "csv"), default="json")
    ps.add_argument("--threads", type=int, default=None)

    pf = sub.add_parser("ffield", help="densities over F_q(T)")
    pf.add_argument("--q", type=int, required=True)
    pf.add_argument("--r", type=int, default=None, help="cycle length")
    pf.add_argument("--n", type=int, default=None, help="exponent for means")
    pf.add_argument("--t", type=int, default=None, help="degree bound")
    mode = pf.add_mutually_exclusive_group(required=True)
    mode.add_argument(
        "--density", action="store_true", help="Dirichlet density of S_r"
    )
    mode.add_argument(
        "--dmean", action="store_true", help="Dirichlet mean period counts"
    )
    mode.add_argument(
        "--oscillate", action="store_true", help="natural-density series"
    )
    pf.add_argument("--format", choices=("json", "csv"), default="json")

    pv = sub.add_parser("verify", help="cross-validation battery")
    pv.add_argument("--scope", choices=("quick", "full"), default="quick")
    pv.add_argument("--seed", type=int, default=0)
    pv.add_argument("--threads", type=int, default=None)

    for sp in (pa, pg, ps, pf, pv):
        sp.add_argument(
            "--output", type=str, default=None, help="write to file, not stdout"
        )
    return parser


def _threads(args) -> int:
    if getattr(args, "threads", None):
        return args.threads
    return int(os.environ.get("MONODYN_THREADS", "1"))


def _field_for(q: int):
    pp = prime_power_base(q)
    if pp is None:
        raise InputRangeError(f"q must be a prime power >= 2, got {q}")
    return finite_field.make_field(*pp)


def _cmd_analyze(args) -> str:
    if prime_power_base(args.q) is None:
        raise InputRangeError(f"q must be a prime power >= 2, got {args.q}")
    prof = monomial.profile(args.q, args.n)
    config = {"q": args.q, "n": args.n, "a": args.a, "brute": args.brute}
    result = {
        "q": args.q,
        "n": args.n,
        "q_star": monomial.q_star(args.q, args.n),
        "r_hat": prof.r_hat,
        "bijective": monomial.is_bijective(args.q, args.n),
        "fixed_point_system": monomial.is_fixed_point_system(args.q, args.n),
        "periodic_by_period": prof.per_period,
        "cycles_by_length": prof.per_length,
        "periodic_total": prof.total_periodic,
        "cycle_total": prof.total_cycles,
    }
    if args.a != 1 or args.brute:
        spec = _field_for(args.q)
        sys_ = graph_engine.monomial_system(spec, args.n, args.a)
        if args.brute:
            st = graph_engine.build(sys_)
            rep = graph_engine.dichotomy_report(sys_, st, strict=False)
            result["brute"] = {
                "periodic_by_period": st.p_brute,
                "cycles_by_length": st.c_brute,
                "component_count": st.component_count,
                "periodic_total": st.periodic_total,
                "has_nonzero_fixed": rep.has_nonzero_fixed,
                "match": bool(
                    rep.totals_match
                    and (args.a != 1 or st.p_brute == prof.per_period)
                    and rep.formula_match is not False
                ),
            }
        else:
            result["has_nonzero_fixed"] = graph_engine.has_nonzero_fixed(sys_)
    return render_json(envelope("analyze", config, 0, result))


def _cmd_graph(args) -> str:
    spec = _field_for(args.q)
    sys_ = graph_engine.monomial_system(spec, args.n, args.a)
    st = graph_engine.build(sys_)
    config = {"q": args.q, "n": args.n, "a": args.a, "format": args.format}
    if args.format == "dot":
        return graph_engine.export_dot(
            st, header=comment_header("graph", config, 0)
        )
    return render_json(
        envelope("graph", config, 0, graph_engine.orbit_document(st))
    )


def _parse_checkpoints(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise InputRangeError(f"bad checkpoint list: {text!r}") from None


def _cmd_sweep(args) -> str:
    workers = _threads(args)
    rep = mean_values.empirical_mean(
        args.r,
        args.s,
        args.n,
        args.t,
        checkpoints=_parse_checkpoints(args.checkpoints),
        workers=workers,
    )
    config = {
        "r": args.r,
        "s": args.s,
        "n": args.n,
        "t": args.t,
        "checkpoints": args.checkpoints,
        "format": args.format,
    }
    if args.format == "csv":
        return sweep_csv(rep, comment_header("sweep", config, 0))
    return render_json(envelope("sweep", config, 0, rep))


def _cmd_ffield(args) -> str:
    q = args.q
    if args.density:
        if args.r is None:
            raise InputRangeError("--density requires --r")
        config = {"q": q, "r": args.r, "mode": "density"}
        result = {
            "q": q,
            "r": args.r,
            "dirichlet_density": function_field.dirichlet_density_S(q, args.r),
            "subsequence_limits": function_field.subsequence_limits(q, args.r),
        }
        return render_json(envelope("ffield", config, 0, result))
    if args.dmean:
        if args.n is None or args.r is None:
            raise InputRangeError("--dmean requires --n and --r")
        config = {"q": q, "n": args.n, "r": args.r, "mode": "dmean"}
        result = {
            "q": q,
            "n": args.n,
            "r": args.r,
            "dirichlet_D": function_field.dirichlet_D_K(q, args.n, args.r),
            "dirichlet_C": function_field.dirichlet_C_K(q, args.n, args.r),
        }
        return render_json(envelope("ffield", config, 0, result))
    if args.r is None or args.t is None:
        raise InputRangeError("--oscillate requires --r and --t")
    rep = function_field.oscillation_experiment(q, args.r, args.t)
    config = {
        "q": q,
        "r": args.r,
        "t": args.t,
        "mode": "oscillate",
        "format": args.format,
    }
    if args.format == "csv":
        return ff_csv(rep, comment_header("ffield", config, 0))
    return render_json(envelope("ffield", config, 0, rep))


def _cmd_verify(args) -> tuple[str, int]:
    summary = run_verification(args.scope, args.seed, _threads(args))
    lines = []
    for r in summary.results:
        status = "PASS" if r.ok else "FAIL"
        extra = f"  ({r.detail})" if r.detail else ""
        lines.append(f"{status}  {r.name}  [{r.seconds:.2f}s]{extra}")
    n_ok = sum(r.ok for r in summary.results)
    lines.append(
        f"{'OK' if summary.ok else 'FAILED'}: {n_ok}/{len(summary.results)} "
        f"checks passed (scope={summary.scope}, seed={summary.seed})"
    )
    return "\n".join(lines) + "\n", 0 if summary.ok else 1


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    code = 0
    try:
        if args.command == "analyze":
            text = _cmd_analyze(args)
        elif args.command == "graph":
            text = _cmd_graph(args)
        elif args.command == "sweep":
            text = _cmd_sweep(args)
        elif args.command == "ffield":
            text = _cmd_ffield(args)
        else:
            text, code = _cmd_verify(args)
    except InputRangeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return 1
    _emit(text, args.output)
    return code


def entrypoint() -> None:
    sys.exit(main())
