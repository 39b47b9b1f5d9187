"""Command-line entry point: ``genocchi <command> ...``.

Exit codes: 0 success / all checks pass, 1 a check failed (counterexample
printed), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from genocchi import checks
from genocchi import dellac as dc
from genocchi import dumont_bijection as db
from genocchi import dyck_histories as dh
from genocchi import permutations as pm
from genocchi import qpolys as qp
from genocchi import sequences as seq

SCHEMA = checks.SCHEMA


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _poly_payload(kind: str, n: int, p) -> dict:
    if isinstance(p, qp.XQPoly):
        m = p.to_matrix()
        return {"schema": SCHEMA, "kind": kind, "n": n, "rows": len(m), "cols": len(m[0]) if m else 0, "coeffs": m}
    return {"schema": SCHEMA, "kind": kind, "n": n, "coeffs": p.to_list()}


# ---------------------------------------------------------------------------
# command handlers; each returns an exit code
# ---------------------------------------------------------------------------


def cmd_seidel(args) -> int:
    t = seq.seidel_triangle(args.rows)
    if args.format == "json":
        print(_dump({"schema": SCHEMA, "rows": t.to_lists()}))
    else:
        for i, row in enumerate(t.rows, 1):
            print(f"{i:>3}: " + " ".join(map(str, row)))
    return 0


def cmd_sequence(args) -> int:
    if args.name == "genocchi":
        values = [seq.genocchi(n) for n in range(1, args.upto + 1)]
    elif args.name == "median":
        values = [seq.median_genocchi(n) for n in range(0, args.upto + 1)]
    else:
        values = [seq.normalized_h(n) for n in range(0, args.upto + 1)]
    for v in values:
        print(v)
    return 0


def cmd_qpoly(args) -> int:
    n = args.n
    if args.kind == "gandhi":
        payload = _poly_payload("gandhi", n, qp.gandhi(n))
        text = str(qp.gandhi(n))
    elif args.kind == "cbar":
        p = qp.cbar(n)
        payload, text = _poly_payload("cbar", n, p), str(p)
    elif args.kind == "lambda":
        p = qp.lambda_seq(n)
        payload, text = _poly_payload("lambda", n, p), str(p)
    else:
        terms = qp.cfrac_coeffs(qp.lambdas(max(n - 1, 0)), n)
        payload = {"schema": SCHEMA, "kind": "cfrac", "n": n, "terms": [t.to_list() for t in terms]}
        text = "\n".join(f"t^{k}: {t}" for k, t in enumerate(terms))
    print(_dump(payload) if args.format == "json" else text)
    return 0


def cmd_perm(args) -> int:
    for sigma in pm.enumerate_dumont(args.n, args.cls):
        print(f"{sigma} {pm.st(sigma)}" if args.stats else sigma)
    return 0


def cmd_dellac(args) -> int:
    if args.action == "enumerate":
        for C in dc.enumerate_dellac(args.n):
            obj = {"n": C.n, "col": list(C.col), "inv": dc.inv(C)}
            if args.stats:
                obj["refined"] = [dc.refined_stats(C, i)._asdict() for i in range(1, 2 * C.n + 1)]
                obj["switchable"] = [i for i in range(1, 2 * C.n) if dc.is_switchable(C, i)]
            print(_dump(obj))
    elif args.action == "graph":
        g = dc.switching_graph(args.n)
        if args.format == "dot":
            print(dc.graph_to_dot(g))
        else:
            order = sorted(g, key=lambda C: C.col)
            print(_dump({
                "schema": SCHEMA,
                "n": args.n,
                "vertices": [list(C.col) for C in order],
                "edges": [[list(C.col), list(D.col)] for C in order for D in sorted(g[C], key=lambda D: D.col) if C.col < D.col],
                "connected": dc.is_connected(g),
            }))
    else:
        print(dc.render(_config(args.config)))
    return 0


def _config(text: str) -> dc.DellacConfig:
    try:
        return dc.DellacConfig.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _perm(text: str) -> pm.Perm:
    try:
        return pm.Perm.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_bij(args) -> int:
    if args.action == "phi":
        C = _config(args.config)
        sigma = db.phi(C)
        out = {"config": list(C.col), "phi": str(sigma), "inverse_word": db.phi_inverse_word(C),
               "tau": list(db.tau(C).images), "st": pm.st(sigma), "inv": dc.inv(C)}
        print(_dump(out))
        return 0
    if args.action == "varphi":
        sigma = _perm(args.perm)
        try:
            C = db.varphi(sigma)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        print(_dump({"perm": str(sigma), "config": list(C.col), "canonical": str(db.phi(C))}))
        return 0
    # check-dumont
    reports = [checks.run_check(name, args.n) for name in ("phi-bijection", "phi-statistic", "tau-agreement")]
    return _print_reports(reports, args.format)


def cmd_hist(args) -> int:
    if args.action == "phi":
        C = _config(args.config)
        h = dh.big_phi(C)
        e = dh.history_exponent(h)
        print(_dump({**h.to_dict(), "weight_exponent": e, "weight": str(qp.QPoly.monomial(e))}))
        return 0
    if args.action == "psi":
        try:
            h = dh.DellacHistory.make(args.path, json.loads(args.xi))
            C = dh.big_psi(h)
        except (ValueError, TypeError) as exc:
            raise UsageError(str(exc)) from None
        print(_dump({"config": list(C.col), "inv": dc.inv(C)}))
        return 0
    if args.action == "moments":
        lam = qp.lambdas(2 * args.n + 1)
        total = sum((dh.weight_mu(g, lam) for g in dh.enumerate_dyck(args.n)), qp.QPoly())
        ref = qp.cbar(args.n + 1)
        ok = total == ref
        if args.format == "json":
            print(_dump({"schema": SCHEMA, "n": args.n, "path_sum": total.to_list(), "cbar": ref.to_list(), "status": "pass" if ok else "fail"}))
        else:
            print(f"path sum: {total}\ncbar_{args.n + 1}: {ref}\n{'PASS' if ok else 'FAIL'}")
        return 0 if ok else 1
    reports = [checks.run_check(name, args.n) for name in ("Phi-roundtrip", "Phi-weight", "fiber-sum")]
    return _print_reports(reports, args.format)


def _print_reports(reports, fmt: str) -> int:
    if fmt == "json":
        for r in reports:
            print(_dump(r.to_dict()))
    else:
        for r in reports:
            print(r.line())
    return 0 if all(r.passed for r in reports) else 1


def _run_job(job):
    return checks.run_check(*job)


def cmd_verify(args) -> int:
    if args.all:
        jobs = [(name, n) for name in checks.CHECKS for n in checks.default_sizes(name, args.max_n)]
    elif args.name:
        if args.n is None:
            raise UsageError("verify NAME needs --n")
        jobs = [(args.name, args.n)]
    else:
        raise UsageError("give a check name or --all")
    for name, n in jobs:
        if name not in checks.CHECKS:
            raise UsageError(f"unknown check {name!r}; known: {', '.join(checks.CHECKS)}")
        c = checks.CHECKS[name]
        if not c.min_n <= n <= c.max_n:
            raise UsageError(f"check {name!r} supports {c.min_n} <= n <= {c.max_n}")
    # every registered check is exhaustive; the seed is recorded, not consumed
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_run_job, jobs))
    else:
        reports = [_run_job(j) for j in jobs]
    if args.format == "json":
        print(_dump({"schema": SCHEMA, "seed": args.seed, "reports": [r.to_dict() for r in reports]}))
    else:
        for r in reports:
            print(r.line())
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{len(reports)} checks passed")
    return 0 if all(r.passed for r in reports) else 1


def cmd_table(args) -> int:
    try:
        print(checks.emit_table(args.n, args.format))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="genocchi", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("seidel", help="print the Seidel triangle")
    s.add_argument("--rows", type=int, required=True)
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.set_defaults(func=cmd_seidel)

    s = sub.add_parser("sequence", help="print an integer sequence, one value per line")
    s.add_argument("name", choices=("genocchi", "median", "h"))
    s.add_argument("--upto", type=int, required=True)
    s.set_defaults(func=cmd_sequence)

    s = sub.add_parser("qpoly", help="q-Gandhi, cbar, lambda and continued-fraction polynomials")
    s.add_argument("kind", choices=("gandhi", "cbar", "lambda", "cfrac"))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=("json", "text"), default="text")
    s.set_defaults(func=cmd_qpoly)

    s = sub.add_parser("perm", help="Dumont permutation classes")
    s.add_argument("action", choices=("enumerate",))
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--class", dest="cls", choices=("dumont", "ndumont", "ngenocchi"), default="dumont")
    s.add_argument("--stats", action="store_true", help="append st(sigma)")
    s.set_defaults(func=cmd_perm)

    s = sub.add_parser("dellac", help="Dellac configurations")
    s.add_argument("action", choices=("enumerate", "graph", "show"))
    s.add_argument("--n", type=int)
    s.add_argument("--config")
    s.add_argument("--stats", action="store_true")
    s.add_argument("--format", choices=("dot", "json"), default="dot")
    s.set_defaults(func=cmd_dellac)

    s = sub.add_parser("bij", help="the bijection phi and its inverse")
    s.add_argument("action", choices=("phi", "varphi", "check-dumont"))
    s.add_argument("--config")
    s.add_argument("--perm")
    s.add_argument("--n", type=int)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_bij)

    s = sub.add_parser("hist", help="Dellac histories and the bijection Phi")
    s.add_argument("action", choices=("phi", "psi", "check", "moments"))
    s.add_argument("--config")
    s.add_argument("--path")
    s.add_argument("--xi")
    s.add_argument("--n", type=int)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_hist)

    s = sub.add_parser("verify", help="run named verification checks")
    s.add_argument("name", nargs="?", help=", ".join(checks.CHECKS))
    s.add_argument("--n", type=int)
    s.add_argument("--all", action="store_true")
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("table", help="correspondence table C -> phi(C), Phi(C)")
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--format", choices=("text", "json", "csv"), default="text")
    s.set_defaults(func=cmd_table)
    return p


_REQUIRED = {
    ("dellac", "enumerate"): ("n",),
    ("dellac", "graph"): ("n",),
    ("dellac", "show"): ("config",),
    ("bij", "phi"): ("config",),
    ("bij", "varphi"): ("perm",),
    ("bij", "check-dumont"): ("n",),
    ("hist", "phi"): ("config",),
    ("hist", "psi"): ("path", "xi"),
    ("hist", "check"): ("n",),
    ("hist", "moments"): ("n",),
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for flag in _REQUIRED.get((args.command, getattr(args, "action", None)), ()):
        if getattr(args, flag) is None:
            parser.error(f"{args.command} {args.action} requires --{flag}")
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
