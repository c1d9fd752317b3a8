"""Command-line front end.

Every subcommand prints one JSON report (or a text summary) on stdout.
Exit codes: 0 on success, 2 when a mathematical precondition fails, 1 on
malformed input or bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from . import degrees, hodge_critical as hc, oracles, weights as wt, weyl
from .errors import DomainError, InputError, TooLarge

EXIT_OK, EXIT_INPUT, EXIT_DOMAIN = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


# ------------------------------------------------------------- JSON helpers

def jsonable(x: Any) -> Any:
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, weyl.BalancedStatus):
        return x.value
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [jsonable(v) for v in items]
    raise TypeError(f"cannot serialise {type(x).__name__}")


def weight_json(w: wt.Weight) -> dict:
    return {"n": w.n, "r": w.r, "standard": [list(b) for b in w.coords]}


def critical_json(c: hc.CriticalSet) -> dict:
    return {
        "doubled_points": list(c.doubled_points),
        "points": [str(p) for p in c.points()],
        "parity_doubled": c.parity_doubled,
        "cardinality": len(c),
    }


def kostant_json(k: weyl.KostantElement | None) -> dict | None:
    if k is None:
        return None
    return {"N": k.N, "parabolic": list(k.parabolic), "perms": [list(p) for p in k.perms], "lengths": list(k.lengths())}


def oracle_json(rep: oracles.OracleReport) -> dict:
    return {
        "subject": rep.subject,
        "agreed": rep.agreed,
        "counterexample": jsonable(rep.counterexample),
        "details": jsonable(rep.details),
    }


def agreement(subject: str, ours, theirs) -> oracles.OracleReport:
    if ours == theirs:
        return oracles.OracleReport(subject, True)
    return oracles.OracleReport(subject, False, {"primary": ours, "oracle": theirs})


# --------------------------------------------------------------- weight input

def parse_weight(data: Any) -> wt.Weight:
    if not isinstance(data, dict) or "n" not in data or "r" not in data:
        raise InputError('a weight needs "n", "r" and "standard" or "fundamental"')
    n, r = data["n"], data["r"]
    if not isinstance(n, int) or not isinstance(r, int) or isinstance(n, bool) or isinstance(r, bool):
        raise InputError('"n" and "r" must be integers')
    if "standard" in data:
        coords = data["standard"]
        if not isinstance(coords, list) or not all(isinstance(b, list) for b in coords):
            raise InputError('"standard" must be a list of integer lists')
        return wt.Weight(n, r, tuple(tuple(b) for b in coords))
    if "fundamental" in data:
        f = data["fundamental"]
        if not isinstance(f, dict) or "a" not in f or "d" not in f:
            raise InputError('"fundamental" needs "a" and "d"')
        if not isinstance(f["a"], list) or not all(isinstance(v, list) for v in f["a"]) or not isinstance(f["d"], list):
            raise InputError('"a" must be a list of lists and "d" a list')
        fc = wt.FundamentalCoords.from_a_d(f["a"], f["d"])
        return wt.from_fundamental(fc, n, r)
    raise InputError('a weight needs "standard" or "fundamental" coordinates')


def load_weight(spec: str) -> tuple[wt.Weight, Any]:
    """Read a weight from a JSON file, or from inline JSON text."""
    text = spec if spec.lstrip().startswith("{") else None
    if text is None:
        try:
            text = Path(spec).read_text()
        except OSError as exc:
            raise InputError(f"cannot read weight file {spec}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"weight is not valid JSON: {exc}") from exc
    return parse_weight(data), data


# ----------------------------------------------------------------- commands

@dataclass
class Outcome:
    inputs: dict
    results: dict
    oracle: list | None = None
    text: list[str] | None = None


def cmd_analyze_weight(args) -> Outcome:
    w, raw = load_weight(args.weight)
    f = wt.to_fundamental(w)
    res = {
        "weight": weight_json(w),
        "fundamental": {"a": [list(v) for v in f.a], "d": list(f.d), "r_lambda": list(f.r_lambda)},
        "integral": wt.is_integral(w),
        "dominant": wt.is_dominant(w),
        "algebraic": wt.is_algebraic(w),
        "pure": wt.is_pure(w),
    }
    lines = [f"standard {res['weight']['standard']}", f"dominant={res['dominant']} algebraic={res['algebraic']} pure={res['pure']}"]
    if res["pure"]:
        cp = wt.cuspidal_params(w)
        hodge = hc.hodge_eff(w)
        res["cuspidal"] = {"ell": [list(v) for v in cp.ell], "motivic_weight": cp.motivic_weight, "purity_weight_doubled": cp.purity_weight_doubled}
        res["hodge_eff"] = {"pairs": [[list(p) for p in e] for e in hodge.pairs], "purity_weight": hodge.purity_weight}
        lines.append(f"cuspidal parameters {res['cuspidal']['ell']}, motivic weight {cp.motivic_weight}")
        if not hodge.has_middle():
            crit = hc.critical_set_motivic(hodge)
            res["critical_set_motivic"] = critical_json(crit)
            lines.append(f"critical set {[str(p) for p in crit.points()]}")
    oracle = None
    if args.with_oracle:
        back = wt.from_fundamental(f)
        oracle = [oracle_json(agreement("fundamental round trip", weight_json(w), weight_json(back)))]
    return Outcome({"weight": raw}, res, oracle, lines)


def cmd_kostant(args) -> Outcome:
    reps = weyl.kostant_reps(args.N, args.n)
    lengths = [weyl.length(p) for p in reps]
    genfun = [0] * (args.n * (args.N - args.n) + 1)
    for x in lengths:
        genfun[x] += 1
    res: dict = {"N": args.N, "n": args.n, "count": len(reps)}
    mode = args.mode or "count"
    if mode == "list":
        res["elements"] = [{"perm": list(p), "length": x} for p, x in zip(reps, lengths)]
    if mode == "genfun":
        res["genfun"] = genfun
    lines = [f"|W^P| = {len(reps)} for N={args.N}, n={args.n}"]
    if mode == "list":
        lines += [f"{list(p)}  length {x}" for p, x in zip(reps, lengths)]
    if mode == "genfun":
        lines.append("length generating function coefficients " + " ".join(map(str, genfun)))
    oracle = [oracle_json(oracles.check_kostant(args.N, args.n))] if args.with_oracle else None
    return Outcome({"N": args.N, "n": args.n, "mode": mode}, res, oracle, lines)


def _pair(args) -> tuple[wt.Weight, wt.Weight, dict]:
    mu, raw = load_weight(args.mu)
    mup, rawp = load_weight(args.mup)
    return mu, mup, {"mu": raw, "mup": rawp}


def balanced_json(r: weyl.BalancedSearchResult) -> dict:
    return {
        "status": r.status.value,
        "element": kostant_json(r.element),
        "lengths": list(r.lengths),
        "dominant_lambda": weight_json(r.dominant_lambda) if r.dominant_lambda else None,
        "collisions": [[list(c) for c in e] for e in r.collisions],
    }


def _brute_oracle(mu, mup) -> list:
    try:
        return [oracle_json(oracles.brute_balanced(mu, mup))]
    except TooLarge as exc:
        return [{"subject": "balanced", "skipped": str(exc)}]


def cmd_balanced(args) -> Outcome:
    mu, mup, inputs = _pair(args)
    r = weyl.find_balanced(mu, mup)
    lines = [f"status {r.status.value}, lengths {list(r.lengths)}"]
    if r.element:
        lines.append(f"element {[list(p) for p in r.element.perms]}")
    oracle = _brute_oracle(mu, mup) if args.with_oracle else None
    return Outcome(inputs, balanced_json(r), oracle, lines)


def _window(args, center2: int, width: int) -> range:
    if args.window:
        lo, hi = args.window
        return range(lo, hi + 1)
    return range(center2 - 2 * width - 8, center2 + 2 * width + 9)


def cmd_critical(args) -> Outcome:
    mu, mup, inputs = _pair(args)
    mode = args.mode or "automorphic"
    inputs["mode"] = mode
    res: dict = {"mode": mode}
    oracle = None
    if mode == "motivic":
        h = hc.hodge_tensor(mu, mup)
        crit = hc.critical_set_motivic(h)
        res["hodge"] = {"pairs": [[list(p) for p in e] for e in h.pairs], "purity_weight": h.purity_weight}
        res["critical_set"] = critical_json(crit)
        if args.with_oracle:
            shifted = hc.critical_set_automorphic(mu, mup).shifted(hc.s_shift(mu, mup))
            oracle = [oracle_json(agreement("shifted automorphic set", list(shifted.doubled_points), list(crit.doubled_points)))]
    elif mode == "automorphic":
        crit = hc.critical_set_automorphic(mu, mup)
        res["width"] = wt.cuspidal_width(mu, mup)
        res["delta"] = hc.delta(mu, mup)
        res["critical_set"] = critical_json(crit)
        if args.with_oracle:
            win = _window(args, 1 + int(2 * hc.delta(mu, mup)), res["width"])
            scan = oracles.gamma_pole_scan(mu, mup, win, args.eps0)
            inside = [x for x in crit.doubled_points if x in win]
            oracle = [oracle_json(agreement("gamma pole scan", inside, sorted(scan)))]
    else:
        inv = hc.gamma_inventory(mu, mup, args.eps0)
        win = _window(args, 1 + int(2 * hc.delta(mu, mup)), max(wt.cuspidal_width(mu, mup), 2))
        parity = (mu.n + mup.n) % 2
        regular = [x for x in win if (x - parity) % 2 == 0 and inv.is_regular_at(x)]
        res["window"] = [win.start, win.stop - 1]
        res["regular_doubled"] = regular
        res["factors"] = [
            {"kind": f.kind, "shift_doubled": f.shift_doubled, "reflected": f.reflected, "embedding": f.embedding, "source": f.source}
            for f in inv.factors
        ]
        crit = hc.CriticalSet(tuple(regular), parity)
        if args.with_oracle:
            scan = oracles.gamma_pole_scan(mu, mup, win, args.eps0)
            oracle = [oracle_json(agreement("gamma pole scan", regular, sorted(scan)))]
    lines = [f"{mode} critical points {[str(p) for p in crit.points()]}"]
    return Outcome(inputs, res, oracle, lines)


def cmd_comblemma(args) -> Outcome:
    mu, mup, inputs = _pair(args)
    rep = hc.comb_lemma(mu, mup)
    lo, hi = hc.cond2_interval(mu, mup)
    res = {
        "cond1": rep.cond1,
        "cond2": rep.cond2,
        "cond3": rep.cond3,
        "agree": rep.agree,
        "status": rep.status.value,
        "lengths": list(rep.lengths),
        "witness": kostant_json(rep.witness),
        "delta": hc.delta(mu, mup),
        "interval": [lo, hi],
        "m0": hc.m0(mu, mup),
        "s_shift": hc.s_shift(mu, mup),
    }
    lines = [f"cond1={rep.cond1} cond2={rep.cond2} cond3={rep.cond3} (Δ = {res['delta']}, interval [{lo}, {hi}])"]
    if rep.witness:
        lines.append(f"witness {[list(p) for p in rep.witness.perms]} of length {list(rep.witness.lengths())}")
    if rep.cond3:
        ratio = hc.archimedean_ratio(mu, mup)
        res["archimedean_ratio"] = {"rational": ratio.rational, "exponent": ratio.exponent, "per_place": list(ratio.per_place)}
        lines.append(f"archimedean ratio {ratio.rational} * (2π)^{ratio.exponent}")
    oracle = None
    if args.with_oracle:
        oracle = _brute_oracle(mu, mup)
        if rep.cond3:
            sym = oracles.gamma_ratio_symbolic(mu, mup)
            ours = [str(res["archimedean_ratio"]["rational"]), res["archimedean_ratio"]["exponent"]]
            oracle.append(oracle_json(agreement("symbolic gamma ratio", ours, [str(sym[0]), sym[1]])))
    return Outcome(inputs, res, oracle, lines)


def cmd_oddodd(args) -> Outcome:
    mu, mup, inputs = _pair(args)
    inputs["eps0"] = args.eps0
    rep = hc.odd_odd_checks(mu, mup, args.eps0)
    res = {
        "ell_plus": rep.ell_plus,
        "smallest_parameter": rep.smallest_parameter,
        "delta": rep.delta,
        "critical_set": critical_json(rep.critical_set),
        "displayed_set": critical_json(rep.displayed_set),
        "display_matches": rep.display_matches,
        "two_points_critical": rep.two_points_critical,
        "two_point_criterion": rep.two_point_criterion,
        "collision_positions": list(rep.collision_positions),
        "collision": list(rep.collision_per_embedding),
        "balanced_status": rep.balanced_status.value if rep.balanced_status else None,
    }
    lines = [
        f"ℓ⁺ = {rep.ell_plus}, critical set {[str(p) for p in rep.critical_set.points()]}",
        f"-N/2 and 1-N/2 critical: {rep.two_points_critical}",
    ]
    if any(rep.collision_per_embedding):
        lines.append(f"collision at positions {list(rep.collision_positions)}")
    oracle = None
    if args.with_oracle:
        win = range(2 * rep.delta - 2 * rep.ell_plus - 8, 2 * rep.delta + 2 * rep.ell_plus + 9)
        scan = oracles.gamma_pole_scan(mu, mup, win, args.eps0)
        oracle = [oracle_json(agreement("gamma pole scan", list(rep.critical_set.doubled_points), sorted(scan)))]
        if any(rep.collision_per_embedding):
            oracle += _brute_oracle(mu, mup)
    return Outcome(inputs, res, oracle, lines)


def cmd_degrees(args) -> Outcome:
    inputs = {"n": args.n, "np": args.np, "r": args.r}
    prof = [degrees.degree_profile(k, args.r) for k in (args.n, args.np, args.n + args.np)]
    ident = degrees.degree_identities(args.n, args.np, args.r)
    res = {
        "profiles": [{"n": p.n, "b": p.b, "t": p.t, "t_tilde": p.t_tilde} for p in prof],
        "bottom": {"lhs": ident.bottom_lhs, "rhs": ident.bottom_rhs},
        "top": {"lhs": ident.top_lhs, "rhs": ident.top_rhs},
        "half_dim": ident.half_dim,
        "holds": ident.holds,
    }
    lines = [
        f"b: {prof[0].b}+{prof[1].b}+{ident.half_dim} = {ident.bottom_lhs}, b_N = {ident.bottom_rhs}",
        f"t̃: {prof[0].t_tilde}+{prof[1].t_tilde}+{ident.half_dim} = {ident.top_lhs}, t̃_N - 1 = {ident.top_rhs}",
    ]
    oracle = None
    if args.with_oracle:
        # recompute both sides straight from the floor/ceiling formulas
        def b(k):
            return args.r * (k * k // 4)

        def tt(k):
            return args.r * (k * k // 4 + (k + 1) // 2 - 1) + args.r - 1

        N, half = args.n + args.np, args.r * args.n * args.np // 2
        direct = [b(args.n) + b(args.np) + half, b(N), tt(args.n) + tt(args.np) + half, tt(N) - 1]
        ours = [ident.bottom_lhs, ident.bottom_rhs, ident.top_lhs, ident.top_rhs]
        oracle = [oracle_json(agreement("degree formulas", ours, direct))]
    return Outcome(inputs, res, oracle, lines)


def hilbert_weight(k: Sequence[int], m: int) -> wt.Weight:
    """λ^τ = (k_τ - 2)ρ_2 + (-m - k_0/2)δ_2 with k_0 = max k_τ."""
    if any(x < 2 for x in k):
        raise InputError("weights k_τ must be at least 2")
    k0 = max(k)
    if any((x - k0) % 2 for x in k):
        raise InputError("all k_τ must have the same parity")
    vecs = []
    for x in k:
        top = (x - 2 - 2 * m - k0) // 2
        bottom = (-(x - 2) - 2 * m - k0) // 2
        vecs.append((top, bottom))
    return wt.Weight.from_vectors(vecs)


def gl1_twists(mu: wt.Weight) -> dict:
    """Integral GL(1) weights d' for which the combinatorial lemma's three
    conditions hold against a rank-2 weight mu."""
    width = wt.cuspidal_params(mu).ell
    ell = min(v[0] for v in width)
    d = mu.means()[0]
    admissible, checked = [], []
    # Δ = d - d' ranges a little beyond the cond2 interval on both sides
    for dp in range(int(d) - ell - 4, int(d) + ell + 5):
        mup = wt.Weight(1, mu.r, tuple((dp,) for _ in range(mu.r)))
        rep = hc.comb_lemma(mu, mup)
        checked.append(rep.agree)
        if rep.cond1 and rep.cond2 and rep.cond3:
            admissible.append(dp)
    return {"admissible_d_prime": admissible, "all_conditions_agree": all(checked)}


def cmd_hilbert(args) -> Outcome:
    inputs = {"k": list(args.k), "m": args.m}
    mu = hilbert_weight(args.k, args.m)
    cp = wt.cuspidal_params(mu)
    hodge = hc.hodge_eff(mu)
    crit = hc.critical_set_motivic(hodge)
    tw = gl1_twists(mu)
    res = {
        "weight": weight_json(mu),
        "cuspidal": {"ell": [list(v) for v in cp.ell], "motivic_weight": cp.motivic_weight, "purity_weight_doubled": cp.purity_weight_doubled},
        "hodge_eff": {"pairs": [[list(p) for p in e] for e in hodge.pairs], "purity_weight": hodge.purity_weight},
        "critical_set": critical_json(crit),
        "gl2_x_gl1": {
            "k_min": min(args.k),
            "threshold_k_min_at_least_3": min(args.k) >= 3,
            **tw,
        },
    }
    lines = [
        f"cuspidal parameters {res['cuspidal']['ell']}, motivic weight {cp.motivic_weight}",
        f"Hodge types {res['hodge_eff']['pairs']}",
        f"critical set {[str(p) for p in crit.points()]}",
        f"GL2 x GL1 twists satisfying the lemma: d' in {tw['admissible_d_prime']}",
    ]
    oracle = None
    if args.with_oracle:
        oracle = [
            oracle_json(
                agreement(
                    "threshold from the lemma",
                    bool(tw["admissible_d_prime"]),
                    min(args.k) >= 3,
                )
            )
        ]
    return Outcome(inputs, res, oracle, lines)


# ------------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--with-oracle", action="store_true", help="cross-check against the brute-force oracles")
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = _Parser(prog="rankin-critical", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze-weight", parents=[common], help="bases, predicates and cuspidal data of one weight")
    p.add_argument("--weight", required=True, help="JSON weight file or inline JSON")
    p.set_defaults(func=cmd_analyze_weight)

    p = sub.add_parser("kostant", parents=[common], help="Kostant representatives for a maximal parabolic")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    for mode in ("list", "count", "genfun"):
        g.add_argument(f"--{mode}", dest="mode", action="store_const", const=mode)
    p.set_defaults(func=cmd_kostant)

    def pair(name, help_text, func):
        q = sub.add_parser(name, parents=[common], help=help_text)
        q.add_argument("--mu", required=True, help="JSON weight file or inline JSON")
        q.add_argument("--mup", required=True, help="JSON weight file or inline JSON")
        q.set_defaults(func=func)
        return q

    pair("balanced", "search for a balanced Kostant representative", cmd_balanced)
    p = pair("critical", "critical set of the Rankin-Selberg L-function", cmd_critical)
    g = p.add_mutually_exclusive_group()
    for mode in ("motivic", "automorphic", "gamma-scan"):
        g.add_argument(f"--{mode}", dest="mode", action="store_const", const=mode)
    p.add_argument("--eps0", type=int, choices=(0, 1), help="sign parity when both ranks are odd")
    p.add_argument("--window", type=int, nargs=2, metavar=("LO", "HI"), help="doubled scan window")
    pair("comblemma", "evaluate the three equivalent conditions", cmd_comblemma)
    p = pair("oddodd", "critical set and obstruction for two odd ranks", cmd_oddodd)
    p.add_argument("--eps0", type=int, choices=(0, 1), required=True)

    p = sub.add_parser("degrees", parents=[common], help="cohomological degree identities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--np", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.set_defaults(func=cmd_degrees)

    p = sub.add_parser("hilbert", parents=[common], help="Hilbert modular forms of weight k")
    p.add_argument("--k", type=int, nargs="+", required=True)
    p.add_argument("--m", type=int, default=0)
    p.set_defaults(func=cmd_hilbert)
    return parser


def _emit(report: dict, fmt: str, lines: list[str] | None, out) -> None:
    if fmt == "text":
        if "error" in report:
            out.write(f"error ({report['error']['type']}): {report['error']['message']}\n")
            return
        for line in lines or []:
            out.write(line + "\n")
        for o in report.get("oracle") or []:
            status = "skipped" if "skipped" in o else ("agreed" if o["agreed"] else "DISAGREED")
            out.write(f"oracle {o['subject']}: {status}\n")
        return
    out.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")


def _fail(report: dict, echoed: dict, exc: Exception, fmt: str, out, code: int) -> int:
    report["inputs"] = jsonable(echoed)
    report["error"] = {"type": type(exc).__name__, "message": str(exc)}
    sys.stderr.write(f"{type(exc).__name__}: {exc}\n")
    _emit(report, fmt, None, out)
    return code


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    report: dict = {"command": args.command}
    echoed = {k: v for k, v in vars(args).items() if k not in ("func", "command", "format", "with_oracle")}
    try:
        outcome = args.func(args)
    except DomainError as exc:
        return _fail(report, echoed, exc, args.format, out, EXIT_DOMAIN)
    except InputError as exc:
        return _fail(report, echoed, exc, args.format, out, EXIT_INPUT)
    report["inputs"] = jsonable(outcome.inputs)
    report["results"] = jsonable(outcome.results)
    if outcome.oracle is not None:
        report["oracle"] = outcome.oracle
    _emit(report, args.format, outcome.text, out)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
