"""permrep: command-line front end for the verification routines.

Exit codes: 0 verified (or computed), 1 refuted or search failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
import warnings
from itertools import combinations
from pathlib import Path

from . import linalg
from .exact import BaseField, ExpressionError, PoleError, RationalFunctionField
from .linalg import Matrix
from .models import (
    GroupTooLargeError,
    SetModel,
    StableRangeWarning,
    Subgroup,
    aut_action_is_regular,
    double_coset_count_bruteforce,
    double_cosets,
    fixed_cosets,
    model_from,
)
from .permod import (
    PermModule,
    Submodule,
    blocks_are_stable,
    boundary,
    coinduction_count_check,
    expected_length,
    expected_socle_dimension,
    growth_profile,
    isotypic_decompose,
    kernel_submodule,
    length_multiplicity_free,
    restriction_decompose,
    socle_V_T,
)
from .semilin import (
    ActionField,
    BiSymFunction,
    BudgetExhausted,
    CocycleError,
    FindimError,
    SemilinRep,
    WeightedElement,
    WeightError,
    cocycle_check,
    find_cyclic_vector,
    generator_test_weight1,
    h90_trivialize,
    hom_apply,
    hom_compose,
    load_cocycle,
    q2_surjectivity,
    trivialize_findim,
)
from .semilin.findim import block_field, examples as findim_examples

SCHEMA_DIR = Path(__file__).parent / "schemas"


class UsageError(Exception):
    pass


class Outcome:
    """What a command produced: verdict, JSON payload and text lines."""

    def __init__(self, verdict, result=None, lines=(), table=None, model=None, q=None):
        self.verdict = verdict
        self.result = result or {}
        self.lines = list(lines)
        self.table = table
        self.model = model
        self.q = q

    @property
    def exit_code(self) -> int:
        return 0 if self.verdict in ("verified", "computed") else 1


# argument helpers ---------------------------------------------------------------


def load_json_arg(text: str):
    """A JSON document given inline or as a path."""
    path = Path(text)
    if path.is_file():
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise UsageError(f"not a JSON document or readable file: {text[:60]!r} ({err})") from None


def int_list(text: str) -> list:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def make_model(args):
    n = args.n
    if args.model == "vec":
        n = 4 if n is None else n
        return model_from("vec", n, args.q, args.marked)
    return model_from("set", 6 if n is None else n)


def parse_subobject(model, text: str):
    """``1,2,3`` for sets; ``100,010`` (one digit string per spanning vector) for vector models."""
    text = text.strip()
    if isinstance(model, SetModel):
        pts = int_list(text)
        if any(not 1 <= p <= model.n for p in pts) or len(set(pts)) != len(pts):
            raise UsageError(f"{text!r} is not a subset of 1..{model.n}")
        return tuple(sorted(pts))
    vecs = [v for v in text.split(",") if v]
    if any(len(v) != model.n or not v.isdigit() or any(int(c) >= model.q for c in v) for v in vecs):
        raise UsageError(f"vectors must be digit strings of length {model.n} with digits < {model.q}")
    return model.closure([tuple(int(c) for c in v) for v in vecs])


def parse_subgroup(model, text: str) -> Subgroup:
    if text == "full":
        return Subgroup(model, "full")
    kind, _, rest = text.partition(":")
    if kind not in ("pointwise", "setwise"):
        raise UsageError(f"subgroup must be full, pointwise:... or setwise:..., got {text!r}")
    return Subgroup(model, kind, parse_subobject(model, rest))


def ser(model, obj):
    return model.serialize(obj)


# table commands -----------------------------------------------------------------


def _table_models(args):
    if args.model == "vec":
        top = 4 if args.n_max is None else args.n_max
        return [model_from("vec", n, args.q, args.marked) for n in range(args.n_min, top + 1)]
    top = 8 if args.n_max is None else args.n_max
    return [SetModel(n) for n in range(args.n_min, top + 1)]


def _render_table(rows, columns):
    widths = [max(len(c), *(len(str(r[c])) for r in rows)) for c in columns] if rows else [len(c) for c in columns]
    out = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    for r in rows:
        out.append("  ".join(str(r[c]).rjust(w) for c, w in zip(columns, widths)))
    return out


def cmd_length_table(args):
    rows = []
    for model in _table_models(args):
        for s in range(model.length + 1):
            res = length_multiplicity_free(PermModule(model, s))
            n = model.length
            rows.append(
                {"n": n, "s": s, "value": res.value, "certificate": res.certificate, "expected": expected_length(n, s)}
            )
    ok = all(r["value"] == r["expected"] for r in rows)
    if args.plot:
        from .plotting import heatmap

        heatmap(rows, args.plot, f"length of k[level s], {args.model} model", label="length")
    lines = _render_table(rows, ["n", "s", "value", "expected", "certificate"])
    lines.append(f"every cell equals min(s, n-s)+1: {str(ok).lower()}")
    return Outcome("verified" if ok else "refuted", table=rows, lines=lines, model=args.model, q=_q(args))


def _q(args):
    return args.q if args.model == "vec" else 1


def cmd_boundary_rank(args):
    rows = []
    for model in _table_models(args):
        n = model.length
        for s in range(n):
            rank = boundary(model, s + 1).rank()
            dim = len(model.subobjects(s))
            surj = rank == dim
            rows.append(
                {
                    "n": n,
                    "s": s,
                    "value": rank,
                    "certificate": "surjective" if surj else "not surjective",
                    "dim": dim,
                    "predicted": "surjective" if n > 2 * s else "not surjective",
                }
            )
    ok = all(r["certificate"] == r["predicted"] for r in rows)
    if args.plot:
        from .plotting import heatmap

        heatmap(rows, args.plot, "rank of the boundary from level s+1 to level s", label="rank")
    lines = _render_table(rows, ["n", "s", "value", "dim", "certificate", "predicted"])
    lines.append(f"surjective exactly when n > 2s: {str(ok).lower()}")
    return Outcome("verified" if ok else "refuted", table=rows, lines=lines, model=args.model, q=_q(args))


def _growth_sub(model, level, which, base):
    if which == "full":
        return Submodule.full(PermModule(model, level, base))
    if which == "kernel":
        return kernel_submodule(model, level, base)
    return socle_V_T(model, level, base)


def cmd_growth(args):
    model = make_model(args)
    base = BaseField.parse(args.field)
    sub = _growth_sub(model, args.level, args.sub, base)
    Ns = int_list(args.N) if args.N else list(range(model.length + 1))
    rows = []
    for row in growth_profile(sub, Ns):
        rows.append(
            {
                "n": row.N,
                "s": args.level,
                "value": row.value,
                "certificate": "within bounds" if row.ok else "bound violated",
                "embedding_bound": row.embedding_bound,
                "power_bound": row.power_bound,
            }
        )
    ok = all(r["certificate"] == "within bounds" for r in rows)
    if args.plot:
        from .plotting import growth_plot

        growth_plot(rows, args.plot, f"growth of {args.sub} submodule, level {args.level}")
    lines = [f"{model!r}, level {args.level}, {args.sub} submodule of dimension {sub.dim}"]
    lines += _render_table(rows, ["n", "value", "embedding_bound", "power_bound", "certificate"])
    return Outcome("verified" if ok else "refuted", table=rows, lines=lines, model=args.model, q=_q(args))


# permutation modules -----------------------------------------------------------


def cmd_socle(args):
    model = make_model(args)
    base = BaseField.parse(args.field)
    W = socle_V_T(model, args.s, base, maps=args.maps)
    result = {"model": repr(model), "level": args.s, "dimension": W.dim, "maps": args.maps}
    lines = [f"{model!r}: socle at level {args.s} has dimension {W.dim}"]
    ok = True
    if isinstance(model, SetModel):
        expected = expected_socle_dimension(model.n, args.s)
        result["expected_dimension"] = expected
        ok = W.dim == expected
        lines.append(f"binom(n,s) - binom(n,s-1) = {expected}")
        if base.is_rational:
            comps = isotypic_decompose(W, args.m_aut)
            result["isotypic"] = [_comp(c) for c in comps]
            lines.append("isotypic: " + _fmt_comps(comps))
            if args.m_aut is None and 2 * args.s <= model.n:
                lam = tuple(p for p in (model.n - args.s, args.s) if p)
                ok = ok and [(tuple(c.partition), c.multiplicity) for c in comps] == [(lam, 1)]
    return Outcome("verified" if ok else "refuted", result, lines)


def _comp(c):
    return {"partition": list(c.partition), "multiplicity": c.multiplicity, "dimension": c.dimension}


def _fmt_comps(comps):
    return " + ".join(f"{c.multiplicity}x{c.partition}" for c in comps) or "0"


def cmd_isotypic(args):
    model = SetModel(args.n)
    if args.of == "full":
        W = Submodule.full(PermModule(model, args.s))
    elif args.of == "kernel":
        W = kernel_submodule(model, args.s)
    else:
        W = socle_V_T(model, args.s)
    comps = isotypic_decompose(W, args.m_aut)
    group = f"Sym(1..{args.m_aut})" if args.m_aut is not None else f"S_{args.n}"
    result = {"n": args.n, "level": args.s, "of": args.of, "group": group, "dimension": W.dim}
    result["components"] = [_comp(c) for c in comps]
    lines = [f"{args.of} at level {args.s} of SetModel({args.n}) under {group}: {_fmt_comps(comps)}"]
    return Outcome("computed", result, lines)


def cmd_double_cosets(args):
    model = make_model(args)
    U, V = parse_subgroup(model, args.U), parse_subgroup(model, args.V)
    dc = double_cosets(U, V)
    result = {"model": repr(model), "U": str(U), "V": str(V), "count": dc.count}
    result["representatives"] = [list(g) if isinstance(model, SetModel) else [list(r) for r in g] for g in dc.representatives]
    lines = [f"#(U\\G/V) = {dc.count} for U = {U}, V = {V} in {model!r}"]
    verdict = "computed"
    if args.check:
        brute = double_coset_count_bruteforce(U, V)
        result["bruteforce"] = brute
        lines.append(f"brute force over the group: {brute}")
        verdict = "verified" if brute == dc.count else "refuted"
    return Outcome(verdict, result, lines)


def cmd_fixed_cosets(args):
    model = make_model(args)
    U, V = parse_subgroup(model, args.U), parse_subgroup(model, args.V)
    fixed = fixed_cosets(U, V)
    keys = [ser(model, k) if U.kind == "setwise" else list(k) for k in fixed]
    result = {"model": repr(model), "U": str(U), "V": str(V), "count": len(fixed), "cosets": keys}
    lines = [f"#(G/U)^V = {len(fixed)} for U = {U}, V = {V}"]
    if U.kind == "pointwise" and U == V:
        regular = aut_action_is_regular(model, U.obj)
        result["regular"] = regular
        lines.append(f"Aut(T) acts freely and transitively: {str(regular).lower()}")
        return Outcome("verified" if regular else "refuted", result, lines)
    return Outcome("computed", result, lines)


def cmd_coinduction(args):
    model = make_model(args)
    J, T = parse_subobject(model, args.J), parse_subobject(model, args.T)
    rep = coinduction_count_check(model, J, T)
    result = {
        "model": repr(model),
        "J": ser(model, J),
        "T": ser(model, T),
        "double_cosets": rep.lhs,
        "sum": rep.rhs,
        "terms": [{"Lambda": ser(model, L), "count": c} for L, c in rep.terms],
        "stable": rep.stable,
    }
    lines = [f"#(G_J\\G/G_T) = {rep.lhs}, sum over Lambda = {rep.rhs} ({' + '.join(str(c) for _, c in rep.terms)})"]
    return Outcome("verified" if rep.holds else "refuted", result, lines)


def cmd_restrict(args):
    model = make_model(args)
    J = parse_subobject(model, args.J)
    M = PermModule(model, args.s)
    blocks = restriction_decompose(M, J)
    stable = blocks_are_stable(M, J, blocks)
    result = {
        "model": repr(model),
        "level": args.s,
        "J": ser(model, J),
        "blocks": [{"Lambda": ser(model, L), "dimension": len(idx)} for L, idx in blocks.items()],
        "stable": stable,
    }
    lines = [f"Lambda = {ser(model, L)}: dimension {len(idx)}" for L, idx in blocks.items()]
    lines.append(f"blocks stable under G_J: {str(stable).lower()}")
    return Outcome("verified" if stable else "refuted", result, lines)


# semilinear commands ----------------------------------------------------------


def _matrix_json(M: Matrix):
    return M.to_json()


def _load_rep(args) -> SemilinRep:
    try:
        return load_cocycle(load_json_arg(args.cocycle))
    except (KeyError, TypeError) as err:
        raise UsageError(f"malformed cocycle document: {err}") from None


def cmd_cocycle_check(args):
    R = _load_rep(args)
    check = cocycle_check(R)
    words = [[list(p) for p in w] for w in check.violations]
    result = {"valid": check.valid, "violations": words}
    if check.valid:
        lines = ["Valid"]
    else:
        lines = ["Violations:"] + ["  " + " ".join(f"s{p[0]}{p[1]}" for p in w) for w in check.violations]
    return Outcome("verified" if check.valid else "refuted", result, lines)


def cmd_h90(args):
    R = _load_rep(args)
    res = h90_trivialize(R, budget=args.budget, seed=args.seed)
    result = {"matrix": _matrix_json(res.matrix), "candidates": res.tried, "verified": res.verified}
    lines = ["C ="] + ["  [" + ", ".join(r) + "]" for r in res.matrix.to_json()]
    lines.append(f"verified: {str(res.verified).lower()}")
    return Outcome("verified" if res.verified else "refuted", result, lines)


def cmd_cyclic(args):
    if args.cocycle:
        R = _load_rep(args)
    else:
        acting = tuple(int_list(args.acting)) if args.acting else None
        R = SemilinRep.trivial(ActionField.standard(args.vars, acting), args.trivial)
    v = find_cyclic_vector(R, budget=args.budget, seed=args.seed)
    if v is None:
        return Outcome("failure", {"vector": None}, [f"Failure: no cyclic vector within budget {args.budget}"])
    result = {"vector": [str(x) for x in v], "dimension": R.dim}
    return Outcome("verified", result, [f"cyclic vector: ({', '.join(map(str, v))})"])


def cmd_findim(args):
    if args.example:
        cases = findim_examples(args.r)
        if args.example not in cases:
            raise UsageError(f"unknown example {args.example!r}; choose from {', '.join(cases)}")
        Phi, r = cases[args.example], args.r
    elif args.phi:
        data = load_json_arg(args.phi)
        r = int(data.get("r", args.r))
        Phi = Matrix.from_json(data["matrix"], block_field(r))
    else:
        raise UsageError("give --phi or --example")
    res = trivialize_findim(Phi, r, max_box=args.box)
    result = {"matrix": _matrix_json(res.matrix), "Y0": list(res.point), "verified": res.verified}
    lines = [f"Y0 = {list(res.point)}", "C(X) ="] + ["  [" + ", ".join(row) + "]" for row in res.matrix.to_json()]
    lines.append(f"verified: {str(res.verified).lower()}")
    return Outcome("verified" if res.verified else "refuted", result, lines)


def _element(args, level=None) -> tuple:
    data = load_json_arg(args.element)
    n = args.n
    if n is None:
        support = [t for term in data["terms"] for t in term["subobject"]]
        n = max(support + [level or 0, 1])
    K = RationalFunctionField.standard(n)
    return WeightedElement.from_json(data, K), K


def cmd_hom_apply(args):
    Q = BiSymFunction.from_json(load_json_arg(args.Q))
    w, K = _element(args, Q.N)
    out = hom_apply(Q, w, K)
    return Outcome("computed", {"element": out.to_json()}, [str(out)])


def cmd_hom_compose(args):
    Q = BiSymFunction.from_json(load_json_arg(args.Q))
    R = BiSymFunction.from_json(load_json_arg(args.R))
    C = hom_compose(Q, R)
    n = max(R.N, args.n or 0)
    K = RationalFunctionField.standard(n)
    agree = all(
        hom_apply(C, b, K) == hom_apply(Q, hom_apply(R, b, K), K)
        for b in (WeightedElement.basis(R.N, T, K) for T in combinations(range(1, n + 1), R.N))
    )
    result = {"composite": C.to_json(), "agrees_with_apply": agree, "truncation": n}
    lines = [f"Q o R = {C} in S_{{{C.M},{C.N}}}", f"agrees with applying R then Q at n = {n}: {str(agree).lower()}"]
    return Outcome("verified" if agree else "refuted", result, lines)


def cmd_gen_test(args):
    w, K = _element(args, 1)
    v = generator_test_weight1(w, K, args.degree, rational=not args.polynomial_only)
    result = {
        "generator_up_to_bound": v.generator,
        "witness": None if v.witness is None else str(v.witness),
        "degree_bound": v.degree_bound,
        "mode": "rational" if v.rational else "polynomial",
    }
    return Outcome("computed", result, [str(v)])


def cmd_q2(args):
    names = [s.strip() for s in args.vars.split(",")]
    if len(names) != 2:
        raise UsageError("--vars needs exactly two names")
    F = RationalFunctionField(names)
    q = F.convert(args.q)
    v = q2_surjectivity(q, degree=args.degree, oracle_n=args.oracle_n)
    result = {
        "surjective": v.surjective,
        "D": str(v.D),
        "witness": None if v.witness is None else str(v.witness),
        "witness_method": v.witness_method or None,
        "corank": v.corank,
        "consistent": v.consistent,
    }
    lines = [str(v), f"D = {v.D}"]
    if v.corank is not None:
        lines.append(f"corank at n = {args.oracle_n}: {v.corank} (consistent: {str(v.consistent).lower()})")
    return Outcome("verified" if v.consistent else "refuted", result, lines)


def cmd_selftest(args):
    from .acceptance import CRITERIA, run_criterion

    numbers = int_list(args.only) if args.only else [n for n, _, _ in CRITERIA]
    if any(not 1 <= n <= len(CRITERIA) for n in numbers):
        raise UsageError(f"criteria are numbered 1..{len(CRITERIA)}")
    results = []
    for n in numbers:
        r = run_criterion(n)
        results.append(r)
        print(f"{r.line()} ({r.elapsed:.1f}s)", file=sys.stderr if args.json else sys.stdout, flush=True)
    ok = all(r.passed for r in results)
    payload = {"criteria": [{"number": r.number, "name": r.name, "passed": r.passed, "detail": r.detail} for r in results]}
    summary = f"{sum(r.passed for r in results)}/{len(results)} criteria passed"
    return Outcome("verified" if ok else "refuted", payload, [summary])


# parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=None, help="emit JSON (default from PERMREP_FORMAT)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=64, help="candidate budget for randomized searches")
    common.add_argument("--stable-strict", action="store_true", help="treat stable-range warnings as errors")

    modelp = argparse.ArgumentParser(add_help=False)
    modelp.add_argument("--model", choices=["set", "vec"], default="set")
    modelp.add_argument("--q", type=int, default=2, help="field size for vector models")
    modelp.add_argument("--marked", type=int, default=0, help="dimension of the marked subspace")

    plotp = argparse.ArgumentParser(add_help=False)
    plotp.add_argument("--plot", metavar="PATH", help="also write a figure to PATH")

    p = argparse.ArgumentParser(prog="permrep", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, parents, help_):
        sp = sub.add_parser(name, parents=[common] + parents, help=help_)
        sp.set_defaults(func=fn)
        return sp

    for name, fn, help_ in (
        ("length-table", cmd_length_table, "length of k[level s] for every n, s"),
        ("boundary-rank", cmd_boundary_rank, "rank of the boundary maps against dimension"),
    ):
        sp = add(name, fn, [modelp, plotp], help_)
        sp.add_argument("--n-max", type=int)
        sp.add_argument("--n-min", type=int, default=0)

    sp = add("growth", cmd_growth, [modelp, plotp], "d_M(N) with its two upper bounds")
    sp.add_argument("--n", type=int)
    sp.add_argument("--level", type=int, default=2)
    sp.add_argument("--sub", choices=["full", "kernel", "socle"], default="full")
    sp.add_argument("--N", help="comma-separated N values (default 0..length)")
    sp.add_argument("--field", default="QQ")

    sp = add("socle", cmd_socle, [modelp], "common kernel of the maps to the level below")
    sp.add_argument("--n", type=int)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--maps", choices=["boundary", "all"], default="boundary")
    sp.add_argument("--m-aut", type=int, help="decompose under Sym(1..m) only")
    sp.add_argument("--field", default="QQ")

    sp = add("isotypic", cmd_isotypic, [], "isotypic decomposition of a set-model module")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--of", choices=["full", "socle", "kernel"], default="full")
    sp.add_argument("--m-aut", type=int)

    for name, fn, help_ in (
        ("double-cosets", cmd_double_cosets, "U\\G/V for stabilizer subgroups"),
        ("fixed-cosets", cmd_fixed_cosets, "(G/U)^V for stabilizer subgroups"),
    ):
        sp = add(name, fn, [modelp], help_)
        sp.add_argument("--n", type=int)
        sp.add_argument("--U", required=True, help="full | pointwise:1,2 | setwise:1,2 (vectors as 100,010)")
        sp.add_argument("--V", required=True)
        if name == "double-cosets":
            sp.add_argument("--check", action="store_true", help="compare with a brute-force count")

    sp = add("coinduction-check", cmd_coinduction, [modelp], "double cosets against the sum of fixed-coset counts")
    sp.add_argument("--n", type=int)
    sp.add_argument("--J", required=True)
    sp.add_argument("--T", required=True)

    sp = add("restrict", cmd_restrict, [modelp], "restriction of k[level s] to G_J")
    sp.add_argument("--n", type=int)
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--J", required=True)

    for name, fn, help_ in (
        ("cocycle-check", cmd_cocycle_check, "check a cocycle on the Coxeter relations"),
        ("h90", cmd_h90, "trivialize a cocycle by averaging"),
    ):
        sp = add(name, fn, [], help_)
        sp.add_argument("--cocycle", required=True, help="JSON file or inline JSON")

    sp = add("cyclic", cmd_cyclic, [], "search for a cyclic vector")
    sp.add_argument("--cocycle", help="JSON file or inline JSON")
    sp.add_argument("--trivial", type=int, default=2, help="dimension of a trivial rep (without --cocycle)")
    sp.add_argument("--vars", type=int, default=2)
    sp.add_argument("--acting", help="acting variables, e.g. 1,2")

    sp = add("trivialize-findim", cmd_findim, [], "trivialize Phi(X,Y) at a regular point")
    sp.add_argument("--phi", help='JSON {"r": r, "matrix": [[...]]} over X,Y (or X1..Xr,Y1..Yr)')
    sp.add_argument("--example", help="identity, e1-ratio or unipotent")
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--box", type=int, default=64)

    sp = add("hom-apply", cmd_hom_apply, [], "apply Q in S_{M,N} to a weighted element")
    sp.add_argument("--Q", required=True, help='{"M": .., "N": .., "expr": ".."}')
    sp.add_argument("--element", required=True, help='{"level": .., "terms": [{"coef": "..", "subobject": [..]}]}')
    sp.add_argument("--n", type=int, help="truncation size")

    sp = add("hom-compose", cmd_hom_compose, [], "compose Q after R")
    sp.add_argument("--Q", required=True)
    sp.add_argument("--R", required=True)
    sp.add_argument("--n", type=int, help="truncation for the cross-check")

    sp = add("gen-test", cmd_gen_test, [], "bounded search for a functional killing a level-1 element")
    sp.add_argument("--element", required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--degree", type=int, default=3)
    sp.add_argument("--polynomial-only", action="store_true")

    sp = add("q2-test", cmd_q2, [], "surjectivity of [{a,b}] -> q(a,b)[a] + q(b,a)[b]")
    sp.add_argument("--q", required=True)
    sp.add_argument("--vars", default="X,Y")
    sp.add_argument("--degree", type=int)
    sp.add_argument("--oracle-n", type=int, default=4)

    sp = add("selftest", cmd_selftest, [], "run the acceptance suite")
    sp.add_argument("--only", help="comma-separated criterion numbers")
    return p


def _params(args) -> dict:
    skip = {"func", "json", "seed", "command"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def render(args, out: Outcome) -> str:
    if args.json:
        doc = {"command": args.command, "parameters": _params(args), "seed": args.seed, "verdict": out.verdict}
        if out.table is not None:
            doc.update({"model": out.model, "q": out.q, "rows": out.table})
        else:
            doc["result"] = out.result
        return json.dumps(doc, indent=2)
    return "\n".join(out.lines + [f"verdict: {out.verdict}"])


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.json is None:
        args.json = os.environ.get("PERMREP_FORMAT", "text").lower() == "json"
    start = time.perf_counter()
    with warnings.catch_warnings():
        warnings.simplefilter("error" if args.stable_strict else "default", StableRangeWarning)
        warnings.showwarning = _show_warning
        try:
            out = args.func(args)
        except StableRangeWarning as w:
            print(f"permrep: stable range violated: {w}", file=sys.stderr)
            return 2
        except (UsageError, ExpressionError, WeightError, FindimError, CocycleError, GroupTooLargeError) as err:
            print(f"permrep: {err}", file=sys.stderr)
            return 2
        except (ValueError, PoleError, linalg.SingularMatrixError) as err:
            print(f"permrep: {err}", file=sys.stderr)
            return 2
        except BudgetExhausted as err:
            print(f"permrep: Failure: {err}", file=sys.stderr)
            return 1
    print(render(args, out))
    print(f"elapsed {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return out.exit_code


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"warning: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
