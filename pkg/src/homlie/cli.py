"""Command-line front end.

    homlie check TARGET [--suite S]
    homlie twist TARGET --morphism M [--n N] [--coboundary]
    homlie perturb TARGET [--t ENTRIES]
    homlie dualize TARGET
    homlie catalog [NAME]

TARGET is a structure file or a catalog name such as ``sl2.bialg(b)``.
Every verb accepts ``--params a=..,b=..,c=..``, ``--format human|machine``
and, for verbs that produce a structure, ``--output FILE``.

Exit status: 0 when every check passes, 1 when a check fails, 2 on parse,
validation or usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import sl2
from .algebra import (antisymmetry_residual, chybe_residual, hom_jacobi_residual,
                      is_lie_morphism, multiplicativity_residual, yau_twist)
from .algebra_file import (AlgebraFile, Resolved, emit_algebra_file, from_structures,
                           parse_algebra_file)
from .bialgebra import (HomLieBialgebra, bialgebra_twist, co_jacobi_residual,
                        compatibility_residual, dualize, is_bialgebra_morphism)
from .checks import check_residuals
from .coboundary import (CoboundaryStructure, QuasiTriangularStructure, ad_r_residual,
                         coboundary_twist, perturb, perturb_quasi)
from .errors import HomLieError, ParseError, ValidationError
from .multilinear import LinearMap, Tensor2, flip, render, tensor_power_apply
from .report import Report
from .scalars import VARS, parse_scalar, substitute, variables_of

SUITES = ("algebra", "coalgebra", "bialgebra", "coboundary", "quasitriangular", "all")
EXIT_PASS, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


# --- loading ------------------------------------------------------------------

def parse_params(text: str | None) -> dict:
    """``"a=1,b=2/3"`` -> {"a": 1, "b": 2/3}; values must be constants."""
    out: dict = {}
    if not text:
        return out
    for item in text.split(","):
        name, eq, value = item.partition("=")
        name = name.strip()
        if not eq or name not in VARS:
            raise ValidationError(f"--params entries look like a=1/2 with a name in {', '.join(VARS)}")
        scalar = parse_scalar(value)
        if variables_of(scalar):
            raise ValidationError(f"parameter {name} must be a constant")
        out[name] = scalar
    return out


def catalog_file(name: str) -> AlgebraFile:
    kind, args = sl2.parse_catalog_name(name)
    if kind in ("", "r"):
        B = sl2.sl2_bialgebra()
        return from_structures(B.algebra, B.coalgebra, sl2.standard_r())
    if kind == "bialg":
        B = sl2.sl2_alpha_bialgebra(*args)
        return from_structures(B.algebra, B.coalgebra, sl2.standard_r())
    if kind == "dual":
        B = sl2.sl2_alpha_dual(*args)
        return from_structures(B.algebra, B.coalgebra)
    raise ValidationError(f"{name!r} names a morphism; pass it with --morphism")


def load_target(target: str) -> AlgebraFile:
    if os.path.exists(target):
        with open(target, encoding="utf-8") as fh:
            return parse_algebra_file(fh.read())
    if target.strip().startswith("sl2"):
        return catalog_file(target)
    raise ValidationError(f"{target!r} is neither a file nor a catalog entry")


def parse_morphism(text: str, dim: int) -> LinearMap:
    """A catalog endomorphism name or a row-major matrix literal [[..],[..]]."""
    text = text.strip()
    if text.startswith("sl2"):
        kind, args = sl2.parse_catalog_name(text)
        if not kind.startswith("alpha"):
            raise ValidationError(f"{text!r} is not a catalog endomorphism")
        m = sl2.endo(int(kind[-1]), *args).matrix
    else:
        if not (text.startswith("[") and text.endswith("]")):
            raise ValidationError("morphism must be a catalog name or a matrix [[..],[..]]")
        rows = []
        for row in sl2._split_args(text[1:-1]):
            row = row.strip()
            if not (row.startswith("[") and row.endswith("]")):
                raise ValidationError("each matrix row must be written [x, y, ...]")
            rows.append([parse_scalar(x) for x in sl2._split_args(row[1:-1])])
        if any(len(row) != len(rows) for row in rows):
            raise ValidationError("morphism matrix must be square")
        m = LinearMap(rows)
    if m.rows != dim:
        raise ValidationError(f"morphism is {m.rows}x{m.cols}, structure has dimension {dim}")
    return m


def parse_tensor_entries(text: str, names) -> Tensor2:
    """``"X+ X- = -1; X- X+ = 1"`` -> the matching order-2 tensor."""
    pos = {n: k for k, n in enumerate(names)}
    terms = []
    for item in text.split(";"):
        if not item.strip():
            continue
        lhs, eq, rhs = item.partition("=")
        words = lhs.split()
        if not eq or len(words) != 2:
            raise ValidationError(f"tensor entries look like 'X Y = coeff', got {item.strip()!r}")
        for w in words:
            if w not in pos:
                raise ValidationError(f"unknown basis element {w!r}")
        terms.append(((pos[words[0]], pos[words[1]]), parse_scalar(rhs)))
    return Tensor2.from_terms(len(names), terms)


# --- suites -------------------------------------------------------------------

def _algebra_checks(rep: Report, res: Resolved, prefix: str = ""):
    L, names = res.algebra, res.algebra.basis_names
    rep.run(prefix + "algebra.antisymmetry",
            lambda: check_residuals(prefix + "algebra.antisymmetry", antisymmetry_residual(L), names), names)
    rep.run(prefix + "algebra.multiplicativity",
            lambda: check_residuals(prefix + "algebra.multiplicativity",
                                    multiplicativity_residual(L), names), names)
    rep.run(prefix + "algebra.hom_jacobi",
            lambda: check_residuals(prefix + "algebra.hom_jacobi", hom_jacobi_residual(L), names), names)


def _coalgebra_checks(rep: Report, res: Resolved, prefix: str = ""):
    C, names = res.coalgebra, res.algebra.basis_names
    D = C.delta
    rep.run(prefix + "coalgebra.antisymmetry", lambda: check_residuals(
        prefix + "coalgebra.antisymmetry",
        {(i,): flip(D.image(i)) + D.image(i) for i in range(C.dim)}, names), names)
    rep.run(prefix + "coalgebra.comultiplicativity", lambda: check_residuals(
        prefix + "coalgebra.comultiplicativity", D.commutation_residual(C.alpha), names), names)
    rep.run(prefix + "coalgebra.hom_co_jacobi", lambda: check_residuals(
        prefix + "coalgebra.hom_co_jacobi", co_jacobi_residual(D, C.alpha), names), names)


def _compat_check(rep: Report, res: Resolved, prefix: str = ""):
    name = prefix + "bialgebra.compatibility"
    if not rep.passed:
        rep.skip(name, "earlier axioms failed")
        return
    L = res.algebra
    rep.run(name, lambda: check_residuals(name, compatibility_residual(L, res.coalgebra.delta),
                                          L.basis_names), L.basis_names)


def _coboundary_checks(rep: Report, res: Resolved, quasi: bool, prefix: str = ""):
    L, names = res.algebra, res.algebra.basis_names
    r = res.r
    rep.run(prefix + "coboundary.r_alpha_fixed", lambda: check_residuals(
        prefix + "coboundary.r_alpha_fixed", {(): tensor_power_apply(L.alpha, 2, r) - r}, names), names)
    B = res.bialgebra()
    rep.run(prefix + "coboundary.delta_is_ad_r", lambda: check_residuals(
        prefix + "coboundary.delta_is_ad_r", ad_r_residual(B, r), names), names)
    if quasi:
        rep.run(prefix + "quasi_triangular.chybe", lambda: check_residuals(
            prefix + "quasi_triangular.chybe", {(): chybe_residual(L, r)}, names), names)


def run_suite(rep: Report, res: Resolved, suite: str, prefix: str = ""):
    if suite not in SUITES:
        raise ValidationError(f"unknown suite {suite!r}")
    needs_co = suite in ("coalgebra", "bialgebra", "coboundary", "quasitriangular")
    needs_r = suite in ("coboundary", "quasitriangular")
    if needs_co and res.coalgebra is None:
        raise ValidationError(f"suite {suite} needs cobracket lines")
    if needs_r and res.r is None:
        raise ValidationError(f"suite {suite} needs r lines")
    if suite != "coalgebra":
        _algebra_checks(rep, res, prefix)
    if res.coalgebra is not None and suite != "algebra":
        _coalgebra_checks(rep, res, prefix)
        if suite != "coalgebra":
            rep.run(prefix + "bialgebra.same_alpha", lambda: check_residuals(
                prefix + "bialgebra.same_alpha", {(): res.algebra.alpha - res.coalgebra.alpha}))
            _compat_check(rep, res, prefix)
    if suite in ("coboundary", "quasitriangular") or (suite == "all" and res.r is not None
                                                      and res.coalgebra is not None):
        if rep.passed:
            _coboundary_checks(rep, res, suite != "coboundary", prefix)
        else:
            rep.skip(prefix + "coboundary", "earlier axioms failed")


# --- verbs --------------------------------------------------------------------

def cmd_check(target: str, suite: str = "all", params: dict | None = None) -> Report:
    res = load_target(target).resolve(params)
    rep = Report("check", target, info={"suite": suite})
    run_suite(rep, res, suite)
    return rep


def _emit(rep: Report, af: AlgebraFile, output: str | None):
    text = emit_algebra_file(af)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
        rep.info["output"] = output
    else:
        rep.emitted = text


def cmd_twist(target: str, morphism: str, n: int = 0, params: dict | None = None, *,
              coboundary: bool = False, output: str | None = None) -> Report:
    if n < 0:
        raise ValidationError("--n must be non-negative")
    res = load_target(target).resolve(params)
    L, names = res.algebra, res.algebra.basis_names
    f = parse_morphism(morphism, L.dim)
    if params:
        f = f.map_entries(lambda x: substitute(x, params))
    rep = Report("twist", target, info={"morphism": morphism, "n": n})
    if L.alpha != LinearMap.identity(L.dim):
        raise ValidationError("twisting needs a Lie algebra input (alpha = identity)")
    run_suite(rep, res, "bialgebra" if res.coalgebra is not None else "algebra", "input.")
    if not rep.passed:
        return rep
    if rep.run("twist.lie_morphism", lambda: is_lie_morphism(L, f), names) is None or not rep.passed:
        return rep
    Lt = yau_twist(L, f)
    Ct = None
    if res.coalgebra is not None:
        B = res.bialgebra(check=True)
        if coboundary:
            morph = rep.run("twist.bialgebra_morphism", lambda: is_bialgebra_morphism(B, B, f), names)
        else:
            morph = is_bialgebra_morphism(B, B, f)
        if morph:
            if not coboundary:
                rep.run("twist.bialgebra_morphism", lambda: morph, names)
            Ct = bialgebra_twist(B, f).coalgebra
        elif coboundary:
            return rep
        else:
            ch = morph.failures()[0]
            rep.skip("twist.bialgebra_morphism",
                     f"cobracket dropped: {ch.name} {ch.witness_text(names)}")
    r_out = None
    if coboundary:
        if res.r is None or Ct is None:
            raise ValidationError("--coboundary needs cobracket and r lines")
        cb = rep.run("twist.coboundary_input",
                     lambda: CoboundaryStructure(res.bialgebra(check=True), res.r, check=False), names)
        twisted = rep.run("twist.r_fixed", lambda: coboundary_twist(cb, f), names)
        if twisted is None:
            return rep
        r_out = twisted.r
    elif res.r is not None:
        r0 = res.r
        r_out = r0
        for _ in range(n):
            r_out = tensor_power_apply(f, 2, r_out)
        if chybe_residual(L, r0).is_zero():
            rep.run("twist.chybe", lambda: check_residuals(
                "twist.chybe", {(): chybe_residual(Lt, r_out)}, names), names)
        else:
            rep.skip("twist.chybe", "input r does not solve the classical Yang-Baxter equation")
        rep.info["r"] = render(r_out, names)
    out_res = Resolved(Lt, Ct, r_out, None)
    suite = "algebra" if Ct is None else ("coboundary" if coboundary else "bialgebra")
    run_suite(rep, out_res, suite, "output.")
    _emit(rep, from_structures(Lt, Ct, r_out), output)
    return rep


def cmd_perturb(target: str, t_text: str | None = None, params: dict | None = None, *,
                output: str | None = None) -> Report:
    af = load_target(target)
    res = af.resolve(params)
    names = res.algebra.basis_names
    if t_text is not None:
        res.t = parse_tensor_entries(t_text, names)
    if res.t is None:
        raise ValidationError("perturb needs t lines or --t")
    if res.coalgebra is None:
        raise ValidationError("perturb needs cobracket lines")
    rep = Report("perturb", target, info={"t": render(res.t, names)})
    quasi = res.r is not None
    run_suite(rep, res, "quasitriangular" if quasi else "bialgebra", "input.")
    if not rep.passed:
        return rep
    B = res.bialgebra(check=True)
    if quasi:
        qt = QuasiTriangularStructure(CoboundaryStructure(B, res.r))
        out = rep.run("perturb.quasi_triangular", lambda: perturb_quasi(qt, res.t), names)
        if out is None:
            return rep
        Bt, r_out = out.bialgebra, out.r
        rep.info["r"] = render(r_out, names)
    else:
        Bt = rep.run("perturb.bialgebra", lambda: perturb(B, res.t), names)
        if Bt is None:
            return rep
        r_out = None
    out_res = Resolved(Bt.algebra, Bt.coalgebra, r_out, None)
    run_suite(rep, out_res, "quasitriangular" if quasi else "bialgebra", "output.")
    _emit(rep, from_structures(Bt.algebra, Bt.coalgebra, r_out), output)
    return rep


def cmd_dualize(target: str, params: dict | None = None, *, output: str | None = None) -> Report:
    res = load_target(target).resolve(params)
    if res.coalgebra is None:
        raise ValidationError("dualize needs cobracket lines")
    rep = Report("dualize", target)
    run_suite(rep, res, "bialgebra", "input.")
    if not rep.passed:
        return rep
    D = dualize(HomLieBialgebra(res.algebra, res.coalgebra))
    out_res = Resolved(D.algebra, D.coalgebra, None, None)
    run_suite(rep, out_res, "bialgebra", "output.")
    rep.run("dual.double_dual", lambda: check_residuals(
        "dual.double_dual", {(): dualize(D).c - res.algebra.c, ("d",): dualize(D).d - res.coalgebra.d},
        D.basis_names), D.basis_names)
    _emit(rep, from_structures(D.algebra, D.coalgebra), output)
    return rep


_DESCRIPTIONS = {
    "sl2": "sl(2) Lie bialgebra with the standard r-matrix",
    "sl2.r": "the standard r-matrix X+ (x) X- + 1/4 H (x) H",
    "sl2.alpha1(a,b,c)": "endomorphism family 1 (b != 0, ac = 0)",
    "sl2.alpha2(a,b,c)": "endomorphism family 2 (b != 0, ac = 0)",
    "sl2.alpha3(a,b,c)": "endomorphism family 3 (ab != 0, c != +-1)",
    "sl2.bialg(b)": "sl(2)_alpha twisted along H -> H, X+- -> b^(+-1) X+-, with r",
    "sl2.dual(b)": "the dual of sl2.bialg(b)",
}


def cmd_catalog(name: str | None = None, params: dict | None = None) -> Report:
    rep = Report("catalog", name or "")
    if name is None:
        for key in sl2.CATALOG:
            rep.info[key] = _DESCRIPTIONS[key]
        return rep
    kind, args = sl2.parse_catalog_name(name)
    if kind.startswith("alpha"):
        e = sl2.endo(int(kind[-1]), *args)
        m = e.matrix if not params else e.matrix.map_entries(lambda x: substitute(x, params))
        rep.info["branch"] = e.branch
        for j, col in enumerate(m.columns()):
            rep.info[f"image.{sl2.NAMES[j]}"] = render(col, sl2.NAMES)
        rep.run("morphism", lambda: is_lie_morphism(sl2.make_sl2(), m), sl2.NAMES)
        return rep
    if kind == "r":
        rep.info["r"] = render(sl2.standard_r(), sl2.NAMES)
        return rep
    af = catalog_file(name)
    if params:
        af.params.update(params)
    rep.emitted = emit_algebra_file(af)
    return rep


# --- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--params", help="parameter bindings, e.g. a=1,b=2/3")
    common.add_argument("--format", choices=("human", "machine"), default="human")

    p = argparse.ArgumentParser(prog="homlie", description="Verify Hom-Lie (bi)algebra structures.")
    sub = p.add_subparsers(dest="verb", required=True)
    c = sub.add_parser("check", parents=[common], help="run a check suite")
    c.add_argument("target")
    c.add_argument("--suite", choices=SUITES, default="all")
    t = sub.add_parser("twist", parents=[common], help="Yau twist along a morphism")
    t.add_argument("target")
    t.add_argument("--morphism", required=True)
    t.add_argument("--n", type=int, default=0)
    t.add_argument("--coboundary", action="store_true", help="require f to fix r and keep r")
    t.add_argument("--output")
    q = sub.add_parser("perturb", parents=[common], help="perturb the cobracket by ad(t)")
    q.add_argument("target")
    q.add_argument("--t", dest="t_text", help="entries of t, e.g. 'X+ X- = -1; X- X+ = 1'")
    q.add_argument("--output")
    d = sub.add_parser("dualize", parents=[common], help="dual bialgebra")
    d.add_argument("target")
    d.add_argument("--output")
    g = sub.add_parser("catalog", parents=[common], help="list or show catalog entries")
    g.add_argument("name", nargs="?")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        params = parse_params(args.params)
        if args.verb == "check":
            rep = cmd_check(args.target, args.suite, params)
        elif args.verb == "twist":
            rep = cmd_twist(args.target, args.morphism, args.n, params,
                            coboundary=args.coboundary, output=args.output)
        elif args.verb == "perturb":
            rep = cmd_perturb(args.target, args.t_text, params, output=args.output)
        elif args.verb == "dualize":
            rep = cmd_dualize(args.target, params, output=args.output)
        else:
            rep = cmd_catalog(args.name, params)
    except (HomLieError, OSError) as exc:
        kind = "parse error" if isinstance(exc, ParseError) else "error"
        print(f"homlie: {kind}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(rep.render(args.format))
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
