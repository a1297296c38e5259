"""Command-line front end.

Commands: catalog, disc, ramify, order-p, free-p, order-2p, free-2p,
quadratic, verify-fixtures.  Case selection by --case (1-based catalog
position) or --poly (polynomial text, which may use the letter p when --p is
given, e.g. "x^p+2px^{(p-1)/2}+p").  Exit codes: 0 success, 1 verification
failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .dihedral import (
    CaseDataUnavailable,
    case_by_label,
    catalog,
    degree_p_data,
    degree_p_generator_candidates,
    disc_valuation_resultant,
    induced_pipeline,
    ore_disc_valuation,
    product_generator_check,
    quadratic_structure,
    ramification_chain,
)
from .hopfaction import beta_matrix, det_valuation, find_generator, symbolic_determinant
from .poly import Poly
from .reports import (
    Report,
    encode_matrix,
    encode_multipoly,
    encode_scalar,
    encode_vector,
    render_markdown_table,
    render_matrix_md,
)
from .scalars import is_prime


class UsageError(Exception):
    pass


class PolyParseError(UsageError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


# ------------------------------------------------------------ polynomial parsing

_TOKEN_CHARS = set("0123456789+-*/^(){}xp ")


def _tokenize(text: str):
    tokens = []  # (kind, value, pos)
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch not in _TOKEN_CHARS:
            raise PolyParseError(f"unexpected character {ch!r}", i)
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
        elif ch in "+-*/^":
            tokens.append((ch, ch, i))
            i += 1
        elif ch in "({":
            tokens.append(("(", ch, i))
            i += 1
        elif ch in ")}":
            tokens.append((")", ch, i))
            i += 1
        elif ch == "x":
            tokens.append(("x", "x", i))
            i += 1
        elif ch == "p":
            tokens.append(("p", "p", i))
            i += 1
    return tokens


class _PolyParser:
    """Expression parser over Q[x] with implicit multiplication and an
    optional integer substitution for the letter p."""

    def __init__(self, tokens, p_value):
        self.tokens = tokens
        self.pos = 0
        self.p_value = p_value

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise PolyParseError("unexpected end of input", -1)
        self.pos += 1
        return tok

    def parse(self) -> Poly:
        value = self.parse_sum()
        if self.peek() is not None:
            raise PolyParseError("trailing input", self.peek()[2])
        return value

    def parse_sum(self) -> Poly:
        tok = self.peek()
        if tok and tok[0] in "+-":
            self.take()
            value = self.parse_product()
            if tok[0] == "-":
                value = -value
        else:
            value = self.parse_product()
        while True:
            tok = self.peek()
            if tok is None or tok[0] not in "+-":
                return value
            self.take()
            rhs = self.parse_product()
            value = value + rhs if tok[0] == "+" else value - rhs

    def parse_product(self) -> Poly:
        value = self.parse_power()
        while True:
            tok = self.peek()
            if tok is None:
                return value
            if tok[0] in ("*", "/"):
                self.take()
                rhs = self.parse_power()
                if tok[0] == "*":
                    value = value * rhs
                else:
                    if rhs.degree != 0:
                        raise PolyParseError("division by a non-constant", tok[2])
                    value = value * (1 / rhs.coeffs[0])
            elif tok[0] in ("int", "p", "x", "("):
                rhs = self.parse_power()  # implicit multiplication
                value = value * rhs
            else:
                return value

    def parse_power(self) -> Poly:
        base = self.parse_atom()
        tok = self.peek()
        if tok and tok[0] == "^":
            self.take()
            exp = self.parse_atom()
            exp_tok_pos = tok[2]
            if exp.degree != 0:
                raise PolyParseError("exponent must be constant", exp_tok_pos)
            e = exp.coeffs[0] if exp.coeffs else Fraction(0)
            if e.denominator != 1 or e < 0:
                raise PolyParseError("exponent must be a non-negative integer", exp_tok_pos)
            return base ** int(e)
        return base

    def parse_atom(self) -> Poly:
        tok = self.take()
        kind, value, pos = tok
        if kind == "int":
            return Poly([Fraction(value)])
        if kind == "p":
            if self.p_value is None:
                raise PolyParseError("the letter p needs --p to substitute", pos)
            return Poly([Fraction(self.p_value)])
        if kind == "x":
            return Poly([Fraction(0), Fraction(1)])
        if kind == "(":
            inner = self.parse_sum()
            closing = self.take()
            if closing[0] != ")":
                raise PolyParseError("unbalanced parenthesis", closing[2])
            return inner
        if kind in "+-":
            inner = self.parse_atom()
            return -inner if kind == "-" else inner
        raise PolyParseError(f"unexpected token {value!r}", pos)


def parse_poly(text: str, p: int | None = None) -> Poly:
    """Exact polynomial from text such as "x^3+3x+3", "x^5-35x^2+50x+20" or
    the templates "x^p+2px^{(p-1)/2}+p" (with p substituted)."""
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty input", 0)
    return _PolyParser(tokens, p).parse()


# ------------------------------------------------------------ case selection


def _select_case(args):
    p = args.p
    cases = catalog(p)
    if args.case is not None:
        if not 1 <= args.case <= len(cases):
            raise UsageError(
                f"--case must be in 1..{len(cases)} for p = {p}"
            )
        return cases[args.case - 1]
    if args.poly is not None:
        poly = parse_poly(args.poly, p)
        for case in cases:
            if poly in (case.f, case.work_poly):
                return case
        raise UsageError(f"{args.poly!r} is not a catalog polynomial for p = {p}")
    raise UsageError("select a case with --case or --poly")


def _emit(args, report: Report, md_lines: list[str]) -> None:
    if args.format == "json":
        print(report.to_json())
    else:
        print("\n".join(md_lines))


# ------------------------------------------------------------ commands


def cmd_catalog(args) -> int:
    rows = []
    for case in catalog(args.p):
        j0, val = ore_disc_valuation(case.f, args.p)
        chain = ramification_chain(case)
        rows.append(
            [
                str(case.index),
                case.label,
                case.family,
                case.lmfdb_id or "-",
                str(j0),
                str(val),
                str(chain.disc_l_val),
                " > ".join(chain.groups),
            ]
        )
    payload = {
        "p": args.p,
        "cases": [
            {
                "case": int(r[0]),
                "poly": r[1],
                "family": r[2],
                "lmfdb": r[3],
                "j0": int(r[4]),
                "disc_e_valuation": int(r[5]),
                "disc_l_valuation": int(r[6]),
                "ramification": r[7],
            }
            for r in rows
        ],
    }
    md = [
        f"# catalog p={args.p}",
        render_markdown_table(
            ["case", "polynomial", "family", "lmfdb", "j0", "v(d_E)", "v(d_L)", "chain"],
            rows,
        ),
    ]
    _emit(args, Report("catalog", payload), md)
    return 0


def cmd_disc(args) -> int:
    if args.poly is not None and args.case is None:
        poly = parse_poly(args.poly, args.p)
        label = args.poly
    else:
        case = _select_case(args)
        poly, label = case.f, case.label
    j0, val = ore_disc_valuation(poly, args.p)
    res_val = disc_valuation_resultant(poly, args.p)
    ok = res_val == val
    payload = {
        "p": args.p,
        "poly": label,
        "j0": j0,
        "disc_valuation": val,
        "resultant_valuation": res_val,
        "consistent": ok,
    }
    md = [
        f"# discriminant of {label} over Q_{args.p}",
        render_markdown_table(
            ["j0", "v_p(disc)", "v_p(Res(f,f'))"], [[j0, val, res_val]]
        ),
    ]
    _emit(args, Report("disc", payload), md)
    return 0 if ok else 1


def cmd_ramify(args) -> int:
    case = _select_case(args)
    chain = ramification_chain(case)
    payload = {
        "p": args.p,
        "poly": case.label,
        "family": case.family,
        "groups": list(chain.groups),
        "disc_e_valuation": chain.disc_e_val,
        "disc_l_valuation": chain.disc_l_val,
        "weakly_ramified": chain.weakly_ramified,
        "quadratic_subextension_unramified": case.f_unramified,
    }
    md = [
        f"# ramification of the closure of {case.label}",
        render_markdown_table(
            ["chain", "v(d_E)", "v(d_L)", "weakly ramified"],
            [[" > ".join(chain.groups), chain.disc_e_val, chain.disc_l_val,
              str(chain.weakly_ramified).lower()]],
        ),
    ]
    _emit(args, Report("ramify", payload), md)
    return 0


def _case_refs(case, keys):
    fx = case.fixture() or {}
    return sorted({fx[k]["loc"] for k in keys if k in fx})


def cmd_order_p(args) -> int:
    case = _select_case(args)
    d = degree_p_data(case, start_precision=args.precision)
    payload = {
        "p": args.p,
        "poly": case.label,
        "work_poly": encode_vector(case.work_poly.coeffs),
        "gram": [
            [encode_vector(d.gram.entries[i, j].coords) for j in range(args.p)]
            for i in range(args.p)
        ],
        "action_matrix": encode_matrix(d.action.stacked()),
        "reduced_matrix": encode_matrix(d.hnf.matrix),
        "pivots": list(d.hnf.pivots),
        "index": d.index,
        "basis": list(d.basis.rendered()),
        "basis_coefficients": encode_matrix(d.basis.coefficients),
        "refs": _case_refs(case, ["gram", "action_hnf", "basis_p"]),
    }
    md = [
        f"# associated order, degree-{args.p} part of {case.label}",
        "reduced matrix D:",
        render_matrix_md(encode_matrix(d.hnf.matrix)),
        f"index: {d.index}",
        "basis: " + ", ".join(d.basis.rendered()),
    ]
    _emit(args, Report("order-p", payload), md)
    return 0


def cmd_free_p(args) -> int:
    case = _select_case(args)
    d = degree_p_data(case, start_precision=args.precision)
    gen = find_generator(
        d.action,
        d.index,
        args.p,
        budget=args.budget,
        candidates=degree_p_generator_candidates(case),
    )
    det_poly = None
    if args.p <= 5:
        det_poly = encode_multipoly(symbolic_determinant(d.action))
    payload = {
        "p": args.p,
        "poly": case.label,
        "index": d.index,
        "generator": encode_vector(gen) if gen else None,
        "generator_valuation": (
            int(det_valuation(beta_matrix(d.action, gen).det(), args.p)) if gen else None
        ),
        "free": gen is not None,
        "det_eps_terms": det_poly,
        "refs": _case_refs(case, ["det_eps", "generator_p"]),
    }
    md = [
        f"# freeness, degree-{args.p} part of {case.label}",
        f"index: {d.index}",
        f"generator: {encode_vector(gen) if gen else 'not found within budget'}",
    ]
    _emit(args, Report("free-p", payload), md)
    return 0 if gen is not None else 1


def cmd_order_2p(args) -> int:
    case = _select_case(args)
    rep = induced_pipeline(case)
    payload = {
        "p": args.p,
        "poly": case.label,
        "integral_basis": "gamma-powers" if rep.uses_gamma_basis else "tensor",
        "reduced_matrix": encode_matrix(rep.hnf.matrix),
        "pivots": list(rep.hnf.pivots),
        "index": rep.index,
        "basis": list(rep.basis.rendered()),
        "basis_coefficients": encode_matrix(rep.basis.coefficients),
        "tensor_order_equal": rep.tensor_equal,
        "refs": _case_refs(case, ["dihedral_hnf", "basis_2p", "tensor_equal"]),
    }
    md = [
        f"# associated order, degree-{2*args.p} extension over {case.label}",
        "reduced matrix D:",
        render_matrix_md(encode_matrix(rep.hnf.matrix)),
        f"index: {rep.index}",
        "basis: " + ", ".join(rep.basis.rendered()),
        f"equals tensor order: {str(rep.tensor_equal).lower()}",
    ]
    _emit(args, Report("order-2p", payload), md)
    return 0


def cmd_free_2p(args) -> int:
    case = _select_case(args)
    rep = induced_pipeline(case)
    gen = rep.generator
    det_poly = None
    if 2 * args.p <= 6:
        det_poly = encode_multipoly(symbolic_determinant(rep.action))
    product = None
    fx = case.fixture()
    if fx and "generator_p" in fx:
        from . import fixtures as fs

        eps = fs.frac_row(fx["generator_p"]["coords"])
        pc = product_generator_check(case, eps, (Fraction(1), Fraction(1)))
        product = {
            "eps": encode_vector(eps),
            "delta": ["1", "1"],
            "valuation": pc.valuation,
            "is_generator": pc.is_generator,
        }
    payload = {
        "p": args.p,
        "poly": case.label,
        "index": rep.index,
        "generator": encode_vector(gen) if gen else None,
        "generator_valuation": rep.generator_valuation,
        "free": gen is not None,
        "det_beta_terms": det_poly,
        "product_of_generators": product,
        "refs": _case_refs(case, ["det_beta", "generator_2p", "product_is_generator"]),
    }
    md = [
        f"# freeness, degree-{2*args.p} extension over {case.label}",
        f"index: {rep.index}",
        f"generator: {encode_vector(gen) if gen else 'not found within budget'}",
    ]
    if product:
        md.append(
            f"product of subextension generators: v={product['valuation']}, "
            f"generator={str(product['is_generator']).lower()}"
        )
    _emit(args, Report("free-2p", payload), md)
    return 0 if gen is not None else 1


def cmd_quadratic(args) -> int:
    zsq = Fraction(args.zsq) if args.zsq else Fraction(-args.p)
    qs = quadratic_structure(zsq, args.p)
    payload = {
        "p": args.p,
        "zsq": str(zsq),
        "reduced_matrix": encode_matrix(qs.hnf_matrix),
        "basis": list(qs.basis.rendered()),
        "criterion": "delta_1 + delta_2 z generates iff v_p(delta_1 delta_2) = 0",
        "sample_generator": encode_vector(qs.sample_generator),
    }
    md = [
        f"# quadratic subextension structure (p={args.p}, z^2={zsq})",
        "basis: " + ", ".join(qs.basis.rendered()),
        "generator criterion: v_p(delta_1*delta_2) = 0; example: 1+z",
    ]
    _emit(args, Report("quadratic", payload), md)
    return 0


def cmd_verify_fixtures(args) -> int:
    from .verification import build_registry, run_all

    checks = build_registry()
    if args.p:
        checks = [c for c in checks if c.check_id.startswith(f"p{args.p}/")]
    results = run_all(checks)
    failures = [r for r in results if not r.passed]
    if args.format == "json":
        payload = {
            "total": len(results),
            "passed": len(results) - len(failures),
            "results": [
                {
                    "id": r.check_id,
                    "loc": r.loc,
                    "criterion": r.criterion,
                    "passed": r.passed,
                    "detail": r.detail,
                }
                for r in results
            ],
        }
        print(Report("verify-fixtures", payload).to_json())
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            line = f"[{status}] {r.check_id}  ({r.loc})"
            if not r.passed:
                line += f"  -- {r.detail}"
            print(line)
        print(f"{len(results) - len(failures)}/{len(results)} fixture checks passed")
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfgalois",
        description=(
            "Exact computation of associated orders and freeness for the Hopf "
            "Galois structures of dihedral degree-2p extensions of Q_p"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, case_args=True):
        sp.add_argument("--p", type=int, required=True, help="odd prime")
        sp.add_argument("--format", choices=("json", "md"), default="md")
        if case_args:
            sp.add_argument("--case", type=int, help="1-based catalog index")
            sp.add_argument("--poly", help="defining polynomial text")
        sp.add_argument("--budget", type=int, default=20000,
                        help="generator search budget")
        sp.add_argument("--precision", type=int, default=None,
                        help="starting p-adic working precision")

    sp = sub.add_parser("catalog", help="list the catalog cases")
    common(sp, case_args=False)
    sp.set_defaults(fn=cmd_catalog)

    for name, fn, helptext in (
        ("disc", cmd_disc, "discriminant valuation (Ore data + resultant)"),
        ("ramify", cmd_ramify, "ramification chain of the closure"),
        ("order-p", cmd_order_p, "associated order of the degree-p part"),
        ("free-p", cmd_free_p, "freeness of the degree-p part"),
        ("order-2p", cmd_order_2p, "associated order, degree-2p extension"),
        ("free-2p", cmd_free_2p, "freeness, degree-2p extension"),
    ):
        sp = sub.add_parser(name, help=helptext)
        common(sp)
        sp.set_defaults(fn=fn)

    sp = sub.add_parser("quadratic", help="quadratic subextension structure")
    common(sp, case_args=False)
    sp.add_argument("--zsq", help="z^2 (rational); defaults to -p")
    sp.set_defaults(fn=cmd_quadratic)

    sp = sub.add_parser("verify-fixtures", help="run every pinned-value check")
    sp.add_argument("--p", type=int, default=None)
    sp.add_argument("--format", choices=("json", "md"), default="md")
    sp.set_defaults(fn=cmd_verify_fixtures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "p", None) is not None and args.command != "verify-fixtures":
        if not is_prime(args.p) or args.p == 2:
            parser.exit(2, f"error: --p must be an odd prime, got {args.p}\n")
    try:
        return args.fn(args)
    except (UsageError, CaseDataUnavailable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AssertionError, ArithmeticError) as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
