"""Command-line front end: ``wreathrep <subcommand> ...``.

Every subcommand prints JSON (default) or a plain-text table. Exit status is
0 on success, 1 when a computation finished but a checked claim failed, and
2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import applications as app
from .charpoly import InstabilityError, fit, from_induced
from .coinvariants import (
    CAP_ENV_VAR,
    ResourceError,
    coinvariant_character,
    coinvariant_dimension,
    multidegrees,
)
from .combinat import (
    MultiPartition,
    RangeError,
    centralizer_order,
    class_size,
    enumerate_classes,
    group_order,
)
from .exactnum import format_cyclotomic
from .orlik_solomon import (
    arrangement_character,
    braid_arrangement,
    monomial_arrangement,
    nbc_basis,
    poincare_polynomial,
)
from .wreathchar import (
    ClassFunction,
    NotACharacterError,
    character_table,
    decompose,
    decomposition_to_json,
    ind_fig_character,
    irr_character,
    kG_module_character,
    trivial,
)


class UsageError(ValueError):
    pass


# argument types -------------------------------------------------------------------


def _int_at_least(lo: int) -> Callable[[str], int]:
    def parse(text: str) -> int:
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
        if v < lo:
            raise argparse.ArgumentTypeError(f"must be >= {lo}, got {v}")
        return v

    return parse


def parse_range(text: str) -> list[int]:
    """'3' -> [3]; '2..5' -> [2, 3, 4, 5]."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}")
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"empty or negative range {text!r}")
    return list(range(lo, hi + 1))


def parse_multidegree(text: str) -> tuple[int, ...]:
    try:
        J = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if any(j < 0 for j in J):
        raise argparse.ArgumentTypeError("multidegree entries must be nonnegative")
    return J


def parse_label(text: str, d: int) -> MultiPartition:
    """'2,1|1' -> ((2,1), (1,)); '-' or '' is the empty partition; missing slots are empty."""
    slots = text.split("|")
    if len(slots) > d:
        raise UsageError(f"label {text!r} has {len(slots)} slots but d={d}")
    parts = []
    for s in slots:
        s = s.strip()
        if s in ("", "-"):
            parts.append(())
            continue
        try:
            parts.append(tuple(int(x) for x in s.split(",")))
        except ValueError:
            raise UsageError(f"cannot parse partition {s!r}")
    parts += [()] * (d - len(parts))
    try:
        return MultiPartition(d, tuple(parts))
    except ValueError as exc:
        raise UsageError(str(exc))


# output helpers ---------------------------------------------------------------------


@dataclass
class Result:
    payload: object
    lines: list[str]
    code: int = 0


def _cf_json(f: ClassFunction) -> dict:
    return {"d": f.d, "n": f.n, "values": f.to_json()}


def _cf_lines(f: ClassFunction, title: str) -> list[str]:
    out = [title]
    for t, v in f.items():
        out.append(f"  {t}  {format_cyclotomic(v)}")
    return out


def _dec_lines(dec) -> list[str]:
    if not dec:
        return ["  0"]
    return [f"  {k} x L{lam}" for lam, k in sorted(dec.items(), key=lambda kv: kv[0].parts, reverse=True)]


def _dim(f: ClassFunction) -> int:
    return int(f.dimension().to_fraction())


# subcommands -----------------------------------------------------------------------


def cmd_classes(a) -> Result:
    d = a.d
    items, lines = [], []
    for n in a.n:
        lines.append(f"d={d} n={n} |W_n|={group_order(d, n)}")
        for t in enumerate_classes(d, n):
            items.append({"n": n, "class": t.to_json(), "size": class_size(t), "centralizer": centralizer_order(t)})
            lines.append(f"  {t}  size={class_size(t)}  centralizer={centralizer_order(t)}")
    return Result({"d": d, "classes": items}, lines)


def cmd_irrchar(a) -> Result:
    d = a.d
    out, lines = [], []
    for n in a.n:
        if a.label:
            lam = parse_label(a.label, d)
            if lam.norm != n:
                raise UsageError(f"label {lam} has size {lam.norm}, not n={n}")
            table = {lam: irr_character(d, n, lam)}
        else:
            table = character_table(d, n)
        for lam, chi in table.items():
            out.append({"label": lam.to_json(), "character": _cf_json(chi)})
            lines += _cf_lines(chi, f"chi_{lam}  (d={d}, n={n})")
    return Result({"d": d, "characters": out}, lines)


def cmd_indchar(a) -> Result:
    d = a.d
    lam = parse_label(a.label, d)
    V = irr_character(d, lam.norm, lam)
    out, lines = [], []
    for n in a.n:
        if n < lam.norm:
            raise UsageError(f"n={n} is below the generating degree {lam.norm}")
        f = ind_fig_character(V, n)
        dec = decompose(f)
        out.append({"n": n, "dimension": _dim(f), "character": _cf_json(f), "decomposition": decomposition_to_json(dec)})
        lines += _cf_lines(f, f"Ind(L{lam})_{n}  dim={_dim(f)}") + ["  decomposition:"] + _dec_lines(dec)
    return Result({"d": d, "label": lam.to_json(), "terms": out}, lines)


def _family(a) -> tuple[str, Callable[[int], ClassFunction]]:
    fam = a.family
    if fam == "os":
        return f"H^{a.degree}(P({a.d},1,n))", app.h_family(a.d, a.degree)
    if fam == "fr":
        if a.d != 2:
            raise UsageError("the FR module is defined for d = 2")
        return f"FR degree {a.degree}", app.fr_family(a.degree)
    if fam == "coinv":
        return f"coinvariants degree {a.degree}", lambda n: coinvariant_character(a.d, n, (a.degree,))
    if fam == "trivial":
        return "trivial", lambda n: trivial(a.d, n)
    if fam == "ind":
        if not a.label:
            raise UsageError("--family ind needs --label")
        lam = parse_label(a.label, a.d)
        V = irr_character(a.d, lam.norm, lam)
        return f"Ind(L{lam})", lambda n: ind_fig_character(V, n)
    if fam == "kg":
        return "k[G] on W_2", lambda n: kG_module_character(a.d)
    raise UsageError(f"unknown family {fam!r}")


def cmd_charpoly(a) -> Result:
    d = a.d
    if a.label:
        lam = parse_label(a.label, d)
        P = from_induced(irr_character(d, lam.norm, lam))
        source = {"label": lam.to_json()}
    else:
        if a.family is None:
            raise UsageError("charpoly needs --label or --family")
        name, family = _family(a)
        ns = a.n or [2, 3, 4]
        D = a.max_degree if a.max_degree is not None else 2 * a.degree
        P = fit([(n, family(n)) for n in ns], D)
        source = {"family": name, "n": ns, "max_degree": D}
    payload = {"d": d, "source": source, "degree": P.degree, "terms": P.to_json(), "rendered": str(P)}
    return Result(payload, [f"P = {P}", f"degree {P.degree}"])


def cmd_os(a) -> Result:
    d = a.d
    out, lines = [], []
    for n in a.n:
        arr = braid_arrangement(n) if a.braid else monomial_arrangement(d, n)
        poly = poincare_polynomial(arr)
        entry = {"n": n, "kind": arr.kind, "hyperplanes": len(arr), "rank": arr.rank, "poincare": poly}
        lines.append(f"{arr.kind} arrangement d={arr.d} n={n}: {len(arr)} hyperplanes, Poincare {poly}")
        if a.degree is not None:
            f = arrangement_character(arr, a.degree)
            dec = decompose(f)
            entry["character"] = _cf_json(f)
            entry["decomposition"] = decomposition_to_json(dec)
            if a.show_basis:
                entry["nbc_basis"] = [[arr.symbol(x) for x in m] for m in nbc_basis(arr, a.degree)]
            lines += _cf_lines(f, f"  H^{a.degree} character") + ["  decomposition:"] + _dec_lines(dec)
        out.append(entry)
    return Result({"d": 1 if a.braid else d, "arrangements": out}, lines)


def cmd_decompose(a) -> Result:
    name, family = _family(a)
    out, lines = [], []
    ns = [2] if a.family == "kg" else a.n
    for n in ns:
        f = family(n)
        dec = decompose(f)
        out.append({"n": n, "dimension": _dim(f), "decomposition": decomposition_to_json(dec)})
        lines += [f"{name} at n={n}, dim {_dim(f)}"] + _dec_lines(dec)
    return Result({"family": name, "d": a.d, "table": out}, lines)


def cmd_coinv(a) -> Result:
    d = a.d
    Js = [a.J] if a.J else multidegrees(a.r, a.max_degree)
    out, lines = [], []
    for n in a.n:
        for J in Js:
            if a.J and len(J) != a.r:
                raise UsageError(f"multidegree {J} does not have r={a.r} entries")
            dim = coinvariant_dimension(d, n, J)
            f = coinvariant_character(d, n, J)
            dec = decompose(f)
            out.append({"n": n, "J": list(J), "dimension": dim, "character": _cf_json(f),
                        "decomposition": decomposition_to_json(dec)})
            lines += [f"n={n} J={J} dim={dim}"] + _dec_lines(dec)
    return Result({"d": d, "r": a.r, "pieces": out}, lines)


def cmd_gauss(a) -> Result:
    try:
        series = app.gauss_series(a.q, a.chi, a.i_max, window=a.window, include_zero=a.include_zero)
    except InstabilityError as exc:
        payload = {"q": a.q, "chi": a.chi, "stable": False, "instability": str(exc)}
        return Result(payload, [f"unstable: {exc}"], 1)
    lines = [f"q={a.q} chi={a.chi}: {series.render()}"]
    for t in series.terms:
        note = "" if t.displayed is None else f"  displayed {t.displayed}: {'agrees' if t.agrees else 'DIFFERS'}"
        lines.append(f"  a_{t.i} = {format_cyclotomic(t.coeff)}  (n in {t.window[0]}..{t.window[1]}){note}")
    lines.append(f"  provenance: {app.GAUSS_PROVENANCE}")
    return Result(series.to_json(), lines)


def cmd_fr(a) -> Result:
    out, lines = [], []
    for n in a.n:
        f = app.fr_character(n, a.degree)
        dec = decompose(f)
        out.append({"n": n, "dimension": _dim(f), "character": _cf_json(f), "decomposition": decomposition_to_json(dec)})
        lines += _cf_lines(f, f"FR degree {a.degree}, n={n}, dim {_dim(f)}") + ["  decomposition:"] + _dec_lines(dec)
    payload = {"degree": a.degree, "model_dependent": app.fr_model_dependent(a.degree), "table": out}
    if app.fr_model_dependent(a.degree):
        lines.append("note: degree >= 2 follows the product model and is model-dependent")
    return Result(payload, lines)


def cmd_stability(a) -> Result:
    name, family = _family(a)
    rep = app.stability_report(family, a.i, a.n, name=name, bound=a.bound)
    lines = [f"{name}: stabilized at {rep.stabilized_at}, bound {rep.bound}: {'pass' if rep.passed else 'FAIL'}"]
    for n, dec in rep.table:
        lines += [f" n={n}"] + _dec_lines(dec)
    return Result(rep.to_json(), lines, 0 if rep.passed else 1)


def cmd_verify(a) -> Result:
    rep = app.verify_h_decompositions(a.d, a.n, a.degree)
    lines = []
    for c in rep.checks:
        status = "pass" if c.passed else f"FAIL ({len(c.mismatches)} classes differ)"
        lines.append(f"d={c.d} n={c.n} H^{c.k}: displayed dim {c.expected_dimension}, "
                     f"computed dim {c.computed_dimension}: {status}")
    return Result(rep.to_json(), lines, 0 if rep.passed else 1)


# parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wreathrep", description="Exact representation theory of (Z/d) wr S_n.")
    p.add_argument("--version", action="version", version="wreathrep 0.1.0")
    sub = p.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    def add(name: str, helptext: str, fn):
        sp = sub.add_parser(name, help=helptext, description=helptext)
        sp.set_defaults(func=fn)
        sp.add_argument("--format", choices=("json", "table"), default="json")
        sp.add_argument("--output", "-o", help="write to this file instead of stdout")
        sp.add_argument("--cap", type=_int_at_least(1), help=f"group enumeration cap (default ${CAP_ENV_VAR} or 10000)")
        return sp

    pos = _int_at_least(1)
    families = ("os", "fr", "coinv", "trivial", "ind", "kg")

    sp = add("classes", "list conjugacy classes with sizes and centralizer orders", cmd_classes)
    sp.add_argument("--d", type=pos, required=True)
    sp.add_argument("--n", type=parse_range, required=True)

    sp = add("irrchar", "irreducible characters (whole table or one label)", cmd_irrchar)
    sp.add_argument("--d", type=pos, required=True)
    sp.add_argument("--n", type=parse_range, required=True)
    sp.add_argument("--label", help="multipartition such as '2,1|1'; slots separated by '|'")

    sp = add("indchar", "characters of the induced FI_G-module Ind(L(label))", cmd_indchar)
    sp.add_argument("--d", type=pos, required=True)
    sp.add_argument("--label", required=True)
    sp.add_argument("--n", type=parse_range, required=True)

    sp = add("charpoly", "character polynomial of Ind(L(label)), or fitted to a family", cmd_charpoly)
    sp.add_argument("--d", type=pos, required=True)
    sp.add_argument("--label")
    sp.add_argument("--family", choices=families)
    sp.add_argument("--degree", type=_int_at_least(0), default=1)
    sp.add_argument("--n", type=parse_range)
    sp.add_argument("--max-degree", type=_int_at_least(0))

    sp = add("os", "Orlik-Solomon data of the monomial (or braid) arrangement", cmd_os)
    sp.add_argument("--d", type=pos, default=1)
    sp.add_argument("--n", type=parse_range, required=True)
    sp.add_argument("--degree", type=_int_at_least(0))
    sp.add_argument("--braid", action="store_true", help="use the braid arrangement z_i = z_j")
    sp.add_argument("--show-basis", action="store_true", help="include the NBC basis in degree --degree")

    sp = add("decompose", "decompose a family member into irreducibles", cmd_decompose)
    sp.add_argument("--family", choices=families, required=True)
    sp.add_argument("--d", type=pos, required=True)
    sp.add_argument("--n", type=parse_range, default=[2])
    sp.add_argument("--degree", type=_int_at_least(0), default=1)
    sp.add_argument("--label")

    sp = add("coinv", "multigraded pieces of the diagonal coinvariant algebra", cmd_coinv)
    sp.add_argument("--d", type=pos, required=True)
    sp.add_argument("--n", type=parse_range, required=True)
    sp.add_argument("--r", type=pos, default=1)
    sp.add_argument("--J", type=parse_multidegree, help="one multidegree, e.g. '1,0'")
    sp.add_argument("--max-degree", type=_int_at_least(0), default=2, help="all J with |J| <= this")

    sp = add("gauss", "coefficients of the Gauss-sum series in q^-1", cmd_gauss)
    sp.add_argument("--q", type=_int_at_least(3), required=True)
    sp.add_argument("--chi", type=pos, default=1)
    sp.add_argument("--i-max", type=pos, default=2)
    sp.add_argument("--window", type=_int_at_least(2), default=2)
    sp.add_argument("--include-zero", action="store_true")

    sp = add("fr", "Fouxe-Rabinovitch module for G = Z (d = 2)", cmd_fr)
    sp.add_argument("--n", type=parse_range, required=True)
    sp.add_argument("--degree", type=_int_at_least(0), default=1)

    sp = add("stability", "stabilization point of multiplicities against the bound 4i", cmd_stability)
    sp.add_argument("--family", choices=families, required=True)
    sp.add_argument("--d", type=pos, default=2)
    sp.add_argument("--i", type=_int_at_least(0), required=True)
    sp.add_argument("--degree", type=_int_at_least(0), help="cohomological degree (defaults to --i)")
    sp.add_argument("--n", type=parse_range, required=True)
    sp.add_argument("--bound", type=_int_at_least(0))
    sp.add_argument("--label")

    sp = add("verify", "check H^1 / H^2 against the displayed induced decompositions", cmd_verify)
    sp.add_argument("--d", type=pos, required=True)
    sp.add_argument("--n", type=parse_range, required=True)
    sp.add_argument("--degree", type=int, choices=(1, 2), action="append")
    return p


def _emit(result: Result, fmt: str, output: str | None):
    if fmt == "json":
        text = json.dumps(result.payload, indent=2) + "\n"
    else:
        text = "\n".join(result.lines) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "stability" and args.degree is None:
        args.degree = args.i
    if args.command == "verify" and not args.degree:
        args.degree = [1, 2]
    if args.command == "fr":
        args.d = 2
    old_cap = os.environ.get(CAP_ENV_VAR)
    if args.cap is not None:
        os.environ[CAP_ENV_VAR] = str(args.cap)
    try:
        result = args.func(args)
    except (UsageError, RangeError, ValueError, ResourceError) as exc:
        if isinstance(exc, NotACharacterError):
            sys.stderr.write(f"error: {exc}\n")
            return 1
        sys.stderr.write(parser.format_usage())
        sys.stderr.write(f"error: {exc}\n")
        return 2
    finally:
        if args.cap is not None:
            if old_cap is None:
                os.environ.pop(CAP_ENV_VAR, None)
            else:
                os.environ[CAP_ENV_VAR] = old_cap
    _emit(result, args.format, args.output)
    return result.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
