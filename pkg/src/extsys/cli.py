"""Command-line entry point.

Exit codes: 0 success, 1 verification failed or internal error, 2 invalid
input, 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .errors import ExtsysError, InputError, TooLarge
from .laurent import YMonomial, a_factorize, parse_monomial
from .lattice import Algebra, algebra_from_json, iota, parse_algebra
from .paths import highest_path
from .qchar import qchar_snake
from .snakes import Snake, neighbour_snakes, parse_snake_text, validate_snake

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_TOO_LARGE = 0, 1, 2, 3


class Output:
    """Collects text lines or one JSON document and writes them at the end."""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: list[str] = []
        self.doc: dict = {}

    def text(self, line: str = "") -> None:
        self.lines.append(line)

    def data(self, **kw) -> None:
        self.doc.update(kw)

    def flush(self, stream) -> None:
        if self.as_json:
            stream.write(json.dumps(self.doc, indent=2) + "\n")
        elif self.lines:
            stream.write("\n".join(self.lines) + "\n")


def _snake(args) -> Snake:
    return validate_snake(parse_algebra(args.algebra), parse_snake_text(args.snake))


def _json_arg(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what} is not valid JSON: {exc.msg}") from None


def _monomial(obj) -> YMonomial:
    if isinstance(obj, str):
        return parse_monomial(obj)
    return YMonomial.from_json(obj)


def _flag(ok: bool) -> str:
    return "yes" if ok else "no"


# -- subcommands ------------------------------------------------------------------------


def cmd_qchar(args, out: Output) -> int:
    s = _snake(args)
    rep = qchar_snake(s, args.max_tuples)
    out.data(algebra=str(s.alg), snake=s.to_json(), **rep.to_json())
    out.text(f"snake {s} in {s.alg}")
    out.text(f"chi = {rep.character}")
    out.text(f"dim {rep.dim}  thin {_flag(rep.thin)}  special {_flag(rep.special)}  "
             f"anti-special {_flag(rep.antispecial)}")
    return EXIT_OK


def cmd_verify_tsys(args, out: Output) -> int:
    from .sl2core import exclusion_certificate
    from .tsystem import extended_relation, nonprime_report, verify_relation

    s = _snake(args)
    if len(s) >= 2 and not s.prime:
        rep = nonprime_report(s, args.max_tuples)
        out.data(algebra=str(s.alg), snake=s.to_json(), prime=False, report=rep.to_json())
        out.text(f"non-prime snake {s} in {s.alg}")
        out.text(f"dims {rep.dims_line()}")
        out.text(f"identity {_flag(rep.identity_holds)}  same prime factors {_flag(rep.factors_match)}  "
                 f"special {_flag(rep.special)}")
        return EXIT_OK if rep.verified else EXIT_FAILED
    rel = extended_relation(s)
    rep = verify_relation(rel, args.max_tuples)
    ok = rep.identity_holds
    out.data(algebra=str(s.alg), snake=s.to_json(), prime=True, relation=rel.to_json(),
             report=rep.to_json())
    out.text(f"top {rel.top} in {s.alg}")
    for name, part in rel.participants().items():
        out.text(f"  {name}: {part if len(part) else '(empty)'}")
    out.text(f"dims {rep.dims_line()}")
    out.text(f"identity {_flag(rep.identity_holds)}  L*R catalog {_flag(rep.lhs_catalog_ok)}  "
             f"T*B catalog {_flag(rep.rhs1_catalog_ok)}  X*Y special {_flag(rep.xy_special)}  "
             f"heights {_flag(rep.heights_ok)}")
    for note in rep.notes:
        out.text(f"note: {note}")
    if args.certificate:
        certs = [exclusion_certificate(rel, R, args.max_tuples) for R in range(2, len(s))]
        out.data(certificates=[c.to_json() for c in certs])
        for c in certs:
            out.text(f"R={c.R}: n = {c.n}, witness {c.witness} absent {_flag(c.absent)}, "
                     f"truncation certificate {_flag(c.thmA.verdict)}")
        ok = ok and all(c.ok for c in certs)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_verify_family(args, out: Output) -> int:
    from .tsystem import Family, family_instance, verify_relation

    try:
        family = Family(args.family)
    except ValueError:
        raise InputError(f"unknown family {args.family!r}; choose from "
                         + ", ".join(f.value for f in Family)) from None
    params = _json_arg(args.params, "--params")
    if not isinstance(params, dict):
        raise InputError("--params must be a JSON object")
    rel = family_instance(family, parse_algebra(args.algebra), params)
    rep = verify_relation(rel, args.max_tuples)
    out.data(family=family.value, params=params, relation=rel.to_json(), report=rep.to_json())
    out.text(f"{family.value} {params} in {rel.alg}: top {rel.top}")
    out.text("participants match the closed forms")
    out.text(f"dims {rep.dims_line()}  identity {_flag(rep.identity_holds)}")
    return EXIT_OK if rep.identity_holds else EXIT_FAILED


def cmd_neighbours(args, out: Output) -> int:
    s = _snake(args)
    pair = neighbour_snakes(s)
    out.data(algebra=str(s.alg), snake=s.to_json(), X=pair.x.to_json(), Y=pair.y.to_json())
    out.text(f"X: {pair.x if len(pair.x) else '(empty)'}")
    out.text(f"Y: {pair.y if len(pair.y) else '(empty)'}")
    return EXIT_OK


def cmd_factorize(args, out: Output) -> int:
    alg = parse_algebra(args.algebra)
    num, den = parse_monomial(args.num), parse_monomial(args.den)
    f = a_factorize(num, den, alg)
    out.data(algebra=str(alg), num=num.to_json(), den=den.to_json(),
             factors=[[i, k, e] for (i, k), e in f.items()])
    body = "".join(f"A_{{{i},{k}}}" + ("" if e == 1 else f"^{{{e}}}") for (i, k), e in f.items())
    out.text(f"{num} / {den} = {body or '1'}")
    return EXIT_OK


def cmd_b2_decompose(args, out: Output) -> int:
    from .b2restrict import wq_decompose, wq_expected, wq_snake

    s = wq_snake(args.m, args.mid, args.n)
    got = wq_decompose(args.m, args.mid, args.n, args.max_tuples)
    want = wq_expected(args.m, args.mid, args.n)
    ok = got == want
    out.data(snake=s.to_json(), decomposition=[[w.a, w.b, c] for w, c in got.items()],
             matches_closed_form=ok)
    out.text(f"snake {s}")
    out.text(" + ".join(f"{c}*V{w}" if c > 1 else f"V{w}" for w, c in got.items()) or "0")
    out.text(f"matches closed form: {_flag(ok)}")
    return EXIT_OK if ok else EXIT_FAILED


def cmd_b2_qsystem(args, out: Output) -> int:
    from .b2restrict import verify_b2_qsystem

    rep = verify_b2_qsystem(args.max, args.max_tuples)
    out.data(**rep.to_json())
    for c in rep.checks:
        out.text(f"relation {c.relation} {c.params}: {c.dims[0]} = {c.dims[1]} + {c.dims[2]}  "
                 f"{'ok' if c.holds else 'FAILED'}")
    out.text(f"{sum(c.holds for c in rep.checks)}/{len(rep.checks)} hold")
    return EXIT_OK if rep.ok else EXIT_FAILED


def _read_input(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg}") from None


def cmd_thma_verify(args, out: Output) -> int:
    from .sl2core import TruncationRegion, thmA_verify

    obj = _read_input(args.input)
    try:
        raw_alg = obj["algebra"]
        alg = parse_algebra(raw_alg) if isinstance(raw_alg, str) else algebra_from_json(raw_alg)
        m_plus = _monomial(obj["m_plus"])
        members = [_monomial(m) for m in obj["M"]]
        region = TruncationRegion.of(tuple(p) for p in obj.get("U", []))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InputError):
            raise
        raise InputError(f"bad input document: {exc}") from None
    cert = thmA_verify(alg, m_plus, members, region)
    out.data(**cert.to_json())
    out.text(f"(i) {_flag(cert.cond_i)}  (ii) {_flag(cert.cond_ii)}  (iii) {_flag(cert.cond_iii)}  "
             f"(iv) {_flag(cert.cond_iv)}")
    for f in cert.failures:
        out.text(f"  {f}")
    out.text(f"verdict {_flag(cert.verdict)}")
    return EXIT_OK if cert.verdict else EXIT_FAILED


# -- diagrams ---------------------------------------------------------------------------

GLYPHS = {"snake": " o ", "x": " ^ ", "y": "<> ", "path": " * ", "blank": " . "}


def _diagram_layers(s: Snake, neighbours: bool, paths: bool):
    alg = s.alg
    layers = {"snake": [iota(alg, i, k) for i, k in s.points]}
    if neighbours and len(s) >= 2 and s.prime:
        pair = neighbour_snakes(s)
        layers["x"] = [iota(alg, i, k) for i, k in pair.x.points]
        layers["y"] = [iota(alg, i, k) for i, k in pair.y.points]
    polylines = []
    if paths:
        for i, k in s.points:
            polylines.append([(x, b + 0.25 * e) for x, b, e in highest_path(alg, i, k).points])
    return layers, polylines


def render_ascii(alg: Algebra, layers: dict, polylines: list) -> str:
    cells: dict[tuple[int, int], str] = {}
    for line in polylines:
        for x, y in line:
            if y == int(y):
                cells[(x, int(y))] = GLYPHS["path"]
    for name in ("y", "x", "snake"):
        for pt in layers.get(name, []):
            cells[pt] = GLYPHS[name]
    width = alg.width
    header = "    " + "".join(f"{x:^3d}" for x in range(width))
    if not cells:
        return header
    ys = [y for _, y in cells]
    rows = [header]
    for y in range(min(ys), max(ys) + 1):
        rows.append(f"{y:3d} " + "".join(cells.get((x, y), GLYPHS["blank"]) for x in range(width)))
    return "\n".join(rows)


def render_tikz(alg: Algebra, layers: dict, polylines: list) -> str:
    style = {
        "snake": "circle,fill=black,inner sep=1.6pt",
        "x": "regular polygon,regular polygon sides=3,draw,inner sep=1.2pt",
        "y": "diamond,draw,inner sep=1.4pt",
    }
    out = [
        r"\documentclass[tikz,border=4pt]{standalone}",
        r"\usetikzlibrary{shapes.geometric}",
        r"\begin{document}",
        r"\begin{tikzpicture}[x=0.6cm,y=-0.3cm]",
    ]
    ys = [y for pts in layers.values() for _, y in pts] + [y for ln in polylines for _, y in ln]
    if ys:
        lo, hi = int(min(ys)) - 1, int(max(ys)) + 1
        out.append(rf"\draw[gray!30,very thin] (0,{lo}) grid ({alg.width - 1},{hi});")
    for line in polylines:
        coords = " -- ".join(f"({x:g},{y:g})" for x, y in line)
        out.append(rf"\draw[thick] {coords};")
    for name in ("snake", "x", "y"):
        for x, y in layers.get(name, []):
            out.append(rf"\node[{style[name]}] at ({x},{y}) {{}};")
    out += [r"\end{tikzpicture}", r"\end{document}"]
    return "\n".join(out)


def cmd_diagram(args, out: Output) -> int:
    s = _snake(args)
    layers, polylines = _diagram_layers(s, args.neighbours, args.paths)
    render = render_tikz if args.format == "tikz" else render_ascii
    picture = render(s.alg, layers, polylines)
    out.data(algebra=str(s.alg), format=args.format, diagram=picture,
             points={k: [list(p) for p in v] for k, v in layers.items()})
    out.text(picture)
    return EXIT_OK


def cmd_selftest(args, out: Output) -> int:
    from .acceptance import CRITERIA, run_criterion

    numbers = args.only or [n for n, _, _ in CRITERIA]
    for n in numbers:
        if not 1 <= n <= len(CRITERIA):
            raise InputError(f"no criterion {n}")
    results = [run_criterion(n) for n in numbers]
    out.data(results=[r.to_json() for r in results], passed=all(r.passed for r in results))
    for r in results:
        out.text(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAILED


# -- parser -----------------------------------------------------------------------------


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v == 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--max-tuples", type=_positive, default=None,
                        help="cap on enumerated path tuples (default: EXTSYS_MAX_TUPLES or 10^7)")
    snake = argparse.ArgumentParser(add_help=False)
    snake.add_argument("--algebra", required=True, help="A<N> or B<N>")
    snake.add_argument("--snake", required=True, help='points, e.g. "(1,0),(2,5),(1,10)"')

    p = argparse.ArgumentParser(prog="extsys", description="Snake modules and their three-term relations.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, parents, help_: str):
        sp = sub.add_parser(name, parents=[common, *parents], help=help_)
        sp.set_defaults(func=fn)
        return sp

    add("qchar", cmd_qchar, [snake], "q-character of a snake module")
    sp = add("verify-tsys", cmd_verify_tsys, [snake], "check the relation with this snake on top")
    sp.add_argument("--certificate", action="store_true", help="add exclusion certificates")
    sp = add("verify-family", cmd_verify_family, [], "build and check a family relation")
    sp.add_argument("--family", required=True)
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--params", required=True, help='JSON object, e.g. {"i":1,"k":0,"m":2}')
    add("neighbours", cmd_neighbours, [snake], "neighbouring snakes X and Y")
    sp = add("factorize", cmd_factorize, [], "write num/den as a product of A-variables")
    sp.add_argument("--algebra", required=True)
    sp.add_argument("--num", required=True, help='e.g. "Y_{1,2}^{-1}Y_{2,1}"')
    sp.add_argument("--den", default="1")
    sp = add("b2-decompose", cmd_b2_decompose, [], "restrict a B2 snake module and decompose it")
    sp.add_argument("--m", type=_nonneg, required=True)
    sp.add_argument("--mid", type=_nonneg, required=True)
    sp.add_argument("--n", type=_nonneg, default=0)
    sp = add("b2-qsystem", cmd_b2_qsystem, [], "check the B2 Q-system")
    sp.add_argument("--max", type=_nonneg, default=2)
    sp = add("thma-verify", cmd_thma_verify, [], "check the truncation-certificate hypotheses for a candidate set")
    sp.add_argument("--input", required=True, help="JSON file with algebra, m_plus, M, U ('-' for stdin)")
    sp = add("diagram", cmd_diagram, [snake], "draw a snake in the plane")
    sp.add_argument("--format", choices=("ascii", "tikz"), default="ascii")
    sp.add_argument("--neighbours", action="store_true")
    sp.add_argument("--paths", action="store_true", help="draw the highest path at each point")
    sp = add("selftest", cmd_selftest, [], "run the acceptance suite")
    sp.add_argument("--only", type=_positive, action="append", help="criterion number (repeatable)")
    return p


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    out = Output(args.json)
    try:
        code = args.func(args, out)
    except TooLarge as exc:
        stderr.write(f"extsys: too large: {exc}\n")
        return EXIT_TOO_LARGE
    except InputError as exc:
        stderr.write(f"extsys: invalid input: {exc}\n")
        return EXIT_INPUT
    except ExtsysError as exc:
        stderr.write(f"extsys: {type(exc).__name__}: {exc}\n")
        return EXIT_FAILED
    except RecursionError:
        stderr.write("extsys: input too deep to process\n")
        return EXIT_TOO_LARGE
    except Exception as exc:  # never crash with a traceback
        stderr.write(f"extsys: internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_FAILED
    out.flush(stdout)
    return code


def main() -> None:
    sys.exit(run())
