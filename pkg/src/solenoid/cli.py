"""Command line interface: ``solenoid <command> ...``.

Exit status is 0 on success, 1 on a domain error (bad rational, non-prime,
malformed spec, failed self test) and 2 on a usage error.  Negative
positional rationals need ``--`` first, as in ``solenoid frac -p 5 -- -3/10``.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, localcontext

from solenoid import adele, extension, numberfield
from solenoid.adele import adele_json, class_from_json
from solenoid.exact_arith import decompose, format_rat, frac_p, parse_rat
from solenoid.selftest import run_suites
from solenoid.syntax import parse_class, parse_rigid


def rigid_json(e: extension.RigidExt) -> dict:
    obj = adele_json(e.sigma, e.a)
    obj["sigma"] = obj.pop("real")
    return obj


def rigid_from_json(obj) -> extension.RigidExt:
    if isinstance(obj, str):
        obj = json.loads(obj)
    fin = adele.fa_make(
        parse_rat(obj.get("tail", "0")),
        [(int(p), parse_rat(r)) for p, r in obj.get("overrides", {}).items()],
    )
    return extension.RigidExt.of(fin, parse_rat(obj.get("sigma", "0")))


def read_rigid(text: str) -> extension.RigidExt:
    if text.lstrip().startswith("{"):
        return rigid_from_json(text)
    return parse_rigid(text)


def read_class(text: str) -> adele.AdeleClass:
    if text.lstrip().startswith("{"):
        return class_from_json(text)
    return parse_class(text)


def _prime(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid prime {text!r}") from None


# commands return (text, json-able object)


def cmd_frac(args):
    q = parse_rat(args.q)
    r = frac_p(q, args.p).value
    return format_rat(r), {"p": str(args.p), "q": format_rat(q), "frac": format_rat(r)}


def cmd_decompose(args):
    q = parse_rat(args.q)
    u, v = decompose(q, args.p)
    return f"u={format_rat(u)} v={format_rat(v)}", {"u": format_rat(u), "v": format_rat(v)}


def cmd_delta(args):
    e = read_rigid(args.ext)
    val = extension.delta_bar(e, parse_rat(args.q)).value
    return format_rat(val), {"delta_bar": format_rat(val)}


def cmd_sum(args):
    e0, e1 = read_rigid(args.e0), read_rigid(args.e1)
    total = extension.baer_structural(e0, e1) if args.structural else extension.baer_sum(e0, e1)
    return str(total), rigid_json(total)


def cmd_congruent(args):
    e0, e1 = read_rigid(args.e0), read_rigid(args.e1)
    if args.rigid:
        w = extension.congruent_z0(e0, e1)
    else:
        w = extension.congruent_z(e0.pres, e1.pres)
    if w is None:
        return "no witness", {"witness": None}
    return str(w), {"witness": format_rat(w.d)}


def cmd_solenoid(args):
    x = extension.to_solenoid(read_rigid(args.ext))
    return str(x), x.to_json()


def cmd_class_add(args):
    x = read_class(args.x) + read_class(args.y)
    return str(x), x.to_json()


def cmd_class_eq(args):
    same = adele.class_eq(read_class(args.x), read_class(args.y))
    return ("true" if same else "false"), {"equal": same}


def cmd_field(args):
    K = numberfield.make_field(args.d)
    gram, det = numberfield.trace_gram(K)
    c, r = numberfield.haar_mass(K)
    with localcontext() as ctx:
        ctx.prec = 12
        approx = str(c * Decimal(r).sqrt())
    rows = {
        "d": str(K.d),
        "basis": K.basis_kind,
        "disc": str(K.disc),
        "trace_gram": "[[{},{}],[{},{}]]".format(*gram[0], *gram[1]),
        "trace_gram_det": str(det),
        "haar_mass_squared": str(numberfield.haar_mass_squared(K)),
        "haar_mass": numberfield.format_radical(c, r),
        "haar_mass_approx": approx,
    }
    topics = {
        "haar": ["haar_mass_squared"],
        "mass": ["haar_mass", "haar_mass_approx"],
        "disc": ["disc"],
        "gram": ["trace_gram", "trace_gram_det"],
        "all": list(rows),
    }
    keys = topics[args.topic]
    lines = []
    for k in keys:
        line = f"{k}={rows[k]}"
        if k == "haar_mass_approx":
            line += "  (decimal approximation)"
        lines.append(line)
    obj = {"d": rows["d"], "disc": rows["disc"], "haar_mass_squared": rows["haar_mass_squared"]}
    obj.update({k: rows[k] for k in keys})
    return "\n".join(lines), obj


def cmd_selftest(args):
    rows = run_suites(args.seed, args.cases)
    lines, failed = [], 0
    for name, passed, total, err in rows:
        status = "PASS" if passed == total else "FAIL"
        failed += total - passed
        line = f"{status} {name} {passed}/{total}"
        if err:
            line += f"  first failure: {err}"
        lines.append(line)
    total = sum(r[2] for r in rows)
    lines.append(f"selftest seed={args.seed}: {len(rows)} suites, {total} cases, {failed} failures")
    obj = {
        "seed": str(args.seed),
        "suites": [{"name": n, "passed": str(p), "cases": str(t)} for n, p, t, _ in rows],
        "failures": str(failed),
    }
    if failed:
        args.exit_code = 1
    return "\n".join(lines), obj


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")

    parser = argparse.ArgumentParser(prog="solenoid", parents=[common], description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=fn)
        return p

    p = add("frac", cmd_frac, "p-adic fractional part of a rational")
    p.add_argument("-p", type=_prime, required=True)
    p.add_argument("q")

    p = add("decompose", cmd_decompose, "write q = u - v with u p-integral, v in Z[1/p]")
    p.add_argument("-p", type=_prime, required=True)
    p.add_argument("q")

    p = add("delta", cmd_delta, "evaluate the character of a rigidified extension")
    p.add_argument("--ext", required=True)
    p.add_argument("--q", required=True)

    p = add("sum", cmd_sum, "Baer sum of two rigidified extensions")
    p.add_argument("--e0", required=True)
    p.add_argument("--e1", required=True)
    p.add_argument("--structural", action="store_true", help="build through the pullback and quotient")

    p = add("congruent", cmd_congruent, "decide congruence and print a witness")
    p.add_argument("--e0", required=True)
    p.add_argument("--e1", required=True)
    p.add_argument("--rigid", action="store_true", help="require compatibility with splittings")

    p = add("solenoid", cmd_solenoid, "canonical solenoid point of a rigidified extension")
    p.add_argument("--ext", required=True)

    p = add("class-add", cmd_class_add, "add two solenoid classes")
    p.add_argument("x")
    p.add_argument("y")

    p = add("class-eq", cmd_class_eq, "compare two solenoid classes")
    p.add_argument("x")
    p.add_argument("y")

    p = add("field", cmd_field, "invariants of Q(sqrt d)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("topic", nargs="?", default="all", choices=["all", "haar", "mass", "disc", "gram"])

    p = add("selftest", cmd_selftest, "run the invariant suites")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--cases", type=int, default=100)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.exit_code = 0
    try:
        text, obj = args.func(args)
    except ValueError as exc:
        print(f"solenoid {args.command}: error: {exc}", file=stderr)
        return 1
    if getattr(args, "json", False):
        stdout.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        stdout.write(text + "\n")
    return args.exit_code


def main():
    sys.exit(run())

