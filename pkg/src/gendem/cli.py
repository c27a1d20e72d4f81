"""Command line front end.

Subcommands: enumerate, omega, polytope, points, hull, verify.  Exit codes:
0 success, 1 invalid input, 2 a verification check failed, 3 size cap hit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from .crystal import DEFAULT_CAP, CapExceeded
from .gendem import (
    apply_transform,
    check_word_m,
    enumerate_gendem,
    omega_prime,
    transform_matrices,
)
from .polytope import (
    certify_vertex,
    convex_hull,
    dilation_sample,
    lattice_points,
    psi_eval,
    rat,
    verify,
)
from .rootsys import RootSystemError, parse_type, rootsystem_from_json, rootsystem_to_json

SCHEMA = "gendem/1"

EXIT_OK, EXIT_INVALID, EXIT_FAILED, EXIT_CAP = 0, 1, 2, 3


def parse_ints(text: str, what: str) -> List[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t != ""]
    except ValueError:
        raise RootSystemError(f"cannot parse {what} {text!r}") from None


def parse_rats(text: str) -> List[Fraction]:
    try:
        return [Fraction(t) for t in text.replace(" ", "").split(",") if t != ""]
    except (ValueError, ZeroDivisionError):
        raise RootSystemError(f"cannot parse point {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group(required=True)
    src.add_argument("--type", dest="rtype", help="root system type such as A2, C2, G2")
    src.add_argument("--cartan-file", help="JSON file with a 'cartan' matrix or a 'type'")
    common.add_argument("--word", required=True, help="comma separated letters, 1-based")
    common.add_argument("--m", required=True, help="comma separated multidegree")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", help="write here instead of stdout")
    common.add_argument("--cap", type=int, help="element cap (default from GENDEM_CAP or 10^6)")

    p = argparse.ArgumentParser(prog="gendem", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("enumerate", parents=[common], help="elements of B_{i,m} with wt, Omega, Omega'")
    sub.add_parser("omega", parents=[common], help="Omega-image and the transform matrices A, B")
    sp = sub.add_parser("polytope", parents=[common], help="evaluate the PL system at a point")
    sp.add_argument("--point", required=True, help="comma separated rationals, e.g. 0,1,1/2")
    sp = sub.add_parser("points", parents=[common], help="lattice points of Delta_{i,km}")
    sp.add_argument("--dilation", type=int, default=1)
    sp = sub.add_parser("hull", parents=[common], help="convex hull of the dilation sample")
    sp.add_argument("--depth", type=int, default=2)
    sp = sub.add_parser("verify", parents=[common], help="cross-check crystal and polytope")
    sp.add_argument("--depth", type=int, default=2)
    return p


def resolve_cap(arg: Optional[int]) -> int:
    if arg is not None:
        cap = arg
    elif os.environ.get("GENDEM_CAP"):
        try:
            cap = int(os.environ["GENDEM_CAP"])
        except ValueError:
            raise RootSystemError("GENDEM_CAP must be an integer") from None
    else:
        cap = DEFAULT_CAP
    if cap < 1:
        raise RootSystemError("cap must be positive")
    return cap


def load_rootsystem(args):
    if args.rtype:
        return parse_type(args.rtype)
    try:
        with open(args.cartan_file) as fh:
            return rootsystem_from_json(json.load(fh))
    except (OSError, json.JSONDecodeError) as exc:
        raise RootSystemError(f"cannot read Cartan file: {exc}") from None


def _table(header: Sequence[str], rows: Sequence[Sequence], fmt: str) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    lines = ["\t".join(header)] + ["\t".join(str(x) for x in row) for row in rows]
    return "\n".join(lines) + "\n"


def _vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def cmd_enumerate(cd, word, m, args, cap):
    g = enumerate_gendem(cd, word, m, cap=cap)
    rows = []
    for idx, a in enumerate(g.omega_image()):
        b = g.by_omega[a]
        rows.append({"id": idx, "wt": list(b.wt), "omega": list(a),
                     "omega_prime": list(omega_prime(cd, word, b)), "factors": b.to_json()})
    if args.format == "json":
        return {"size": len(rows), "elements": rows}, EXIT_OK
    table = [(r["id"], _vec(r["wt"]), _vec(r["omega"]), _vec(r["omega_prime"])) for r in rows]
    return _table(("id", "wt", "omega", "omega_prime"), table, args.format), EXIT_OK


def cmd_omega(cd, word, m, args, cap):
    g = enumerate_gendem(cd, word, m, cap=cap)
    A, B = transform_matrices(cd, word)
    image = g.omega_image()
    bad = [a for a in image if apply_transform(A, B, omega_prime(cd, word, g.by_omega[a]), m) != a]
    if args.format == "json":
        out = {"size": len(image), "omega_image": [list(a) for a in image],
               "A": [list(r) for r in A], "B": [list(r) for r in B], "transform_ok": not bad}
        return out, EXIT_OK if not bad else EXIT_FAILED
    header = tuple(f"a{k + 1}" for k in range(len(word)))
    return _table(header, image, args.format), EXIT_OK if not bad else EXIT_FAILED


def cmd_polytope(cd, word, m, args, cap):
    a = parse_rats(args.point)
    rep = psi_eval(cd, word, m, a)
    out = rep.to_json()
    out["point"] = [rat(x) for x in a]
    out["certified_vertex"] = certify_vertex(cd, word, m, a)
    if args.format == "json":
        return out, EXIT_OK
    rows = [("S", rep.verdict_S), ("ii", all(rep.verdict_ii)), ("Delta", rep.verdict_Delta),
            ("certified_vertex", out["certified_vertex"])]
    rows += [(f"psi[{j},{k}]", v) for j, k, v in out["psi"]]
    return _table(("key", "value"), rows, args.format), EXIT_OK


def cmd_points(cd, word, m, args, cap):
    if args.dilation < 1:
        raise RootSystemError("dilation must be at least 1")
    pts = lattice_points(cd, word, m, args.dilation)
    if args.format == "json":
        return {"dilation": args.dilation, "count": len(pts), "points": [list(p) for p in pts]}, EXIT_OK
    header = tuple(f"a{k + 1}" for k in range(len(word)))
    return _table(header, pts, args.format), EXIT_OK


def cmd_hull(cd, word, m, args, cap):
    if args.depth < 1:
        raise RootSystemError("depth must be at least 1")
    sample = dilation_sample(cd, word, m, args.depth)
    h = convex_hull(sample)
    verts = [{"point": [rat(x) for x in v], "certified": certify_vertex(cd, word, m, v)} for v in h.vertices]
    if args.format == "json":
        return {"depth": args.depth, "sample_size": len(sample), "dim": h.dim,
                "vertices": verts,
                "facets": [{"normal": list(n), "offset": rat(o)} for n, o in h.facets],
                "equations": [{"normal": list(n), "offset": rat(o)} for n, o in h.equations]}, EXIT_OK
    rows = [("vertex", " ".join(str(x) for x in v), "certified" if c["certified"] else "")
            for v, c in zip(h.vertices, verts)]
    rows += [("facet", " ".join(str(x) for x in n), f"<= {o}") for n, o in h.facets]
    return _table(("kind", "data", "note"), rows, args.format), EXIT_OK


def cmd_verify(cd, word, m, args, cap):
    rep = verify(cd, word, m, args.depth, cap=cap)
    code = EXIT_OK if rep.passed else EXIT_FAILED
    if args.format == "json":
        return rep.to_json(), code
    rows = [(c.name, "PASS" if c.passed else "FAIL", c.checked,
             json.dumps(c.counterexample) if c.counterexample else "") for c in rep.checks]
    return _table(("check", "status", "cases", "counterexample"), rows, args.format), code


COMMANDS = {
    "enumerate": cmd_enumerate,
    "omega": cmd_omega,
    "polytope": cmd_polytope,
    "points": cmd_points,
    "hull": cmd_hull,
    "verify": cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    try:
        cap = resolve_cap(args.cap)
        cd = load_rootsystem(args)
        word, m = check_word_m(cd, parse_ints(args.word, "word"), parse_ints(args.m, "multidegree"))
        if getattr(args, "depth", 1) < 1:
            raise RootSystemError("depth must be at least 1")
        payload, code = COMMANDS[args.command](cd, word, m, args, cap)
    except CapExceeded as exc:
        print(f"gendem: {exc}", file=stderr)
        return EXIT_CAP
    except (RootSystemError, ValueError) as exc:
        print(f"gendem: {exc}", file=stderr)
        return EXIT_INVALID
    if isinstance(payload, dict):
        doc = {"schema": SCHEMA, "command": args.command, "rootsystem": rootsystem_to_json(cd),
               "word": list(word), "m": list(m)}
        doc.update(payload)
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = payload
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if code == EXIT_FAILED:
        print("gendem: verification failed", file=stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)


if __name__ == "__main__":
    raise SystemExit(main())
