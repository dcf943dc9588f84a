"""Command-line front end.

Exit status: 0 on success, 1 when a verification reports a failure, 2 on a
usage error (bad flags or malformed input).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import random
import sys
from dataclasses import dataclass
from typing import Sequence

from . import branching, fockcat, schurgen
from .akengine import AKAlgebra, star
from .combi import (
    Charge, default_bounds, enumerate_multipartitions, format_multipartition, format_node,
    parse_multipartition, size, std_count, to_json, weyl_dim,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

PERTURBATIONS = {
    "none": ({}, "balanced"),
    "drop-e-prefactor": ({"drop_e_prefactor": True}, "balanced"),
    "x-set-off-by-one": ({"x_set_off_by_one": True}, "balanced"),
    "classical-hecke": ({}, "classical"),
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    n: int | None = None
    r: int | None = None
    e: int | None = None
    charge: tuple[int, ...] | None = None
    m: tuple[int, ...] | None = None
    la: str | None = None
    i: int | None = None
    fmt: str = "text"
    out: str | None = None
    workers: int = 1
    seed: int = 0


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _workers_default() -> int:
    env = os.environ.get("CYCLOSCHUR_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return 1


def _common(p: argparse.ArgumentParser, *names: str) -> None:
    if "n" in names:
        p.add_argument("--n", type=int, required=True)
    if "r" in names:
        p.add_argument("--r", type=int, default=None)
    if "m" in names:
        p.add_argument("--m", type=_int_list, default=None, help="row bounds, e.g. 3,3")
    if "e" in names:
        p.add_argument("--e", type=int, default=None)
        p.add_argument("--charge", type=_int_list, default=None, help="multicharge, e.g. 0,1")
    if "la" in names:
        p.add_argument("--la", required=True, help='multipartition, e.g. "[[2],[1]]"')
    if "i" in names:
        p.add_argument("--i", type=int, default=None)
    p.add_argument("--format", dest="fmt", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out", default=None, help="write output to this file")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cycloschur",
                                 description="Cyclotomic q-Schur algebra computations.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="Weyl module dimensions and standard tableau counts")
    _common(p, "n", "r", "m")

    p = sub.add_parser("branch", help="restriction / induction factor lists")
    p.add_argument("direction", choices=("res", "ind"))
    p.add_argument("--costandard", action="store_true")
    _common(p, "la", "m", "e", "i")

    p = sub.add_parser("blocks", help="blocks of multipartitions by residue content")
    _common(p, "n", "r", "e")

    p = sub.add_parser("fock", help="Fock space operators")
    fsub = p.add_subparsers(dest="fock_command", required=True)
    q = fsub.add_parser("act", help="apply e_i or f_i to a basis vector")
    q.add_argument("--op", choices=("e", "f"), required=True)
    q.add_argument("--vector", required=True, help='multipartition, e.g. "[[],[]]"')
    _common(q, "i", "e", "m")
    q = fsub.add_parser("matrix", help="sparse matrix of e_i or f_i on degree n")
    q.add_argument("--op", choices=("e", "f"), required=True)
    _common(q, "n", "r", "i", "e", "m")
    q = fsub.add_parser("commutator", help="check [e_i,f_j] for all i,j up to degree n")
    _common(q, "n", "r", "e")
    q = fsub.add_parser("categorify", help="compare i-branching with the Fock action up to degree n")
    _common(q, "n", "r", "e")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=("presentation", "theta", "iota", "dictionary",
                                     "dimensions", "associativity"))
    p.add_argument("--l", dest="l_max", type=int, default=1, help="largest divided power (theta)")
    p.add_argument("--perturb", choices=sorted(PERTURBATIONS), default="none",
                   help="deliberately wrong generator data (negative control)")
    p.add_argument("--samples", type=int, default=50, help="random triples (associativity)")
    p.add_argument("--show", choices=("failures", "all"), default="failures")
    _common(p, "n", "r", "m")
    return ap


# ---------------------------------------------------------------------------

def _charge(args, r: int | None) -> Charge | None:
    if args.e is None and args.charge is None:
        return None
    if args.e is None:
        raise UsageError("--charge needs --e")
    s = args.charge if args.charge is not None else (0,) * (r or 1)
    if r is not None and len(s) != r:
        raise UsageError(f"--charge has {len(s)} entries but r = {r}")
    try:
        return Charge(s, args.e)
    except ValueError as exc:
        raise UsageError(str(exc))


def _require_charge(args, r: int) -> Charge:
    ch = _charge(args, r)
    if ch is None:
        raise UsageError("this command needs --e (and optionally --charge)")
    return ch


def _bounds(args, n: int, r: int) -> tuple[int, ...]:
    m = args.m if args.m is not None else default_bounds(n, r)
    if len(m) != r:
        raise UsageError(f"--m has {len(m)} entries but r = {r}")
    if any(v < 1 for v in m):
        raise UsageError("--m entries must be positive")
    return tuple(m)


def _parse_la(text: str):
    try:
        return parse_multipartition(text)
    except ValueError as exc:
        raise UsageError(str(exc))


def _r(args, default: int = 1) -> int:
    r = args.r if args.r is not None else default
    if r < 1:
        raise UsageError("--r must be positive")
    return r


def _table(rows: list[list], header: list[str], fmt: str, footer: str | None = None) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(x).ljust(wd) for x, wd in zip(row, widths)).rstrip()
             for row in [header] + rows]
    if footer:
        lines.append(footer)
    return "\n".join(lines) + "\n"


def cmd_dims(args) -> tuple[str, int]:
    n, r = args.n, _r(args)
    if n < 0:
        raise UsageError("--n must be non-negative")
    m = _bounds(args, n, r)
    las = enumerate_multipartitions(n, r)
    rows = [[format_multipartition(la), weyl_dim(la, m), std_count(la)] for la in las]
    total = sum(std_count(la) ** 2 for la in las)
    expected = r ** n * math.factorial(n)
    if args.fmt == "json":
        data = {"n": n, "r": r, "m": list(m),
                "rows": [{"lambda": to_json(la), "dim": d, "std": s} for la, (_, d, s) in zip(las, rows)],
                "sum_std_squared": total, "r_n_factorial": expected}
        return json.dumps(data, indent=2) + "\n", EXIT_OK
    footer = f"sum |Std|^2 = {total}, r^n n! = {expected}"
    return _table(rows, ["lambda", "dim", "std"], args.fmt, None if args.fmt == "csv" else footer), EXIT_OK


def _report_text(rep: branching.FiltrationReport) -> str:
    head = f"{rep.direction} {format_multipartition(rep.source)} (bounds {','.join(map(str, rep.bounds))})"
    if rep.refined is not None:
        head += f" i={rep.refined}"
    if rep.module != "standard":
        head += f" [{rep.module}]"
    lines = [head]
    for j, f in enumerate(rep.factors, start=1):
        res = "" if f.residue is None else f"  res {f.residue}"
        lines.append(f"{j}. {format_node(f.node)}  {format_multipartition(f.shape)}  dim {f.dim}{res}")
    return "\n".join(lines) + "\n"


def cmd_branch(args) -> tuple[str, int]:
    la = _parse_la(args.la)
    r = len(la)
    if args.fmt == "csv":
        raise UsageError("branch reports are available as text or json")
    charge = _charge(args, r)
    n_big = size(la) if args.direction == "res" else size(la) + 1
    m = tuple(args.m) if args.m is not None else branching.level_bounds(n_big, r)
    if len(m) != r:
        raise UsageError(f"--m has {len(m)} entries but the multipartition has {r} components")
    warn = ""
    if any(mk < n_big for mk in m):
        warn = f"warning: bounds {m} are below {n_big}; factor lists may be truncated\n"
    try:
        if args.direction == "res":
            if size(la) == 0:
                raise UsageError("cannot restrict the empty multipartition")
            if args.i is not None:
                if charge is None:
                    raise UsageError("--i needs --e")
                rep = branching.i_res_filtration(la, args.i, charge, m)
            else:
                rep = branching.res_filtration(la, m, charge, args.costandard)
        else:
            if args.i is not None:
                if charge is None:
                    raise UsageError("--i needs --e")
                rep = branching.i_ind_filtration(la, args.i, charge, m)
            else:
                rep = branching.ind_filtration(la, m, charge)
    except ValueError as exc:
        raise UsageError(str(exc))
    if warn:
        sys.stderr.write(warn)
    if args.fmt == "json":
        return json.dumps(rep.to_json()) + "\n", EXIT_OK
    return _report_text(rep), EXIT_OK


def cmd_blocks(args) -> tuple[str, int]:
    r = _r(args)
    charge = _require_charge(args, r)
    table = fockcat.blocks(args.n, r, charge)
    if args.fmt == "json":
        return json.dumps(fockcat.blocks_to_json(table)) + "\n", EXIT_OK
    rows = [[",".join(map(str, key)), format_multipartition(la)] for key, las in table.items() for la in las]
    if args.fmt == "csv":
        return _table(rows, ["key", "lambda"], "csv"), EXIT_OK
    lines = [f"{len(table)} blocks"]
    for key, las in table.items():
        lines.append(f"({','.join(map(str, key))}): " + " ".join(format_multipartition(la) for la in las))
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_fock(args) -> tuple[str, int]:
    sub = args.fock_command
    if sub == "act":
        la = _parse_la(args.vector)
        r = len(la)
        charge = _require_charge(args, r)
        if args.i is None:
            raise UsageError("--i is required")
        v = fockcat.FockVector.basis(la)
        img = (fockcat.e_apply(args.i, v, charge) if args.op == "e"
               else fockcat.f_apply(args.i, v, charge, args.m))
        if args.fmt == "json":
            return json.dumps(img.to_json()) + "\n", EXIT_OK
        rows = [[format_multipartition(mu), c] for mu, c in sorted(img.coeffs.items())]
        if args.fmt == "csv":
            return _table(rows, ["lambda", "coeff"], "csv"), EXIT_OK
        return (repr(img) + "\n"), EXIT_OK
    r = _r(args)
    charge = _require_charge(args, r)
    if sub == "matrix":
        if args.i is None:
            raise UsageError("--i is required")
        trip = fockcat.operator_matrix(args.op, args.i, args.n, r, charge, args.m)
        if args.fmt == "json":
            return fockcat.matrix_to_json(trip) + "\n", EXIT_OK
        if args.fmt == "csv":
            return fockcat.matrix_to_csv(trip), EXIT_OK
        rows = [[format_multipartition(a), format_multipartition(b), c] for a, b, c in trip]
        return _table(rows, ["row", "col", "value"], "text"), EXIT_OK
    if sub == "commutator":
        bad = [(i, j, la) for i in range(charge.e) for j in range(charge.e)
               for la in fockcat.commutator_failures(i, j, args.n, r, charge)]
        return _verdict("commutator", bad, args.fmt)
    bad = list(fockcat.categorification_failures(args.n, r, charge))
    return _verdict("categorification", bad, args.fmt)


def _verdict(name: str, bad: list, fmt: str) -> tuple[str, int]:
    status = "FAIL" if bad else "PASS"
    if fmt == "json":
        return json.dumps({"check": name, "status": status,
                           "failures": [repr(b) for b in bad]}) + "\n", EXIT_FAIL if bad else EXIT_OK
    lines = [f"{name}: {status}"] + [f"  {b!r}" for b in bad[:20]]
    return "\n".join(lines) + "\n", EXIT_FAIL if bad else EXIT_OK


def _reports_out(reports: list[schurgen.RelationReport], fmt: str, show: str) -> tuple[str, int]:
    summ = schurgen.summarize(reports)
    code = EXIT_FAIL if summ["failures"] else EXIT_OK
    if fmt == "json":
        return json.dumps({"summary": summ, "reports": [r.to_json() for r in reports]}) + "\n", code
    if fmt == "csv":
        raise UsageError("verification reports are available as text or json")
    lines = []
    for rep in reports:
        if show == "all" or not rep.passed:
            extra = " (vacuous)" if rep.vacuous else ""
            lines.append(f"{rep.status} {rep.relation} {json.dumps(rep.params)}{extra}")
    lines.append(f"{summ['instances']} instances, {summ['failures']} failures, {summ['vacuous']} vacuous")
    return "\n".join(lines) + "\n", code


def cmd_verify(args) -> tuple[str, int]:
    r = _r(args)
    n = args.n
    if n < 0:
        raise UsageError("--n must be non-negative")
    kw, norm = PERTURBATIONS[args.perturb]
    pert = schurgen.Perturbation(**kw)
    suite = args.suite
    try:
        if suite == "presentation":
            reps = schurgen.verify_presentation(n, r, _bounds(args, n, r), normalization=norm,
                                                perturbation=pert, workers=args.workers)
        elif suite == "theta":
            reps = schurgen.verify_theta(n, r, _bounds(args, n, r), args.l_max,
                                         normalization=norm, perturbation=pert)
        elif suite == "iota":
            m = _bounds(args, n + 1, r) if args.m is not None else None
            reps = schurgen.verify_iota(n, r, m, normalization=norm, perturbation=pert)
        elif suite == "dictionary":
            reps = schurgen.verify_dictionary(n, r, _bounds(args, n, r),
                                              normalization=norm, perturbation=pert)
        elif suite == "dimensions":
            return _dimension_suite(n, r, args.fmt)
        else:
            return _associativity(n, r, norm, args.samples, args.seed, args.fmt)
    except ValueError as exc:
        raise UsageError(str(exc))
    return _reports_out(reps, args.fmt, args.show)


def _dimension_suite(n_max: int, r: int, fmt: str) -> tuple[str, int]:
    bad = []
    for n in range(n_max + 1):
        total = sum(std_count(la) ** 2 for la in enumerate_multipartitions(n, r))
        if total != r ** n * math.factorial(n):
            bad.append(("std-squares", n))
        if n >= 1:
            bad.extend(("res-dim", la) for la in enumerate_multipartitions(n, r)
                       if not branching.res_dim_check(la))
    bad.extend(("specht-induction", mu) for mu in branching.specht_induction_failures(n_max, r))
    return _verdict("dimensions", bad, fmt)


def _associativity(n: int, r: int, norm: str, samples: int, seed: int, fmt: str) -> tuple[str, int]:
    H = AKAlgebra(n, r, norm)
    rng = random.Random(seed)
    words = list(H.basis())
    bad = []
    for t in range(samples):
        x, y, z = (H.element_word(*rng.choice(words)) for _ in range(3))
        if (x * y) * z != x * (y * z) or star(x * y) != star(y) * star(x):
            bad.append(t)
    return _verdict("associativity", bad, fmt)


COMMANDS = {"dims": cmd_dims, "branch": cmd_branch, "blocks": cmd_blocks,
            "fock": cmd_fock, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    if args.workers is None:
        args.workers = _workers_default()
    try:
        text, code = COMMANDS[args.command](args)
    except UsageError as exc:
        sys.stderr.write(f"cycloschur: error: {exc}\n")
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code
