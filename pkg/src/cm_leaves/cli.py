"""Command-line interface.

JSON (the default) is the stable output; ``--table`` is for people.
Exit codes: 0 success, 1 usage error, 2 domain error (a = 0, sum k != 0, ...).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from functools import lru_cache
from typing import Optional, Sequence

from . import affine_weyl as aw
from . import leaves as lv
from . import partitions as pt
from . import quiver_rep as qr
from .errors import DomainError
from .serialize import (
    format_rational,
    parse_int_vector,
    parse_rational,
    parse_residue_set,
    parse_vector,
)

VALUE_FLAGS = ("--l", "--n", "--a", "--k", "--theta", "--partition", "--J", "--d")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _rationals(v) -> list[str]:
    return [format_rational(x) for x in v]


def _partition(args) -> pt.Partition:
    if args.partition is None:
        raise UsageError("--partition is required")
    try:
        return pt.Partition.parse(args.partition)
    except ValueError as exc:
        raise UsageError(f"--partition: {exc}") from None


def _ell(args, allow_inf: bool = False):
    if args.l is None:
        raise UsageError("--l is required")
    if allow_inf and args.l.lower() in ("inf", "infinity"):
        return math.inf
    try:
        ell = int(args.l)
    except ValueError:
        raise UsageError(f"--l: expected a positive integer, got {args.l!r}") from None
    if ell < 1:
        raise UsageError(f"--l: expected a positive integer, got {ell}")
    return ell


def _int_flag(value, name: str) -> int:
    if value is None:
        raise UsageError(f"{name} is required")
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"{name}: expected an integer, got {value!r}") from None


def _vector(value, name: str, ell: int, integer: bool = False):
    try:
        v = parse_int_vector(value) if integer else parse_vector(value)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{name}: cannot parse {value!r}") from None
    if len(v) != ell:
        raise UsageError(f"{name}: expected {ell} entries, got {len(v)}")
    return v


def _residue_set(args, ell: int):
    if args.J is None:
        return None
    try:
        return parse_residue_set(args.J, ell)
    except ValueError:
        raise UsageError(f"--J: cannot parse {args.J!r}") from None


def _theta(args, ell: int, n: int = 0):
    """Parameters from ``--theta`` or from the CM coordinates ``--a``/``--k``."""
    if args.theta is not None:
        if args.a is not None or args.k is not None:
            raise UsageError("--theta cannot be combined with --a/--k")
        return _vector(args.theta, "--theta", ell), None
    if args.a is None or args.k is None:
        raise UsageError("give --theta or both --a and --k")
    try:
        a = parse_rational(args.a)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--a: cannot parse {args.a!r}") from None
    params = lv.CMParams(ell, n, a, _vector(args.k, "--k", ell))
    return lv.theta_from_cm(params), params


# -- subcommands ------------------------------------------------------------------

def cmd_residues(args) -> dict:
    ell = _ell(args, allow_inf=True)
    lam = _partition(args)
    res = pt.residue_vector(lam, ell)
    if ell == math.inf:
        return {"partition": str(lam), "l": "inf", "residues": {str(c): n for c, n in res.items()}}
    return {"partition": str(lam), "l": ell, "residues": list(res)}


def cmd_core(args) -> dict:
    ell = _ell(args)
    lam = _partition(args)
    core, r = pt.ell_core(lam, ell)
    return {"core": str(core), "r": r, "residues": list(pt.residue_vector(lam, ell))}


def cmd_jcore(args) -> dict:
    ell = _ell(args)
    lam = _partition(args)
    J = _residue_set(args, ell)
    if J is None:
        raise UsageError("--J is required")
    label = qr.semisimple_label(lam, J, ell)
    return {
        "partition": str(lam),
        "J": sorted(J),
        "jcore": str(label.core),
        "removed": list(label.residues),
        "dim_reg": list(label.dim_reg),
    }


def cmd_decompose(args) -> dict:
    ell = _ell(args)
    if args.d is None:
        raise UsageError("--d is required")
    d = _vector(args.d, "--d", ell, integer=True)
    dec = aw.decompose_dim(d)
    return {"l": ell, "d": list(d), "core": str(dec.core), "r": dec.r, "word": dec.word}


def _dim_vector(args, ell: int):
    if args.d is not None:
        return _vector(args.d, "--d", ell, integer=True)
    if args.n is not None:
        return (_int_flag(args.n, "--n"),) * ell
    raise UsageError("give --d or --n")


def cmd_standardize(args) -> dict:
    ell = _ell(args)
    d = _dim_vector(args, ell)
    theta, _ = _theta(args, ell, max(d[0], 0))
    std = aw.standardize(d, theta)
    dec = aw.decompose_dim(std.d)
    return {
        "l": ell,
        "d": list(d),
        "theta": _rationals(theta),
        "d_std": list(std.d),
        "theta_std": _rationals(std.theta),
        "word": std.word,
        "J": sorted(std.J),
        "core": str(dec.core),
        "r": dec.r,
    }


def _matrix_max_abs(m) -> str:
    entries = [abs(x) for row in qr.to_fractions(m) for x in row]
    return format_rational(max(entries, default=0))


def cmd_verify_rep(args) -> dict:
    ell = _ell(args)
    mu = _partition(args)
    theta, _ = _theta(args, ell, 0)
    _, rep = qr.build_fixed_point_rep(mu, theta, ell)
    defects = qr.moment_defect(rep, theta)
    vertices = [
        {"vertex": i, "zero": _matrix_max_abs(m) == "0", "max_abs": _matrix_max_abs(m)}
        for i, m in enumerate(defects)
    ]
    J = _residue_set(args, ell)
    if J is None:
        J = aw.zero_set(theta)
    standard = aw.verify_parabolic_stabilizer(theta, J)
    out = {
        "l": ell,
        "partition": str(mu),
        "theta": _rationals(theta),
        "dims": list(rep.dims),
        "hooks": [
            {"arm": h.arm, "leg": h.leg, "beta": format_rational(h.beta)}
            for h in qr.hook_data(mu, theta)
        ],
        "moment_defect": vertices,
        "moment_exact": all(v["zero"] for v in vertices),
        "J": sorted(J),
        "standard": standard,
        "simple": None,
        "witness": None,
    }
    if standard:
        report = qr.is_simple_framed(rep, J)
        out["simple"] = report.simple
        if report.witness is not None:
            w = report.witness
            out["witness"] = {"kind": w.kind, "vertex": w.vertex, "vector": _rationals(w.vector)}
    return out


def _cm_inputs(args):
    ell = _ell(args)
    n = _int_flag(args.n, "--n")
    if n < 0:
        raise UsageError("--n must be nonnegative")
    theta, params = _theta(args, ell, n)
    return ell, n, theta, params


def cmd_fixed_points(args) -> dict:
    ell, n, theta, _ = _cm_inputs(args)
    d = (n,) * ell
    std = aw.standardize(d, theta)
    core, r, _ = aw.decompose_dim(std.d)
    labels = lv.fixed_point_labels(d, theta)
    return {
        "l": ell,
        "n": n,
        "theta": _rationals(theta),
        "J": sorted(std.J),
        "core": str(core),
        "r": r,
        "count": len(labels),
        "fixed_points": [
            {"jcore": str(lam), "dim_reg": list(pt.residue_vector(lam, ell))} for lam in labels
        ],
    }


def cmd_leaves(args) -> dict:
    ell, n, theta, params = _cm_inputs(args)
    if params is None:
        params = lv.cm_from_theta(theta, n)
    poset = lv.enumerate_leaves(params)
    edges = poset.covers()
    top = poset.leaves.index(poset.open_leaf)
    leaves = []
    for i, leaf in enumerate(poset.leaves):
        norm = leaf.normalization
        leaves.append({
            "id": i,
            "core": str(leaf.core),
            "r": leaf.r,
            "dim": leaf.dim,
            "d_std": list(leaf.d_std),
            "d_orig": list(leaf.d_orig),
            "normalization": {
                "a": format_rational(norm.a),
                "k": _rationals(norm.k),
                "degenerate": norm.degenerate,
                "up_to_permutation": True,
            },
            "covers": [l for u, l in edges if u == i],
        })
    return {
        "l": ell,
        "n": n,
        "a": format_rational(params.a),
        "k": _rationals(params.k),
        "theta": _rationals(poset.theta),
        "theta_std": _rationals(poset.theta_std),
        "J": sorted(poset.J),
        "word": poset.word,
        "core": str(poset.core),
        "open_leaf": top,
        "leaves": leaves,
        "edges": [list(e) for e in edges],
    }


COMMANDS = {
    "leaves": (cmd_leaves, "symplectic leaves with closure order and normalizations"),
    "core": (cmd_core, "ell-core of a partition"),
    "jcore": (cmd_jcore, "J-core of a partition"),
    "residues": (cmd_residues, "residue vector of a partition"),
    "decompose": (cmd_decompose, "write d = Res(core) + r delta"),
    "standardize": (cmd_standardize, "move (d, theta) to a standard parameter"),
    "verify-rep": (cmd_verify_rep, "moment map and simplicity check of A_mu"),
    "fixed-points": (cmd_fixed_points, "C*-fixed points of the Calogero-Moser space"),
}


@lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cm-leaves", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        for flag in VALUE_FLAGS:
            p.add_argument(flag, dest=flag[2:], default=None)
        mode = p.add_mutually_exclusive_group()
        mode.add_argument("--json", dest="mode", action="store_const", const="json", default="json")
        mode.add_argument("--table", dest="mode", action="store_const", const="table")
    return parser


def _glue_values(argv: Sequence[str]) -> list[str]:
    # let values such as "-1,1/2" follow their flag without "="
    out, it = [], iter(argv)
    for token in it:
        if token in VALUE_FLAGS:
            value = next(it, None)
            out.append(token if value is None else f"{token}={value}")
        else:
            out.append(token)
    return out


def render_table(doc: dict) -> str:
    lines = []
    for key, value in doc.items():
        if key == "leaves":
            lines.append("leaves:")
            lines.append(f"  {'id':>3} {'core':<16} {'r':>3} {'dim':>4} {'d_std':<16} normalization")
            for leaf in value:
                norm = leaf["normalization"]
                k = ",".join(norm["k"])
                lines.append(
                    f"  {leaf['id']:>3} {leaf['core'] or '()':<16} {leaf['r']:>3} {leaf['dim']:>4} "
                    f"{str(leaf['d_std']):<16} a={norm['a']} k=({k})"
                    + (f" [{norm['degenerate']}]" if norm["degenerate"] else "")
                )
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Run one command; returns ``(exit code, text written to stdout)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_values(argv))
        if args.command is None:
            raise UsageError("missing COMMAND; choose from " + ", ".join(COMMANDS))
        doc = COMMANDS[args.command][0](args)
    except UsageError as exc:
        return 1, json.dumps({"error": "usage", "message": str(exc)})
    except DomainError as exc:
        return 2, json.dumps({"error": "domain", "message": str(exc)})
    if args.mode == "table":
        return 0, render_table(doc)
    return 0, json.dumps(doc)


def main(argv: Optional[Sequence[str]] = None) -> int:
    code, text = run(sys.argv[1:] if argv is None else argv)
    print(text, file=sys.stdout if code == 0 else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
