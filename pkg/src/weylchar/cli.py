"""Command-line front end.

Subcommands: char (print a character), branch (print a branching table),
pieri (print a relative Pieri expansion), verify (check one weight against
the oracle), sweep (check every dominant weight in a box).

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
JSON output is canonical (sorted keys, no whitespace) so that parsing and
re-serializing reproduces it byte for byte; half-integers are serialized as
strings like "3/2", never as floats.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .branching import branch_of
from .characters import char_of, dim_weight
from .laurent import HalfInt, parse_half
from .oracle import verify_branching, verify_rel_weyl
from .pieri import rel_pieri_gl, rel_pieri_sp, rel_pieri_spin
from .sl2 import SL2Module
from .weights import BranchingPair, DominantWeight, GroupFamily, enumerate_dominant


class UsageError(ValueError):
    """Bad command-line input; reported with exit status 2."""


@dataclass
class CliRequest:
    command: str
    group: str | None = None
    pair: str | None = None
    weight: str | None = None
    fmt: str = "text"
    max_entry: str | None = None
    half_integer: bool = False
    jobs: int = 1


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _half_json(value: HalfInt):
    return value.as_int() if value.doubled % 2 == 0 else str(value)


def _weight_json(w: DominantWeight) -> list:
    return [_half_json(e) for e in w.entries]


def _weight_text(w: DominantWeight) -> str:
    return ",".join(str(e) for e in w.entries)


def _sl2_json(m: SL2Module) -> list:
    return [{"k": k, "mult": c} for k, c in m.sorted_mults()]


def _parse_group(text: str) -> GroupFamily:
    try:
        return GroupFamily.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_pair(text: str) -> BranchingPair:
    try:
        return BranchingPair.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_weight(group: GroupFamily, text: str) -> DominantWeight:
    try:
        entries = [parse_half(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if len(entries) != group.rank:
        raise UsageError(f"{group} needs {group.rank} entries, got {len(entries)}")
    try:
        return DominantWeight.of(group, entries)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _run_char(request: CliRequest) -> tuple[int, str]:
    group = _parse_group(request.group)
    weight = _parse_weight(group, request.weight)
    poly = char_of(weight)
    dim = dim_weight(weight)
    if request.fmt == "json":
        return 0, _dumps(
            {
                "dim": dim,
                "group": str(group),
                "term_count": len(poly.terms),
                "weight": _weight_json(weight),
            }
        )
    names = [f"x{i + 1}" for i in range(group.rank)]
    lines = [
        f"character {group} {_weight_text(weight)}",
        poly.to_text(names),
        f"dim {dim}",
    ]
    return 0, "\n".join(lines)


def _run_branch(request: CliRequest) -> tuple[int, str]:
    pair = _parse_pair(request.pair)
    weight = _parse_weight(pair.big_group, request.weight)
    table = branch_of(weight)
    if request.fmt == "json":
        branches = []
        for mu, mult in table.sorted_entries():
            entry = {"weight": _weight_json(mu)}
            if isinstance(mult, SL2Module):
                entry["sl2"] = _sl2_json(mult)
            else:
                entry["mult"] = mult
            branches.append(entry)
        return 0, _dumps(
            {"branches": branches, "pair": str(pair), "weight": _weight_json(weight)}
        )
    lines = [f"branch {pair} {_weight_text(weight)}"]
    for mu, mult in table.sorted_entries():
        lines.append(f"  {_weight_text(mu)}  {mult}")
    return 0, "\n".join(lines)


def _parse_pieri_input(pair: BranchingPair, text: str):
    """The pieri weight argument: a subgroup weight, except for the
    symplectic pair where the first token is the Sp(2) label k."""
    if pair.kind == "GL_to_GL" or pair.kind == "B_to_D":
        return _parse_weight(pair.sub_group, text)
    if pair.kind == "C_to_C1xC":
        tokens = text.split(",")
        if len(tokens) != pair.big_rank:
            raise UsageError(
                f"{pair} needs k plus {pair.big_rank - 1} entries, got {len(tokens)}"
            )
        try:
            k = parse_half(tokens[0]).as_int()
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        if k < 0:
            raise UsageError(f"need k >= 0, got {k}")
        eta = _parse_weight(pair.sub_group, ",".join(tokens[1:]))
        return k, eta
    raise UsageError(f"no relative Pieri formula for pair {pair}")


def _grade_json(pair: BranchingPair, grade):
    if pair.kind == "GL_to_GL":
        return _half_json(grade)
    if pair.kind == "C_to_C1xC":
        return _sl2_json(grade)
    return None


def _grade_text(pair: BranchingPair, grade) -> str:
    if pair.kind == "GL_to_GL":
        return f"t^{grade}"
    if pair.kind == "C_to_C1xC":
        return str(grade)
    return ""


def _run_pieri(request: CliRequest) -> tuple[int, str]:
    pair = _parse_pair(request.pair)
    parsed = _parse_pieri_input(pair, request.weight)
    if pair.kind == "GL_to_GL":
        summed = rel_pieri_gl(parsed)
        echoed = _weight_json(parsed)
        head = _weight_text(parsed)
    elif pair.kind == "B_to_D":
        summed = rel_pieri_spin(parsed)
        echoed = _weight_json(parsed)
        head = _weight_text(parsed)
    else:
        k, eta = parsed
        summed = rel_pieri_sp(k, eta)
        echoed = [k] + _weight_json(eta)
        head = f"{k},{_weight_text(eta)}"
    if request.fmt == "json":
        terms = []
        for term in summed.terms:
            entry = {"sign": term.sign, "weight": _weight_json(term.weight)}
            grade = _grade_json(pair, term.grade)
            if grade is not None:
                entry["grade"] = grade
            terms.append(entry)
        return 0, _dumps({"pair": str(pair), "terms": terms, "weight": echoed})
    lines = [f"pieri {pair} {head}"]
    for term in summed.terms:
        sign = "+" if term.sign > 0 else "-"
        grade = _grade_text(pair, term.grade)
        middle = f" {grade}" if grade else ""
        lines.append(f"  {sign}{middle} {_weight_text(term.weight)}")
    return 0, "\n".join(lines)


def _verify_one(pair: BranchingPair, lam: DominantWeight) -> dict[str, bool]:
    return {
        "branching": verify_branching(lam, pair),
        "rel_weyl": verify_rel_weyl(lam, pair),
    }


def _run_verify(request: CliRequest) -> tuple[int, str]:
    pair = _parse_pair(request.pair)
    weight = _parse_weight(pair.big_group, request.weight)
    checks = _verify_one(pair, weight)
    ok = all(checks.values())
    if request.fmt == "json":
        out = _dumps(
            {
                "checks": checks,
                "ok": ok,
                "pair": str(pair),
                "weight": _weight_json(weight),
            }
        )
        return (0 if ok else 1), out
    lines = [f"verify {pair} {_weight_text(weight)}"]
    for name, passed in sorted(checks.items()):
        lines.append(f"  {name}: {'ok' if passed else 'FAILED'}")
    lines.append("all verified" if ok else "verification FAILED")
    return (0 if ok else 1), "\n".join(lines)


def _sweep_worker(task: tuple[BranchingPair, DominantWeight]):
    pair, lam = task
    return lam, all(_verify_one(pair, lam).values())


def _sweep_weights(pair: BranchingPair, request: CliRequest) -> list[DominantWeight]:
    try:
        bound = parse_half(request.max_entry)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    big = pair.big_group
    if request.half_integer:
        if not big.allows_half_integers:
            raise UsageError(f"{big} has no half-integral weights")
        classes = [True]
    elif big.allows_half_integers:
        classes = [False, True]
    else:
        classes = [False]
    weights = []
    for half in classes:
        weights.extend(enumerate_dominant(big, bound, half_integral=half))
    return weights


def _run_sweep(request: CliRequest) -> tuple[int, str]:
    pair = _parse_pair(request.pair)
    weights = _sweep_weights(pair, request)
    tasks = [(pair, lam) for lam in weights]
    if request.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=request.jobs) as pool:
            results = list(pool.map(_sweep_worker, tasks))
    else:
        results = [_sweep_worker(task) for task in tasks]
    failures = [lam for lam, ok in results if not ok]
    ok = not failures
    if request.fmt == "json":
        out = _dumps(
            {
                "count": len(weights),
                "failures": [_weight_json(lam) for lam in failures],
                "max_entry": request.max_entry,
                "ok": ok,
                "pair": str(pair),
            }
        )
        return (0 if ok else 1), out
    lines = [f"sweep {pair} max-entry {request.max_entry}: {len(weights)} weights"]
    for lam in failures:
        lines.append(f"  FAILED {_weight_text(lam)}")
    lines.append("all verified" if ok else f"{len(failures)} failures")
    return (0 if ok else 1), "\n".join(lines)


_HANDLERS = {
    "char": _run_char,
    "branch": _run_branch,
    "pieri": _run_pieri,
    "verify": _run_verify,
    "sweep": _run_sweep,
}


def run(request: CliRequest) -> tuple[int, str]:
    """Execute a request; returns (exit status, printable output)."""
    if request.command not in _HANDLERS:
        return 2, f"error: unknown command {request.command!r}"
    if request.fmt not in ("text", "json"):
        return 2, f"error: unknown format {request.fmt!r}"
    try:
        return _HANDLERS[request.command](request)
    except UsageError as exc:
        return 2, f"error: {exc}"
    except ValueError as exc:
        return 2, f"error: {exc}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylchar",
        description="Exact characters and branching rules for classical groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", default="text", choices=("text", "json"))

    p_char = sub.add_parser("char", help="print one irreducible character")
    p_char.add_argument("--group", required=True, help="e.g. GL3, B2, C2, D3")
    p_char.add_argument("--weight", required=True, help="e.g. 2,1,0 or 3/2,1/2")
    common(p_char)

    for name, help_text in (
        ("branch", "print the branching table of one weight"),
        ("verify", "check one weight against the polynomial oracle"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--pair", required=True, help="e.g. GL3:GL2, B2:D2, D3:B2, C2:C1xC1")
        p.add_argument("--weight", required=True)
        common(p)

    p_pieri = sub.add_parser("pieri", help="print one relative Pieri expansion")
    p_pieri.add_argument("--pair", required=True)
    p_pieri.add_argument(
        "--weight",
        required=True,
        help="subgroup weight; for C pairs the first token is the Sp(2) label k",
    )
    common(p_pieri)

    p_sweep = sub.add_parser("sweep", help="verify every dominant weight in a box")
    p_sweep.add_argument("--pair", required=True)
    p_sweep.add_argument("--max-entry", required=True, dest="max_entry")
    p_sweep.add_argument(
        "--half-integer",
        action="store_true",
        dest="half_integer",
        help="restrict the sweep to half-integral weights (spin families only)",
    )
    p_sweep.add_argument("--jobs", type=int, default=1)
    common(p_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    request = CliRequest(
        command=ns.command,
        group=getattr(ns, "group", None),
        pair=getattr(ns, "pair", None),
        weight=getattr(ns, "weight", None),
        fmt=ns.format,
        max_entry=getattr(ns, "max_entry", None),
        half_integer=getattr(ns, "half_integer", False),
        jobs=getattr(ns, "jobs", 1),
    )
    code, output = run(request)
    if output:
        print(output)
    return code


def entrypoint() -> None:
    sys.exit(main(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
