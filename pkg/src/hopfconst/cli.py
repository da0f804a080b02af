"""Command-line interface: ``hopfconst <command> ...``.

Exit status is 0 when every reported check passes, 1 when a check fails and 2 for
usage, parse and input errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import fileformat
from .axioms import AxiomReport, verify_all
from .base_change import TransitionData, transform_presentation, transport_witness
from .catalog import (
    AbelianGroupSpec,
    group_algebra,
    group_selfdual_witness,
    taft,
    taft2_witness,
    tensor_with_dual,
)
from .duality import dualize, selfduality_reports
from .errors import HopfError, HypothesisError
from .ihopf import (
    IAlgebra,
    i_construct_general,
    i_construct_scaled,
    i_construct_simple,
    is_commutative,
    verify_cyclic_witness,
)
from .presentation import extend_scalars
from .render import render_table
from .scalars import CyclotomicField, QQ, field_from_text

FAMILIES = {
    "group": "group algebra k[Z/n1 x ... x Z/nr] (--factors n1,...,nr), character witness 'selfdual'",
    "taft": "Taft algebra H_n(q) (--n N, optional --q), witness 'selfdual' for n = 2",
}


class UsageError(HopfError):
    pass


def split_list(text: str) -> list[str]:
    """Split on ',' or ';' outside square brackets."""
    parts, depth, cur = [], 0, ""
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch in ",;" and depth == 0:
            parts.append(cur.strip())
            cur = ""
        else:
            cur += ch
    parts.append(cur.strip())
    return parts


def _print_reports(reports: Sequence[AxiomReport]) -> int:
    for r in reports:
        print(r)
    return 0 if all(reports) else 1


def _labels(arg: Optional[str], n: int):
    if arg is None:
        return None
    labels = split_list(arg)
    if len(labels) != n:
        raise UsageError(f"--labels needs {n} names, got {len(labels)}")
    return labels


def _write(text: str, out: Optional[str]):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_check(args) -> int:
    P = fileformat.load(args.file).presentation()
    return _print_reports(verify_all(P))


def cmd_dual(args) -> int:
    P = fileformat.load(args.file).presentation()
    _write(fileformat.dumps(dualize(P)), args.output)
    return 0


def cmd_basechange(args) -> int:
    doc = fileformat.load(args.file)
    P = doc.presentation()
    T = fileformat.load_matrix(args.matrix)
    if T[0][0].field != P.field:
        T = extend_scalars(T, P.field)
    TD = TransitionData(T)
    Q = transform_presentation(P, TD)
    witnesses = {name: transport_witness(S, TD).S for name, S in doc.witnesses.items()}
    _write(fileformat.dumps(Q, witnesses=witnesses, note=doc.note), args.output)
    return 0


def cmd_selfdual(args) -> int:
    doc = fileformat.load(args.file)
    return _print_reports(selfduality_reports(doc.presentation(), doc.witness(args.witness)))


def cmd_ihopf(args) -> int:
    doc = fileformat.load(args.file)
    P = doc.presentation()
    labels = _labels(args.labels, P.dim)
    try:
        if args.simple:
            I = i_construct_simple(P, labels)
        elif args.scaled is not None:
            I = i_construct_scaled(P, [P.field.parse(a) for a in split_list(args.scaled)], labels)
        else:
            I = i_construct_general(P, doc.witness(args.witness), labels)
    except HypothesisError as exc:
        print(f"FAIL hypothesis ({exc})")
        return 1
    if args.output:
        fileformat.save(I, args.output)
    sys.stdout.write(render_table(I, I.labels))
    return 0


def cmd_witness_iso(args) -> int:
    I = fileformat.load(args.file).ialgebra()
    if args.field:
        field = field_from_text(args.field)
        I = IAlgebra(I.labels, extend_scalars(I.F, field), extend_scalars(I.lam, field), I.provenance)
    coords = [I.field.parse(c) for c in split_list(args.element)]
    if len(coords) != I.dim:
        raise UsageError(f"--element needs {I.dim} coordinates, got {len(coords)}")
    comm = is_commutative(I)
    reports = [AxiomReport("commutative", True) if comm else _commutativity_failure(I)]
    reports.append(verify_cyclic_witness(I, coords, args.order))
    return _print_reports(reports)


def _commutativity_failure(I) -> AxiomReport:
    F = I.F
    n = I.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if F[i, j, k] != F[j, i, k]:
                    return AxiomReport("commutative", False, (i, j, k), F[i, j, k], F[j, i, k])
    raise AssertionError("unreachable")


def cmd_catalog(args) -> int:
    if args.family is None:
        for name, desc in FAMILIES.items():
            print(f"{name:6} {desc}")
        return 0
    field = field_from_text(args.field) if args.field else None
    witnesses = {}
    if args.family == "group":
        if not args.factors:
            raise UsageError("group needs --factors n1,...,nr")
        factors = tuple(int(x) for x in split_list(args.factors))
        if field is None:
            exponent = AbelianGroupSpec(factors).exponent
            field = QQ if exponent <= 2 else CyclotomicField(exponent)
        P = group_algebra(factors, field)
        try:
            witnesses["selfdual"] = group_selfdual_witness(factors, field).S
        except HopfError:
            pass  # the field lacks the roots of unity; ship the algebra alone
    elif args.family == "taft":
        if args.n is None:
            raise UsageError("taft needs --n")
        P = taft(args.n, field, args.q)
        if args.n == 2:
            witnesses["selfdual"] = taft2_witness(P.field).S
    else:
        raise UsageError(f"unknown family {args.family!r}; run 'catalog' to list them")
    if args.dual:
        P, witnesses = dualize(P), {}
    if args.tensor_dual:
        P, witnesses = tensor_with_dual(P), {}
    _write(fileformat.dumps(P, witnesses=witnesses), args.output)
    return 0


def cmd_table(args) -> int:
    doc = fileformat.load(args.file)
    labels = _labels(args.labels, doc.dim) or doc.labels
    sys.stdout.write(render_table(doc.F, labels))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hopfconst", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="verify all bialgebra and Hopf axioms")
    s.add_argument("file")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("dual", help="write the dual presentation")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("basechange", help="rewrite a presentation in a new basis")
    s.add_argument("file")
    s.add_argument("--matrix", required=True, help="matrix file; columns are the new basis")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_basechange)

    s = sub.add_parser("selfdual", help="check a self-duality witness")
    s.add_argument("file")
    s.add_argument("--witness", required=True)
    s.set_defaults(func=cmd_selfdual)

    s = sub.add_parser("ihopf", help="build the diamond-product algebra")
    s.add_argument("file")
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--witness")
    mode.add_argument("--simple", action="store_true")
    mode.add_argument("--scaled", metavar="A1,...,AN")
    s.add_argument("--labels", help="comma-separated labels for the result")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_ihopf)

    s = sub.add_parser("witness-iso", help="certify an isomorphism with a cyclic group algebra")
    s.add_argument("file")
    s.add_argument("--element", required=True, help="coordinates separated by ';' or ','")
    s.add_argument("--order", required=True, type=int)
    s.add_argument("--field", help="extend rational data to this field first")
    s.set_defaults(func=cmd_witness_iso)

    s = sub.add_parser("catalog", help="emit a catalog presentation (no family: list them)")
    s.add_argument("family", nargs="?")
    s.add_argument("--n", type=int)
    s.add_argument("--q")
    s.add_argument("--factors")
    s.add_argument("--field")
    s.add_argument("--dual", action="store_true")
    s.add_argument("--tensor-dual", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_catalog)

    s = sub.add_parser("table", help="print the multiplication table")
    s.add_argument("file")
    s.add_argument("--labels")
    s.set_defaults(func=cmd_table)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (HopfError, ValueError, OSError) as exc:
        print(f"hopfconst {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
