"""Command-line front end.

Exit codes: 0 success; 1 usage error; 2 parse error (including unreadable
input files); 3 validation failure (not a poset, axiom violation, malformed
ideal/filter argument, enumeration over budget); 4 a requested check found a
counterexample, an explicitly requested statement was not applicable, or a
separation hypothesis failed.
"""

from __future__ import annotations

import argparse
import sys

from . import corpus as corpus_mod
from .complement import ComplementedPoset
from .errors import ParseError, PosetError
from .harness import StatementId, check_statement, run_all, separate
from .io import (
    Instance,
    build_instance,
    build_report,
    emit_dot,
    emit_instance,
    machine_class_row,
    machine_theorem_row,
    parse_instance,
    render_machine,
    render_text,
)
from .poset import Poset
from .substructures import DEFAULT_BUDGET

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_FINDING = 4

IDEAL_CLASSES = ("all", "proper", "maximal", "prime", "c-ideal", "c-condition")
FILTER_CLASSES = ("all", "proper", "ultrafilter", "prime", "c-filter", "c-condition")
COMP_ONLY_CLASSES = {"c-ideal", "c-filter", "c-condition"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 1
        raise _UsageError(message)


def _load(path: str) -> Instance:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return build_instance(parse_instance(text))


def _require_comp(instance: Instance) -> ComplementedPoset:
    if instance.cp is None:
        raise PosetError(
            f"instance {instance.name!r} has no comp section; "
            "this command needs a complementation"
        )
    return instance.cp


def parse_set_spec(p: Poset, spec: str, kind: str) -> int:
    """CLI set arguments: '{x,y}' literal, 'L(a)'/'U(a)' cones, or a bare
    token meaning the principal ideal/filter of that element (a singleton
    for highlights)."""
    spec = spec.strip()
    if spec.startswith("{") and spec.endswith("}"):
        inner = spec[1:-1].strip()
        names = [tok.strip() for tok in inner.split(",")] if inner else []
        return p.mask_of(names)
    if spec.startswith("L(") and spec.endswith(")"):
        return p.down[p.index(spec[2:-1])]
    if spec.startswith("U(") and spec.endswith(")"):
        return p.up[p.index(spec[2:-1])]
    if kind == "ideal":
        return p.down[p.index(spec)]
    if kind == "filter":
        return p.up[p.index(spec)]
    return 1 << p.index(spec)


def _print_rows(p: Poset, rows, kind: str, fmt: str, with_comp: bool) -> None:
    shape = "L" if kind == "ideal" else "U"
    for row in rows:
        if fmt == "machine":
            print(machine_class_row(p, row, kind, with_comp))
        else:
            label = f"{shape}({p.names[row.principal]})" if row.principal is not None else "-"
            print(f"{label} = {p.format_set(row.mask)}")


def _select_rows(rows, wanted: str):
    if wanted == "all":
        return list(rows)
    if wanted == "proper":
        return [r for r in rows if r.proper]
    if wanted in ("maximal", "ultrafilter"):
        return [r for r in rows if r.maximal]
    if wanted == "prime":
        return [r for r in rows if r.prime]
    if wanted in ("c-ideal", "c-filter"):
        return [r for r in rows if r.is_c]
    if wanted == "c-condition":
        return [r for r in rows if r.ccond]
    raise _UsageError(f"unknown class {wanted!r}")


# -- subcommand implementations ------------------------------------------------


def _cmd_analyze(args) -> int:
    instance = _load(args.file)
    report = build_report(instance, budget=args.budget, seed=args.seed)
    out = render_machine(report) if args.format == "machine" else render_text(report)
    print(out, end="")
    return EXIT_OK


def _cmd_ideals(args) -> int:
    instance = _load(args.file)
    if args.klass in COMP_ONLY_CLASSES:
        _require_comp(instance)
    report = build_report(instance, budget=args.budget, with_theorems=False)
    rows = _select_rows(report.ideals, args.klass)
    _print_rows(instance.poset, rows, "ideal", args.format, instance.cp is not None)
    return EXIT_OK


def _cmd_filters(args) -> int:
    instance = _load(args.file)
    if args.klass in COMP_ONLY_CLASSES:
        _require_comp(instance)
    report = build_report(instance, budget=args.budget, with_theorems=False)
    rows = _select_rows(report.filters, args.klass)
    _print_rows(instance.poset, rows, "filter", args.format, instance.cp is not None)
    return EXIT_OK


def _cmd_check(args) -> int:
    instance = _load(args.file)
    cp = _require_comp(instance)
    explicit = args.statement is not None
    if explicit:
        tags = []
        for tok in args.statement.split(","):
            tok = tok.strip()
            try:
                tags.append(StatementId(tok))
            except ValueError:
                raise _UsageError(f"unknown statement tag {tok!r}") from None
        results = [check_statement(cp, tag, budget=args.budget, seed=args.seed) for tag in tags]
    else:
        results = run_all(cp, budget=args.budget, seed=args.seed)
    worst = EXIT_OK
    for res in results:
        if args.format == "machine":
            print(machine_theorem_row(res))
        elif res.conclusion_holds is False:
            payload = ", ".join(f"{k}={v}" for k, v in (res.counterexample or {}).items())
            print(f"{res.statement.value}: COUNTEREXAMPLE {payload}")
        elif not res.hypotheses_met:
            print(f"{res.statement.value}: not applicable ({res.detail})")
        else:
            print(f"{res.statement.value}: verified")
        if res.conclusion_holds is False:
            worst = EXIT_FINDING
        elif explicit and not res.hypotheses_met:
            worst = max(worst, EXIT_FINDING)
    return worst


def _cmd_separate(args) -> int:
    instance = _load(args.file)
    cp = _require_comp(instance)
    p = instance.poset
    ideal_mask = parse_set_spec(p, args.ideal, "ideal")
    filter_mask = parse_set_spec(p, args.filter, "filter")
    result = separate(cp, ideal_mask, filter_mask, args.mode, budget=args.budget)
    if args.format == "machine":
        witness = p.format_set(result.witness) if result.witness is not None else "none"
        print(
            f"separation: mode={args.mode} ideal={p.format_set(ideal_mask)} "
            f"filter={p.format_set(filter_mask)} witness={witness} "
            f"failure={result.failure or 'none'}"
        )
    elif result.witness is not None:
        g = p.greatest(result.witness)
        label = f" (= L({p.names[g]}))" if g is not None and p.down[g] == result.witness else ""
        print(f"J = {p.format_set(result.witness)}{label}")
    else:
        print(f"separation hypothesis failed: {result.failure}")
    return EXIT_OK if result.witness is not None else EXIT_FINDING


def _cmd_dot(args) -> int:
    instance = _load(args.file)
    highlights = [
        (spec, parse_set_spec(instance.poset, spec, "plain")) for spec in args.highlight or []
    ]
    print(emit_dot(instance.poset, instance.name, highlights), end="")
    return EXIT_OK


def _cmd_corpus(args) -> int:
    entries = corpus_mod.builtin_corpus()
    for entry in entries:
        if args.format == "machine":
            print(f"corpus: name={entry.name} size={entry.poset.n}")
        else:
            print(f"{entry.name}: {entry.poset.n} elements")
        for field_name, published, computed in corpus_mod.published_divergences(entry):
            pub = "{" + ",".join(sorted(published)) + "}"
            com = "{" + ",".join(sorted(computed)) + "}"
            if args.format == "machine":
                print(
                    f"divergence: instance={entry.name} list={field_name} "
                    f"published={pub} computed={com}"
                )
            else:
                print(f"  DIVERGES {field_name}: published {pub} but computed {com}")
    if args.emit:
        import os

        os.makedirs(args.emit, exist_ok=True)
        for entry in entries:
            path = os.path.join(args.emit, f"{entry.name}.poset")
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(emit_instance(Instance(entry.name, entry.poset, entry.cp)))
        print(f"wrote {len(entries)} instances to {args.emit}", file=sys.stderr)
    return EXIT_OK


def _cmd_gen(args) -> int:
    constraints = [tok.strip() for tok in args.require.split(",") if tok.strip()] if args.require else []
    poset = corpus_mod.random_poset(args.size, args.seed, density=args.density)
    table = corpus_mod.random_complementation(poset, args.seed, constraints=constraints)
    if table is None:
        print(
            f"no complementation found for size={args.size} seed={args.seed} "
            f"require={','.join(constraints) or '-'}",
            file=sys.stderr,
        )
        return EXIT_FINDING
    from .complement import attach_complementation

    cp = attach_complementation(poset, table)
    print(emit_instance(Instance(f"gen-{args.size}-{args.seed}", poset, cp)), end="")
    return EXIT_OK


def make_parser() -> _Parser:
    parser = _Parser(prog="cideals", description="finite complemented posets: ideals, filters, statement checks")
    parser.add_argument(
        "--format", dest="format_global", choices=("text", "machine"), default=None
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "machine"), default=None)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="cap on enumerated downward-closed candidates")
    sub = parser.add_subparsers(dest="command", required=True)

    cmd = sub.add_parser("analyze", parents=[common], help="full classification and statement report")
    cmd.add_argument("file")
    cmd.add_argument("--seed", type=int, default=0, help="seed for sampled subset statements")
    cmd.set_defaults(func=_cmd_analyze)

    cmd = sub.add_parser("ideals", parents=[common], help="list ideals of a class")
    cmd.add_argument("file")
    cmd.add_argument("--class", dest="klass", choices=IDEAL_CLASSES, default="all")
    cmd.set_defaults(func=_cmd_ideals)

    cmd = sub.add_parser("filters", parents=[common], help="list filters of a class")
    cmd.add_argument("file")
    cmd.add_argument("--class", dest="klass", choices=FILTER_CLASSES, default="all")
    cmd.set_defaults(func=_cmd_filters)

    cmd = sub.add_parser("check", parents=[common], help="verify statements on the instance")
    cmd.add_argument("file")
    cmd.add_argument("--statement", help="comma-separated statement tags (default: all)")
    cmd.add_argument("--seed", type=int, default=0, help="seed for sampled subset statements")
    cmd.set_defaults(func=_cmd_check)

    cmd = sub.add_parser("separate", parents=[common], help="run a separation procedure")
    cmd.add_argument("file")
    cmd.add_argument("--ideal", required=True, help="generator token, L(a), or {x,y} literal")
    cmd.add_argument("--filter", required=True, help="generator token, U(a), or {x,y} literal")
    cmd.add_argument("--mode", choices=("first", "prime", "second"), default="first")
    cmd.set_defaults(func=_cmd_separate)

    cmd = sub.add_parser("dot", parents=[common], help="DOT rendering of the cover relation")
    cmd.add_argument("file")
    cmd.add_argument("--highlight", action="append", help="set to fill; repeatable")
    cmd.set_defaults(func=_cmd_dot)

    cmd = sub.add_parser("corpus", parents=[common], help="built-in instances and divergences")
    cmd.add_argument("--emit", help="directory to write .poset files into")
    cmd.set_defaults(func=_cmd_corpus)

    cmd = sub.add_parser("gen", parents=[common], help="generate a random complemented instance")
    cmd.add_argument("--size", type=int, required=True)
    cmd.add_argument("--seed", type=int, required=True)
    cmd.add_argument("--require", help="comma-separated constraints: antitone,involution")
    cmd.add_argument("--density", type=float, default=corpus_mod.DEFAULT_EDGE_DENSITY)
    cmd.set_defaults(func=_cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    # --format may be given before or after the subcommand
    args.format = args.format or args.format_global or "text"
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PosetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if isinstance(exc, ParseError) or getattr(exc, "line", None) is not None:
            return EXIT_PARSE
        return EXIT_INVALID


def run() -> None:  # console-script entry point
    sys.exit(main())


if __name__ == "__main__":
    run()
