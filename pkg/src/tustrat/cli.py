"""Command-line front end.

Every subcommand prints a JSON report (or aligned tables with ``--pretty``).
Exit status is 0 on success, 1 when a requested check fails, 2 on bad input.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import documents as docs
from .classes import (
    airport_sufficient_condition,
    is_airport_family,
    is_simple_family,
    most_costly_player,
    simple_core_characterization,
)
from .core import core_membership, core_nonempty, core_vertices, MAX_VERTEX_PLAYERS
from .generate import CLASSES, generate_instance, sample_allocations
from .procedures import (
    PROCEDURES,
    as_value_family,
    check_axioms,
    check_core_intersection,
    check_monotonicity_transmission,
    check_superadditivity_transmission,
    family_satisfies,
    maxmin,
    transform,
)
from .strategic import GameWithStrategies
from .tugame import (
    TUGame,
    coalition_order_key,
    format_rational,
    is_convex,
    is_monotone,
    is_simple,
    is_superadditive,
    shapley,
    to_rational,
)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT = 0, 1, 2


class CheckFailed(Exception):
    """Carries a finished report whose verdict is negative."""

    def __init__(self, report: dict[str, Any]):
        super().__init__("check failed")
        self.report = report


def _fmt_alloc(a: Sequence[Fraction]) -> list[str]:
    return [format_rational(v) for v in a]


def _procedure_name(gws: GameWithStrategies, requested: str | None) -> str:
    if requested:
        return requested
    return "maxmin" if gws.orientation == "value" else "minmax"


def _load(path: str) -> tuple[GameWithStrategies | None, TUGame | None, tuple[str, ...], str]:
    doc, sha = docs.load_document(path)
    if docs.is_plain_game(doc):
        g, names = docs.game_from_document(doc)
        return None, g, names, sha
    gws = docs.instance_from_document(doc)
    return gws, None, gws.player_names, sha


def _target_game(args: argparse.Namespace) -> tuple[TUGame, tuple[str, ...], dict[str, Any]]:
    """The TU-game a solution command works on: raw game or transform."""
    gws, g, names, sha = _load(args.file)
    head: dict[str, Any] = {"input": {"path": args.file, "sha256": sha}, "players": list(names)}
    if gws is not None:
        proc = _procedure_name(gws, getattr(args, "proc", None))
        g = PROCEDURES[proc](gws).game
        head["procedure"] = proc
    assert g is not None
    head["orientation"] = g.orientation
    head["game"] = docs.game_entries(g, names)
    return g, names, head


def cmd_transform(args: argparse.Namespace) -> dict[str, Any]:
    gws, _, names, sha = _load(args.file)
    if gws is None:
        raise docs.InstanceError("transform needs a game with strategies, not a plain game")
    proc = _procedure_name(gws, args.proc)
    result = PROCEDURES[proc](gws)
    return {
        "input": {"path": args.file, "sha256": sha},
        "players": list(names),
        "orientation": gws.orientation,
        "procedure": proc,
        "game": docs.game_entries(result.game, names),
        "witness": {
            docs.coalition_key(S, names): docs.profile_key(gws, result.witness[S])
            for S in result.game.coalitions()
        },
    }


def cmd_shapley(args: argparse.Namespace) -> dict[str, Any]:
    g, names, report = _target_game(args)
    report["shapley"] = dict(zip(names, _fmt_alloc(shapley(g))))
    return report


def cmd_core(args: argparse.Namespace) -> dict[str, Any]:
    g, names, report = _target_game(args)
    balanced, witness = core_nonempty(g)
    report["balanced"] = balanced
    if args.witness:
        report["witness"] = _fmt_alloc(witness) if witness is not None else None
    if args.vertices:
        if g.n > MAX_VERTEX_PLAYERS:
            raise docs.InstanceError(f"--vertices supports at most {MAX_VERTEX_PLAYERS} players")
        report["vertices"] = [_fmt_alloc(v) for v in sorted(core_vertices(g))]
    if args.member is not None:
        try:
            a = [to_rational(p) for p in args.member.split(",")]
        except (ValueError, ZeroDivisionError):
            raise docs.InstanceError(f"bad allocation {args.member!r}") from None
        if len(a) != g.n:
            raise docs.InstanceError(f"allocation needs {g.n} entries, got {len(a)}")
        report["member"] = {"allocation": _fmt_alloc(a), "in_core": core_membership(g, a)}
    return report


def _inheritance(gws: GameWithStrategies) -> dict[str, Any]:
    vg = as_value_family(gws)
    secured = maxmin(vg).game
    out: dict[str, Any] = {}
    for name, pred, check in (
        ("superadditivity", is_superadditive, check_superadditivity_transmission),
        ("monotonicity", is_monotone, check_monotonicity_transmission),
    ):
        out[name] = {
            "hypothesis": family_satisfies(vg, pred),
            "conclusion": pred(secured),
            "verified": check(gws),
        }
    # not transmitted in general; reported for information only
    out["balancedness"] = {
        "hypothesis": family_satisfies(vg, lambda g: core_nonempty(g)[0]),
        "conclusion": core_nonempty(secured)[0],
    }
    out["convexity"] = {
        "hypothesis": family_satisfies(vg, is_convex),
        "conclusion": is_convex(secured),
    }
    return out


def cmd_check(args: argparse.Namespace) -> dict[str, Any]:
    gws, _, names, sha = _load(args.file)
    if gws is None:
        raise docs.InstanceError("check needs a game with strategies, not a plain game")
    report: dict[str, Any] = {
        "input": {"path": args.file, "sha256": sha},
        "players": list(names),
        "orientation": gws.orientation,
    }
    if args.axioms:
        verdicts = check_axioms(gws)
        report["axioms"] = verdicts
        ok = all(verdicts.values())
    elif args.inheritance:
        inh = _inheritance(gws)
        report["inheritance"] = inh
        ok = inh["superadditivity"]["verified"] and inh["monotonicity"]["verified"]
    else:
        k = args.core_intersection
        if k < 0:
            raise docs.InstanceError("sample count must be nonnegative")
        samples = sample_allocations(gws, k, seed=args.seed)
        ok = check_core_intersection(gws, samples)
        report["core_intersection"] = {"samples": k, "seed": args.seed, "holds": ok}
    report["ok"] = ok
    if not ok:
        raise CheckFailed(report)
    return report


def cmd_class(args: argparse.Namespace) -> dict[str, Any]:
    gws, _, names, sha = _load(args.file)
    if gws is None:
        raise docs.InstanceError("class needs a game with strategies, not a plain game")
    report: dict[str, Any] = {
        "input": {"path": args.file, "sha256": sha},
        "players": list(names),
        "orientation": gws.orientation,
        "class": args.kind,
    }
    if args.kind == "airport":
        member = is_airport_family(gws)
        report["is_airport_family"] = member
        if not member:
            raise CheckFailed(report)
        secured = transform(gws).game
        cond = airport_sufficient_condition(secured)
        top = most_costly_player(gws)
        balanced, witness = core_nonempty(secured)
        report.update(
            {
                "game": docs.game_entries(secured, names),
                "most_costly_player": None if top is None else names[top],
                "sufficient_condition": {
                    "holds": cond.holds,
                    "pivot": None if cond.pivot is None else names[cond.pivot],
                    "costs": None if cond.costs is None else _fmt_alloc(cond.costs),
                },
                "balanced": balanced,
                "witness": None if witness is None else _fmt_alloc(witness),
            }
        )
        ok = (top is None or cond.holds) and (not cond.holds or balanced)
    else:
        member = is_simple_family(gws)
        report["is_simple_family"] = member
        if not member:
            raise CheckFailed(report)
        secured = maxmin(gws).game
        char, player = simple_core_characterization(gws)
        balanced = core_nonempty(secured)[0]
        report.update(
            {
                "game": docs.game_entries(secured, names),
                "transform_is_simple": is_simple(secured),
                "veto_threat_player": None if player is None else names[player],
                "balanced": balanced,
                "consistent": char == balanced,
            }
        )
        ok = char == balanced and is_simple(secured)
    report["ok"] = ok
    if not ok:
        raise CheckFailed(report)
    return report


def cmd_gen(args: argparse.Namespace) -> dict[str, Any]:
    try:
        gws = generate_instance(args.seed, args.n, args.max_strats, args.kind)
    except ValueError as exc:
        raise docs.InstanceError(str(exc)) from None
    text = docs.dumps(docs.instance_to_document(gws))
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(text)
    return {
        "written": args.output,
        "sha256": docs.digest(text),
        "seed": args.seed,
        "n": args.n,
        "max_strats": args.max_strats,
        "class": args.kind,
        "strategy_counts": list(gws.strategy_counts),
    }


# -- pretty printing -----------------------------------------------------------


def _table(header: Sequence[str], rows: Sequence[Sequence[str]]) -> list[str]:
    widths = [max(len(r[c]) for r in [header, *rows]) for c in range(len(header))]
    line = lambda r: " | ".join(v.rjust(w) for v, w in zip(r, widths))  # noqa: E731
    return [line(header), "-+-".join("-" * w for w in widths)] + [line(r) for r in rows]


def _coalition_row(entries: dict[str, str], players: Sequence[str]) -> tuple[list[str], list[str]]:
    index = {p: i for i, p in enumerate(players)}

    def key(name: str) -> tuple[int, tuple[int, ...]]:
        return coalition_order_key(sum(1 << index[p] for p in name.split("+")))

    names = sorted(entries, key=key)
    return ["S"] + ["{" + k.replace("+", ",") + "}" for k in names], names


def render_pretty(report: dict[str, Any]) -> str:
    lines: list[str] = []
    players = report.get("players", [])
    for k in ("procedure", "orientation", "class"):
        if k in report:
            lines.append(f"{k}: {report[k]}")
    if "game" in report:
        header, keys = _coalition_row(report["game"], players)
        rows = [[report.get("procedure", "game")] + [report["game"][k] for k in keys]]
        if "witness" in report and isinstance(report["witness"], dict):
            rows.append(["witness"] + [report["witness"][k] for k in keys])
        lines += _table(header, rows)
    for k, v in report.items():
        if k in {"command", "game", "players", "procedure", "orientation", "class", "input"}:
            continue
        if k == "witness" and isinstance(v, dict):
            continue
        if isinstance(v, dict) and all(not isinstance(x, dict) for x in v.values()):
            lines.append(f"{k}:")
            lines += [f"  {a}: {b}" for a, b in v.items()]
        elif isinstance(v, dict):
            lines.append(f"{k}:")
            for a, b in v.items():
                lines.append(f"  {a}: " + ", ".join(f"{c}={d}" for c, d in b.items()))
        elif isinstance(v, list) and v and isinstance(v[0], list):
            lines.append(f"{k}:")
            lines += ["  (" + ", ".join(p) + ")" for p in v]
        elif isinstance(v, list):
            lines.append(f"{k}: (" + ", ".join(str(p) for p in v) + ")")
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"


# -- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="aligned human-readable tables")

    parser = argparse.ArgumentParser(
        prog="tustrat", description="TU-games with strategies: transforms, cores and checks."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", parents=[common], help="transform a game with strategies")
    p.add_argument("--proc", choices=sorted(PROCEDURES), default=None)
    p.add_argument("file")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("shapley", parents=[common], help="Shapley value of a game or its transform")
    p.add_argument("--proc", choices=sorted(PROCEDURES), default=None)
    p.add_argument("file")
    p.set_defaults(func=cmd_shapley)

    p = sub.add_parser("core", parents=[common], help="core of a game or its transform")
    p.add_argument("--proc", choices=sorted(PROCEDURES), default=None)
    p.add_argument("--witness", action="store_true", help="report a core allocation")
    p.add_argument("--vertices", action="store_true", help="enumerate core vertices (n <= 5)")
    p.add_argument("--member", metavar="A1,A2,...", help="test an allocation for membership")
    p.add_argument("file")
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("check", parents=[common], help="verify axioms and inherited properties")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--axioms", action="store_true")
    mode.add_argument("--inheritance", action="store_true")
    mode.add_argument("--core-intersection", type=int, metavar="N_SAMPLES")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled allocations")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("class", parents=[common], help="airport or simple family analysis")
    p.add_argument("file")
    p.add_argument("kind", choices=["airport", "simple"])
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("gen", parents=[common], help="write a random instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="kind", choices=CLASSES, default="general")
    p.add_argument("--max-strats", type=int, default=3)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)
    return parser


def run_command(argv: Sequence[str]) -> tuple[int, dict[str, Any] | None]:
    """Runs one command; returns the exit code and the report (``None`` on input errors)."""
    args = build_parser().parse_args(list(argv))
    try:
        report = args.func(args)
        code = EXIT_OK
    except CheckFailed as failed:
        report, code = failed.report, EXIT_CHECK_FAILED
    except (docs.InstanceError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT, None
    report = {"command": list(argv), **report}
    return code, report


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        code, report = run_command(argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    if report is not None:
        pretty = "--pretty" in argv
        sys.stdout.write(render_pretty(report) if pretty else docs.dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
