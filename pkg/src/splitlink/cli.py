"""Command-line front end: a thin client over the service layer.

Every subcommand marshals its arguments into the service request models and
renders the response models; with ``--server`` the same requests go over HTTP
to a running instance instead of being executed in process.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from splitlink.service import api, models

_INPUT_ERRORS = (ValueError,)


def _remote(server: str, method: str, path: str, payload: "dict | None" = None) -> dict:
    import httpx

    try:
        with httpx.Client(base_url=server, timeout=300.0) as client:
            response = client.request(method, path, json=payload)
        if response.status_code == 422:
            detail = response.json().get("detail", response.text)
            raise ValueError(str(detail))
        response.raise_for_status()
    except httpx.HTTPError as exc:
        raise ValueError(f"server request failed: {exc}") from None
    return response.json()


def _emit(model, as_json: bool, render) -> None:
    if as_json:
        print(model.model_dump_json(indent=2))
    else:
        render(model)


def _render_eval(resp: models.EvalResponse) -> None:
    print(resp.pretty)
    for term in resp.case2:
        label = term.name or term.graph
        print(f"tagged: {term.multiplicity}×{label}")
    if resp.trace:
        for step in resp.trace:
            case = f" case {step.case}" if step.case is not None else ""
            circles = " ".join(step.circles)
            print(f"trace: {step.kind}{case} {circles} -> {step.outcome} (x{step.coefficient})")


def _render_graph_enum(resp: models.GraphEnumResponse) -> None:
    for cls in resp.classes:
        name = f"  ({cls.name})" if cls.name else ""
        iso = "  [has isolated edge]" if cls.has_isolated_edge else ""
        print(f"{cls.graph}{name}{iso}")
    print(f"classes: {resp.count}")


def _render_diagram_enum(resp: models.DiagramEnumResponse) -> None:
    for cls in resp.classes:
        print(f"{cls.code}  word: {cls.word}")
    print(f"classes: {resp.count}")


def _render_fourt(resp: models.FourTResponse) -> None:
    for relation in resp.relations:
        parts = []
        for term in relation:
            sign = "+" if not term.coeff.startswith("-") else ""
            parts.append(f"{sign}{term.coeff}·{term.diagram}")
        print(" ".join(parts))
    print(f"relations: {resp.count}")


def _render_verify(resp: models.VerifyResponse) -> None:
    for check in resp.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"[{status}] {check.name}: expected {check.expected}; got {check.computed}")
    print(f"target {resp.target}: {'PASS' if resp.passed else 'FAIL'}")


def _render_rank(resp: models.RankResponse) -> None:
    print(f"rank: {resp.rank}")
    print(f"forced_zero: {resp.forced_zero}")
    print(f"kernel_dim: {resp.kernel_dim}")
    if resp.conjectural_rows:
        print(f"conjectural_rows: {resp.conjectural_rows}")


def _cmd_eval(args: argparse.Namespace) -> int:
    req = models.EvalRequest(
        word=args.word, bracket=args.bracket, diagram=args.diagram,
        ambient=args.ambient, trace=args.trace,
    )
    if args.server:
        resp = models.EvalResponse.model_validate(
            _remote(args.server, "POST", "/eval", req.model_dump()))
    else:
        resp = api.eval_op(req)
    _emit(resp, args.json, _render_eval)
    return 0


def _cmd_enum(args: argparse.Namespace) -> int:
    if args.kind == "graphs":
        if args.server:
            path = f"/enum/graphs/{args.size}?drop_isolated={str(args.drop_isolated).lower()}"
            resp = models.GraphEnumResponse.model_validate(_remote(args.server, "GET", path))
        else:
            resp = api.enum_graphs_op(args.size, args.drop_isolated)
        _emit(resp, args.json, _render_graph_enum)
    else:
        if args.server:
            path = f"/enum/diagrams/{args.size}?reflection={str(args.reflection).lower()}"
            resp = models.DiagramEnumResponse.model_validate(_remote(args.server, "GET", path))
        else:
            resp = api.enum_diagrams_op(args.size, args.reflection)
        _emit(resp, args.json, _render_diagram_enum)
    return 0


def _cmd_fourt(args: argparse.Namespace) -> int:
    if args.server:
        resp = models.FourTResponse.model_validate(
            _remote(args.server, "GET", f"/fourt/{args.m}"))
    else:
        resp = api.fourt_op(args.m)
    if args.csv:
        from splitlink.relations import RelationSystem, harvest_4t

        system = RelationSystem()
        harvest_4t(args.m, system)
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(system.to_csv())
    _emit(resp, args.json, _render_fourt)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    req = models.VerifyRequest(target=args.target, max_chords=args.max_chords)
    if args.server:
        resp = models.VerifyResponse.model_validate(
            _remote(args.server, "POST", "/verify", req.model_dump()))
    else:
        resp = api.verify_op(req, fixtures_path=args.fixtures)
    _emit(resp, args.json, _render_verify)
    return 0 if resp.passed else 1


def _cmd_rank(args: argparse.Namespace) -> int:
    try:
        with open(args.relations, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ValueError(f"cannot read {args.relations}: {exc}") from None
    req = models.RankRequest(csv=text)
    if args.server:
        resp = models.RankResponse.model_validate(
            _remote(args.server, "POST", "/rank", req.model_dump()))
    else:
        resp = api.rank_op(req)
    _emit(resp, args.json, _render_rank)
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from splitlink.service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="splitlink",
        description="Evaluate split-link presentations into exact graph vectors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--server", metavar="URL",
                        help="send the request to a running service instead of running locally")

    p_eval = sub.add_parser("eval", parents=[common], help="evaluate a word, bracket, or diagram")
    group = p_eval.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help="e.g. '1 2 3 -1 -2 -3'")
    group.add_argument("--bracket", help="e.g. '[1, 2 3][2, 3]'")
    group.add_argument("--diagram", help="e.g. 'dc:+1,+2,+3,-1,-2,-3'")
    p_eval.add_argument("--ambient", help="components, e.g. '0..4' (not valid with --diagram)")
    p_eval.add_argument("--trace", action="store_true", help="echo pair/single bookkeeping")
    p_eval.set_defaults(func=_cmd_eval)

    p_enum = sub.add_parser("enum", parents=[common], help="enumerate graph or diagram classes")
    p_enum.add_argument("kind", choices=["graphs", "diagrams"])
    p_enum.add_argument("size", type=int, help="edge count (graphs) or chord count (diagrams)")
    p_enum.add_argument("--drop-isolated", action="store_true",
                        help="drop graph classes containing an isolated edge")
    p_enum.add_argument("--reflection", action="store_true",
                        help="quotient diagram classes by reflections too")
    p_enum.set_defaults(func=_cmd_enum)

    p_fourt = sub.add_parser("fourt", parents=[common], help="list four-term relations")
    p_fourt.add_argument("m", type=int, help="chord count")
    p_fourt.add_argument("--csv", metavar="PATH",
                         help="also export evaluation-substituted rows as CSV")
    p_fourt.set_defaults(func=_cmd_fourt)

    p_verify = sub.add_parser("verify", parents=[common], help="run named verification targets")
    p_verify.add_argument("target", nargs="?", default="all",
                          help="lemma4_6, thm1_1, thm1_2, or all")
    p_verify.add_argument("--max-chords", type=int, default=6,
                          help="cap for exhaustive diagram checks (default 6)")
    p_verify.add_argument("--fixtures", metavar="PATH",
                          help="alternative fixture file (local runs only)")
    p_verify.set_defaults(func=_cmd_verify)

    p_rank = sub.add_parser("rank", parents=[common], help="solve a CSV relation system")
    p_rank.add_argument("relations", help="CSV file with header row,unknown,coeff")
    p_rank.set_defaults(func=_cmd_rank)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
