"""Service-layer operations: plain functions from request to response models.

Both the HTTP routes and the command-line client call these, so the two
front ends cannot drift apart.
"""

from __future__ import annotations

import splitlink
from splitlink.diagrams import (
    diagram_to_json,
    diagram_to_text,
    diagram_word,
    enumerate_diagrams,
    four_t_relations,
    parse_diagram,
)
from splitlink.engine import EvalResult, eval_diagram, eval_presentation
from splitlink.graphs import (
    display_name,
    enumerate_simple_graphs,
    graph_from_key,
    graph_to_text,
    has_isolated_edge,
)
from splitlink.relations import RelationSystem
from splitlink.service import models
from splitlink.verify import parse_ambient, run_verify
from splitlink.words import canonical_presentation, parse_bracket, parse_word


def health_op() -> models.HealthResponse:
    return models.HealthResponse(status="ok", version=splitlink.__version__)


def _vector_model(result: EvalResult) -> models.VectorModel:
    terms = []
    for key, coeff in result.vector.terms():
        terms.append(models.VectorTerm(
            key=key.hex(),
            graph="sg:" + key.decode(),
            name=display_name(key),
            coeff=str(coeff),
        ))
    return models.VectorModel(terms=terms)


def _case2_models(result: EvalResult) -> list[models.Case2Term]:
    out = []
    for key, mult in sorted(result.case2_terms.items()):
        out.append(models.Case2Term(
            key=key.hex(),
            graph="sg:" + key.decode(),
            name=display_name(key),
            multiplicity=str(mult),
        ))
    return out


def eval_op(req: models.EvalRequest) -> models.EvalResponse:
    given = [k for k in ("word", "bracket", "diagram") if getattr(req, k) is not None]
    if len(given) != 1:
        raise ValueError("exactly one of word, bracket, diagram must be given")
    kind = given[0]
    text = getattr(req, kind)

    if kind == "diagram":
        if req.ambient is not None:
            raise ValueError("ambient is implied for diagram inputs (0..m)")
        diagram = parse_diagram(text)
        result = eval_diagram(diagram, trace=req.trace or None)
        ambient = sorted(range(diagram.m + 1))
    elif kind == "word":
        w = parse_word(text)
        amb = parse_ambient(req.ambient) if req.ambient else frozenset(w.generators) | {0}
        result = eval_presentation(canonical_presentation(w, amb), trace=req.trace or None)
        ambient = sorted(amb)
    else:
        amb = parse_ambient(req.ambient) if req.ambient else None
        presentation = parse_bracket(text, amb)
        result = eval_presentation(presentation, trace=req.trace or None)
        ambient = sorted(presentation.ambient)

    trace = None
    if result.trace is not None:
        trace = [models.TraceStepModel(**step.to_json()) for step in result.trace]
    return models.EvalResponse(
        input=text,
        kind=kind,
        ambient=ambient,
        vector=_vector_model(result),
        case2=_case2_models(result),
        pretty=result.pretty(),
        trace=trace,
    )


def enum_graphs_op(k: int, drop_isolated: bool = False) -> models.GraphEnumResponse:
    classes = []
    for key in enumerate_simple_graphs(k, drop_isolated):
        g = graph_from_key(key)
        valences = g.valences()
        classes.append(models.GraphClassModel(
            key=key.hex(),
            graph=graph_to_text(g),
            name=display_name(key),
            edge_count=g.edge_count,
            trivalent=sum(1 for d in valences.values() if d == 3),
            univalent=sum(1 for d in valences.values() if d == 1),
            has_isolated_edge=has_isolated_edge(g),
        ))
    return models.GraphEnumResponse(
        k=k, drop_isolated=drop_isolated, count=len(classes), classes=classes,
    )


def enum_diagrams_op(m: int, reflection: bool = False) -> models.DiagramEnumResponse:
    up_to = "rotation+reflection" if reflection else "rotation"
    classes = []
    for diagram in enumerate_diagrams(m, up_to):
        classes.append(models.DiagramClassModel(
            code=diagram_to_text(diagram),
            m=diagram.m,
            slots=diagram_to_json(diagram)["slots"],
            word=str(diagram_word(diagram)),
        ))
    return models.DiagramEnumResponse(m=m, up_to=up_to, count=len(classes), classes=classes)


def fourt_op(m: int) -> models.FourTResponse:
    relations = []
    for relation in four_t_relations(m):
        relations.append([
            models.RelationTermModel(diagram=diagram_to_text(d), coeff=str(c))
            for d, c in relation.terms
        ])
    return models.FourTResponse(m=m, count=len(relations), relations=relations)


def verify_op(req: models.VerifyRequest,
              fixtures_path: "str | None" = None) -> models.VerifyResponse:
    report = run_verify(req.target, max_chords=req.max_chords, fixtures_path=fixtures_path)
    return models.VerifyResponse(
        target=report.target,
        passed=report.passed,
        checks=[models.CheckModel(**vars(c)) for c in report.checks],
        environment=report.environment,
    )


def rank_op(req: models.RankRequest) -> models.RankResponse:
    system = RelationSystem.from_csv(req.csv)
    solved = system.solve()
    return models.RankResponse(
        rank=solved.rank,
        forced_zero=list(solved.forced_zero),
        kernel_dim=len(solved.kernel_basis),
        unknowns=list(solved.unknowns),
        conjectural_rows=list(system.conjectural_rows),
    )
