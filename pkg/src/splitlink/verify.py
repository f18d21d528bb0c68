"""Named verification targets, assembled from data-driven fixture files.

Each target bundles checks (expected evaluations and forced-zero deductions)
so that new relations can be added by editing the fixture JSON, not code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Any

import splitlink
from splitlink.diagrams import enumerate_diagrams, parse_diagram
from splitlink.engine import EvalResult, eval_diagram, eval_presentation
from splitlink.graphs import canonicalize, named_graph
from splitlink.relations import RelationSystem, harvest_4t, harvest_presentation_pair
from splitlink.words import canonical_presentation, parse_bracket, parse_word

TARGETS = ("lemma4_6", "thm1_1", "thm1_2")


class VerifyError(ValueError):
    """Unknown target or malformed fixture file."""


@dataclass(frozen=True)
class Check:
    name: str
    claim: str
    expected: str
    computed: str
    passed: bool


@dataclass(frozen=True)
class VerifyReport:
    target: str
    checks: tuple[Check, ...]
    environment: dict

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def parse_ambient(text: str) -> frozenset[int]:
    """Parse '0..4' ranges or '0,1,2' lists of component indices."""
    text = text.strip()
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        try:
            lo, hi = int(lo_text), int(hi_text)
        except ValueError:
            raise VerifyError(f"malformed ambient range {text!r}") from None
        if lo > hi:
            raise VerifyError(f"empty ambient range {text!r}")
        return frozenset(range(lo, hi + 1))
    try:
        return frozenset(int(tok) for tok in text.replace(",", " ").split())
    except ValueError:
        raise VerifyError(f"malformed ambient list {text!r}") from None


def _load_fixtures(path: "str | None") -> dict:
    if path is None:
        text = (resources.files("splitlink") / "data" / "verify_targets.json").read_text()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    data = json.loads(text)
    if "targets" not in data:
        raise VerifyError("fixture file has no 'targets' table")
    return data["targets"]


def evaluate_input(source: dict[str, Any]) -> EvalResult:
    """Evaluate a fixture input: one of word/bracket/diagram plus ambient."""
    ambient = frozenset(parse_ambient(source["ambient"])) if "ambient" in source else None
    if "diagram" in source:
        if ambient is not None:
            raise VerifyError("ambient is implied for diagram inputs")
        return eval_diagram(parse_diagram(source["diagram"]))
    if "word" in source:
        w = parse_word(source["word"])
        amb = ambient if ambient is not None else frozenset(w.generators) | {0}
        return eval_presentation(canonical_presentation(w, amb))
    if "bracket" in source:
        return eval_presentation(parse_bracket(source["bracket"], ambient))
    raise VerifyError("input needs one of: word, bracket, diagram")


def _expected_vector(expected: dict[str, str]) -> dict[bytes, Fraction]:
    return {canonicalize(named_graph(name)): Fraction(v) for name, v in expected.items()}


def _describe_vector(result: EvalResult) -> str:
    return result.pretty()


def _run_check(check: dict[str, Any], max_chords: int) -> Check:
    kind = check["kind"]
    name = check["name"]
    claim = check.get("claim", "")
    if kind == "eval":
        result = evaluate_input(check["input"])
        expected = _expected_vector(check["expected"])
        passed = dict(result.vector.coefficients) == expected and not result.case2_terms
        expected_text = " + ".join(f"{v}·{k}" for k, v in sorted(check["expected"].items()))
        return Check(name, claim, expected_text or "0", _describe_vector(result), passed)
    if kind == "fourt_force":
        system = RelationSystem()
        harvest_4t(check["m"], system)
        solved = system.solve()
        wanted = set(check["expected"])
        passed = wanted <= set(solved.forced_zero)
        return Check(name, claim, f"forced zero ⊇ {sorted(wanted)}",
                     f"forced zero = {list(solved.forced_zero)}", passed)
    if kind == "pair_force":
        ambient = parse_ambient(check["ambient"])
        p1 = canonical_presentation(parse_word(check["word"]), ambient)
        p2 = parse_bracket(check["bracket"], ambient)
        system = RelationSystem()
        harvest_presentation_pair(p1, p2, system)
        solved = system.solve()
        wanted = set(check["expected"])
        passed = wanted <= set(solved.forced_zero)
        return Check(name, claim, f"forced zero ⊇ {sorted(wanted)}",
                     f"forced zero = {list(solved.forced_zero)}", passed)
    if kind == "all_zero":
        m_lo = int(check["m_min"])
        m_hi = min(int(check["m_max"]), max_chords)
        offenders: list[str] = []
        total = 0
        for m in range(m_lo, m_hi + 1):
            for diagram in enumerate_diagrams(m):
                total += 1
                if not eval_diagram(diagram).is_zero:
                    offenders.append(str(diagram))
        expected_text = f"all diagrams with {m_lo}..{m_hi} chords evaluate to 0"
        computed = (f"{total} diagrams checked, all zero" if not offenders
                    else f"nonzero: {offenders[:3]}")
        return Check(name, claim, expected_text, computed, not offenders)
    raise VerifyError(f"unknown check kind {kind!r}")


def run_verify(target: str = "all", max_chords: int = 6,
               fixtures_path: "str | None" = None) -> VerifyReport:
    """Run one named target (or all of them) and assemble the report."""
    fixtures = _load_fixtures(fixtures_path)
    if target == "all":
        names = [t for t in TARGETS if t in fixtures]
        names += [t for t in fixtures if t not in names]
    elif target in fixtures:
        names = [target]
    else:
        raise VerifyError(f"unknown verify target {target!r}; known: {sorted(fixtures)} or 'all'")
    checks: list[Check] = []
    for name in names:
        for check in fixtures[name]["checks"]:
            checks.append(_run_check(check, max_chords))
    environment = {"tool": "splitlink", "version": splitlink.__version__, "seed": None}
    return VerifyReport(target, tuple(checks), environment)
