import itertools
import random
from fractions import Fraction

from conftest import oracle_eval_presentation, random_presentation
from splitlink.diagrams import enumerate_diagrams, parse_diagram
from splitlink.engine import eval_diagram, eval_presentation, pair_graph, single_graph
from splitlink.graphs import GraphVector, canonicalize, named_graph
from splitlink.words import (
    Presentation,
    SimpleCommutator,
    canonical_presentation,
    parse_bracket,
    parse_word,
)

TRIPOD = canonicalize(named_graph("tripod"))
BUBBLE = canonicalize(named_graph("bubble"))
SWITCH = canonicalize(named_graph("switch"))


def comm(a, b, e=1):
    return SimpleCommutator(a, b, e)


class TestSingleGraph:
    def test_exact_ambient_gives_tripod(self):
        v = single_graph(comm(1, 2), {0, 1, 2})
        assert v == GraphVector({TRIPOD: Fraction(1)})

    def test_larger_ambient_vanishes(self):
        assert single_graph(comm(1, 2), {0, 1, 2, 3}).is_zero

    def test_inverse_circle_normalizes_to_same_tripod(self):
        assert single_graph(comm(1, 2, -1), {0, 1, 2}) == \
            single_graph(comm(1, 2), {0, 1, 2})


class TestPairGraph:
    def test_disjoint_pairs_give_switch(self):
        res = pair_graph(comm(1, 2), comm(3, 4), range(5))
        assert res.vector == GraphVector({SWITCH: Fraction(1)})
        assert not res.case2_terms

    def test_sharing_one_index_gives_bubble(self):
        res = pair_graph(comm(1, 2), comm(1, 3), range(4))
        assert res.vector == GraphVector({BUBBLE: Fraction(1)})

    def test_all_three_sharing_pairs_give_one_key(self):
        keys = set()
        for a, b in [((1, 2), (1, 3)), ((1, 2), (2, 3)), ((1, 3), (2, 3))]:
            res = pair_graph(comm(*a), comm(*b), range(4))
            keys.update(res.vector.coefficients)
        assert keys == {BUBBLE}

    def test_cancelling_pair_is_zero(self):
        res = pair_graph(comm(2, 4), comm(2, 4, -1), range(5))
        assert res.is_zero
        res = pair_graph(comm(2, 4), comm(2, 4, -1), range(3))
        assert res.is_zero

    def test_equal_pair_is_tagged(self):
        res = pair_graph(comm(1, 2), comm(1, 2), range(3))
        assert res.vector.is_zero
        assert res.case2_terms == {TRIPOD: Fraction(1)}

    def test_equal_pair_with_spectator_component_vanishes(self):
        res = pair_graph(comm(1, 2), comm(1, 2), range(4))
        assert res.is_zero

    def test_mixed_sign_disjoint_pairs_still_positive_switch(self):
        res = pair_graph(comm(1, 3), comm(2, 4, -1), range(5))
        assert res.vector == GraphVector({SWITCH: Fraction(1)})


class TestEvalPresentation:
    def test_three_circle_bubble_sum(self):
        p = parse_bracket("[1, 2][1, 3][2, 3]", range(4))
        assert eval_presentation(p).vector == GraphVector({BUBBLE: Fraction(3)})

    def test_six_circle_switch_sum(self):
        p = canonical_presentation(parse_word("1 2 3 4 -1 -2 -3 -4"), range(5))
        assert eval_presentation(p).vector == GraphVector({SWITCH: Fraction(3)})

    def test_rerouted_bracket_gives_four_switches(self):
        p = parse_bracket("[1, 2 3 4][2, 3 4][3, 4][4, 2]", range(5))
        assert eval_presentation(p).vector == GraphVector({SWITCH: Fraction(4)})

    def test_empty_presentation_is_zero(self):
        assert eval_presentation(Presentation((), frozenset({0}))).is_zero

    def test_degenerate_single_circle(self):
        p = Presentation((comm(1, 2),), frozenset({0, 1, 2}))
        assert eval_presentation(p).vector == single_graph(comm(1, 2), {0, 1, 2})

    def test_degenerate_two_circles(self):
        rng = random.Random(61)
        for _ in range(50):
            p = random_presentation(rng, max_circles=2)
            if p.size != 2:
                continue
            direct = pair_graph(p.circles[0], p.circles[1], p.ambient)
            assert eval_presentation(p).same_value(direct)

    def test_circle_order_invariance(self):
        rng = random.Random(67)
        p = parse_bracket("[1, 2 3 4][2, 3 4][3, 4][4, 2]", range(5))
        base = eval_presentation(p)
        for _ in range(10):
            circles = list(p.circles)
            rng.shuffle(circles)
            assert eval_presentation(Presentation(tuple(circles), p.ambient)).same_value(base)

    def test_relabeling_equivariance(self):
        rng = random.Random(71)
        for _ in range(50):
            p = random_presentation(rng)
            base = eval_presentation(p)
            perm = list(range(1, 5))
            rng.shuffle(perm)
            mapping = {0: 0}
            mapping.update({i + 1: perm[i] for i in range(4)})
            circles = tuple(
                SimpleCommutator.of(mapping[c.first] * c.exponent, mapping[c.second])
                for c in p.circles
            )
            relabeled = Presentation(circles, frozenset(mapping[c] for c in p.ambient))
            assert eval_presentation(relabeled).same_value(base)

    def test_matches_brute_force_oracle(self):
        rng = random.Random(73)
        for _ in range(200):
            p = random_presentation(rng, max_circles=4, max_component=4)
            result = eval_presentation(p)
            vector, case2 = oracle_eval_presentation(p)
            assert dict(result.vector.coefficients) == vector
            assert dict(result.case2_terms) == case2

    def test_repeated_circle_case2_bookkeeping(self):
        p = parse_bracket("[1, 2][1, 2][1, 2]", range(3))
        result = eval_presentation(p)
        # three tagged pairs, and -(n-2) = -1 times three tripod singles
        assert result.case2_terms == {TRIPOD: Fraction(3)}
        assert result.vector == GraphVector({TRIPOD: Fraction(-3)})


class TestEvalDiagram:
    def test_interleaved_three_chords(self):
        d = parse_diagram("dc:+1,+2,+3,-1,-2,-3")
        assert eval_diagram(d).vector == GraphVector({BUBBLE: Fraction(3)})

    def test_companion_three_chord_diagram(self):
        d = parse_diagram("dc:+1,+2,-1,+3,-2,-3")
        assert eval_diagram(d).vector == GraphVector({BUBBLE: Fraction(1)})

    def test_exactly_one_three_chord_class_evaluates_to_one_bubble(self):
        hits = [d for d in enumerate_diagrams(3)
                if eval_diagram(d).vector == GraphVector({BUBBLE: Fraction(1)})]
        assert len(hits) == 1
        assert hits[0].labels == (1, 2, 1, 3, 2, 3)

    def test_interleaved_four_chords(self):
        d = parse_diagram("dc:+1,+2,+3,+4,-1,-2,-3,-4")
        assert eval_diagram(d).vector == GraphVector({SWITCH: Fraction(3)})

    def test_single_chord_is_zero(self):
        assert eval_diagram(parse_diagram("dc:+1,-1")).is_zero

    def test_crossing_two_chords_give_tripod(self):
        d = parse_diagram("dc:+1,+2,-1,-2")
        assert eval_diagram(d).vector == GraphVector({TRIPOD: Fraction(1)})

    def test_five_chord_sample_is_zero(self):
        d = parse_diagram("dc:+1,+2,+3,+4,+5,-1,-2,-3,-4,-5")
        assert eval_diagram(d).is_zero

    def test_polarity_independence_exhaustive(self):
        for m in range(1, 5):
            for d in enumerate_diagrams(m):
                base = eval_diagram(d)
                for flips in itertools.product((False, True), repeat=m):
                    variant = d
                    for chord, flip in enumerate(flips, start=1):
                        if flip:
                            variant = variant.with_polarity_flipped(chord)
                    assert eval_diagram(variant).same_value(base)

    def test_base_point_independence(self):
        for d in enumerate_diagrams(3):
            base = eval_diagram(d)
            for k in range(1, 2 * d.m):
                assert eval_diagram(d.rotated(k)).same_value(base)

    def test_no_case2_terms_for_any_diagram(self):
        for m in range(1, 5):
            for d in enumerate_diagrams(m):
                assert not eval_diagram(d).case2_terms


class TestTrace:
    def test_disabled_by_default(self, monkeypatch):
        monkeypatch.delenv("OHTSUKI_TRACE", raising=False)
        p = parse_bracket("[1, 2][1, 3]", range(4))
        assert eval_presentation(p).trace is None

    def test_explicit_flag(self):
        p = parse_bracket("[1, 2][1, 3]", range(4))
        result = eval_presentation(p, trace=True)
        kinds = [step.kind for step in result.trace]
        assert kinds == ["pair", "single", "single"]
        assert result.trace[0].case == 3

    def test_environment_toggle(self, monkeypatch):
        monkeypatch.setenv("OHTSUKI_TRACE", "1")
        p = parse_bracket("[1, 2][1, 3]", range(4))
        assert eval_presentation(p).trace is not None
