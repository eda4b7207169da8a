"""
Testes de reprodução do log e medidas de complexidade
"""

import dataclasses
import itertools
import math

import pytest

from fluxo.models import EventLog, MeasureKind, ProcessModel, RateParams, Trace
from fluxo.utils.constants import END, START
from fluxo.utils.errors import ComplexityError, EmptyLogError, LogFormatError, ModelError
from tests.fixtures.sample_data import make_log, random_logs


def build_model(nodes, edges):
    return ProcessModel(
        activity_nodes=frozenset(nodes),
        edges=frozenset(edges),
        significance={},
        abs_freq={},
        params=RateParams(100, 100)
    )


class TestReplayTrace:

    def test_perfect_replay(self, quality):
        model = build_model({'A', 'B'}, {(START, 'A'), ('A', 'B'), ('B', END)})
        result = quality.replay_trace(model, Trace('c1', ('A', 'B')), 2)

        assert result.score == 1.0
        assert result.is_perfect

    def test_skipped_event(self, quality):
        model = build_model({'A', 'C'}, {(START, 'A'), ('A', 'C'), ('C', END)})
        result = quality.replay_trace(model, ('A', 'B', 'C'), 3)

        assert result.coverage == pytest.approx(2 / 3)
        assert result.skipped == 1
        assert result.forced_transitions == 0
        assert result.represented == ('A', 'C')
        assert result.score == pytest.approx(0.5)

    def test_forced_transition(self, quality):
        model = build_model({'A', 'B'}, {(START, 'A'), ('B', END)})
        result = quality.replay_trace(model, ('A', 'B'), 2)

        assert result.coverage == 1.0
        assert result.skipped == 0
        assert result.forced_transitions == 1
        assert result.score == pytest.approx(0.75)

    def test_missing_start_and_end_connections(self, quality):
        model = build_model({'A', 'B'}, {('A', 'B')})
        result = quality.replay_trace(model, ('A', 'B'), 2)

        assert result.forced_transitions == 2

    def test_no_represented_events(self, quality):
        model = build_model({'A'}, {(START, 'A'), ('A', END)})
        result = quality.replay_trace(model, ('B', 'C'), 3)

        assert result.coverage == 0.0
        assert result.score == 0.0

    def test_model_without_nodes(self, quality):
        with pytest.raises(ModelError):
            quality.replay_trace(build_model(set(), set()), ('A',), 1)

    def test_empty_trace(self, quality):
        with pytest.raises(LogFormatError):
            quality.replay_trace(build_model({'A'}, {(START, 'A'), ('A', END)}), (), 1)


class TestFitness:

    def test_full_model_fits_every_log(self, discovery, quality):
        for log in random_logs(seed=43, count=100, max_cases=60, max_length=20, max_alphabet=10):
            model = discovery.discover(log, RateParams(100, 100))
            assert quality.fitness(model, log) == 1.0

    def test_missing_interior_edge(self, quality):
        log = make_log(('ABC', 4))
        model = build_model({'A', 'B', 'C'}, {(START, 'A'), ('A', 'B'), ('C', END)})

        assert quality.fitness(model, log) == pytest.approx(1 - (1 / 3) / 3)

    def test_model_without_nodes(self, quality):
        with pytest.raises(ModelError):
            quality.fitness(build_model(set(), set()), make_log(('A', 1)))

    def test_empty_log(self, quality):
        with pytest.raises(EmptyLogError):
            quality.fitness(build_model({'A'}, {(START, 'A'), ('A', END)}), EventLog(()))

    def test_fitness_in_unit_interval(self, discovery, quality):
        for log in random_logs(seed=47, count=20):
            model = discovery.discover(log, RateParams(40, 10))
            if model.n:
                assert 0.0 <= quality.fitness(model, log) <= 1.0

    def test_adding_an_edge_never_decreases_fitness(self, discovery, quality):
        for log in random_logs(seed=53, count=50, max_alphabet=5):
            model = discovery.discover(log, RateParams(70, 30))
            if not model.n:
                continue

            baseline = quality.fitness(model, log)
            sources = sorted(model.activity_nodes | {START})
            targets = sorted(model.activity_nodes | {END})
            missing = [edge for edge in itertools.product(sources, targets) if edge not in model.edges]

            for edge in missing[:5]:
                extended = dataclasses.replace(model, edges=model.edges | {edge})
                assert quality.fitness(extended, log) >= baseline - 1e-12


class TestComplexity:

    def test_average_degree(self, quality):
        model = build_model({'A', 'B'}, {
            (START, 'A'), ('A', 'B'), ('B', 'A'), ('A', 'A'), ('B', END), ('A', END)
        })
        assert quality.complexity(model, MeasureKind.AD) == 1.5

    def test_complete_graph(self, quality):
        nodes = ['A', 'B', START, END]
        model = build_model({'A', 'B'}, set(itertools.product(nodes, repeat=2)))

        assert quality.complexity(model, MeasureKind.KN) == 1
        assert abs(quality.complexity(model, MeasureKind.H)) <= 1e-12

    def test_graph_ratio_ignores_self_loops(self, quality):
        model = build_model({'A'}, {(START, 'A'), ('A', 'A'), ('A', END)})
        assert quality.complexity(model, 'Kn') == pytest.approx(2 / 6)

    def test_entropy(self, quality):
        model = build_model({'A', 'B'}, {(START, 'A'), ('A', 'B'), ('B', END), ('B', 'A')})
        p = 4 / 16
        expected = -(p * math.log2(p) + (1 - p) * math.log2(1 - p))

        assert quality.complexity(model, 'H') == pytest.approx(expected)
        assert quality.complexity(model, 'H', base=math.e) == pytest.approx(expected * math.log(2))

    def test_displayed_ratio(self, quality):
        log = make_log(('ABCD', 1), ('DA', 1))
        model = build_model({'A', 'B'}, {(START, 'A'), ('A', 'B'), ('B', 'A'), ('B', END)})

        assert log.num_unique_activities == 4
        assert log.num_unique_transitions == 4
        assert quality.complexity(model, MeasureKind.R, log) == 0.5

    def test_displayed_ratio_requires_log(self, quality):
        with pytest.raises(ComplexityError):
            quality.complexity(build_model({'A'}, {(START, 'A'), ('A', END)}), 'R')

    def test_displayed_ratio_without_transitions(self, quality):
        with pytest.raises(ComplexityError):
            quality.complexity(build_model({'A'}, {(START, 'A'), ('A', END)}), 'R', make_log(('A', 2)))


class TestScaledComplexity:

    @pytest.mark.parametrize('kind', list(MeasureKind))
    def test_reference_model_scales_to_one(self, discovery, quality, nested_log, kind):
        model = discovery.discover(nested_log, RateParams(100, 100))
        assert quality.scaled_complexity(model, kind, nested_log) == 1.0

    def test_clipped_to_one(self, quality):
        log = make_log(('AB', 1))
        model = build_model({'A', 'B'}, {
            (START, 'A'), ('A', 'B'), ('B', 'A'), ('A', 'A'), ('B', END), ('A', END)
        })
        value = quality.complexity_value(model, 'AD', log)

        assert value.raw == 1.5
        assert value.reference == 0.75
        assert value.ratio == 2.0
        assert value.scaled == 1.0

    def test_ratio(self, discovery, quality):
        log = make_log(('AB', 3), ('ACB', 1))
        model = discovery.discover(log, RateParams(0, 0))
        value = quality.complexity_value(model, 'AD', log)

        assert value.raw == pytest.approx(3 / 4)
        assert value.reference == pytest.approx(5 / 5)
        assert value.scaled == pytest.approx(0.75)

    def test_reference_is_cached(self, quality, nested_log):
        first = quality.reference_model(nested_log)
        assert quality.reference_model(nested_log) is first

    def test_entropy_base_invariance(self, discovery, quality):
        for log in random_logs(seed=59, count=20):
            model = discovery.discover(log, RateParams(50, 50))
            base_two = quality.scaled_complexity(model, 'H', log, base=2)
            natural = quality.scaled_complexity(model, 'H', log, base=math.e)

            assert abs(base_two - natural) <= 1e-12

    def test_measure_summary(self, quality, nested_log):
        summary = quality.measure_summary(nested_log, RateParams(100, 100))

        assert summary['fitness'] == 1.0
        assert summary['nodes'] == 8
        assert summary['edges'] == 12
        assert set(summary) == {'r_a', 'r_t', 'fitness', 'nodes', 'edges', 'AD', 'H', 'Kn', 'R'}
        assert summary['AD'] == pytest.approx(12 / 8)
