"""
Testes dos modelos de domínio
"""

import pytest

from fluxo.models import (
    AggregatedModel, AggregationMode, Combination, CombinationMap, Cycle, EventLog, Landscape,
    LandscapeCell, MeasureKind, MetaState, ObjectiveConfig, ProcessModel, RateParams, Trace
)
from fluxo.utils.constants import END, START
from fluxo.utils.errors import LogFormatError, ValidationError
from fluxo.utils.helpers import floor_mean, format_float, round_float, short_label, token_label
from tests.fixtures.sample_data import EventLogFactory, TraceFactory, make_log


def build_model(nodes, edges, **kwargs):
    return ProcessModel(
        activity_nodes=frozenset(nodes),
        edges=frozenset(edges),
        significance={},
        abs_freq={},
        params=RateParams(100, 100),
        **kwargs
    )


class TestEventLog:

    def test_derived_counts(self):
        log = make_log(('AB', 1), ('A', 1))

        assert log.sequences == (('A', 'B'), ('A',))
        assert log.alphabet == {'A', 'B'}
        assert log.num_traces == 2
        assert log.num_unique_activities == 2
        assert log.num_unique_transitions == 1
        assert log.total_events == 3

    def test_invariants_on_factory_log(self):
        log = EventLogFactory()

        assert len(log) == 3
        assert log.total_events == sum(len(trace) for trace in log)
        assert log.num_unique_transitions <= log.num_unique_activities ** 2
        assert log.variants() == {('A', 'B', 'C'): 3}

    def test_factory_case_ids_are_unique(self):
        traces = TraceFactory.build_batch(4)
        assert len({trace.case_id for trace in traces}) == 4

    def test_empty_trace_rejected(self):
        with pytest.raises(LogFormatError):
            Trace('c1', ())

    def test_trace_helpers(self):
        trace = Trace('c1', ('A', 'B', 'B'))

        assert trace.transitions == (('A', 'B'), ('B', 'B'))
        assert trace.first == 'A'
        assert trace.last == 'B'

    def test_empty_log(self):
        log = EventLog(())
        assert log.is_empty
        assert log.alphabet == frozenset()


class TestRateParams:

    def test_thresholds(self):
        params = RateParams(100, 5)

        assert params.activity_threshold == 0.0
        assert params.transition_threshold == pytest.approx(0.95)
        assert str(params) == '100/5'

    @pytest.mark.parametrize('rates', [(-1, 50), (50, 101), ('x', 10)])
    def test_out_of_range(self, rates):
        with pytest.raises(ValidationError):
            RateParams(*rates)

    def test_ordering(self):
        assert sorted([RateParams(5, 0), RateParams(0, 5), RateParams(0, 0)]) == [
            RateParams(0, 0), RateParams(0, 5), RateParams(5, 0)
        ]


class TestProcessModel:

    def test_counts_include_sentinels_only_in_edges(self):
        model = build_model({'A', 'B'}, {(START, 'A'), ('A', 'B'), ('B', END)})

        assert model.n == 2
        assert model.m == 3
        assert model.nodes == {'A', 'B', START, END}
        assert model.tokens == frozenset()

    def test_reachability_helpers(self):
        model = build_model({'A', 'B', 'C'}, {(START, 'A'), ('A', END), ('B', 'C')})

        assert model.unreachable_nodes() == {'B', 'C'}
        assert model.dead_end_nodes() == {'B', 'C'}
        assert not model.is_reachable()

    def test_replay_view_of_plain_model(self):
        edges = {(START, 'A'), ('A', END)}
        model = build_model({'A'}, edges)

        assert model.replay_nodes() == {'A'}
        assert model.replay_edges() == edges


class TestCycles:

    def test_cycle_transitions_include_closing_edge(self):
        cycle = Cycle(('B', 'C', 'D'), 3, 2, 0.5)

        assert cycle.transitions == (('B', 'C'), ('C', 'D'), ('D', 'B'))
        assert cycle.label == 'B C D'

    def test_self_loop_cycle(self):
        cycle = Cycle(('A',), 1, 1, 1.0)
        assert cycle.transitions == (('A', 'A'),)

    def test_meta_state_requires_two_activities(self):
        with pytest.raises(ValidationError):
            MetaState(('A',), 1, 1, 1.0)

    def test_token_and_priority(self):
        short = MetaState(('B', 'C'), 4, 3, 0.6)
        long = MetaState(('B', 'C', 'D'), 4, 2, 0.4)

        assert short.token == '[B·C]'
        assert sorted([short, long], key=lambda state: state.priority_key) == [long, short]


class TestAggregatedModel:

    def test_edge_to_token_expands_over_constituents(self):
        state = MetaState(('B', 'C'), 2, 2, 1.0)
        model = AggregatedModel(
            activity_nodes=frozenset({'A', state.token}),
            edges=frozenset({(START, 'A'), ('A', state.token), (state.token, END)}),
            significance={}, abs_freq={}, params=RateParams(100, 100),
            mode=AggregationMode.OUTER, meta_states=(state,)
        )

        assert model.tokens == {'[B·C]'}
        assert model.replay_nodes() == {'A', 'B', 'C'}
        assert model.replay_edges() == {
            (START, 'A'), ('A', 'B'), ('A', 'C'), ('B', END), ('C', END), ('B', 'C'), ('C', 'B')
        }

    def test_state_to_state_edge(self):
        first = MetaState(('B', 'C'), 2, 2, 1.0)
        second = MetaState(('D', 'E'), 2, 2, 1.0)
        model = AggregatedModel(
            activity_nodes=frozenset({first.token, second.token}),
            edges=frozenset({(first.token, second.token)}),
            significance={}, abs_freq={}, params=RateParams(100, 100),
            meta_states=(first, second)
        )

        assert model.replay_edges() == {
            ('B', 'D'), ('B', 'E'), ('C', 'D'), ('C', 'E'),
            ('B', 'C'), ('C', 'B'), ('D', 'E'), ('E', 'D')
        }

    def test_without_meta_states_edges_unchanged(self):
        edges = frozenset({(START, 'A'), ('A', END)})
        model = AggregatedModel(
            activity_nodes=frozenset({'A'}), edges=edges,
            significance={}, abs_freq={}, params=RateParams(50, 50)
        )

        assert model.replay_edges() == edges
        assert model.replay_edges() == model.replay_edges()

    def test_inner_modes(self):
        assert [mode for mode in AggregationMode if mode.is_inner] == [
            AggregationMode.INNER_ALL, AggregationMode.INNER_FREQ
        ]
        assert [kind for kind in MeasureKind if not kind.includes_sentinels] == [MeasureKind.R]


class TestCombinations:

    def test_labels(self):
        empty = Combination(1, (), (RateParams(0, 0),), 0.5)
        pair = Combination(
            2, (MetaState(('C', 'F'), 1, 1, 1.0), MetaState(('H', 'D'), 1, 1, 1.0)),
            (RateParams(0, 100),), 0.5
        )

        assert empty.name == 'C1'
        assert empty.label == '∅'
        assert pair.label == 'CF, HD'
        assert pair.bodies == {('C', 'F'), ('H', 'D')}

    def test_lookup(self):
        state = MetaState(('B', 'C'), 1, 1, 1.0)
        combinations = (
            Combination(1, (), (RateParams(0, 0),), 0.5),
            Combination(2, (state,), (RateParams(0, 100),), 0.5)
        )
        cmap = CombinationMap({RateParams(0, 0): 1, RateParams(0, 100): 2}, combinations)

        assert len(cmap) == 2
        assert cmap[RateParams(0, 100)] == {state}
        assert cmap.combination_at(RateParams(0, 0)).name == 'C1'


class TestObjectiveConfig:

    def test_defaults(self):
        config = ObjectiveConfig()

        assert config.lam == 0.6
        assert config.measure is MeasureKind.AD
        assert config.mode is AggregationMode.NONE
        assert len(config.grid()) == 441

    def test_grid_order(self):
        grid = ObjectiveConfig(grid_step=50).grid()

        assert len(grid) == 9
        assert grid[:3] == [RateParams(0, 0), RateParams(0, 50), RateParams(0, 100)]
        assert grid == sorted(grid)

    @pytest.mark.parametrize('kwargs', [
        {'lam': 1.5},
        {'grid_step': 7},
        {'grid_step': 0},
        {'measure': 'X'},
        {'mode': 'sideways'},
        {'threshold': 0},
        {'log_base': 1},
        {'max_workers': 0},
    ])
    def test_invalid_values(self, kwargs):
        with pytest.raises(ValidationError):
            ObjectiveConfig(**kwargs)

    def test_from_config_ignores_missing_overrides(self, app_config):
        config = ObjectiveConfig.from_config(app_config, lam=None, measure='H')

        assert config.lam == app_config.LAMBDA
        assert config.measure is MeasureKind.H
        assert config.grid_step == app_config.GRID_STEP


class TestLandscape:

    def test_iteration_order_and_optimum_key(self):
        def cell(r_a, r_t, objective):
            return LandscapeCell(RateParams(r_a, r_t), 1.0, 0.0, objective, 2, 1, 0)

        cells = {c.params: c for c in (cell(100, 0, 0.8), cell(0, 100, 0.8), cell(0, 0, 0.5))}
        optimum = min(cells.values(), key=lambda c: c.optimum_key)
        landscape = Landscape(cells=cells, optimum=optimum, config=ObjectiveConfig())

        assert [c.params for c in landscape] == [RateParams(0, 0), RateParams(0, 100), RateParams(100, 0)]
        assert optimum.params == RateParams(100, 0)


class TestHelpers:

    def test_number_formatting(self):
        assert format_float(2 / 3) == '0.666667'
        assert round_float(2 / 3) == 0.666667

    def test_labels(self):
        assert token_label(('B', 'C')) == '[B·C]'
        assert short_label(('C', 'F')) == 'CF'
        assert short_label(('Triagem', 'Exame')) == 'Triagem·Exame'

    def test_floor_mean(self):
        assert floor_mean([1, 2, 2]) == 1
        assert floor_mean([]) == 0
