"""
Testes da busca em grade e da paisagem de Q
"""

import pytest

from fluxo.models import AggregationMode, EventLog, MeasureKind, ObjectiveConfig, RateParams
from fluxo.utils.errors import EmptyLogError
from tests.fixtures.sample_data import make_log, random_logs


class TestEvaluatePoint:

    def test_full_rates(self, optimizer):
        config = ObjectiveConfig(lam=0.6, grid_step=50)
        logs = random_logs(seed=71, count=100, max_cases=500, max_length=30, max_alphabet=15)
        for log in logs:
            cell = optimizer.evaluate_point(log, RateParams(100, 100), config)

            assert cell.fitness == 1.0
            assert cell.complexity_scaled == 1.0
            assert cell.objective == pytest.approx(1 - config.lam, abs=1e-12)

    def test_objective_formula(self, optimizer, nested_log):
        config = ObjectiveConfig(lam=0.3, measure='H')
        cell = optimizer.evaluate_point(nested_log, RateParams(50, 50), config)

        expected = 0.7 * cell.fitness + 0.3 * (1 - cell.complexity_scaled)
        assert cell.objective == pytest.approx(expected)
        assert 0.0 <= cell.objective <= 1.0

    def test_model_without_nodes(self, optimizer):
        log = make_log(('AB', 1), ('CD', 1))
        cell = optimizer.evaluate_point(log, RateParams(0, 0), ObjectiveConfig())

        assert cell.fitness == 0.0
        assert cell.complexity_scaled == 1.0
        assert cell.objective == 0.0
        assert cell.nodes == 2
        assert cell.edges == 0

    def test_cycle_counts(self, optimizer, nested_log):
        cell = optimizer.evaluate_point(nested_log, RateParams(100, 100), ObjectiveConfig())

        assert cell.cycles == 3
        assert cell.meta_states == 2
        assert cell.meta_state_bodies == {('B', 'C'), ('B', 'C', 'D')}

    def test_aggregated_landscape(self, optimizer, nested_log):
        config = ObjectiveConfig(landscape_mode=AggregationMode.INNER_FREQ)
        cell = optimizer.evaluate_point(nested_log, RateParams(100, 100), config)

        assert cell.nodes == 5 + 2
        assert cell.edges == 8
        assert cell.fitness == 1.0


class TestGridSearch:

    def test_grid_size(self, optimizer, nested_log):
        landscape = optimizer.grid_search(nested_log, ObjectiveConfig(grid_step=50))

        assert len(landscape) == 9
        assert [cell.params for cell in landscape][:2] == [RateParams(0, 0), RateParams(0, 50)]
        assert landscape.reference_complexity == pytest.approx(12 / 8)

    @pytest.mark.parametrize('lam', [0.0, 1.0])
    def test_extreme_weights(self, optimizer, lam):
        for log in random_logs(seed=73, count=5):
            landscape = optimizer.grid_search(log, ObjectiveConfig(lam=lam, grid_step=25))

            for cell in landscape:
                if lam == 0.0:
                    assert cell.objective == pytest.approx(cell.fitness)
                else:
                    assert cell.objective == pytest.approx(1 - cell.complexity_scaled)

    def test_objective_range_and_optimum(self, optimizer):
        for log in random_logs(seed=79, count=5):
            landscape = optimizer.grid_search(log, ObjectiveConfig(grid_step=25))

            assert all(0.0 <= cell.objective <= 1.0 for cell in landscape)
            assert landscape.optimum.objective == max(cell.objective for cell in landscape)

    def test_deterministic(self, optimizer, nested_log):
        config = ObjectiveConfig(grid_step=25)
        assert optimizer.grid_search(nested_log, config).cells == optimizer.grid_search(nested_log, config).cells

    def test_parallel_evaluation_matches_serial(self, optimizer, nested_log):
        serial = optimizer.grid_search(nested_log, ObjectiveConfig(grid_step=50))
        parallel = optimizer.grid_search(nested_log, ObjectiveConfig(grid_step=50, max_workers=2))

        assert parallel.cells == serial.cells
        assert parallel.optimum == serial.optimum

    @pytest.mark.parametrize('measure', list(MeasureKind))
    @pytest.mark.parametrize('grid_step', [25, 5])
    def test_noise_is_filtered_at_optimum(self, optimizer, noisy_log, measure, grid_step):
        landscape = optimizer.grid_search(noisy_log, ObjectiveConfig(measure=measure, grid_step=grid_step))

        assert landscape.optimum.params == RateParams(100, 0)
        assert landscape.optimum.edges == 11
        assert landscape.optimum.fitness == pytest.approx(1 - 0.75 / 36)
        assert landscape.optimum.objective > landscape[RateParams(100, 100)].objective

    def test_outer_landscape_keeps_cache_size(self, stats, optimizer, nested_log):
        config = ObjectiveConfig(grid_step=50, landscape_mode='outer')
        optimizer.grid_search(nested_log, config)
        size = len(stats.cache)

        optimizer.grid_search(nested_log, config)
        assert len(stats.cache) == size

    def test_empty_log(self, optimizer):
        with pytest.raises(EmptyLogError):
            optimizer.grid_search(EventLog(()), ObjectiveConfig())


class TestOptimizeAndAggregate:

    def test_final_model_at_optimum(self, optimizer, nested_log):
        config = ObjectiveConfig(grid_step=50, mode='outer')
        landscape, model = optimizer.optimize_and_aggregate(nested_log, config)

        assert model.params == landscape.optimum.params
        assert model.mode is AggregationMode.OUTER

    def test_outer_mode_adds_one_token_node(self, optimizer, discovery):
        log = make_log(('ABCBD', 3), ('ABCD', 1))
        config = ObjectiveConfig(lam=0.0, grid_step=25, mode='outer')
        landscape, model = optimizer.optimize_and_aggregate(log, config)
        plain = discovery.discover(log, landscape.optimum.params)

        assert landscape.optimum.params == RateParams(100, 75)
        assert model.tokens == {'[B·C]'}
        assert model.nodes == plain.nodes | model.tokens
        assert len(model.nodes) == len(plain.nodes) + 1

    def test_baseline(self, optimizer, nested_log):
        cell = optimizer.baseline(nested_log, ObjectiveConfig())
        assert cell.params == RateParams(50, 50)

    def test_cycle_summary(self, optimizer, nested_log):
        landscape = optimizer.grid_search(nested_log, ObjectiveConfig(grid_step=50))
        summary = optimizer.cycle_summary(nested_log, landscape)

        assert (summary.upper_nodes, summary.upper_edges) == (8, 12)
        assert (summary.lower_nodes, summary.lower_edges) == (7, 7)
        assert summary.cycles_max == 3
        assert summary.cycles_min == 0
        assert summary.meta_states_max == 2
        assert summary.meta_states_min == 0
        assert summary.cycles_min <= summary.cycles_mean <= summary.cycles_max

    def test_cycle_summary_outside_grid(self, optimizer, nested_log):
        landscape = optimizer.grid_search(nested_log, ObjectiveConfig(grid_step=50))
        cells = {params: cell for params, cell in landscape.cells.items()
                 if params not in (RateParams(0, 0), RateParams(100, 100))}
        partial = type(landscape)(cells=cells, optimum=landscape.optimum, config=landscape.config)

        summary = optimizer.cycle_summary(nested_log, partial)
        assert (summary.upper_nodes, summary.lower_nodes) == (8, 7)
