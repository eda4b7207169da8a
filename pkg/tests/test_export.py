"""
Testes de exportação: DOT, JSON, paisagem, ciclos e combinações
"""

import io
import json

import pandas as pd
import pydot
import pytest

from fluxo.models import AggregatedModel, ObjectiveConfig, RateParams
from fluxo.utils.constants import LANDSCAPE_COLUMNS
from fluxo.utils.errors import LogFormatError
from tests.fixtures.sample_data import make_log


def parse_dot(text):
    graphs = pydot.graph_from_dot_data(text)
    assert graphs is not None and len(graphs) == 1
    return graphs[0]


def graph_nodes(graph):
    return [node for node in graph.get_nodes() if node.get_name() not in ('node', 'edge', 'graph')]


class TestRenderDot:

    def test_structure(self, discovery, exporter, chain_log):
        model = discovery.discover(chain_log, RateParams(100, 100))
        source = exporter.render_dot(model)
        graph = parse_dot(source)

        assert source.startswith('digraph processo {')
        assert len(graph_nodes(graph)) == 5
        assert len(graph.get_edges()) == 4
        assert 'fillcolor=green' in source
        assert 'fillcolor=red' in source

    def test_repair_edges_are_dashed(self, discovery, exporter):
        model = discovery.discover(make_log(('AB', 3), ('ACB', 1)), RateParams(0, 0))
        source = exporter.render_dot(model)

        assert source.count('style=dashed') == 1
        parse_dot(source)

    def test_meta_states(self, metastates, exporter, nested_log):
        model = metastates.aggregate(nested_log, RateParams(100, 100), 'outer', 0.5)
        source = exporter.render_dot(model)

        assert source.count('shape=box3d') == 2
        assert '[B·C·D]' in source
        assert len(graph_nodes(parse_dot(source))) == 10

    def test_deterministic(self, discovery, exporter, nested_log):
        model = discovery.discover(nested_log, RateParams(60, 40))
        assert exporter.render_dot(model) == exporter.render_dot(model)

    def test_pen_widths(self, exporter):
        assert exporter.pen_widths({('A', 'B'): 1, ('B', 'C'): 3, ('C', 'D'): 5}) == {
            ('A', 'B'): 1, ('B', 'C'): 3, ('C', 'D'): 5
        }
        assert exporter.pen_widths({('A', 'B'): 4, ('B', 'C'): 4}) == {('A', 'B'): 1, ('B', 'C'): 1}
        assert exporter.pen_widths({}) == {}


class TestModelJson:

    def test_content(self, discovery, exporter):
        model = discovery.discover(make_log(('AB', 3), ('ACB', 1)), RateParams(0, 0))
        data = json.loads(exporter.model_to_json(model))

        assert data['params'] == {'r_a': 0.0, 'r_t': 0.0}
        assert data['num_cases'] == 4
        assert [node['id'] for node in data['nodes']] == ['A', 'B']
        assert {(edge['source'], edge['target']) for edge in data['edges'] if edge['repair']} == {('A', 'B')}
        assert 'aggregation' not in data

    def test_round_trip_is_stable(self, discovery, exporter, nested_log):
        model = discovery.discover(nested_log, RateParams(50, 50))
        text = exporter.model_to_json(model)
        restored = exporter.model_from_json(text)

        assert restored.activity_nodes == model.activity_nodes
        assert restored.edges == model.edges
        assert restored.repair_edges == model.repair_edges
        assert exporter.model_to_json(restored) == text

    def test_aggregated_round_trip(self, metastates, exporter, nested_log):
        model = metastates.aggregate(nested_log, RateParams(100, 100), 'inner_all', 0.5)
        text = exporter.model_to_json(model)
        restored = exporter.model_from_json(text)

        assert isinstance(restored, AggregatedModel)
        assert restored.tokens == model.tokens
        assert restored.v_plus == {'B', 'C', 'D'}
        assert restored.replay_edges() == model.replay_edges()
        assert json.loads(text)['aggregation']['mode'] == 'inner_all'

    @pytest.mark.parametrize('text', ['{', '{"params": {}}', '[]'])
    def test_invalid(self, exporter, text):
        with pytest.raises(LogFormatError):
            exporter.model_from_json(text)


class TestLandscapeExport:

    @pytest.fixture
    def landscape(self, optimizer, nested_log):
        return optimizer.grid_search(nested_log, ObjectiveConfig(grid_step=50))

    def test_csv(self, exporter, landscape):
        lines = exporter.landscape_csv(landscape).splitlines()

        assert lines[0] == ','.join(LANDSCAPE_COLUMNS)
        assert len(lines) == 10
        assert lines[1].startswith('0,0,')
        assert lines[-1].startswith('100,100,')

    def test_extended_frame(self, exporter, landscape):
        frame = exporter.landscape_frame(landscape, extended=True)

        assert list(frame.columns) == LANDSCAPE_COLUMNS + ['complexity_raw', 'cycles']
        assert frame['cycles'].max() == 3

    def test_xlsx(self, exporter, landscape, optimizer, nested_log, tmp_path):
        path = tmp_path / 'paisagem.xlsx'
        baseline = optimizer.baseline(nested_log, landscape.config)
        exporter.write_landscape_xlsx(landscape, str(path), baseline)

        sheets = pd.read_excel(path, sheet_name=None)
        assert list(sheets) == ['Paisagem', 'Resumo']
        assert len(sheets['Paisagem']) == 9
        assert list(sheets['Resumo']['modelo']) == ['ótimo', 'referência 50/50']

    def test_summary(self, exporter, landscape, optimizer, nested_log):
        text = exporter.format_summary(
            landscape,
            optimizer.baseline(nested_log, landscape.config),
            optimizer.cycle_summary(nested_log, landscape)
        )

        assert text.startswith('Medida: AD')
        assert '50/50: r_a=50 r_t=50' in text
        assert 'Fronteira superior (100/100): 8/12' in text
        assert text.endswith('\n')


class TestCyclesExport:

    def test_order_and_markers(self, metastates, exporter, nested_log):
        cycles = metastates.cycles_search(nested_log)
        frame = exporter.cycles_frame(cycles, metastates.find_states(cycles, nested_log.num_traces, 0.5))

        assert list(frame['cycle']) == ['B C D', 'B C', 'F']
        assert list(frame['meta_state']) == ['sim', 'sim', 'não']

    def test_csv(self, metastates, exporter, ab_log):
        cycles = metastates.cycles_search(ab_log)
        header = 'cycle,length,abs_freq,case_freq,significance,meta_state\n'
        states = {t: metastates.find_states(cycles, ab_log.num_traces, t) for t in (0.5, 0.7)}

        assert exporter.cycles_csv(cycles, states[0.5]) == header + 'A B,2,2,2,0.666667,sim\n'
        assert exporter.cycles_csv(cycles, states[0.7]) == header + 'A B,2,2,2,0.666667,não\n'

    def test_marker_agrees_with_meta_states_at_threshold(self, metastates, exporter):
        log = make_log(('ABA', 3), ('AC', 7))
        cycles = metastates.cycles_search(log)
        threshold = 0.1 * 3
        states = metastates.find_states(cycles, log.num_traces, threshold)

        assert [state.body for state in states] == [('A', 'B')]
        assert list(exporter.cycles_frame(cycles, states)['meta_state']) == ['sim']

    def test_empty(self, exporter):
        frame = pd.read_csv(io.StringIO(exporter.cycles_csv({}, ())))
        assert frame.empty


class TestCombinationExport:

    def test_csv_and_dot(self, metastates, exporter):
        log = make_log(('ABCBD', 1), ('ABCD', 1))
        cmap = metastates.combination_map(log, ObjectiveConfig(grid_step=50).grid(), 0.5)
        frame = pd.read_csv(io.StringIO(exporter.combination_csv(cmap)))

        assert len(frame) == 9
        assert list(frame.loc[frame['r_t'] == 0, 'combination']) == ['C1', 'C1', 'C1']
        assert set(frame.loc[frame['r_t'] > 0, 'meta_states']) == {'BC'}

        source = exporter.render_combination_dot(metastates.combination_graph(cmap))
        graph = parse_dot(source)
        assert len(graph.get_edges()) == 1
        assert 'c1 -> c2' in source
        assert '+BC' in source
