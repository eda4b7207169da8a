"""
ExportService - Serialização de modelos, paisagens, ciclos e combinações
"""

import json
import logging
import os
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

import networkx as nx
import pandas as pd
from graphviz import Digraph

from fluxo.config import RenderConfig
from fluxo.models import (
    AggregatedModel, AggregationMode, CombinationMap, Cycle, CycleSummary, Landscape,
    LandscapeCell, MetaState, ProcessModel, RateParams
)
from fluxo.utils.constants import (
    END, FLOAT_DIGITS, LANDSCAPE_COLUMNS, LOG_ACTIONS, MESSAGES, SENTINELS, START
)
from fluxo.utils.decorators import log_execution
from fluxo.utils.errors import LogFormatError
from fluxo.utils.helpers import display_label, format_float, round_float

logger = logging.getLogger(__name__)

FLOAT_FORMAT = f'%.{FLOAT_DIGITS}g'

# Quebra de linha centralizada nos rótulos DOT
LINE_BREAK = '\\n'


class ExportService:
    """Service para exportação de resultados"""

    # DOT

    @staticmethod
    def pen_widths(frequencies: Mapping[Tuple[str, str], int]) -> Dict[Tuple[str, str], int]:
        """Espessura das arestas em faixas discretas da frequência absoluta"""
        if not frequencies:
            return {}
        low, high = min(frequencies.values()), max(frequencies.values())
        widths = RenderConfig.PEN_WIDTHS
        result = {}
        for edge, value in frequencies.items():
            index = 0 if high == low else round((len(widths) - 1) * (value - low) / (high - low))
            result[edge] = widths[index]
        return result

    def render_dot(self, model: ProcessModel, name: str = 'processo') -> str:
        """
        Renderizar o mapa de processo em DOT

        Nós e arestas são emitidos em ordem lexicográfica; o início (verde)
        mostra a quantidade de casos e o fim (vermelho) a de casos
        concluídos. Arestas de reparo são tracejadas e meta-estados usam
        nós compostos.

        Args:
            model: Modelo de processo
            name: Nome do grafo

        Returns:
            Texto DOT
        """
        graph = Digraph(
            name=name,
            graph_attr={'rankdir': 'TB', 'fontname': RenderConfig.FONT_NAME},
            node_attr={'fontname': RenderConfig.FONT_NAME},
            edge_attr={'fontname': RenderConfig.FONT_NAME, 'color': RenderConfig.EDGE_COLOR}
        )

        identifiers = {node: f'n{index}' for index, node in enumerate(sorted(model.nodes))}
        tokens = model.tokens

        for node in sorted(model.nodes):
            frequency = model.abs_freq.get(node, 0)
            label = f'{display_label(node)}{LINE_BREAK}{frequency}'

            if node in SENTINELS:
                graph.node(
                    identifiers[node], label,
                    shape=RenderConfig.SENTINEL_SHAPE, style='filled',
                    fillcolor=RenderConfig.START_FILL if node == START else RenderConfig.END_FILL,
                    fontcolor=RenderConfig.SENTINEL_FONT_COLOR
                )
            elif node in tokens:
                graph.node(
                    identifiers[node], label,
                    shape=RenderConfig.TOKEN_SHAPE, style=RenderConfig.TOKEN_STYLE,
                    fillcolor=RenderConfig.TOKEN_FILL,
                    peripheries=str(RenderConfig.TOKEN_PERIPHERIES)
                )
            else:
                graph.node(
                    identifiers[node], label,
                    shape=RenderConfig.NODE_SHAPE, style=RenderConfig.NODE_STYLE,
                    fillcolor=RenderConfig.NODE_FILL
                )

        widths = self.pen_widths({edge: model.abs_freq.get(edge, 0) for edge in model.edges})
        for edge in sorted(model.edges):
            attributes = {'label': str(model.abs_freq.get(edge, 0)), 'penwidth': str(widths[edge])}
            if model.is_repair_edge(edge):
                attributes['style'] = RenderConfig.REPAIR_STYLE
            graph.edge(identifiers[edge[0]], identifiers[edge[1]], **attributes)

        return graph.source

    # JSON

    def model_to_dict(self, model: ProcessModel) -> Dict:
        """
        Converter modelo em dicionário serializável

        Valores reais são arredondados para 6 dígitos significativos.
        """
        data = {
            'params': {
                'r_a': round_float(model.params.activity_rate),
                'r_t': round_float(model.params.transition_rate)
            },
            'num_cases': model.num_cases,
            'nodes': [
                {
                    'id': node,
                    'significance': round_float(model.significance[node]),
                    'abs_freq': int(model.abs_freq[node])
                }
                for node in sorted(model.activity_nodes)
            ],
            'edges': [
                {
                    'source': source,
                    'target': target,
                    'significance': round_float(model.significance[(source, target)]),
                    'abs_freq': int(model.abs_freq[(source, target)]),
                    'repair': model.is_repair_edge((source, target))
                }
                for source, target in sorted(model.edges)
            ]
        }

        if isinstance(model, AggregatedModel):
            data['aggregation'] = {
                'mode': model.mode.value,
                'meta_states': [
                    {
                        'body': list(state.body),
                        'abs_freq': state.abs_freq,
                        'case_freq_count': state.case_freq_count,
                        'significance': round_float(state.significance)
                    }
                    for state in model.meta_states
                ],
                'v_plus': sorted(model.v_plus),
                'v_minus': sorted(model.v_minus),
                'rebuilt_edges': [list(edge) for edge in sorted(model.rebuilt_edges)]
            }

        return data

    def model_from_dict(self, data: Dict) -> ProcessModel:
        """
        Reconstruir modelo a partir do dicionário

        Raises:
            LogFormatError: estrutura inválida
        """
        try:
            params = RateParams(data['params']['r_a'], data['params']['r_t'])
            num_cases = int(data['num_cases'])

            significance: Dict = {START: 1.0, END: 1.0}
            abs_freq: Dict = {START: num_cases, END: num_cases}
            nodes = set()
            for node in data['nodes']:
                nodes.add(node['id'])
                significance[node['id']] = node['significance']
                abs_freq[node['id']] = node['abs_freq']

            edges = set()
            repair = set()
            for item in data['edges']:
                edge = (item['source'], item['target'])
                edges.add(edge)
                significance[edge] = item['significance']
                abs_freq[edge] = item['abs_freq']
                if item['repair']:
                    repair.add(edge)

            fields = {
                'activity_nodes': frozenset(nodes),
                'edges': frozenset(edges),
                'significance': significance,
                'abs_freq': abs_freq,
                'params': params,
                'repair_edges': frozenset(repair),
                'num_cases': num_cases
            }

            aggregation = data.get('aggregation')
            if aggregation is None:
                return ProcessModel(**fields)

            return AggregatedModel(
                mode=AggregationMode(aggregation['mode']),
                meta_states=tuple(
                    MetaState(tuple(state['body']), state['abs_freq'], state['case_freq_count'],
                              state['significance'])
                    for state in aggregation['meta_states']
                ),
                v_plus=frozenset(aggregation['v_plus']),
                v_minus=frozenset(aggregation['v_minus']),
                rebuilt_edges=frozenset(tuple(edge) for edge in aggregation['rebuilt_edges']),
                **fields
            )

        except (KeyError, TypeError, ValueError) as e:
            raise LogFormatError(f'Modelo JSON inválido: {e}')

    def model_to_json(self, model: ProcessModel) -> str:
        return json.dumps(self.model_to_dict(model), sort_keys=True, indent=2, ensure_ascii=False) + '\n'

    def model_from_json(self, text: str) -> ProcessModel:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise LogFormatError(f'JSON inválido: {e}')
        return self.model_from_dict(data)

    # Paisagem

    def landscape_frame(self, landscape: Landscape, extended: bool = False) -> pd.DataFrame:
        """
        Paisagem como tabela, uma linha por célula (r_a, r_t crescentes)

        Args:
            landscape: Paisagem avaliada
            extended: Inclui complexidade bruta e contagem de ciclos

        Returns:
            DataFrame
        """
        columns = list(LANDSCAPE_COLUMNS)
        if extended:
            columns += ['complexity_raw', 'cycles']

        rows = [
            {
                'r_a': cell.r_a,
                'r_t': cell.r_t,
                'fitness': cell.fitness,
                'complexity_scaled': cell.complexity_scaled,
                'objective': cell.objective,
                'nodes': cell.nodes,
                'edges': cell.edges,
                'meta_states': cell.meta_states,
                'complexity_raw': cell.complexity_raw,
                'cycles': cell.cycles
            }
            for cell in landscape
        ]
        return pd.DataFrame(rows, columns=columns)

    def landscape_csv(self, landscape: Landscape) -> str:
        return self.landscape_frame(landscape).to_csv(
            index=False, float_format=FLOAT_FORMAT, lineterminator='\n'
        )

    @log_execution(LOG_ACTIONS['EXPORT'], 'Exportação da paisagem em Excel')
    def write_landscape_xlsx(self, landscape: Landscape, path: str,
                             baseline: Optional[LandscapeCell] = None):
        """
        Gravar paisagem em planilha Excel

        A primeira aba traz todas as células; a segunda, o ótimo e a
        referência 50/50 quando informada.
        """
        summary_rows = [self.cell_summary(landscape.optimum, 'ótimo')]
        if baseline is not None:
            summary_rows.append(self.cell_summary(baseline, 'referência 50/50'))

        with pd.ExcelWriter(path, engine='xlsxwriter') as writer:
            self.landscape_frame(landscape, extended=True).to_excel(writer, sheet_name='Paisagem', index=False)
            pd.DataFrame(summary_rows).to_excel(writer, sheet_name='Resumo', index=False)

        logger.info(MESSAGES['INFO']['PAISAGEM_GRAVADA'].format(caminho=path))

    @staticmethod
    def cell_summary(cell: LandscapeCell, name: str) -> Dict:
        """Linha de resumo de uma célula: taxas, F e J bruto"""
        return {
            'modelo': name,
            'r_a': cell.r_a,
            'r_t': cell.r_t,
            'fitness': round_float(cell.fitness),
            'complexity_raw': round_float(cell.complexity_raw),
            'complexity_scaled': round_float(cell.complexity_scaled),
            'objective': round_float(cell.objective),
            'nodes': cell.nodes,
            'edges': cell.edges
        }

    def format_summary(self, landscape: Landscape, baseline: Optional[LandscapeCell] = None,
                       cycles: Optional[CycleSummary] = None) -> str:
        """Resumo textual da otimização"""
        config = landscape.config
        lines = [f"Medida: {config.measure.value}  λ = {format_float(config.lam)}  "
                 f"passo = {config.grid_step}  células = {len(landscape)}"]

        for cell, name in ((landscape.optimum, 'Ótimo'), (baseline, '50/50')):
            if cell is None:
                continue
            lines.append(
                f"{name}: r_a={format_float(cell.r_a)} r_t={format_float(cell.r_t)} "
                f"F={format_float(cell.fitness)} J={format_float(cell.complexity_raw)} "
                f"C={format_float(cell.complexity_scaled)} Q={format_float(cell.objective)} "
                f"elementos={cell.nodes}/{cell.edges}"
            )

        if cycles is not None:
            lines.append(
                f"Fronteira superior (100/100): {cycles.upper_nodes}/{cycles.upper_edges}  "
                f"inferior (0/0): {cycles.lower_nodes}/{cycles.lower_edges}"
            )
            lines.append(
                f"Ciclos: máx {cycles.cycles_max} mín {cycles.cycles_min} média {cycles.cycles_mean}  "
                f"Meta-estados: máx {cycles.meta_states_max} mín {cycles.meta_states_min} "
                f"média {cycles.meta_states_mean}"
            )

        return '\n'.join(lines) + '\n'

    # Ciclos

    def cycles_frame(self, cycles: Union[Mapping, List[Cycle]],
                     states: Iterable[MetaState]) -> pd.DataFrame:
        """
        Relatório de ciclos ordenado por significância decrescente e corpo

        Args:
            cycles: Ciclos encontrados
            states: Meta-estados escolhidos entre esses ciclos

        Returns:
            DataFrame com corpo, frequências, significância e marcador de meta-estado
        """
        if isinstance(cycles, Mapping):
            cycles = list(cycles.values())
        bodies = {state.body for state in states}

        ordered = sorted(cycles, key=lambda cycle: (-cycle.significance, cycle.body))
        rows = [
            {
                'cycle': cycle.label,
                'length': cycle.length,
                'abs_freq': cycle.abs_freq,
                'case_freq': cycle.case_freq_count,
                'significance': cycle.significance,
                'meta_state': 'sim' if cycle.body in bodies else 'não'
            }
            for cycle in ordered
        ]
        return pd.DataFrame(
            rows, columns=['cycle', 'length', 'abs_freq', 'case_freq', 'significance', 'meta_state']
        )

    def cycles_csv(self, cycles, states: Iterable[MetaState]) -> str:
        return self.cycles_frame(cycles, states).to_csv(
            index=False, float_format=FLOAT_FORMAT, lineterminator='\n'
        )

    # Combinações

    def combination_frame(self, combination_map: CombinationMap) -> pd.DataFrame:
        """Célula -> combinação, em ordem (r_a, r_t) crescente"""
        rows = []
        for params in sorted(combination_map.assignments):
            combination = combination_map.combination_at(params)
            rows.append({
                'r_a': params.activity_rate,
                'r_t': params.transition_rate,
                'combination': combination.name,
                'meta_states': combination.label
            })
        return pd.DataFrame(rows, columns=['r_a', 'r_t', 'combination', 'meta_states'])

    def combination_csv(self, combination_map: CombinationMap) -> str:
        return self.combination_frame(combination_map).to_csv(index=False, lineterminator='\n')

    def render_combination_dot(self, graph: nx.DiGraph, name: str = 'combinacoes') -> str:
        """Grafo de combinações em DOT, com cobertura nos nós e meta-estados acrescentados nas arestas"""
        dot = Digraph(
            name=name,
            graph_attr={'rankdir': 'LR', 'fontname': RenderConfig.FONT_NAME},
            node_attr={'fontname': RenderConfig.FONT_NAME, 'shape': RenderConfig.COMBINATION_SHAPE},
            edge_attr={'fontname': RenderConfig.FONT_NAME, 'color': RenderConfig.EDGE_COLOR}
        )

        for node in sorted(graph.nodes):
            attributes = graph.nodes[node]
            label = LINE_BREAK.join(
                (attributes['name'], attributes['label'], format_float(attributes['coverage']))
            )
            dot.node(f'c{node}', label)

        for source, target in sorted(graph.edges):
            dot.edge(f'c{source}', f'c{target}', label=graph.edges[source, target]['label'])

        return dot.source

    # Arquivos

    @staticmethod
    def write_text(path: str, content: str):
        """Gravar texto UTF-8 com quebras de linha LF"""
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='\n') as handle:
            handle.write(content)
        logger.debug(f"Arquivo gravado: {path}")
