"""
MetaStateService - Ciclos, meta-estados, reconstrução do log e agregação
"""

import logging
from collections import Counter
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx

from fluxo.models import (
    AggregatedModel, AggregationMode, Combination, CombinationMap, Cycle, EventLog,
    MetaState, ProcessModel, RateParams, Trace
)
from fluxo.models.process_model import Edge
from fluxo.services.discovery_service import DiscoveryService
from fluxo.services.stats_service import StatsService, StepTrace
from fluxo.utils.cache import LogCache
from fluxo.utils.constants import LOG_ACTIONS, MESSAGES, THRESHOLD_EPS
from fluxo.utils.decorators import log_execution
from fluxo.utils.errors import EmptyLogError, ValidationError
from fluxo.utils.helpers import short_label
from fluxo.utils.validators import validate_aggregation, validate_threshold

logger = logging.getLogger(__name__)

Cycles = Union[Mapping[Tuple[str, ...], Cycle], Iterable[Cycle]]


class MetaStateService:
    """Service para identificação e agregação de meta-estados"""

    def __init__(self, discovery: Optional[DiscoveryService] = None):
        self.discovery = discovery or DiscoveryService()
        self.stats: StatsService = self.discovery.stats
        self.cache = LogCache('cycles')

    # Ciclos

    def cycles_search(self, log: EventLog) -> Dict[Tuple[str, ...], Cycle]:
        """
        Buscar ciclos simples e contar suas frequências

        Para cada atividade de um traço, o trecho entre duas ocorrências
        consecutivas é um ciclo quando não repete atividades. A frequência
        absoluta conta cada ocorrência; a frequência por caso conta cada
        traço uma vez.

        Args:
            log: Log de eventos

        Returns:
            Dicionário corpo -> Cycle, ordenado pelo corpo
        """
        if log.is_empty:
            raise EmptyLogError(MESSAGES['ERROR']['LOG_VAZIO'])
        return self.cache.get(log, 'cycles', lambda: self._search(log))

    @staticmethod
    def _search(log: EventLog) -> Dict[Tuple[str, ...], Cycle]:
        absolute = Counter()
        cases = Counter()

        for variant, count in log.variants().items():
            found = set()
            last_seen: Dict[str, int] = {}
            for position, activity in enumerate(variant):
                previous = last_seen.get(activity)
                if previous is not None:
                    segment = variant[previous:position]
                    if len(set(segment)) == len(segment):
                        absolute[segment] += count
                        found.add(segment)
                last_seen[activity] = position

            for segment in found:
                cases[segment] += count

        return {
            body: Cycle(body, absolute[body], cases[body], cases[body] / log.num_traces)
            for body in sorted(absolute)
        }

    def find_states(self, cycles: Cycles, num_traces: int, threshold: float) -> Tuple[MetaState, ...]:
        """
        Identificar meta-estados: ciclos com mais de uma atividade e
        significância por caso >= threshold

        Args:
            cycles: Ciclos encontrados
            num_traces: Quantidade de traços do log
            threshold: Significância mínima, em (0, 1]

        Returns:
            Meta-estados em ordem de prioridade
        """
        threshold = validate_threshold(threshold)
        if isinstance(cycles, Mapping):
            cycles = cycles.values()

        states = [
            MetaState.from_cycle(cycle) for cycle in cycles
            if cycle.length > 1 and cycle.case_freq_count / num_traces >= threshold - THRESHOLD_EPS
        ]
        states.sort(key=lambda state: state.priority_key)
        return tuple(states)

    def surviving_cycles(self, log: EventLog, params: RateParams) -> List[Cycle]:
        """Ciclos cujas atividades e transições (incluindo a de fechamento) passam no filtro"""
        cycles = self.cycles_search(log)
        table = self.stats.compute_significance(log)
        nodes, edges = self.discovery.filter_elements(table, params)
        return [
            cycle for cycle in cycles.values()
            if cycle.activities <= nodes and all(edge in edges for edge in cycle.transitions)
        ]

    def states_at(self, log: EventLog, params: RateParams, threshold: float) -> Tuple[MetaState, ...]:
        """Meta-estados do modelo filtrado em (r_a, r_t)"""
        return self.find_states(self.surviving_cycles(log, params), log.num_traces, threshold)

    # Reconstrução do log

    def rebuild_log(self, log: EventLog, states: Sequence[MetaState]) -> EventLog:
        """
        Colapsar ocorrências de meta-estados em tokens

        Uma ocorrência de um estado com corpo B = <b1 ... bk> é o trecho B
        repetido j >= 1 vezes seguido de b1; o trecho inteiro vira um único
        token. Em cada posição vale o primeiro estado na ordem de
        prioridade (corpo maior, maior significância, corpo lexicográfico).

        Args:
            log: Log de eventos
            states: Meta-estados

        Returns:
            EventLog sobre o alfabeto acrescido dos tokens
        """
        if not states:
            return log

        ordered = sorted(states, key=lambda state: state.priority_key)
        rebuilt = {}
        traces = []
        for trace in log.traces:
            if trace.events not in rebuilt:
                rebuilt[trace.events] = self._collapse(trace.events, ordered)
            traces.append(Trace(trace.case_id, rebuilt[trace.events]))
        return EventLog(tuple(traces))

    @staticmethod
    def _collapse(events: Tuple[str, ...], states: Sequence[MetaState]) -> Tuple[str, ...]:
        output = []
        position = 0
        size = len(events)

        while position < size:
            span = 0
            token = None
            for state in states:
                body = state.body
                length = len(body)
                repeats = 0
                while events[position + repeats * length:position + (repeats + 1) * length] == body:
                    repeats += 1
                while repeats > 0:
                    anchor = position + repeats * length
                    if anchor < size and events[anchor] == body[0]:
                        span = anchor + 1 - position
                        token = state.token
                        break
                    repeats -= 1
                if token is not None:
                    break

            if token is None:
                output.append(events[position])
                position += 1
            else:
                output.append(token)
                position += span

        return tuple(output)

    # Agregação

    def redirected_steps(self, rebuilt: EventLog, states: Sequence[MetaState],
                         mode: AggregationMode) -> List[StepTrace]:
        """
        Ocultar atividades contidas em meta-estados

        Cada ocorrência isolada de uma atividade oculta é representada por
        todos os meta-estados que a contêm (inner_all) ou apenas pelo de
        maior significância (inner_freq, empate pelo menor corpo).
        """
        containing: Dict[str, List[MetaState]] = {}
        for state in states:
            for activity in state.body:
                containing.setdefault(activity, []).append(state)

        targets: Dict[str, FrozenSet[str]] = {}
        for activity, owners in containing.items():
            if mode is AggregationMode.INNER_ALL:
                targets[activity] = frozenset(state.token for state in owners)
            else:
                best = min(owners, key=lambda state: (-state.significance, state.body))
                targets[activity] = frozenset((best.token,))

        return [
            (tuple((targets.get(event, frozenset((event,))), event) for event in variant), count)
            for variant, count in rebuilt.variants().items()
        ]

    @staticmethod
    def _as_aggregated(model: ProcessModel, mode: AggregationMode, log: EventLog) -> AggregatedModel:
        return AggregatedModel(
            activity_nodes=model.activity_nodes,
            edges=model.edges,
            significance=model.significance,
            abs_freq=model.abs_freq,
            params=model.params,
            repair_edges=model.repair_edges,
            num_cases=model.num_cases,
            mode=mode,
            v_minus=log.alphabet,
            rebuilt_edges=frozenset(
                edge for trace in log.traces for edge in trace.transitions
            )
        )

    @log_execution(LOG_ACTIONS['AGGREGATE'], 'Agregação de meta-estados')
    def aggregate(self, log: EventLog, params: RateParams,
                  mode: Union[AggregationMode, str], threshold: float) -> AggregatedModel:
        """
        Agregar meta-estados no modelo descoberto em (r_a, r_t)

        none: descoberta simples. outer: descoberta sobre o log reconstruído,
        com tokens e atividades constituintes lado a lado. inner_all e
        inner_freq: as atividades dos meta-estados são ocultadas e suas
        relações redirecionadas aos tokens, com significância recalculada
        sobre os casos do log reconstruído.

        Args:
            log: Log de eventos
            params: Taxas (r_a, r_t) já otimizadas
            mode: Modo de agregação
            threshold: Significância mínima dos meta-estados

        Returns:
            AggregatedModel
        """
        mode = AggregationMode(validate_aggregation(str(mode)))
        threshold = validate_threshold(threshold)

        if mode is AggregationMode.NONE:
            return self._as_aggregated(self.discovery.discover(log, params), mode, log)

        states = self.states_at(log, params, threshold)
        rebuilt = self.rebuild_log(log, states)

        present = tuple(state for state in states if state.token in rebuilt.alphabet)
        for state in states:
            if state not in present:
                logger.warning(f"Meta-estado {state.token} não ocorre no log reconstruído e foi descartado")

        if not present:
            logger.info(MESSAGES['INFO']['SEM_META_ESTADOS'].format(taxas=params))
            return self._as_aggregated(self.discovery.discover(log, params), mode, log)

        v_plus = frozenset(activity for state in present for activity in state.body)
        tokens = [state.token for state in present]
        extra = {
            'mode': mode,
            'meta_states': present,
            'v_plus': v_plus,
            'v_minus': log.alphabet - v_plus,
            'rebuilt_edges': frozenset(
                edge for trace in rebuilt.traces for edge in trace.transitions
            )
        }

        if mode.is_inner:
            steps = self.redirected_steps(rebuilt, present, mode)
        else:
            steps = self.stats.log_steps(rebuilt)
        table = self.stats.table_from_steps(steps, rebuilt.num_traces)

        return self.discovery.build_model(
            table, params, steps, forced_nodes=tokens, model_class=AggregatedModel, **extra
        )

    @staticmethod
    def expanded_edges(model: ProcessModel) -> FrozenSet[Edge]:
        """
        Arestas usadas na reprodução de um modelo agregado

        Arestas incidentes a meta-estados são expandidas para os seus
        constituintes, acrescidas das transições internas de cada ciclo.
        Modelos sem meta-estados são devolvidos sem alteração.
        """
        return model.replay_edges()

    # Combinações de meta-estados na grade

    @log_execution(LOG_ACTIONS['COMBOS'], 'Mapa de combinações de meta-estados')
    def combination_map(self, log: EventLog, grid: Sequence[RateParams], threshold: float) -> CombinationMap:
        """
        Meta-estados de cada ponto da grade, agrupados em combinações

        Combinações são numeradas pela quantidade de meta-estados e depois
        pelos corpos; coverage é a fração de células da combinação.

        Args:
            log: Log de eventos
            grid: Pontos (r_a, r_t)
            threshold: Significância mínima dos meta-estados

        Returns:
            CombinationMap
        """
        if not grid:
            raise ValidationError('A grade de parâmetros está vazia.')

        groups: Dict[FrozenSet[MetaState], List[RateParams]] = {}
        for params in grid:
            states = frozenset(self.states_at(log, params, threshold))
            groups.setdefault(states, []).append(params)

        ordered = sorted(groups, key=lambda states: (len(states), sorted(state.body for state in states)))

        combinations = []
        assignments = {}
        for index, states in enumerate(ordered, start=1):
            cells = tuple(sorted(groups[states]))
            combinations.append(Combination(
                index=index,
                states=tuple(sorted(states, key=lambda state: state.body)),
                cells=cells,
                coverage=len(cells) / len(grid)
            ))
            for params in cells:
                assignments[params] = index

        logger.info(f"{len(combinations)} combinações de meta-estados em {len(grid)} pontos")
        return CombinationMap(assignments=assignments, combinations=tuple(combinations))

    def combination_graph(self, combination_map: CombinationMap) -> nx.DiGraph:
        """
        Grafo de transições entre combinações

        Existe aresta Ci -> Cj quando Ci está contida propriamente em Cj e
        algum par de células vizinhas (4-vizinhança na grade) carrega as
        duas combinações. O rótulo lista os meta-estados acrescentados
        ("+CF|HD"). A centralidade de grau é anexada aos nós.

        Args:
            combination_map: Resultado de combination_map

        Returns:
            networkx.DiGraph com nós indexados pelo número da combinação
        """
        graph = nx.DiGraph()
        for combination in combination_map.combinations:
            graph.add_node(
                combination.index,
                name=combination.name,
                label=combination.label,
                coverage=combination.coverage,
                bodies=combination.bodies
            )

        by_index = combination_map.by_index
        activity_rates = sorted({params.activity_rate for params in combination_map.assignments})
        transition_rates = sorted({params.transition_rate for params in combination_map.assignments})
        cells = {
            (activity_rates.index(params.activity_rate), transition_rates.index(params.transition_rate)): index
            for params, index in combination_map.assignments.items()
        }

        for (row, column), index in sorted(cells.items()):
            for neighbour in ((row + 1, column), (row, column + 1)):
                other = cells.get(neighbour)
                if other is None or other == index:
                    continue

                first, second = by_index[index].bodies, by_index[other].bodies
                if first < second:
                    source, target = index, other
                elif second < first:
                    source, target = other, index
                else:
                    continue

                if not graph.has_edge(source, target):
                    added = sorted(by_index[target].bodies - by_index[source].bodies)
                    label = '+' + '|'.join(short_label(body) for body in added)
                    graph.add_edge(source, target, label=label)

        nx.set_node_attributes(graph, nx.degree_centrality(graph), 'centrality')
        return graph

    @staticmethod
    def rank_combinations(graph: nx.DiGraph) -> List[int]:
        """
        Ordenar combinações por cobertura e centralidade de grau

        Returns:
            Índices das combinações, da mais relevante para a menos relevante
        """
        return sorted(
            graph.nodes,
            key=lambda node: (-graph.nodes[node]['coverage'], -graph.nodes[node]['centrality'], node)
        )
