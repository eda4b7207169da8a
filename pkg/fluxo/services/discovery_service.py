"""
DiscoveryService - Descoberta de mapas de processo por taxas (r_a, r_t)
"""

import logging
from collections import Counter
from typing import Callable, Dict, FrozenSet, Iterable, Optional, Set, Tuple

import networkx as nx

from fluxo.models import EventLog, ProcessModel, RateParams, SignificanceTable
from fluxo.models.process_model import Edge
from fluxo.services.stats_service import StatsService, StepTrace
from fluxo.utils.constants import END, LOG_ACTIONS, MESSAGES, START, THRESHOLD_EPS
from fluxo.utils.decorators import log_execution
from fluxo.utils.errors import RepairImpossibleError

logger = logging.getLogger(__name__)

# Transições dos traços projetados: (frequência por caso, frequência absoluta)
Projection = Tuple[Dict[Edge, float], Dict[Edge, int]]


class DiscoveryService:
    """Service para descoberta de modelos diretamente-seguidos"""

    def __init__(self, stats: Optional[StatsService] = None):
        self.stats = stats or StatsService()

    @staticmethod
    def passes(significance: float, threshold: float) -> bool:
        """Elemento é mantido quando a significância atinge o limiar"""
        return significance >= threshold - THRESHOLD_EPS

    def filter_elements(self, table: SignificanceTable, params: RateParams,
                        forced_nodes: Iterable[str] = ()) -> Tuple[FrozenSet[str], FrozenSet[Edge]]:
        """
        Filtrar atividades e transições pelos limiares das taxas

        Args:
            table: Tabela de significância
            params: Taxas (r_a, r_t)
            forced_nodes: Nós mantidos independentemente do limiar

        Returns:
            Tupla (nós, arestas candidatas), incluindo arestas de início e fim
        """
        activity_threshold = params.activity_threshold
        transition_threshold = params.transition_threshold

        nodes = {
            activity for activity, significance in table.activity_case_freq.items()
            if self.passes(significance, activity_threshold)
        }
        nodes.update(node for node in forced_nodes if node in table.activity_case_freq)

        edges = {
            (source, target)
            for (source, target), significance in table.transition_case_freq.items()
            if source in nodes and target in nodes and self.passes(significance, transition_threshold)
        }
        edges.update(
            (START, activity) for activity, significance in table.start_case_freq.items()
            if activity in nodes and self.passes(significance, transition_threshold)
        )
        edges.update(
            (activity, END) for activity, significance in table.end_case_freq.items()
            if activity in nodes and self.passes(significance, transition_threshold)
        )

        return frozenset(nodes), frozenset(edges)

    @staticmethod
    def log_candidates(table: SignificanceTable, nodes: FrozenSet[str]) -> Dict[Edge, float]:
        """Transições do log (incluindo início e fim) entre nós do modelo"""
        candidates = {
            edge: significance for edge, significance in table.transition_case_freq.items()
            if edge[0] in nodes and edge[1] in nodes
        }
        candidates.update(
            ((START, activity), significance) for activity, significance in table.start_case_freq.items()
            if activity in nodes
        )
        candidates.update(
            ((activity, END), significance) for activity, significance in table.end_case_freq.items()
            if activity in nodes
        )
        return candidates

    @staticmethod
    def projected_transitions(step_traces: Iterable[StepTrace], nodes: FrozenSet[str],
                              num_traces: int) -> Projection:
        """
        Transições dos traços projetados sobre os nós do modelo

        Passos sem nenhum rótulo no modelo são omitidos; os pares
        consecutivos restantes, e as ligações com início e fim, formam as
        transições representadas.

        Returns:
            Tupla (frequência por caso, frequência absoluta)
        """
        absolute = Counter()
        cases = Counter()

        for steps, count in step_traces:
            projected = [labels & nodes for labels, _origin in steps]
            projected = [labels for labels in projected if labels]
            if not projected:
                continue

            seen = set()
            path = [frozenset((START,))] + projected + [frozenset((END,))]
            for first, second in zip(path, path[1:]):
                for source in first:
                    for target in second:
                        if source != target:
                            absolute[(source, target)] += count
                            seen.add((source, target))
            for edge in seen:
                cases[edge] += count

        return {edge: value / num_traces for edge, value in cases.items()}, dict(absolute)

    def repair_reachability(self, nodes: FrozenSet[str], edges: FrozenSet[Edge],
                            table: SignificanceTable,
                            fallback: Optional[Callable[[], Dict[Edge, float]]] = None) -> FrozenSet[Edge]:
        """
        Reparar o grafo até que todo nó esteja em um caminho do início ao fim

        Passo para frente: enquanto houver nó inalcançável a partir do
        início, acrescenta a transição do log (u, v) de maior significância
        com u alcançável e v inalcançável; empates pela ordem lexicográfica
        de (u, v). Passo para trás: simétrico, em direção ao fim. Quando
        nenhuma transição do log serve, usa as transições dos traços
        projetados sobre os nós do modelo.

        Args:
            nodes: Nós de atividade
            edges: Arestas filtradas
            table: Tabela de significância
            fallback: Função que devolve as transições projetadas

        Returns:
            Superconjunto de edges com o grafo alcançável

        Raises:
            RepairImpossibleError: nó que não pode ser conectado
        """
        if not nodes:
            return frozenset(edges)

        result = set(edges)
        graph = nx.DiGraph()
        graph.add_nodes_from([START, END, *sorted(nodes)])
        graph.add_edges_from(sorted(result))
        candidates = self.log_candidates(table, nodes)
        projected: Dict[Edge, float] = {}

        def projected_candidates() -> Dict[Edge, float]:
            if not projected and fallback is not None:
                projected.update(fallback())
            return projected

        # Passo para frente (alcançabilidade a partir do início)
        reachable = nx.descendants(graph, START)
        while True:
            pending = nodes - reachable
            if not pending:
                break

            edge = self._best_edge(candidates, reachable | {START}, pending)
            if edge is None:
                edge = self._best_edge(projected_candidates(), reachable | {START}, pending)
                if edge is not None:
                    logger.warning(f"Reparo pelo traço projetado: {edge[0]} -> {edge[1]}")
            if edge is None:
                node = min(pending)
                raise RepairImpossibleError(
                    MESSAGES['ERROR']['REPARO_IMPOSSIVEL'].format(no=node, alvo='início'), node
                )

            logger.debug(f"Aresta de reparo (início): {edge[0]} -> {edge[1]}")
            result.add(edge)
            graph.add_edge(*edge)
            reachable = nx.descendants(graph, START)

        # Passo para trás (co-alcançabilidade até o fim)
        coreachable = nx.ancestors(graph, END)
        while True:
            pending = nodes - coreachable
            if not pending:
                break

            edge = self._best_edge(candidates, pending, coreachable | {END})
            if edge is None:
                edge = self._best_edge(projected_candidates(), pending, coreachable | {END})
                if edge is not None:
                    logger.warning(f"Reparo pelo traço projetado: {edge[0]} -> {edge[1]}")
            if edge is None:
                node = min(pending)
                raise RepairImpossibleError(
                    MESSAGES['ERROR']['REPARO_IMPOSSIVEL'].format(no=node, alvo='fim'), node
                )

            logger.debug(f"Aresta de reparo (fim): {edge[0]} -> {edge[1]}")
            result.add(edge)
            graph.add_edge(*edge)
            coreachable = nx.ancestors(graph, END)

        return frozenset(result)

    @staticmethod
    def _best_edge(candidates: Dict[Edge, float], sources: Set[str], targets: Set[str]) -> Optional[Edge]:
        """Candidata de maior significância entre os conjuntos; empate lexicográfico"""
        best = None
        best_key = None
        for edge, significance in candidates.items():
            if edge[0] in sources and edge[1] in targets:
                key = (-significance, edge)
                if best_key is None or key < best_key:
                    best, best_key = edge, key
        return best

    def build_model(self, table: SignificanceTable, params: RateParams,
                    step_traces: Iterable[StepTrace],
                    forced_nodes: Iterable[str] = (),
                    model_class=ProcessModel, **extra) -> ProcessModel:
        """
        Montar modelo filtrado e reparado a partir de uma tabela de significância

        Args:
            table: Tabela de significância
            params: Taxas (r_a, r_t)
            step_traces: Traços usados no reparo por projeção
            forced_nodes: Nós mantidos independentemente do limiar
            model_class: Classe do modelo resultante
            **extra: Campos adicionais do modelo

        Returns:
            Modelo anotado com significância e frequências absolutas
        """
        step_traces = list(step_traces)
        nodes, candidates = self.filter_elements(table, params, forced_nodes)

        projection: Dict[str, Projection] = {}

        def project() -> Projection:
            if 'value' not in projection:
                projection['value'] = self.projected_transitions(step_traces, nodes, table.num_traces)
            return projection['value']

        edges = self.repair_reachability(nodes, candidates, table, fallback=lambda: project()[0])
        repair_edges = edges - candidates

        significance: Dict = {START: 1.0, END: 1.0}
        abs_freq: Dict = {START: table.num_traces, END: table.num_traces}

        for node in nodes:
            significance[node] = table.activity_significance(node)
            abs_freq[node] = table.activity_abs_freq[node]

        for edge in edges:
            source, target = edge
            if source == START and target in table.start_case_freq:
                significance[edge] = table.start_case_freq[target]
                abs_freq[edge] = table.start_abs_freq[target]
            elif target == END and source in table.end_case_freq:
                significance[edge] = table.end_case_freq[source]
                abs_freq[edge] = table.end_abs_freq[source]
            elif edge in table.transition_case_freq:
                significance[edge] = table.transition_significance(source, target)
                abs_freq[edge] = table.transition_abs_freq[edge]
            else:
                case_freq, absolute = project()
                significance[edge] = case_freq[edge]
                abs_freq[edge] = absolute[edge]

        if repair_edges:
            logger.debug(f"{len(repair_edges)} arestas de reparo em {params}")

        return model_class(
            activity_nodes=nodes,
            edges=edges,
            significance=significance,
            abs_freq=abs_freq,
            params=params,
            repair_edges=frozenset(repair_edges),
            num_cases=table.num_traces,
            **extra
        )

    @log_execution(LOG_ACTIONS['DISCOVER'], 'Descoberta do mapa de processo')
    def discover(self, log: EventLog, params: RateParams) -> ProcessModel:
        """
        Descobrir o mapa de processo de um log nas taxas indicadas

        Significância, filtragem, política de conflitos (os dois sentidos de
        um par são mantidos quando passam no filtro) e reparo.

        Args:
            log: Log de eventos
            params: Taxas (r_a, r_t)

        Returns:
            ProcessModel
        """
        table = self.stats.compute_significance(log)
        conflicts = self.stats.conflict_pairs(table)
        if conflicts:
            logger.debug(f"Pares bidirecionais mantidos: {len(conflicts)}")
        steps = self.stats.cache.get(log, 'steps', lambda: self.stats.log_steps(log))
        return self.build_model(table, params, steps)
