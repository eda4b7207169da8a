"""
Modelo ProcessModel - Grafo diretamente-seguido com sentinelas
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Tuple

import networkx as nx

from fluxo.utils.constants import END, START
from fluxo.utils.validators import validate_rate

Edge = Tuple[str, str]


@dataclass(frozen=True, order=True)
class RateParams:
    """Taxas de atividade e transição (r_a, r_t), ambas em [0, 100]"""

    activity_rate: float
    transition_rate: float

    def __post_init__(self):
        validate_rate(self.activity_rate)
        validate_rate(self.transition_rate)

    @property
    def activity_threshold(self) -> float:
        """Significância mínima de uma atividade: (100 - r_a) / 100"""
        return (100 - self.activity_rate) / 100

    @property
    def transition_threshold(self) -> float:
        """Significância mínima de uma transição: (100 - r_t) / 100"""
        return (100 - self.transition_rate) / 100

    def __str__(self):
        return f"{self.activity_rate:g}/{self.transition_rate:g}"


@dataclass(frozen=True)
class ProcessModel:
    """
    Mapa de processo descoberto

    activity_nodes não inclui as sentinelas; edges inclui as arestas de e
    para as sentinelas. significance e abs_freq são indexados por nó
    (str) e por aresta (tupla).
    """

    activity_nodes: FrozenSet[str]
    edges: FrozenSet[Edge]
    significance: Dict[Hashable, float]
    abs_freq: Dict[Hashable, int]
    params: RateParams
    repair_edges: FrozenSet[Edge] = frozenset()
    num_cases: int = 0

    @property
    def start(self) -> str:
        return START

    @property
    def end(self) -> str:
        return END

    @property
    def nodes(self) -> FrozenSet[str]:
        """Nós do modelo incluindo sentinelas"""
        return self.activity_nodes | {START, END}

    @property
    def n(self) -> int:
        """Quantidade de nós de atividade"""
        return len(self.activity_nodes)

    @property
    def m(self) -> int:
        """Quantidade de arestas, incluindo as das sentinelas"""
        return len(self.edges)

    @property
    def tokens(self) -> FrozenSet[str]:
        """Nós de meta-estado (nenhum em um modelo simples)"""
        return frozenset()

    def is_repair_edge(self, edge: Edge) -> bool:
        return edge in self.repair_edges

    def graph(self) -> nx.DiGraph:
        """Representação networkx do modelo"""
        graph = nx.DiGraph()
        graph.add_nodes_from(sorted(self.nodes))
        graph.add_edges_from(sorted(self.edges))
        return graph

    def unreachable_nodes(self) -> FrozenSet[str]:
        """Nós de atividade que não são descendentes do início"""
        graph = self.graph()
        reachable = nx.descendants(graph, START)
        return frozenset(node for node in self.activity_nodes if node not in reachable)

    def dead_end_nodes(self) -> FrozenSet[str]:
        """Nós de atividade que não são ancestrais do fim"""
        graph = self.graph()
        coreachable = nx.ancestors(graph, END)
        return frozenset(node for node in self.activity_nodes if node not in coreachable)

    def is_reachable(self) -> bool:
        """Todo nó está em algum caminho do início ao fim"""
        return not self.unreachable_nodes() and not self.dead_end_nodes()

    # Visão usada pela reprodução do log (sobrescrita em modelos agregados)

    def replay_nodes(self) -> FrozenSet[str]:
        return self.activity_nodes

    def replay_edges(self) -> FrozenSet[Edge]:
        return self.edges
