"""
Modelos de ciclos, meta-estados e modelos agregados
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, FrozenSet, Tuple

from fluxo.models.process_model import Edge, ProcessModel, RateParams
from fluxo.utils.constants import EMPTY_COMBINATION
from fluxo.utils.errors import ValidationError
from fluxo.utils.helpers import short_label, token_label


class AggregationMode(str, Enum):
    """Modos de agregação de meta-estados"""

    NONE = 'none'
    OUTER = 'outer'
    INNER_ALL = 'inner_all'
    INNER_FREQ = 'inner_freq'

    @property
    def is_inner(self) -> bool:
        return self in (AggregationMode.INNER_ALL, AggregationMode.INNER_FREQ)

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Cycle:
    """
    Ciclo simples encontrado no log

    body não repete atividades; significance = case_freq_count / num_traces.
    """

    body: Tuple[str, ...]
    abs_freq: int
    case_freq_count: int
    significance: float

    @property
    def length(self) -> int:
        return len(self.body)

    @property
    def activities(self) -> FrozenSet[str]:
        return frozenset(self.body)

    @property
    def transitions(self) -> Tuple[Edge, ...]:
        """Transições do corpo, incluindo a de fechamento (último -> primeiro)"""
        if len(self.body) < 2:
            return ((self.body[0], self.body[0]),)
        return tuple(zip(self.body, self.body[1:] + self.body[:1]))

    @property
    def label(self) -> str:
        return ' '.join(self.body)


@dataclass(frozen=True)
class MetaState(Cycle):
    """Ciclo significativo de comprimento maior que 1"""

    def __post_init__(self):
        if len(self.body) < 2:
            raise ValidationError(f'Meta-estado exige ciclo com mais de uma atividade: {self.body}')

    @classmethod
    def from_cycle(cls, cycle: Cycle) -> 'MetaState':
        return cls(cycle.body, cycle.abs_freq, cycle.case_freq_count, cycle.significance)

    @property
    def token(self) -> str:
        """Rótulo canônico do meta-estado, ex.: "[B·C]" """
        return token_label(self.body)

    @property
    def priority_key(self) -> Tuple:
        """Ordem de prioridade no colapso: corpo maior, maior significância, corpo lexicográfico"""
        return -len(self.body), -self.significance, self.body


@dataclass(frozen=True)
class AggregatedModel(ProcessModel):
    """
    Modelo de processo cujos nós podem incluir meta-estados

    v_plus: atividades contidas em algum meta-estado;
    v_minus: demais atividades do log;
    rebuilt_edges: transições observadas no log reconstruído.
    """

    mode: AggregationMode = AggregationMode.NONE
    meta_states: Tuple[MetaState, ...] = ()
    v_plus: FrozenSet[str] = frozenset()
    v_minus: FrozenSet[str] = frozenset()
    rebuilt_edges: FrozenSet[Edge] = frozenset()

    @property
    def members(self) -> Dict[str, Tuple[str, ...]]:
        """Meta-estados presentes no modelo: token -> corpo"""
        return {
            state.token: state.body
            for state in self.meta_states
            if state.token in self.activity_nodes
        }

    @property
    def tokens(self) -> FrozenSet[str]:
        return frozenset(self.members)

    def replay_nodes(self) -> FrozenSet[str]:
        nodes = set(self.activity_nodes - self.tokens)
        for body in self.members.values():
            nodes.update(body)
        return frozenset(nodes)

    def replay_edges(self) -> FrozenSet[Edge]:
        """
        Arestas "presentes" para a reprodução do log

        Cada aresta incidente a um meta-estado é expandida para os seus
        constituintes, e as transições internas do ciclo (incluindo a de
        fechamento) são acrescentadas.
        """
        members = self.members
        if not members:
            return self.edges

        expanded = set()
        for source, target in self.edges:
            sources = members.get(source, (source,))
            targets = members.get(target, (target,))
            expanded.update((u, v) for u in sources for v in targets)

        for body in members.values():
            expanded.update(zip(body, body[1:] + body[:1]))

        return frozenset(expanded)


@dataclass(frozen=True)
class Combination:
    """Conjunto de meta-estados presente em uma região da grade"""

    index: int
    states: Tuple[MetaState, ...]
    cells: Tuple[RateParams, ...]
    coverage: float

    @property
    def name(self) -> str:
        return f'C{self.index}'

    @property
    def bodies(self) -> FrozenSet[Tuple[str, ...]]:
        return frozenset(state.body for state in self.states)

    @property
    def label(self) -> str:
        """Meta-estados da combinação, ou "∅" quando vazia"""
        if not self.states:
            return EMPTY_COMBINATION
        return ', '.join(short_label(state.body) for state in self.states)


@dataclass(frozen=True)
class CombinationMap:
    """Combinação de meta-estados de cada ponto da grade"""

    assignments: Dict[RateParams, int]
    combinations: Tuple[Combination, ...]

    def combination_at(self, params: RateParams) -> Combination:
        return self.by_index[self.assignments[params]]

    def __getitem__(self, params: RateParams) -> FrozenSet[MetaState]:
        return frozenset(self.combination_at(params).states)

    def __len__(self) -> int:
        return len(self.assignments)

    @property
    def by_index(self) -> Dict[int, Combination]:
        return {combination.index: combination for combination in self.combinations}
