"""
Modelo EventLog - Log de eventos "plano" agrupado por caso
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, Tuple

from fluxo.utils.errors import LogFormatError

Transition = Tuple[str, str]


@dataclass(frozen=True)
class Trace:
    """Traço: sequência ordenada de atividades de um caso"""

    case_id: str
    events: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, 'events', tuple(self.events))
        if not self.events:
            raise LogFormatError(f'O traço "{self.case_id}" não possui eventos.')

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self) -> Iterator[str]:
        return iter(self.events)

    @property
    def transitions(self) -> Tuple[Transition, ...]:
        """Pares diretamente consecutivos do traço"""
        return tuple(zip(self.events, self.events[1:]))

    @property
    def first(self) -> str:
        return self.events[0]

    @property
    def last(self) -> str:
        return self.events[-1]


@dataclass(frozen=True)
class EventLog:
    """
    Log de eventos imutável

    As contagens derivadas são calculadas na construção:
    num_traces (quantidade de traços), num_unique_activities,
    num_unique_transitions e total_events (tamanho do log).
    """

    traces: Tuple[Trace, ...]
    alphabet: FrozenSet[str] = field(init=False, compare=False)
    num_traces: int = field(init=False, compare=False)
    num_unique_activities: int = field(init=False, compare=False)
    num_unique_transitions: int = field(init=False, compare=False)
    total_events: int = field(init=False, compare=False)

    def __post_init__(self):
        traces = tuple(self.traces)
        alphabet = set()
        transitions = set()
        total = 0

        for trace in traces:
            alphabet.update(trace.events)
            transitions.update(trace.transitions)
            total += len(trace)

        object.__setattr__(self, 'traces', traces)
        object.__setattr__(self, 'alphabet', frozenset(alphabet))
        object.__setattr__(self, 'num_traces', len(traces))
        object.__setattr__(self, 'num_unique_activities', len(alphabet))
        object.__setattr__(self, 'num_unique_transitions', len(transitions))
        object.__setattr__(self, 'total_events', total)

    @classmethod
    def from_sequences(cls, sequences: Iterable[Iterable[str]], prefix: str = 'c') -> 'EventLog':
        """
        Criar log a partir de sequências de atividades

        Args:
            sequences: Sequências de rótulos
            prefix: Prefixo dos identificadores de caso

        Returns:
            EventLog com casos numerados a partir de 1
        """
        return cls(tuple(
            Trace(f'{prefix}{index}', tuple(events))
            for index, events in enumerate(sequences, start=1)
        ))

    def __len__(self) -> int:
        return self.num_traces

    def __iter__(self) -> Iterator[Trace]:
        return iter(self.traces)

    @property
    def is_empty(self) -> bool:
        return self.num_traces == 0

    @property
    def sequences(self) -> Tuple[Tuple[str, ...], ...]:
        return tuple(trace.events for trace in self.traces)

    def variants(self) -> Dict[Tuple[str, ...], int]:
        """
        Variantes do log com sua multiplicidade

        Returns:
            Dicionário sequência -> quantidade, na ordem da primeira ocorrência
        """
        return dict(Counter(trace.events for trace in self.traces))
