"""
Modelo SignificanceTable - Frequências absolutas e por caso
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple

Transition = Tuple[str, str]


@dataclass(frozen=True)
class SignificanceTable:
    """
    Tabela de significância de um log

    Frequências por caso ficam em (0, 1]; elementos ausentes do log não
    possuem entrada.
    """

    num_traces: int
    activity_case_freq: Dict[str, float] = field(default_factory=dict)
    transition_case_freq: Dict[Transition, float] = field(default_factory=dict)
    activity_abs_freq: Dict[str, int] = field(default_factory=dict)
    transition_abs_freq: Dict[Transition, int] = field(default_factory=dict)
    start_case_freq: Dict[str, float] = field(default_factory=dict)
    end_case_freq: Dict[str, float] = field(default_factory=dict)
    start_abs_freq: Dict[str, int] = field(default_factory=dict)
    end_abs_freq: Dict[str, int] = field(default_factory=dict)

    def activity_significance(self, activity: str) -> float:
        return self.activity_case_freq.get(activity, 0.0)

    def transition_significance(self, source: str, target: str) -> float:
        return self.transition_case_freq.get((source, target), 0.0)


@dataclass(frozen=True)
class ConflictPair:
    """Par de atividades observado nas duas direções (a -> b e b -> a)"""

    first: str
    second: str
    forward_case_freq: float
    backward_case_freq: float

    @property
    def activities(self) -> Tuple[str, str]:
        return self.first, self.second
