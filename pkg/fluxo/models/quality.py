"""
Modelos de qualidade - Reprodução de traços e medidas de complexidade
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple


class MeasureKind(str, Enum):
    """Medidas de complexidade disponíveis"""

    AD = 'AD'
    H = 'H'
    KN = 'Kn'
    R = 'R'

    @property
    def includes_sentinels(self) -> bool:
        """AD, H e Kn contam as sentinelas e suas arestas; R não"""
        return self is not MeasureKind.R

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ReplayResult:
    """
    Resultado da reprodução de um traço no modelo

    coverage: fração de eventos representados por nós do modelo;
    skipped: indicador de salto (1 se algum evento ficou fora do modelo);
    forced_transitions: pares consecutivos ausentes, incluindo as
    conexões com início e fim;
    represented: projeção do traço sobre os nós do modelo.
    """

    coverage: float
    skipped: int
    forced_transitions: int
    represented: Tuple[str, ...]
    score: float

    @property
    def is_perfect(self) -> bool:
        return self.skipped == 0 and self.forced_transitions == 0


@dataclass(frozen=True)
class ComplexityValue:
    """Valor de complexidade bruto e escalado pela referência (100, 100)"""

    kind: MeasureKind
    raw: float
    scaled: float
    reference: float

    @property
    def ratio(self) -> float:
        """Razão sem corte em [0, 1]"""
        return self.raw / self.reference
