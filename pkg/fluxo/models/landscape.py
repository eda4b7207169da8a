"""
Modelos da otimização - Configuração do objetivo e paisagem da grade
"""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from fluxo.models.meta_state import AggregationMode
from fluxo.models.process_model import RateParams
from fluxo.models.quality import MeasureKind
from fluxo.utils.constants import (
    DEFAULT_GRID_STEP, DEFAULT_LAMBDA, DEFAULT_LOG_BASE, DEFAULT_MEASURE,
    DEFAULT_META_STATE_THRESHOLD, RATE_MAX, RATE_MIN
)
from fluxo.utils.errors import ValidationError
from fluxo.utils.validators import (
    validate_aggregation, validate_grid_step, validate_lambda, validate_measure,
    validate_threshold
)


@dataclass(frozen=True)
class ObjectiveConfig:
    """
    Configuração da função objetivo Q = (1 - λ)·F + λ·(1 - C_J)

    landscape_mode aplica um modo de agregação em cada célula antes de
    medir F e C_J; por padrão as células usam o modelo sem agregação.
    """

    lam: float = DEFAULT_LAMBDA
    measure: MeasureKind = MeasureKind(DEFAULT_MEASURE)
    grid_step: int = DEFAULT_GRID_STEP
    mode: AggregationMode = AggregationMode.NONE
    threshold: float = DEFAULT_META_STATE_THRESHOLD
    landscape_mode: Optional[AggregationMode] = None
    log_base: float = DEFAULT_LOG_BASE
    max_workers: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'lam', validate_lambda(self.lam))
        object.__setattr__(self, 'measure', MeasureKind(validate_measure(str(self.measure))))
        object.__setattr__(self, 'grid_step', validate_grid_step(self.grid_step))
        object.__setattr__(self, 'mode', AggregationMode(validate_aggregation(str(self.mode))))
        object.__setattr__(self, 'threshold', validate_threshold(self.threshold))

        if self.landscape_mode is not None:
            object.__setattr__(
                self, 'landscape_mode', AggregationMode(validate_aggregation(str(self.landscape_mode)))
            )

        if self.log_base <= 0 or self.log_base == 1:
            raise ValidationError(f'Base do logaritmo inválida: {self.log_base}')

        if int(self.max_workers) < 1:
            raise ValidationError(f'Quantidade de processos inválida: {self.max_workers}')
        object.__setattr__(self, 'max_workers', int(self.max_workers))

    @property
    def rates(self) -> List[int]:
        """Valores de taxa da grade, em ordem crescente"""
        return list(range(RATE_MIN, RATE_MAX + 1, self.grid_step))

    def grid(self) -> List[RateParams]:
        """Pontos da grade em ordem (r_a crescente, r_t crescente)"""
        return [RateParams(r_a, r_t) for r_a in self.rates for r_t in self.rates]

    @classmethod
    def from_config(cls, app_config, **overrides) -> 'ObjectiveConfig':
        """Construir a partir de uma classe de configuração da aplicação"""
        values = {
            'lam': app_config.LAMBDA,
            'measure': app_config.MEASURE,
            'grid_step': app_config.GRID_STEP,
            'mode': app_config.AGGREGATION,
            'threshold': app_config.META_STATE_THRESHOLD,
            'log_base': app_config.LOG_BASE,
            'max_workers': app_config.MAX_WORKERS,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)


@dataclass(frozen=True)
class LandscapeCell:
    """Avaliação de um ponto (r_a, r_t) da grade"""

    params: RateParams
    fitness: float
    complexity_scaled: float
    objective: float
    nodes: int
    edges: int
    meta_states: int
    complexity_raw: float = 0.0
    cycles: int = 0
    meta_state_bodies: FrozenSet[Tuple[str, ...]] = frozenset()

    @property
    def r_a(self) -> float:
        return self.params.activity_rate

    @property
    def r_t(self) -> float:
        return self.params.transition_rate

    @property
    def optimum_key(self) -> Tuple:
        """Chave de ordenação: maior Q, menor r_t, maior r_a"""
        return -self.objective, self.r_t, -self.r_a


@dataclass(frozen=True)
class Landscape:
    """Grade de células avaliadas com o ponto ótimo"""

    cells: Dict[RateParams, LandscapeCell]
    optimum: LandscapeCell
    config: ObjectiveConfig
    reference_complexity: float = 0.0

    def __iter__(self) -> Iterator[LandscapeCell]:
        for params in sorted(self.cells):
            yield self.cells[params]

    def __len__(self) -> int:
        return len(self.cells)

    def __getitem__(self, params: RateParams) -> LandscapeCell:
        return self.cells[params]


@dataclass(frozen=True)
class CycleSummary:
    """Resumo de elementos e ciclos nas fronteiras e ao longo da grade"""

    upper_nodes: int
    upper_edges: int
    lower_nodes: int
    lower_edges: int
    cycles_max: int
    cycles_min: int
    cycles_mean: int
    meta_states_max: int
    meta_states_min: int
    meta_states_mean: int
