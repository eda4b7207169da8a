"""
OptimizerService - Busca em grade de Q = (1 - λ)·F + λ·(1 - C_J)
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Optional, Tuple

from fluxo.models import (
    AggregatedModel, AggregationMode, CycleSummary, EventLog, Landscape, LandscapeCell,
    ObjectiveConfig, RateParams
)
from fluxo.services.discovery_service import DiscoveryService
from fluxo.services.metastate_service import MetaStateService
from fluxo.services.quality_service import QualityService
from fluxo.utils.constants import BASELINE_RATES, LOG_ACTIONS, MESSAGES, RATE_MAX, RATE_MIN
from fluxo.utils.decorators import log_execution
from fluxo.utils.errors import EmptyLogError
from fluxo.utils.helpers import floor_mean

logger = logging.getLogger(__name__)

# Estado de cada processo do pool de avaliação
_worker_state: Dict = {}


def _init_worker(log: EventLog, config: ObjectiveConfig):
    _worker_state['service'] = OptimizerService()
    _worker_state['log'] = log
    _worker_state['config'] = config


def _evaluate_in_worker(params: RateParams) -> LandscapeCell:
    return _worker_state['service'].evaluate_point(
        _worker_state['log'], params, _worker_state['config']
    )


class OptimizerService:
    """Service para otimização das taxas de descoberta"""

    def __init__(self, discovery: Optional[DiscoveryService] = None):
        self.discovery = discovery or DiscoveryService()
        self.quality = QualityService(self.discovery)
        self.metastates = MetaStateService(self.discovery)

    def evaluate_point(self, log: EventLog, params: RateParams, config: ObjectiveConfig) -> LandscapeCell:
        """
        Avaliar um ponto da grade

        Modelos sem nós de atividade recebem F = 0 e C_J = 1 (Q = 0).

        Args:
            log: Log de eventos
            params: Taxas (r_a, r_t)
            config: Configuração do objetivo

        Returns:
            LandscapeCell com F, C_J, Q, contagens de elementos e de ciclos
        """
        if config.landscape_mode in (None, AggregationMode.NONE):
            model = self.discovery.discover(log, params)
        else:
            model = self.metastates.aggregate(log, params, config.landscape_mode, config.threshold)

        surviving = self.metastates.surviving_cycles(log, params)
        states = self.metastates.find_states(surviving, log.num_traces, config.threshold)

        if model.n == 0:
            fitness, scaled, raw = 0.0, 1.0, 0.0
        else:
            fitness = self.quality.fitness(model, log)
            value = self.quality.complexity_value(model, config.measure, log, config.log_base)
            scaled, raw = value.scaled, value.raw

        objective = (1 - config.lam) * fitness + config.lam * (1 - scaled)

        return LandscapeCell(
            params=params,
            fitness=fitness,
            complexity_scaled=scaled,
            objective=objective,
            nodes=model.n + 2,
            edges=model.m,
            meta_states=len(states),
            complexity_raw=raw,
            cycles=len(surviving),
            meta_state_bodies=frozenset(state.body for state in states)
        )

    @log_execution(LOG_ACTIONS['OPTIMIZE'], 'Busca em grade')
    def grid_search(self, log: EventLog, config: ObjectiveConfig) -> Landscape:
        """
        Avaliar todos os pontos da grade e escolher o ótimo

        O ótimo tem o maior Q; empates preferem a menor taxa de transição e
        depois a maior taxa de atividade. Com max_workers > 1 as células
        são avaliadas em processos separados; o resultado é o mesmo.

        Args:
            log: Log de eventos
            config: Configuração do objetivo

        Returns:
            Landscape com o ponto ótimo
        """
        if log.is_empty:
            raise EmptyLogError(MESSAGES['ERROR']['LOG_VAZIO'])

        grid = config.grid()
        reference = self.quality.reference_complexity(log, config.measure, config.log_base)

        if config.max_workers > 1:
            chunksize = max(1, len(grid) // (config.max_workers * 4))
            with ProcessPoolExecutor(max_workers=config.max_workers, initializer=_init_worker,
                                     initargs=(log, config)) as pool:
                results = list(pool.map(_evaluate_in_worker, grid, chunksize=chunksize))
        else:
            results = [self.evaluate_point(log, params, config) for params in grid]

        cells = {cell.params: cell for cell in results}
        optimum = min(cells.values(), key=lambda cell: cell.optimum_key)

        logger.info(f"Ótimo em {optimum.params}: Q={optimum.objective:.4f} "
                    f"F={optimum.fitness:.4f} C={optimum.complexity_scaled:.4f}")

        return Landscape(cells=cells, optimum=optimum, config=config, reference_complexity=reference)

    def optimize_and_aggregate(self, log: EventLog, config: ObjectiveConfig) -> Tuple[Landscape, AggregatedModel]:
        """
        Otimizar as taxas e agregar meta-estados no ponto ótimo

        Returns:
            Tupla (paisagem, modelo final)
        """
        landscape = self.grid_search(log, config)
        model = self.metastates.aggregate(log, landscape.optimum.params, config.mode, config.threshold)
        return landscape, model

    def baseline(self, log: EventLog, config: ObjectiveConfig) -> LandscapeCell:
        """Ponto de comparação no meio da grade (50/50)"""
        return self.evaluate_point(log, RateParams(*BASELINE_RATES), config)

    def cycle_summary(self, log: EventLog, landscape: Landscape) -> CycleSummary:
        """
        Resumo de elementos nas fronteiras e de ciclos ao longo da grade

        Fronteira superior (100/100) e inferior (0/0); ciclos e meta-estados
        com máximo, mínimo e média arredondada para baixo.
        """
        def cell_at(rate: int) -> LandscapeCell:
            params = RateParams(rate, rate)
            if params in landscape.cells:
                return landscape.cells[params]
            return self.evaluate_point(log, params, landscape.config)

        upper = cell_at(RATE_MAX)
        lower = cell_at(RATE_MIN)
        cycles = [cell.cycles for cell in landscape]
        states = [cell.meta_states for cell in landscape]

        return CycleSummary(
            upper_nodes=upper.nodes,
            upper_edges=upper.edges,
            lower_nodes=lower.nodes,
            lower_edges=lower.edges,
            cycles_max=max(cycles),
            cycles_min=min(cycles),
            cycles_mean=floor_mean(cycles),
            meta_states_max=max(states),
            meta_states_min=min(states),
            meta_states_mean=floor_mean(states)
        )
