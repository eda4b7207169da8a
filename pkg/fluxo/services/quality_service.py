"""
QualityService - Reprodução do log (fitness) e medidas de complexidade
"""

import logging
import math
from typing import Dict, FrozenSet, Optional, Sequence, Union

from scipy.stats import entropy

from fluxo.models import (
    ComplexityValue, EventLog, MeasureKind, ProcessModel, RateParams, ReplayResult, Trace
)
from fluxo.models.process_model import Edge
from fluxo.services.discovery_service import DiscoveryService
from fluxo.utils.cache import LogCache
from fluxo.utils.constants import DEFAULT_LOG_BASE, END, MESSAGES, RATE_MAX, SENTINELS, START
from fluxo.utils.errors import ComplexityError, EmptyLogError, LogFormatError, ModelError

logger = logging.getLogger(__name__)

REFERENCE_PARAMS = RateParams(RATE_MAX, RATE_MAX)


class QualityService:
    """Service para avaliação de modelos contra logs"""

    def __init__(self, discovery: Optional[DiscoveryService] = None,
                 cache: Optional[LogCache] = None):
        self.discovery = discovery or DiscoveryService()
        self.cache = cache if cache is not None else LogCache('reference')

    # Reprodução

    def replay_trace(self, model: ProcessModel, trace: Union[Trace, Sequence[str]],
                     num_unique_activities: int) -> ReplayResult:
        """
        Reproduzir um traço no modelo

        s* é a projeção do traço sobre os nós do modelo. O escore é
        max(0, cobertura - α·δ - β·φ/n), com α = 0,5/N e β = 1/N, em que N é
        a quantidade de atividades distintas do log e n a de nós do modelo.

        Args:
            model: Modelo de processo
            trace: Traço ou sequência de atividades
            num_unique_activities: N do log

        Returns:
            ReplayResult

        Raises:
            ModelError: modelo sem nós de atividade
            LogFormatError: traço vazio
        """
        if model.n == 0:
            raise ModelError(MESSAGES['ERROR']['MODELO_SEM_NOS'])

        events = tuple(trace.events if isinstance(trace, Trace) else trace)
        if not events:
            case_id = trace.case_id if isinstance(trace, Trace) else ''
            raise LogFormatError(MESSAGES['ERROR']['TRACO_VAZIO'].format(caso=case_id))

        return self._replay(model.replay_nodes(), model.replay_edges(), model.n,
                            num_unique_activities, events)

    @staticmethod
    def _replay(nodes: FrozenSet[str], edges: FrozenSet[Edge], n: int,
                num_unique_activities: int, events: Sequence[str]) -> ReplayResult:
        represented = tuple(event for event in events if event in nodes)
        coverage = len(represented) / len(events)
        skipped = 1 if len(represented) < len(events) else 0

        forced = 0
        if represented:
            path = (START,) + represented + (END,)
            forced = sum(1 for pair in zip(path, path[1:]) if pair not in edges)

        alpha = 0.5 / num_unique_activities
        beta = 1.0 / num_unique_activities
        score = max(0.0, coverage - alpha * skipped - beta * forced / n)

        return ReplayResult(
            coverage=coverage,
            skipped=skipped,
            forced_transitions=forced,
            represented=represented,
            score=score
        )

    def fitness(self, model: ProcessModel, log: EventLog) -> float:
        """
        Replayability F: média dos escores dos traços

        Variantes idênticas são reproduzidas uma vez; a soma segue a ordem
        fixa das variantes.

        Args:
            model: Modelo de processo
            log: Log de eventos

        Returns:
            F em [0, 1]
        """
        if log.is_empty:
            raise EmptyLogError(MESSAGES['ERROR']['LOG_VAZIO'])
        if model.n == 0:
            raise ModelError(MESSAGES['ERROR']['MODELO_SEM_NOS'])

        nodes = model.replay_nodes()
        edges = model.replay_edges()
        num_unique = log.num_unique_activities

        total = math.fsum(
            count * self._replay(nodes, edges, model.n, num_unique, variant).score
            for variant, count in log.variants().items()
        )
        return min(1.0, total / log.num_traces)

    # Complexidade

    def complexity(self, model: ProcessModel, kind: Union[MeasureKind, str],
                   log: Optional[EventLog] = None, base: float = DEFAULT_LOG_BASE) -> float:
        """
        Valor bruto J de uma medida de complexidade

        AD = m/n e H (entropia da matriz de adjacência achatada, p = m/n²)
        contam as sentinelas e suas arestas. Kn = m'/(n(n-1)) também, mas
        desconsidera laços. R = ½(m''/M + n''/N) exclui as sentinelas e usa
        as contagens do log.

        Args:
            model: Modelo de processo
            kind: Medida (AD, H, Kn, R)
            log: Log de eventos (obrigatório para R)
            base: Base do logaritmo da entropia

        Returns:
            Valor bruto da medida

        Raises:
            ComplexityError: denominador nulo
        """
        kind = MeasureKind(kind)
        if kind.includes_sentinels:
            n = model.n + len(SENTINELS)
            m = model.m
        else:
            n = model.n
            m = sum(
                1 for source, target in model.edges
                if source not in SENTINELS and target not in SENTINELS
            )

        if kind is MeasureKind.AD:
            return m / n

        if kind is MeasureKind.H:
            p = m / (n * n)
            return float(entropy([p, 1.0 - p], base=base))

        if kind is MeasureKind.KN:
            if n <= 1:
                raise ComplexityError(f'Kn indefinido para n = {n}.')
            loops_free = sum(1 for source, target in model.edges if source != target)
            return loops_free / (n * (n - 1))

        if log is None:
            raise ComplexityError('A medida R exige o log de eventos.')
        if log.num_unique_transitions == 0 or log.num_unique_activities == 0:
            raise ComplexityError('R indefinido: o log não possui transições.')

        return 0.5 * (m / log.num_unique_transitions + n / log.num_unique_activities)

    def reference_model(self, log: EventLog) -> ProcessModel:
        """Modelo sem filtragem (100, 100), calculado uma vez por log"""
        return self.cache.get(log, 'model', lambda: self.discovery.discover(log, REFERENCE_PARAMS))

    def reference_complexity(self, log: EventLog, kind: Union[MeasureKind, str],
                             base: float = DEFAULT_LOG_BASE) -> float:
        """J do modelo de referência, guardado por (log, medida, base)"""
        kind = MeasureKind(kind)
        return self.cache.get(
            log, (kind.value, base),
            lambda: self.complexity(self.reference_model(log), kind, log, base)
        )

    def complexity_value(self, model: ProcessModel, kind: Union[MeasureKind, str],
                         log: EventLog, base: float = DEFAULT_LOG_BASE) -> ComplexityValue:
        """
        Complexidade bruta e escalada pela referência (100, 100)

        Returns:
            ComplexityValue com C_J limitado a [0, 1]

        Raises:
            ComplexityError: referência nula
        """
        kind = MeasureKind(kind)
        reference = self.reference_complexity(log, kind, base)
        if reference == 0:
            raise ComplexityError(MESSAGES['ERROR']['REFERENCIA_NULA'].format(medida=kind.value))

        raw = self.complexity(model, kind, log, base)
        scaled = min(1.0, max(0.0, raw / reference))
        return ComplexityValue(kind=kind, raw=raw, scaled=scaled, reference=reference)

    def scaled_complexity(self, model: ProcessModel, kind: Union[MeasureKind, str],
                          log: EventLog, base: float = DEFAULT_LOG_BASE) -> float:
        """C_J = J(modelo) / J(modelo de referência)"""
        return self.complexity_value(model, kind, log, base).scaled

    def measure_summary(self, log: EventLog, params: RateParams,
                        base: float = DEFAULT_LOG_BASE) -> Dict[str, float]:
        """
        Resumo de um ponto: F e J bruto das quatro medidas

        Args:
            log: Log de eventos
            params: Taxas (r_a, r_t)
            base: Base do logaritmo da entropia

        Returns:
            Dicionário com r_a, r_t, fitness, nodes, edges e uma chave por medida
        """
        model = self.discovery.discover(log, params)
        summary = {
            'r_a': params.activity_rate,
            'r_t': params.transition_rate,
            'fitness': self.fitness(model, log) if model.n else 0.0,
            'nodes': model.n + len(SENTINELS),
            'edges': model.m
        }
        for kind in MeasureKind:
            summary[kind.value] = self.complexity(model, kind, log, base)
        return summary
