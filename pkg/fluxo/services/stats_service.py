"""
StatsService - Frequências e significância de atividades e transições
"""

import logging
from collections import Counter
from typing import Dict, FrozenSet, Iterable, List, Tuple

from fluxo.models import ConflictPair, EventLog, SignificanceTable
from fluxo.utils.cache import LogCache
from fluxo.utils.constants import MESSAGES
from fluxo.utils.errors import EmptyLogError

logger = logging.getLogger(__name__)

# Passo de um traço: rótulos que o representam e o rótulo de origem
Step = Tuple[FrozenSet[str], str]
StepTrace = Tuple[Tuple[Step, ...], int]


class StatsService:
    """Service para cálculo de significância"""

    def __init__(self):
        self.cache = LogCache('significance')

    def compute_significance(self, log: EventLog) -> SignificanceTable:
        """
        Calcular a tabela de significância de um log

        A frequência por caso conta cada traço no máximo uma vez por
        elemento; a frequência absoluta conta todas as ocorrências.

        Args:
            log: Log de eventos

        Returns:
            SignificanceTable do log

        Raises:
            EmptyLogError: log sem traços
        """
        if log.is_empty:
            raise EmptyLogError(MESSAGES['ERROR']['LOG_VAZIO'])

        return self.cache.get(log, 'table', lambda: self.table_from_steps(
            self.log_steps(log), log.num_traces
        ))

    @staticmethod
    def log_steps(log: EventLog) -> List[StepTrace]:
        """Variantes do log como sequências de passos unitários"""
        return [
            (tuple((frozenset((event,)), event) for event in variant), count)
            for variant, count in log.variants().items()
        ]

    def table_from_steps(self, step_traces: Iterable[StepTrace], num_traces: int) -> SignificanceTable:
        """
        Calcular significância a partir de traços de passos

        Cada passo pode representar vários rótulos (redirecionamento para
        meta-estados). Laços criados apenas por redirecionamento, em que
        algum dos passos não é o próprio rótulo, são descartados.

        Args:
            step_traces: Pares (passos, multiplicidade)
            num_traces: Quantidade total de traços

        Returns:
            SignificanceTable
        """
        if num_traces <= 0:
            raise EmptyLogError(MESSAGES['ERROR']['LOG_VAZIO'])

        activity_abs = Counter()
        activity_cases = Counter()
        transition_abs = Counter()
        transition_cases = Counter()
        start_abs = Counter()
        end_abs = Counter()

        for steps, count in step_traces:
            if not steps:
                continue

            seen_activities = set()
            seen_transitions = set()

            for labels, _origin in steps:
                for label in labels:
                    activity_abs[label] += count
                    seen_activities.add(label)

            for (first, first_origin), (second, second_origin) in zip(steps, steps[1:]):
                for source in first:
                    for target in second:
                        if source == target and not (first_origin == second_origin == source):
                            continue
                        transition_abs[(source, target)] += count
                        seen_transitions.add((source, target))

            for label in steps[0][0]:
                start_abs[label] += count
            for label in steps[-1][0]:
                end_abs[label] += count

            for label in seen_activities:
                activity_cases[label] += count
            for transition in seen_transitions:
                transition_cases[transition] += count

        return SignificanceTable(
            num_traces=num_traces,
            activity_case_freq=self._fractions(activity_cases, num_traces),
            transition_case_freq=self._fractions(transition_cases, num_traces),
            activity_abs_freq=dict(activity_abs),
            transition_abs_freq=dict(transition_abs),
            start_case_freq=self._fractions(start_abs, num_traces),
            end_case_freq=self._fractions(end_abs, num_traces),
            start_abs_freq=dict(start_abs),
            end_abs_freq=dict(end_abs)
        )

    @staticmethod
    def _fractions(counts: Dict, total: int) -> Dict:
        return {key: value / total for key, value in counts.items()}

    def conflict_pairs(self, table: SignificanceTable) -> List[ConflictPair]:
        """
        Pares de atividades observados nas duas direções

        Laços (a -> a) não são conflitos.

        Args:
            table: Tabela de significância

        Returns:
            Lista de ConflictPair ordenada pelo par (first < second)
        """
        pairs = []
        for (source, target), forward in table.transition_case_freq.items():
            if source >= target:
                continue
            backward = table.transition_case_freq.get((target, source))
            if backward is not None:
                pairs.append(ConflictPair(source, target, forward, backward))

        pairs.sort(key=lambda pair: pair.activities)
        logger.debug(f"{len(pairs)} pares em conflito")
        return pairs
