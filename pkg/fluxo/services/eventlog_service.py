"""
EventLogService - Leitura, escrita e geração de logs de eventos
"""

import io
import logging
import os
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Dict, List, Optional, TextIO, Tuple, Union

import networkx as nx
import numpy as np
import pandas as pd
from dateutil.parser import isoparse

from fluxo.config import GeneratorConfig
from fluxo.models import EventLog, Trace
from fluxo.utils.constants import (
    DEFAULT_ACTIVITY_COLUMN, DEFAULT_CASE_COLUMN, DEFAULT_DELIMITER,
    DEFAULT_TIMESTAMP_COLUMN, END, LOG_ACTIONS, MESSAGES, SENTINELS, START
)
from fluxo.utils.decorators import log_execution
from fluxo.utils.errors import (
    EmptyLogError, GenerationError, LogFormatError, TimestampError, ValidationError
)
from fluxo.utils.helpers import clean_label, file_extension

logger = logging.getLogger(__name__)

Source = Union[str, os.PathLike, TextIO]


@dataclass(frozen=True)
class GeneratorModel:
    """
    Grafo dirigido com pesos usado para gerar logs sintéticos

    As arestas podem partir do início (START) e chegar ao fim (END).
    """

    edges: Dict[Tuple[str, str], float]

    @classmethod
    def chain(cls, *activities: str) -> 'GeneratorModel':
        """Modelo sequencial início -> a1 -> ... -> an -> fim"""
        path = (START,) + activities + (END,)
        return cls({edge: 1.0 for edge in zip(path, path[1:])})

    def graph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        for (source, target), weight in sorted(self.edges.items()):
            graph.add_edge(source, target, weight=weight)
        return graph

    def successors(self, node: str) -> List[Tuple[str, float]]:
        """Sucessores ordenados com seus pesos"""
        return sorted(
            (target, weight) for (source, target), weight in self.edges.items()
            if source == node
        )


class EventLogService:
    """Service para operações com logs de eventos"""

    @log_execution(LOG_ACTIONS['PARSE'], 'Leitura do log de eventos')
    def parse_log(self, source: Source,
                  case_column: str = DEFAULT_CASE_COLUMN,
                  activity_column: str = DEFAULT_ACTIVITY_COLUMN,
                  timestamp_column: Optional[str] = None,
                  delimiter: str = DEFAULT_DELIMITER,
                  use_timestamps: bool = True) -> EventLog:
        """
        Ler log de eventos "plano"

        Eventos são agrupados por caso, na ordem da primeira ocorrência de
        cada caso. Dentro do caso, a ordem é a do timestamp (empates pela
        ordem das linhas) ou a ordem das linhas quando não há timestamp.

        Args:
            source: Caminho (.csv, .txt, .tsv, .xlsx) ou fluxo de texto
            case_column: Coluna do identificador de caso
            activity_column: Coluna da atividade
            timestamp_column: Coluna de timestamp; quando omitida, a coluna
                "timestamp" é usada se existir
            delimiter: Separador de colunas
            use_timestamps: Desativa a ordenação por timestamp

        Returns:
            EventLog

        Raises:
            LogFormatError: coluna ausente, atividade vazia ou rótulo reservado
            TimestampError: timestamp inválido (com número da linha)
            EmptyLogError: arquivo sem linhas de dados
        """
        frame = self._read_frame(source, delimiter)

        for column in (case_column, activity_column):
            if column not in frame.columns:
                raise LogFormatError(
                    MESSAGES['ERROR']['COLUNA_AUSENTE'].format(coluna=column), column=column
                )

        if timestamp_column is not None and timestamp_column not in frame.columns:
            raise LogFormatError(
                MESSAGES['ERROR']['COLUNA_AUSENTE'].format(coluna=timestamp_column),
                column=timestamp_column
            )

        if timestamp_column is None and DEFAULT_TIMESTAMP_COLUMN in frame.columns:
            timestamp_column = DEFAULT_TIMESTAMP_COLUMN

        if not use_timestamps:
            timestamp_column = None

        if frame.empty:
            raise EmptyLogError(MESSAGES['ERROR']['LOG_VAZIO'])

        case_values = frame[case_column].tolist()
        activity_values = frame[activity_column].tolist()
        timestamp_values = (
            frame[timestamp_column].tolist() if timestamp_column is not None else [None] * len(frame)
        )

        cases: Dict[str, List[Tuple]] = {}
        rows = zip(case_values, activity_values, timestamp_values)
        for row, (raw_case, raw_activity, raw_timestamp) in enumerate(rows):
            line = row + 2
            case_id = clean_label(raw_case)
            activity = clean_label(raw_activity)

            if not case_id:
                raise LogFormatError(
                    MESSAGES['ERROR']['CASO_VAZIO'].format(linha=line), column=case_column, line=line
                )
            if not activity:
                raise LogFormatError(
                    MESSAGES['ERROR']['ATIVIDADE_VAZIA'].format(linha=line), column=activity_column, line=line
                )
            if activity in SENTINELS:
                raise LogFormatError(
                    MESSAGES['ERROR']['ROTULO_RESERVADO'].format(rotulo=activity, linha=line),
                    column=activity_column, line=line
                )

            timestamp = None
            if timestamp_column is not None:
                timestamp = self._parse_timestamp(raw_timestamp, line)

            cases.setdefault(case_id, []).append((timestamp, row, activity))

        traces = []
        for case_id, events in cases.items():
            if timestamp_column is not None:
                events.sort(key=lambda event: (event[0], event[1]))
            traces.append(Trace(case_id, tuple(event[2] for event in events)))

        log = EventLog(tuple(traces))
        logger.info(f"Log lido: {log.num_traces} casos, {log.total_events} eventos, "
                    f"{log.num_unique_activities} atividades")
        return log

    @staticmethod
    def _read_frame(source: Source, delimiter: str) -> pd.DataFrame:
        """Ler a fonte como DataFrame de strings"""
        try:
            if isinstance(source, (str, os.PathLike)) and file_extension(os.fspath(source)) == 'xlsx':
                frame = pd.read_excel(source, dtype=str, engine='openpyxl', keep_default_na=False)
                return frame.fillna('')

            return pd.read_csv(source, sep=delimiter, dtype=str, keep_default_na=False)

        except pd.errors.EmptyDataError:
            raise EmptyLogError(MESSAGES['ERROR']['LOG_VAZIO'])

        except pd.errors.ParserError as e:
            raise LogFormatError(f'Erro ao interpretar o log: {e}')

    @staticmethod
    def _parse_timestamp(value, line: int) -> datetime:
        """
        Interpretar timestamp ISO-8601

        Timestamps com fuso são convertidos para UTC sem fuso, para que
        possam ser comparados com os demais.
        """
        text = clean_label(value)
        try:
            timestamp = isoparse(text)
        except (ValueError, OverflowError):
            raise TimestampError(
                MESSAGES['ERROR']['TIMESTAMP_INVALIDO'].format(valor=text, linha=line), line=line
            )

        if timestamp.tzinfo is not None:
            timestamp = timestamp.astimezone(timezone.utc).replace(tzinfo=None)
        return timestamp

    def log_to_frame(self, log: EventLog,
                     case_column: str = DEFAULT_CASE_COLUMN,
                     activity_column: str = DEFAULT_ACTIVITY_COLUMN) -> pd.DataFrame:
        """
        Converter log em linhas (um evento por linha)

        Args:
            log: Log de eventos
            case_column: Nome da coluna de caso
            activity_column: Nome da coluna de atividade

        Returns:
            DataFrame com as colunas de caso e atividade
        """
        rows = [
            (trace.case_id, activity)
            for trace in log.traces
            for activity in trace.events
        ]
        return pd.DataFrame(rows, columns=[case_column, activity_column])

    def write_log(self, log: EventLog, target: Optional[Source] = None,
                  case_column: str = DEFAULT_CASE_COLUMN,
                  activity_column: str = DEFAULT_ACTIVITY_COLUMN,
                  delimiter: str = DEFAULT_DELIMITER) -> Optional[str]:
        """
        Gravar log como texto delimitado

        Args:
            log: Log de eventos
            target: Caminho ou fluxo de saída; quando omitido o texto é retornado
            case_column: Nome da coluna de caso
            activity_column: Nome da coluna de atividade
            delimiter: Separador de colunas

        Returns:
            Texto do log quando target é None
        """
        frame = self.log_to_frame(log, case_column, activity_column)

        if target is None:
            buffer = io.StringIO()
            frame.to_csv(buffer, index=False, sep=delimiter, lineterminator='\n')
            return buffer.getvalue()

        frame.to_csv(target, index=False, sep=delimiter, lineterminator='\n')
        if isinstance(target, (str, os.PathLike)):
            logger.info(MESSAGES['INFO']['LOG_GRAVADO'].format(caminho=os.fspath(target)))
        return None

    def validate_generator(self, model: GeneratorModel):
        """
        Validar modelo gerador

        Raises:
            ValidationError: peso não positivo ou aresta inválida
            GenerationError: nó alcançável sem caminho até o fim
        """
        for (source, target), weight in model.edges.items():
            if not weight > 0:
                raise ValidationError(f'Peso deve ser positivo: {source} -> {target} ({weight})')
            if source == END or target == START:
                raise ValidationError(f'Aresta inválida no modelo gerador: {source} -> {target}')
            if source == START and target == END:
                raise ValidationError('O modelo gerador não pode ligar o início diretamente ao fim.')

        graph = model.graph()
        if START not in graph or END not in graph:
            raise GenerationError(MESSAGES['ERROR']['SEM_TERMINO'].format(no=START))

        reachable = nx.descendants(graph, START)
        if END not in reachable:
            raise GenerationError(MESSAGES['ERROR']['SEM_TERMINO'].format(no=START))

        coreachable = nx.ancestors(graph, END)
        for node in sorted(reachable - {END}):
            if node not in coreachable:
                raise GenerationError(MESSAGES['ERROR']['SEM_TERMINO'].format(no=node))

    @log_execution(LOG_ACTIONS['SEED'], 'Geração de log sintético')
    def generate_synthetic(self, model: GeneratorModel, seed: int, num_cases: int) -> EventLog:
        """
        Gerar log por caminhadas aleatórias do início ao fim

        O sucessor de cada passo é sorteado com probabilidade proporcional
        ao peso da aresta. A mesma semente gera o mesmo log.

        Args:
            model: Modelo gerador
            seed: Semente do gerador aleatório
            num_cases: Quantidade de casos

        Returns:
            EventLog com casos "case1", "case2", ...

        Raises:
            EmptyLogError: num_cases <= 0
            GenerationError: caminhada sem término
        """
        if num_cases <= 0:
            raise EmptyLogError(MESSAGES['ERROR']['LOG_VAZIO'])

        self.validate_generator(model)

        rng = np.random.default_rng(seed)
        choices = {}
        traces = []

        for index in range(1, num_cases + 1):
            node = START
            events = []
            for _ in range(GeneratorConfig.MAX_WALK_STEPS):
                if node not in choices:
                    successors = model.successors(node)
                    weights = np.array([weight for _, weight in successors], dtype=float)
                    choices[node] = ([target for target, _ in successors], weights / weights.sum())

                targets, probabilities = choices[node]
                node = targets[rng.choice(len(targets), p=probabilities)]
                if node == END:
                    break
                events.append(node)
            else:
                raise GenerationError(MESSAGES['ERROR']['SEM_TERMINO'].format(no=node))

            traces.append(Trace(f'{GeneratorConfig.CASE_PREFIX}{index}', tuple(events)))

        return EventLog(tuple(traces))
