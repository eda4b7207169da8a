"""
Funções auxiliares e utilitárias do sistema
"""

import math
from typing import Any, Iterable, Optional, Sequence, Union

from fluxo.utils.constants import (
    FLOAT_DIGITS, SENTINEL_LABELS, TOKEN_CLOSE, TOKEN_OPEN, TOKEN_SEPARATOR
)

def format_float(value: Union[float, int], digits: int = FLOAT_DIGITS) -> str:
    """
    Formatar número com dígitos significativos

    Args:
        value: Valor a ser formatado
        digits: Quantidade de dígitos significativos

    Returns:
        String formatada (ex: "0.666667")
    """
    return f"{float(value):.{digits}g}"

def round_float(value: Union[float, int], digits: int = FLOAT_DIGITS) -> float:
    """Arredondar para os mesmos dígitos usados na serialização"""
    return float(format_float(value, digits))

def clean_label(text: Any) -> str:
    """
    Limpar rótulo de atividade

    Apenas os espaços nas extremidades são removidos; maiúsculas e
    minúsculas são preservadas.

    Args:
        text: Valor lido do log

    Returns:
        Rótulo limpo
    """
    if text is None:
        return ""
    return str(text).strip()

def token_label(body: Sequence[str]) -> str:
    """
    Rótulo canônico de um meta-estado

    Args:
        body: Sequência de atividades do ciclo

    Returns:
        Rótulo no formato "[B·C]"
    """
    return f"{TOKEN_OPEN}{TOKEN_SEPARATOR.join(body)}{TOKEN_CLOSE}"

def short_label(body: Sequence[str]) -> str:
    """
    Rótulo compacto de um ciclo para legendas

    Atividades de um caractere são concatenadas ("CF"); nos demais casos
    usa-se o separador dos meta-estados.
    """
    if all(len(activity) == 1 for activity in body):
        return ''.join(body)
    return TOKEN_SEPARATOR.join(body)

def display_label(node: str) -> str:
    """Rótulo de exibição de um nó (sentinelas viram "start"/"end")"""
    return SENTINEL_LABELS.get(node, node)

def floor_mean(values: Iterable[Union[int, float]]) -> int:
    """
    Média arredondada para baixo

    Args:
        values: Valores numéricos

    Returns:
        Média truncada ou 0 para coleção vazia
    """
    values = list(values)
    if not values:
        return 0
    return math.floor(sum(values) / len(values))

def file_extension(path: Optional[str]) -> str:
    """Extensão do arquivo em minúsculas, sem o ponto"""
    if not path or '.' not in str(path):
        return ''
    return str(path).rsplit('.', 1)[1].lower()
