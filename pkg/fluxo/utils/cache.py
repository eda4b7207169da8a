"""
Cache em memória de resultados calculados por log de eventos
"""

import logging
from collections import OrderedDict
from typing import Any, Callable, Hashable, Tuple

logger = logging.getLogger(__name__)

DEFAULT_MAX_ENTRIES = 32


class LogCache:
    """
    Cache de valores derivados de um log

    A chave combina a identidade do log com uma chave auxiliar; o log fica
    guardado junto ao valor, então a identidade não é reutilizada enquanto
    a entrada existir. Acima de max_entries, a entrada usada há mais tempo
    é descartada.
    """

    def __init__(self, name: str = 'cache', max_entries: int = DEFAULT_MAX_ENTRIES):
        self.name = name
        self.max_entries = max_entries
        self._store: 'OrderedDict[Tuple[int, Hashable], Tuple[Any, Any]]' = OrderedDict()

    def get(self, log: Any, key: Hashable, compute: Callable[[], Any]) -> Any:
        """
        Obter valor do cache ou calcular

        Args:
            log: Log de eventos de origem
            key: Chave auxiliar (medida, base, etc.)
            compute: Função sem argumentos que calcula o valor

        Returns:
            Valor armazenado
        """
        cache_key = (id(log), key)
        entry = self._store.get(cache_key)
        if entry is not None and entry[0] is log:
            self._store.move_to_end(cache_key)
            logger.debug(f"Cache hit ({self.name}) para {key!r}")
            return entry[1]

        value = compute()
        self._store[cache_key] = (log, value)
        self._store.move_to_end(cache_key)
        while len(self._store) > self.max_entries:
            self._store.popitem(last=False)
        logger.debug(f"Cache set ({self.name}) para {key!r}")
        return value

    def __len__(self) -> int:
        return len(self._store)
