"""
Decoradores customizados para a aplicação
"""

import functools
import logging
import time
from typing import Callable, Optional

import click

from fluxo.utils.errors import FluxoError


def log_execution(action: str, description: Optional[str] = None):
    """
    Decorator para registrar a execução de operações

    Registra a duração em INFO quando a operação termina e o erro em ERROR
    antes de relançar a exceção.

    Args:
        action: Tipo de ação (discover, optimize, etc.)
        description: Descrição adicional da ação

    Returns:
        Decorator function
    """
    def decorator(f: Callable) -> Callable:
        logger = logging.getLogger(f.__module__)

        @functools.wraps(f)
        def decorated_function(*args, **kwargs):
            start_time = time.perf_counter()
            label = description or f"Execução de {f.__name__}"

            try:
                result = f(*args, **kwargs)
            except Exception as e:
                execution_time = time.perf_counter() - start_time
                logger.error(f"[{action.upper()}] ERRO: {label} - "
                             f"Tempo: {execution_time:.3f}s - "
                             f"Erro: {e}")
                raise

            execution_time = time.perf_counter() - start_time
            logger.info(f"[{action.upper()}] {label} - Tempo: {execution_time:.3f}s")
            return result

        return decorated_function
    return decorator


def handle_errors(f: Callable) -> Callable:
    """
    Decorator para tratar erros dos comandos de linha de comando

    Erros da aplicação encerram o processo com o código de saída da
    exceção; erros inesperados são registrados e encerram com código 1.

    Args:
        f: Comando a ser decorado

    Returns:
        Função decorada
    """
    logger = logging.getLogger(f.__module__)

    @functools.wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)

        except FluxoError as e:
            logger.error(f"Erro em {f.__name__}: {e.message}")
            click.echo(f"Erro: {e.message}", err=True)
            raise SystemExit(e.exit_code)

        except (click.exceptions.Exit, click.ClickException, SystemExit):
            raise

        except OSError as e:
            logger.error(f"Erro de arquivo em {f.__name__}: {e}")
            click.echo(f"Erro: {e}", err=True)
            raise SystemExit(2)

        except Exception as e:
            logger.exception(f"Erro inesperado em {f.__name__}: {e}")
            click.echo(f"Erro inesperado: {e}", err=True)
            raise SystemExit(1)

    return decorated_function
