"""
Fluxo - descoberta, otimização e abstração de mapas de processo
"""

import logging

from .config import get_config

__version__ = '1.0.0'


def create_app(config_name=None):
    """
    Factory para preparar a aplicação

    Args:
        config_name: Nome da configuração (development, production, testing)

    Returns:
        Classe de configuração ativa
    """
    app_config = get_config(config_name)

    # Configurar logging
    configure_logging(app_config)

    return app_config


def configure_logging(app_config):
    """Configurar sistema de logging"""

    app_config.init_logging()
    logging.getLogger('fluxo').setLevel(getattr(logging, app_config.LOG_LEVEL))
