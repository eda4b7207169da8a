"""
Configurações da aplicação
"""

import logging
import os
from logging.handlers import RotatingFileHandler


class Config:
    """Configuração base da aplicação"""

    # Configurações da aplicação
    APP_NAME = 'Fluxo - Mapas de Processo'
    APP_VERSION = '1.0.0'

    # Configurações de log
    LOG_LEVEL = 'INFO'
    LOG_FORMAT = '%(asctime)s %(levelname)s: %(message)s'
    LOG_FOLDER = os.path.join(os.getcwd(), 'logs')
    LOG_MAX_BYTES = 10 * 1024 * 1024  # 10MB
    LOG_BACKUP_COUNT = 10

    # Configurações do log de eventos
    CASE_COLUMN = 'case_id'
    ACTIVITY_COLUMN = 'activity'
    DELIMITER = ','

    # Configurações de otimização
    LAMBDA = 0.6
    MEASURE = 'AD'
    GRID_STEP = 5
    AGGREGATION = 'none'
    META_STATE_THRESHOLD = 0.5
    MAX_WORKERS = 1
    LOG_BASE = 2

    @staticmethod
    def init_logging():
        """Inicializar logging da configuração"""
        pass


class DevelopmentConfig(Config):
    """Configuração para ambiente de desenvolvimento"""

    # Configurações de log mais verbosas
    LOG_LEVEL = 'DEBUG'

    @staticmethod
    def init_logging():
        """Inicializar logging de desenvolvimento"""
        Config.init_logging()
        logging.basicConfig(
            level=getattr(logging, DevelopmentConfig.LOG_LEVEL),
            format=Config.LOG_FORMAT
        )


class ProductionConfig(Config):
    """Configuração para execuções em lote"""

    LOG_LEVEL = 'INFO'

    # Paralelismo da grade em produção
    MAX_WORKERS = max(1, (os.cpu_count() or 1))

    @staticmethod
    def init_logging():
        """Inicializar logging de produção"""
        Config.init_logging()

        # Criar diretório de logs se não existir
        os.makedirs(Config.LOG_FOLDER, exist_ok=True)

        # Configurar handler de arquivo
        file_handler = RotatingFileHandler(
            os.path.join(Config.LOG_FOLDER, 'fluxo.log'),
            maxBytes=Config.LOG_MAX_BYTES,
            backupCount=Config.LOG_BACKUP_COUNT,
            encoding='utf-8'
        )

        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'
        ))

        file_handler.setLevel(logging.INFO)
        logger = logging.getLogger('fluxo')
        logger.addHandler(file_handler)
        logger.setLevel(logging.INFO)
        logger.info('Fluxo - Iniciando em produção')


class TestingConfig(Config):
    """Configuração para ambiente de testes"""

    LOG_LEVEL = 'WARNING'

    # Grade reduzida para testes
    GRID_STEP = 25

    @staticmethod
    def init_logging():
        """Inicializar logging de testes"""
        Config.init_logging()
        logging.getLogger('fluxo').setLevel(logging.WARNING)


# Mapeamento de configurações por ambiente
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}


def get_config(config_name=None):
    """
    Obter configuração baseada no nome

    Args:
        config_name: Nome da configuração

    Returns:
        Classe de configuração
    """
    if config_name is None:
        config_name = 'default'

    return config.get(config_name, config['default'])


# Configurações específicas para diferentes componentes

class RenderConfig:
    """Configurações de renderização DOT"""

    # Nós sentinela
    START_FILL = 'green'
    END_FILL = 'red'
    SENTINEL_SHAPE = 'circle'
    SENTINEL_FONT_COLOR = 'white'

    # Nós de atividade
    NODE_SHAPE = 'box'
    NODE_STYLE = 'rounded,filled'
    NODE_FILL = 'lightgoldenrod1'

    # Meta-estados
    TOKEN_SHAPE = 'box3d'
    TOKEN_STYLE = 'filled,bold'
    TOKEN_FILL = 'lightblue'
    TOKEN_PERIPHERIES = 2

    # Arestas
    PEN_WIDTHS = (1, 2, 3, 4, 5)
    REPAIR_STYLE = 'dashed'
    EDGE_COLOR = 'gray30'

    # Grafo de combinações
    COMBINATION_SHAPE = 'ellipse'
    FONT_NAME = 'Helvetica'


class GeneratorConfig:
    """Configurações do gerador de logs sintéticos"""

    # Limite de passos de uma caminhada (proteção contra laços de peso alto)
    MAX_WALK_STEPS = 10000
    CASE_PREFIX = 'case'
