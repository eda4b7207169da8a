"""
Módulo de Services da aplicação
Contém os algoritmos de descoberta, avaliação e agregação
"""

from .discovery_service import DiscoveryService
from .eventlog_service import EventLogService, GeneratorModel
from .export_service import ExportService
from .metastate_service import MetaStateService
from .optimizer_service import OptimizerService
from .quality_service import QualityService
from .stats_service import StatsService

# Lista de todos os services para facilitar importação
__all__ = [
    'EventLogService',
    'GeneratorModel',
    'StatsService',
    'DiscoveryService',
    'QualityService',
    'MetaStateService',
    'OptimizerService',
    'ExportService'
]

# Instâncias globais dos services, compartilhando caches
optimizer_service = OptimizerService()
discovery_service = optimizer_service.discovery
stats_service = discovery_service.stats
quality_service = optimizer_service.quality
metastate_service = optimizer_service.metastates
eventlog_service = EventLogService()
export_service = ExportService()
