"""
Fixtures compartilhadas pelos testes
"""

import pytest

from fluxo import create_app
from fluxo.services import (
    DiscoveryService, EventLogService, ExportService, MetaStateService, OptimizerService,
    QualityService, StatsService
)
from tests.fixtures.sample_data import (
    ab_loop_log, make_log, nested_cycles_log, noisy_backbone_log
)


@pytest.fixture(scope='session')
def app_config():
    """Configuração de testes"""
    return create_app('testing')


@pytest.fixture
def stats():
    return StatsService()


@pytest.fixture
def discovery(stats):
    return DiscoveryService(stats)


@pytest.fixture
def quality(discovery):
    return QualityService(discovery)


@pytest.fixture
def metastates(discovery):
    return MetaStateService(discovery)


@pytest.fixture
def optimizer(discovery):
    return OptimizerService(discovery)


@pytest.fixture
def eventlogs():
    return EventLogService()


@pytest.fixture
def exporter():
    return ExportService()


@pytest.fixture
def chain_log():
    """Três casos ⟨A,B,C⟩"""
    return make_log(('ABC', 3))


@pytest.fixture
def ab_log():
    return ab_loop_log()


@pytest.fixture
def nested_log():
    return nested_cycles_log()


@pytest.fixture
def noisy_log():
    return noisy_backbone_log()
