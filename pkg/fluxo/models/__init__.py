"""
Modelos de domínio
"""

from .event_log import EventLog, Trace
from .landscape import CycleSummary, Landscape, LandscapeCell, ObjectiveConfig
from .meta_state import (
    AggregatedModel, AggregationMode, Combination, CombinationMap, Cycle, MetaState
)
from .process_model import ProcessModel, RateParams
from .quality import ComplexityValue, MeasureKind, ReplayResult
from .significance import ConflictPair, SignificanceTable

__all__ = [
    'EventLog', 'Trace',
    'SignificanceTable', 'ConflictPair',
    'RateParams', 'ProcessModel',
    'Cycle', 'MetaState', 'AggregationMode', 'AggregatedModel',
    'Combination', 'CombinationMap',
    'ReplayResult', 'ComplexityValue', 'MeasureKind',
    'ObjectiveConfig', 'LandscapeCell', 'Landscape', 'CycleSummary'
]
