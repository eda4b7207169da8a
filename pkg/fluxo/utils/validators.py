"""
Validações de parâmetros do sistema
"""

from typing import Any, Optional

from fluxo.utils.constants import (
    AGGREGATION_MODES, GRID_STEP_MAX, GRID_STEP_MIN, MEASURES, RATE_MAX, RATE_MIN
)
from fluxo.utils.errors import ValidationError


class RangeValidator:
    """Validador de intervalo numérico fechado"""

    def __init__(self, min_value: float, max_value: float, name: str,
                 min_inclusive: bool = True, message: Optional[str] = None):
        self.min_value = min_value
        self.max_value = max_value
        self.name = name
        self.min_inclusive = min_inclusive
        self.message = message

    def __call__(self, value: Any) -> float:
        try:
            number = float(value)
        except (TypeError, ValueError):
            raise ValidationError(self.message or f'{self.name}: valor numérico inválido ({value!r}).')

        if number != number:  # NaN
            raise ValidationError(self.message or f'{self.name}: valor numérico inválido.')

        below = number < self.min_value if self.min_inclusive else number <= self.min_value
        if below or number > self.max_value:
            bracket = '[' if self.min_inclusive else '('
            raise ValidationError(
                self.message or
                f'{self.name} deve estar em {bracket}{self.min_value}, {self.max_value}]: {value}'
            )
        return number


class GridStepValidator:
    """Validador do passo da grade (divisor de 100 entre 1 e 50)"""

    def __init__(self, message: Optional[str] = None):
        self.message = message

    def __call__(self, value: Any) -> int:
        try:
            step = int(value)
        except (TypeError, ValueError):
            raise ValidationError(self.message or f'Passo da grade inválido: {value!r}')

        if step != value and not isinstance(value, str):
            raise ValidationError(self.message or f'Passo da grade deve ser inteiro: {value!r}')

        if step < GRID_STEP_MIN or step > GRID_STEP_MAX:
            raise ValidationError(
                self.message or f'Passo da grade deve estar entre {GRID_STEP_MIN} e {GRID_STEP_MAX}.'
            )

        if RATE_MAX % step != 0:
            raise ValidationError(self.message or f'Passo da grade deve dividir {RATE_MAX}: {step}')

        return step


class ChoiceValidator:
    """Validador de valor pertencente a um conjunto"""

    def __init__(self, choices, name: str, message: Optional[str] = None):
        self.choices = tuple(choices)
        self.name = name
        self.message = message

    def __call__(self, value: Any) -> Any:
        if value not in self.choices:
            raise ValidationError(
                self.message or
                f'{self.name} inválido: {value!r}. Opções: {", ".join(map(str, self.choices))}'
            )
        return value


validate_rate = RangeValidator(RATE_MIN, RATE_MAX, 'Taxa')
validate_lambda = RangeValidator(0.0, 1.0, 'Lambda')
validate_threshold = RangeValidator(0.0, 1.0, 'Limiar de significância', min_inclusive=False)
validate_grid_step = GridStepValidator()
validate_measure = ChoiceValidator(MEASURES.values(), 'Medida de complexidade')
validate_aggregation = ChoiceValidator(AGGREGATION_MODES.values(), 'Modo de agregação')
