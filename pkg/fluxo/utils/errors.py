"""
Exceções do sistema

Erros de entrada (arquivo, formato, parâmetros) usam código de saída 2;
erros de cálculo usam código 1.
"""

from typing import Optional


class FluxoError(Exception):
    """Erro base da aplicação"""

    exit_code = 1

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


# Erros de entrada

class InputError(FluxoError):
    """Erro de uso ou de leitura de dados"""

    exit_code = 2


class LogFormatError(InputError):
    """Log com formato inválido (coluna ausente, rótulo reservado, linha vazia)"""

    def __init__(self, message: str, column: Optional[str] = None, line: Optional[int] = None):
        super().__init__(message)
        self.column = column
        self.line = line


class EmptyLogError(InputError):
    """Log sem nenhum caso"""


class TimestampError(LogFormatError):
    """Timestamp que não pôde ser interpretado"""

    def __init__(self, message: str, line: int):
        super().__init__(message, line=line)


class ValidationError(InputError):
    """Parâmetro fora do domínio permitido"""


# Erros de cálculo

class GenerationError(FluxoError):
    """Modelo gerador sem caminho de término"""


class RepairImpossibleError(FluxoError):
    """Nó que não pode ser conectado ao início ou ao fim"""

    def __init__(self, message: str, node: str):
        super().__init__(message)
        self.node = node


class ModelError(FluxoError):
    """Modelo degenerado para a operação pedida"""


class ComplexityError(FluxoError):
    """Medida de complexidade indefinida (denominador ou referência nulos)"""
