"""
Constantes utilizadas em todo o sistema
"""

# Nós sentinela do mapa de processo
START = '@@start'
END = '@@end'
SENTINELS = frozenset({START, END})

SENTINEL_LABELS = {
    START: 'start',
    END: 'end'
}

# Medidas de complexidade
MEASURES = {
    'AD': 'AD',
    'H': 'H',
    'KN': 'Kn',
    'R': 'R'
}

# Modos de agregação de meta-estados
AGGREGATION_MODES = {
    'NONE': 'none',
    'OUTER': 'outer',
    'INNER_ALL': 'inner_all',
    'INNER_FREQ': 'inner_freq'
}

# Limites dos parâmetros
RATE_MIN = 0
RATE_MAX = 100
GRID_STEP_MIN = 1
GRID_STEP_MAX = 50

# Valores padrão
DEFAULT_LAMBDA = 0.6
DEFAULT_MEASURE = 'AD'
DEFAULT_GRID_STEP = 5
DEFAULT_META_STATE_THRESHOLD = 0.5
DEFAULT_LOG_BASE = 2
BASELINE_RATES = (50, 50)

# Tolerância nas comparações com limiares
THRESHOLD_EPS = 1e-12

# Colunas do log de entrada
DEFAULT_CASE_COLUMN = 'case_id'
DEFAULT_ACTIVITY_COLUMN = 'activity'
DEFAULT_TIMESTAMP_COLUMN = 'timestamp'
DEFAULT_DELIMITER = ','

# Colunas da paisagem exportada
LANDSCAPE_COLUMNS = [
    'r_a', 'r_t', 'fitness', 'complexity_scaled', 'objective',
    'nodes', 'edges', 'meta_states'
]

# Dígitos significativos nos arquivos de saída
FLOAT_DIGITS = 6

# Renderização de meta-estados
TOKEN_OPEN = '['
TOKEN_CLOSE = ']'
TOKEN_SEPARATOR = '·'
EMPTY_COMBINATION = '∅'

# Ações registradas nos logs
LOG_ACTIONS = {
    'PARSE': 'parse',
    'DISCOVER': 'discover',
    'OPTIMIZE': 'optimize',
    'AGGREGATE': 'aggregate',
    'COMBOS': 'combos',
    'EXPORT': 'export',
    'SEED': 'seed'
}

# Mensagens de erro
MESSAGES = {
    'ERROR': {
        'LOG_VAZIO': 'O log de eventos está vazio.',
        'COLUNA_AUSENTE': 'Coluna "{coluna}" não encontrada no log.',
        'CASO_VAZIO': 'Identificador de caso vazio na linha {linha}.',
        'ATIVIDADE_VAZIA': 'Atividade vazia na linha {linha}.',
        'ROTULO_RESERVADO': 'Rótulo reservado "{rotulo}" na linha {linha}.',
        'TIMESTAMP_INVALIDO': 'Timestamp inválido "{valor}" na linha {linha}.',
        'MODELO_SEM_NOS': 'O modelo não possui nós de atividade.',
        'TRACO_VAZIO': 'O traço "{caso}" não possui eventos.',
        'REPARO_IMPOSSIVEL': 'Não foi possível conectar o nó "{no}" ao {alvo}.',
        'SEM_TERMINO': 'O modelo gerador não possui caminho até o fim a partir de "{no}".',
        'REFERENCIA_NULA': 'A complexidade de referência ({medida}) é zero.'
    },
    'INFO': {
        'MODELO_GRAVADO': 'Modelo gravado em {caminho}',
        'PAISAGEM_GRAVADA': 'Paisagem gravada em {caminho}',
        'LOG_GRAVADO': 'Log sintético gravado em {caminho}',
        'SEM_CICLOS': 'Nenhum ciclo encontrado no log.',
        'SEM_META_ESTADOS': 'Nenhum meta-estado significativo em {taxas}.'
    }
}
