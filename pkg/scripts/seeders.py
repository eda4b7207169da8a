"""
Script para gerar logs de eventos sintéticos
Usado para desenvolvimento e testes
"""

import os
import sys
from typing import Dict, List

# Adicionar o diretório raiz ao path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from fluxo import create_app
from fluxo.services import EventLogService, GeneratorModel
from fluxo.utils.constants import END, START


def create_chain():
    """Processo sequencial sem ciclos: A -> B -> C -> D"""
    return GeneratorModel.chain('A', 'B', 'C', 'D')


def create_loop():
    """Processo com um laço de retrabalho B -> C -> B"""
    return GeneratorModel({
        (START, 'A'): 1.0,
        ('A', 'B'): 1.0,
        ('B', 'C'): 1.0,
        ('C', 'B'): 0.4,
        ('C', 'D'): 0.6,
        ('D', END): 1.0
    })


def create_spaghetti():
    """Processo de alta variabilidade, com transições de ruído entre quase todas as atividades"""
    activities = ['A', 'B', 'C', 'D', 'E', 'F', 'G', 'H']
    edges: Dict = {(START, 'A'): 8.0, (START, 'B'): 1.0}

    for index, source in enumerate(activities):
        following = activities[index + 1] if index + 1 < len(activities) else None
        if following is not None:
            edges[(source, following)] = 6.0
        for target in activities:
            if target not in (source, following):
                edges[(source, target)] = 0.3
        edges[(source, END)] = 4.0 if following is None else 0.2

    return GeneratorModel(edges)


def create_nested_cycles():
    """
    Processo com dois ciclos aninhados, B·C e B·C·D

    Após A, o caso pode repetir B·C, voltar por D ao início do ciclo ou
    seguir para E.
    """
    return GeneratorModel({
        (START, 'A'): 1.0,
        ('A', 'B'): 1.0,
        ('B', 'C'): 1.0,
        ('C', 'B'): 0.35,
        ('C', 'D'): 0.65,
        ('D', 'B'): 0.4,
        ('D', 'E'): 0.6,
        ('E', END): 1.0
    })


SAMPLES = {
    'chain': create_chain,
    'loop': create_loop,
    'spaghetti': create_spaghetti,
    'nested_cycles': create_nested_cycles
}


def run_seeders(output_dir: str = 'samples', seed: int = 42, num_cases: int = 200) -> List[str]:
    """
    Gerar todos os logs de exemplo

    Args:
        output_dir: Diretório de saída
        seed: Semente do gerador (cada log usa seed + posição)
        num_cases: Casos por log

    Returns:
        Caminhos dos arquivos gravados
    """
    service = EventLogService()
    os.makedirs(output_dir, exist_ok=True)

    paths = []
    for offset, (name, factory) in enumerate(SAMPLES.items()):
        log = service.generate_synthetic(factory(), seed + offset, num_cases)
        path = os.path.join(output_dir, f'{name}.csv')
        service.write_log(log, path)
        paths.append(path)

    return paths


if __name__ == '__main__':
    create_app('development')
    for written in run_seeders():
        print(f"Log gravado: {written}")
