#!/usr/bin/env python
"""
Fluxo - Mapas de Processo
Arquivo principal de execução (linha de comando)
"""

import os

import click

from fluxo import create_app
from fluxo.config import Config, config
from fluxo.models import ObjectiveConfig, RateParams
from fluxo.services import (
    discovery_service, eventlog_service, export_service, metastate_service, optimizer_service
)
from fluxo.utils.constants import AGGREGATION_MODES, MEASURES, MESSAGES, RATE_MAX
from fluxo.utils.decorators import handle_errors
from fluxo.utils.validators import validate_threshold

LOG_PATH = click.Path(exists=True, dir_okay=False)
OUTPUT_PATH = click.Path(dir_okay=False, writable=True)


@click.group()
@click.version_option(Config.APP_VERSION, prog_name=Config.APP_NAME)
@click.option('--config', 'config_name', type=click.Choice(sorted(config)), default='default',
              show_default=True, help='Configuração da aplicação')
@click.pass_context
def cli(ctx, config_name):
    """Descoberta, otimização e abstração de mapas de processo"""
    ctx.obj = create_app(config_name)


LOG_OPTIONS = [
    click.option('--case-column', default=None, help='Coluna do identificador de caso'),
    click.option('--activity-column', default=None, help='Coluna da atividade'),
    click.option('--timestamp-column', default=None, help='Coluna de timestamp'),
    click.option('--delimiter', default=None, help='Separador de colunas'),
    click.option('--no-timestamps', is_flag=True, help='Usar a ordem das linhas')
]


def log_options(f):
    """Opções de leitura do log de eventos comuns a todos os comandos"""
    for option in reversed(LOG_OPTIONS):
        f = option(f)
    return f


def load_log(app_config, log_path, case_column=None, activity_column=None,
             timestamp_column=None, delimiter=None, no_timestamps=False):
    """Ler o log com os padrões da configuração ativa"""
    return eventlog_service.parse_log(
        log_path,
        case_column=case_column or app_config.CASE_COLUMN,
        activity_column=activity_column or app_config.ACTIVITY_COLUMN,
        timestamp_column=timestamp_column,
        delimiter=delimiter or app_config.DELIMITER,
        use_timestamps=not no_timestamps
    )


def write_model(model, dot_path, json_path):
    """Gravar o modelo em DOT e/ou JSON; sem destinos, o DOT vai para a saída padrão"""
    dot = export_service.render_dot(model)

    if dot_path:
        export_service.write_text(dot_path, dot)
        click.echo(MESSAGES['INFO']['MODELO_GRAVADO'].format(caminho=dot_path))
    if json_path:
        export_service.write_text(json_path, export_service.model_to_json(model))
        click.echo(MESSAGES['INFO']['MODELO_GRAVADO'].format(caminho=json_path))
    if not dot_path and not json_path:
        click.echo(dot, nl=False)


@cli.command('discover')
@click.argument('log_path', type=LOG_PATH)
@click.option('--ra', type=float, default=RATE_MAX, show_default=True, help='Taxa de atividades')
@click.option('--rt', type=float, default=RATE_MAX, show_default=True, help='Taxa de transições')
@click.option('--dot', 'dot_path', type=OUTPUT_PATH, help='Arquivo DOT de saída')
@click.option('--json', 'json_path', type=OUTPUT_PATH, help='Arquivo JSON de saída')
@log_options
@click.pass_obj
@handle_errors
def discover(app_config, log_path, ra, rt, dot_path, json_path, **columns):
    """Descobrir o mapa de processo nas taxas indicadas"""
    log = load_log(app_config, log_path, **columns)
    model = discovery_service.discover(log, RateParams(ra, rt))

    write_model(model, dot_path, json_path)
    if dot_path or json_path:
        click.echo(f"Modelo {model.params}: {model.n} atividades, {model.m} arestas "
                   f"({len(model.repair_edges)} de reparo)")


@cli.command('optimize')
@click.argument('log_path', type=LOG_PATH)
@click.option('--lambda', 'lam', type=float, default=None, help='Peso da complexidade (λ)')
@click.option('--measure', type=click.Choice(list(MEASURES.values())), default=None,
              help='Medida de complexidade')
@click.option('--grid-step', type=int, default=None, help='Passo da grade')
@click.option('--aggregation', type=click.Choice(list(AGGREGATION_MODES.values())), default=None,
              help='Agregação do modelo ótimo')
@click.option('--threshold', type=float, default=None, help='Significância mínima de meta-estado')
@click.option('--landscape-mode', type=click.Choice(list(AGGREGATION_MODES.values())), default=None,
              help='Agregação aplicada em cada célula da paisagem')
@click.option('--log-base', type=float, default=None, help='Base do logaritmo da entropia')
@click.option('--workers', type=int, default=None, help='Processos da busca em grade')
@click.option('--csv', 'csv_path', type=OUTPUT_PATH, help='Paisagem em CSV')
@click.option('--xlsx', 'xlsx_path', type=OUTPUT_PATH, help='Paisagem em Excel')
@click.option('--dot', 'dot_path', type=OUTPUT_PATH, help='Modelo ótimo em DOT')
@click.option('--json', 'json_path', type=OUTPUT_PATH, help='Modelo ótimo em JSON')
@log_options
@click.pass_obj
@handle_errors
def optimize(app_config, log_path, lam, measure, grid_step, aggregation, threshold, landscape_mode,
             log_base, workers, csv_path, xlsx_path, dot_path, json_path, **columns):
    """Otimizar (r_a, r_t) pela função objetivo e agregar meta-estados"""
    objective = ObjectiveConfig.from_config(
        app_config, lam=lam, measure=measure, grid_step=grid_step, mode=aggregation,
        threshold=threshold, landscape_mode=landscape_mode, log_base=log_base, max_workers=workers
    )
    log = load_log(app_config, log_path, **columns)

    landscape, model = optimizer_service.optimize_and_aggregate(log, objective)
    baseline = optimizer_service.baseline(log, objective)
    summary = optimizer_service.cycle_summary(log, landscape)

    if csv_path:
        export_service.write_text(csv_path, export_service.landscape_csv(landscape))
        click.echo(MESSAGES['INFO']['PAISAGEM_GRAVADA'].format(caminho=csv_path))
    if xlsx_path:
        export_service.write_landscape_xlsx(landscape, xlsx_path, baseline)
        click.echo(MESSAGES['INFO']['PAISAGEM_GRAVADA'].format(caminho=xlsx_path))
    if dot_path:
        export_service.write_text(dot_path, export_service.render_dot(model))
        click.echo(MESSAGES['INFO']['MODELO_GRAVADO'].format(caminho=dot_path))
    if json_path:
        export_service.write_text(json_path, export_service.model_to_json(model))
        click.echo(MESSAGES['INFO']['MODELO_GRAVADO'].format(caminho=json_path))

    click.echo(export_service.format_summary(landscape, baseline, summary), nl=False)


@cli.command('cycles')
@click.argument('log_path', type=LOG_PATH)
@click.option('--threshold', type=float, default=None, help='Significância mínima de meta-estado')
@click.option('--csv', 'csv_path', type=OUTPUT_PATH, help='Relatório de ciclos em CSV')
@log_options
@click.pass_obj
@handle_errors
def cycles(app_config, log_path, threshold, csv_path, **columns):
    """Listar os ciclos do log e marcar os meta-estados"""
    threshold = validate_threshold(app_config.META_STATE_THRESHOLD if threshold is None else threshold)
    log = load_log(app_config, log_path, **columns)

    found = metastate_service.cycles_search(log)
    states = metastate_service.find_states(found, log.num_traces, threshold)
    report = export_service.cycles_csv(found, states)

    if csv_path:
        export_service.write_text(csv_path, report)
    else:
        click.echo(report, nl=False)

    if not found:
        click.echo(MESSAGES['INFO']['SEM_CICLOS'], err=True)


@cli.command('combos')
@click.argument('log_path', type=LOG_PATH)
@click.option('--grid-step', type=int, default=None, help='Passo da grade')
@click.option('--threshold', type=float, default=None, help='Significância mínima de meta-estado')
@click.option('--csv', 'csv_path', type=OUTPUT_PATH, help='Mapa célula -> combinação em CSV')
@click.option('--dot', 'dot_path', type=OUTPUT_PATH, help='Grafo de combinações em DOT')
@log_options
@click.pass_obj
@handle_errors
def combos(app_config, log_path, grid_step, threshold, csv_path, dot_path, **columns):
    """Mapear combinações de meta-estados na grade de parâmetros"""
    objective = ObjectiveConfig.from_config(app_config, grid_step=grid_step, threshold=threshold)
    log = load_log(app_config, log_path, **columns)

    combination_map = metastate_service.combination_map(log, objective.grid(), objective.threshold)
    graph = metastate_service.combination_graph(combination_map)

    if csv_path:
        export_service.write_text(csv_path, export_service.combination_csv(combination_map))
    if dot_path:
        export_service.write_text(dot_path, export_service.render_combination_dot(graph))
    if not csv_path and not dot_path:
        click.echo(export_service.combination_csv(combination_map), nl=False)

    by_index = combination_map.by_index
    for index in metastate_service.rank_combinations(graph):
        combination = by_index[index]
        click.echo(f"{combination.name}: {combination.label} "
                   f"(cobertura {combination.coverage:.2%}, "
                   f"centralidade {graph.nodes[index]['centrality']:.3f})")


@cli.command('seed')
@click.option('--output-dir', type=click.Path(file_okay=False), default='samples', show_default=True,
              help='Diretório dos logs gerados')
@click.option('--seed', type=int, default=42, show_default=True, help='Semente do gerador')
@click.option('--cases', 'num_cases', type=int, default=200, show_default=True,
              help='Casos por log')
@click.pass_obj
@handle_errors
def seed(app_config, output_dir, seed, num_cases):
    """Gerar logs sintéticos de exemplo"""
    from scripts.seeders import run_seeders

    for path in run_seeders(output_dir, seed, num_cases):
        click.echo(MESSAGES['INFO']['LOG_GRAVADO'].format(caminho=os.path.normpath(path)))


def main():
    """Função principal"""
    cli()


if __name__ == '__main__':
    main()
