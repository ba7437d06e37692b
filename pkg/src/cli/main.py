"""
Interface de linha de comando.

Relatórios saem em stdout (ou em --output, gravado de forma atômica); logs
saem em stderr. Códigos de saída: 0 sucesso, 2 erro de uso, 3 erro de dados.
"""

import functools
import logging
import math
from typing import Any, Callable, Dict, List, Optional

import click
from pydantic import ValidationError

from src.cascade import CascadeSpec, Divergent, octave_table, omega_limit, omega_sum, tail_bound
from src.config import settings
from src.entanglement import ChshSettings, EprSpec, bell_chsh_scan, correlation_estimate, correlation_scan
from src.exceptions import BivalentError
from src.geometry import GridSpec, grid_overlap_bruteforce, overlap_points
from src.latitude import ThresholdSpec, apply_j
from src.measurement import born_estimate, flip_fraction, uncertainty_mc
from src.reports import RunConfig, StatReport, render_csv, render_json, reports_to_rows, write_text
from src.sequences import (
    DyadicExponent,
    apply_i_power,
    negate,
    random_sequence,
    read_sequence,
    stats,
    write_sequence,
)
from src.utils.logging import setup_logging
from src.utils.streams import validate_seed

logger = logging.getLogger(__name__)


class DataError(click.ClickException):
    """Erro de dados: arquivo malformado, comprimento incompatível, etc."""
    exit_code = 3


class DyadicParamType(click.ParamType):
    """Expoente diádico na sintaxe k/2^n (ou k/m, inteiro, decimal finito)."""
    name = "dyadic"

    def convert(self, value, param, ctx):
        if isinstance(value, DyadicExponent):
            return value
        try:
            return DyadicExponent.parse(value)
        except BivalentError as e:
            self.fail(str(e), param, ctx)


DYADIC = DyadicParamType()


def _seed_callback(ctx, param, value):
    try:
        return validate_seed(value)
    except BivalentError as e:
        raise click.BadParameter(str(e))


def handle_data_errors(func: Callable) -> Callable:
    """Converte erros de domínio, validação e E/S em saída com código 3."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (BivalentError, ValidationError, OSError) as e:
            logger.error(f"Erro de dados: {e}")
            raise DataError(str(e)) from e
    return wrapper


def experiment_options(func: Callable) -> Callable:
    """Opções comuns a todos os experimentos."""
    options = [
        click.option('--seed', type=int, default=lambda: settings.DEFAULT_SEED,
                     callback=_seed_callback, show_default="DEFAULT_SEED",
                     help='Semente de 64 bits'),
        click.option('--trials', type=click.IntRange(min=1), default=lambda: settings.DEFAULT_TRIALS,
                     show_default="DEFAULT_TRIALS", help='Número de tentativas'),
        click.option('--parallel', type=click.IntRange(min=-1), default=lambda: settings.PARALLEL_JOBS,
                     help='Processos do joblib (-1 = todos); não altera o resultado'),
        click.option('--window-bits', type=click.IntRange(min=8), default=lambda: settings.WINDOW_BITS,
                     show_default="WINDOW_BITS", help='Largura w da janela de j_θ'),
        click.option('--format', 'output_format', type=click.Choice(['json', 'csv']),
                     default=lambda: settings.OUTPUT_FORMAT, help='Formato do relatório'),
        click.option('--output', type=click.Path(dir_okay=False), default=None,
                     help='Arquivo de saída (padrão: stdout)'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


def _config(seed: int, trials: int, parallel: int, window_bits: int, output_format: str) -> RunConfig:
    if parallel == 0:
        raise click.BadParameter("--parallel não pode ser 0")
    return RunConfig(
        seed=seed,
        trials=trials,
        window_bits=window_bits,
        output_format=output_format,
        parallel=parallel,
    )


def emit(text: str, output: Optional[str]) -> None:
    """Escreve o relatório em stdout ou, atomicamente, em arquivo."""
    if output:
        write_text(output, text)
    else:
        click.echo(text, nl=False)


def _render_reports(reports: List[StatReport], key: str, config: RunConfig) -> str:
    if config.output_format == "csv":
        return render_csv(reports_to_rows(reports, key), columns=[key, "estimate", "std_error", "samples"])
    return render_json(reports[0] if len(reports) == 1 else reports)


# ============================================================
# Grupo principal
# ============================================================

@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option('--log-level', type=click.Choice(['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
              case_sensitive=False), default=None, help='Nível de log (stderr)')
@click.option('--log-json', is_flag=True, default=False, help='Logs em JSON')
@click.version_option(settings.APP_VERSION, prog_name="bivalent")
def cli(log_level: Optional[str], log_json: bool):
    """Sequências bivalentes: operadores i^q e j_θ, medição e experimentos de Monte Carlo."""
    setup_logging(log_level=log_level, json_format=True if log_json else None)


@cli.command()
@click.argument('output', type=click.Path(dir_okay=False))
@click.option('--length', type=click.IntRange(min=1), default=lambda: settings.SEQUENCE_LENGTH,
              show_default="SEQUENCE_LENGTH", help='Número de elementos')
@click.option('--seed', type=int, default=lambda: settings.DEFAULT_SEED, callback=_seed_callback,
              help='Semente de 64 bits')
@click.option('--max-n', type=click.IntRange(min=0), default=None,
              help='Exige comprimento múltiplo de 2^(max_n+1)')
@handle_data_errors
def generate(output: str, length: int, seed: int, max_n: Optional[int]):
    """Gera uma sequência genérica semeada em formato BSQ1."""
    config = RunConfig(seed=seed, sequence_length=length)
    if max_n is not None:
        config.require_alignment(max_n)
    write_sequence(output, random_sequence(config.sequence_length, config.seed))


@cli.command()
@click.argument('input_path', metavar='INPUT', type=click.Path(exists=True, dir_okay=False))
@click.argument('output', type=click.Path(dir_okay=False))
@click.option('--i-power', 'exponent', type=DYADIC, default=None, help='Aplica i^q (q = k/2^n)')
@click.option('--j-theta', 'theta', type=click.FloatRange(-math.pi / 2, math.pi / 2), default=None,
              help='Aplica j_θ (radianos)')
@click.option('--negate', 'do_negate', is_flag=True, default=False, help='Inverte todos os elementos')
@click.option('--window-bits', type=click.IntRange(min=8), default=lambda: settings.WINDOW_BITS,
              help='Largura w da janela de j_θ')
@handle_data_errors
def op(input_path: str, output: str, exponent: Optional[DyadicExponent], theta: Optional[float],
       do_negate: bool, window_bits: int):
    """Aplica um operador a um arquivo BSQ1 e grava o resultado."""
    chosen = [exponent is not None, theta is not None, do_negate]
    if sum(chosen) != 1:
        raise click.UsageError("Escolha exatamente um de --i-power, --j-theta, --negate")

    s = read_sequence(input_path)
    if exponent is not None:
        result = apply_i_power(exponent, s)
    elif theta is not None:
        latitude = apply_j(ThresholdSpec(theta=theta, window_bits=window_bits), s)
        logger.info(f"j_θ: {latitude.tie_count} empates")
        result = latitude.output
    else:
        result = negate(s)
    write_sequence(output, result)


@cli.command(name="stats")
@click.argument('input_path', metavar='INPUT', type=click.Path(exists=True, dir_okay=False))
@handle_data_errors
def stats_command(input_path: str):
    """Média, variância e contagem de um arquivo BSQ1."""
    summary = stats(read_sequence(input_path))
    emit(render_json({
        "op": "stats",
        "mean": summary.mean,
        "variance": summary.variance,
        "count": summary.count,
    }), None)


# ============================================================
# Experimentos
# ============================================================

@cli.group()
def experiment():
    """Experimentos de Monte Carlo e demonstrações numéricas."""


@experiment.command()
@click.option('--theta', type=click.FloatRange(-math.pi / 2, math.pi / 2), multiple=True, required=True,
              help='Latitude (pode repetir)')
@experiment_options
@handle_data_errors
def born(theta, seed, trials, parallel, window_bits, output_format, output):
    """Fração de resultados +1; converge para (1 + sin θ)/2."""
    config = _config(seed, trials, parallel, window_bits, output_format)
    reports = [
        born_estimate(t, config.trials, config.seed, config.window_bits, config.parallel)
        for t in theta
    ]
    emit(_render_reports(reports, "theta", config), output)


@experiment.command()
@click.option('--delta-theta', type=click.FloatRange(0, math.pi), default=None,
              help='Orientação relativa Δθ em [0, π]')
@click.option('--scan', is_flag=True, default=False, help='Varre Δθ numa grade uniforme em [0, π]')
@click.option('--points', type=click.IntRange(min=2), default=lambda: settings.EPR_SCAN_POINTS,
              help='Pontos da varredura')
@experiment_options
@handle_data_errors
def epr(delta_theta, scan, points, seed, trials, parallel, window_bits, output_format, output):
    """Correlação C(Δθ) dos pares EPR; converge para -cos Δθ."""
    config = _config(seed, trials, parallel, window_bits, output_format)
    if scan == (delta_theta is not None):
        raise click.UsageError("Use --delta-theta ou --scan (exatamente um)")
    if scan:
        reports = correlation_scan(points, config.trials, config.seed, config.window_bits, config.parallel)
    else:
        spec = EprSpec(delta_theta=delta_theta, trials=config.trials, seed=config.seed,
                       window_bits=config.window_bits)
        reports = [correlation_estimate(spec, config.parallel)]
    emit(_render_reports(reports, "delta_theta", config), output)


@experiment.command()
@click.option('--angles', type=float, nargs=4, default=None, metavar="A B A' B'",
              help="Orientações a, b, a′, b′ (padrão: 0, π/4, π/2, 3π/4)")
@experiment_options
@handle_data_errors
def chsh(angles, seed, trials, parallel, window_bits, output_format, output):
    """Combinação CHSH |C(a,b) - C(a,b′)| + |C(a′,b) + C(a′,b′)|."""
    config = _config(seed, trials, parallel, window_bits, output_format)
    chosen = (
        ChshSettings(a=angles[0], b=angles[1], a_prime=angles[2], b_prime=angles[3])
        if angles else ChshSettings.optimal()
    )
    report = bell_chsh_scan(chosen, config.trials, config.seed, config.window_bits, config.parallel)
    if config.output_format == "csv":
        row = {key: report.params[key] for key in ("a", "b", "a_prime", "b_prime")}
        row.update(estimate=report.estimate, std_error=report.std_error, samples=report.samples)
        emit(render_csv([row]), output)
    else:
        emit(render_json(report), output)


@experiment.command()
@click.option('--colat', type=click.FloatRange(0, math.pi), required=True, help='Co-latitude θ̃ em [0, π]')
@click.option('--lon', type=float, required=True, help='Longitude λ')
@experiment_options
@handle_data_errors
def uncertainty(colat, lon, seed, trials, parallel, window_bits, output_format, output):
    """Identidade de incerteza σ_θ̃·σ_λ = |μ_θ̃′|."""
    config = _config(seed, trials, parallel, window_bits, output_format)
    report = uncertainty_mc(colat, lon, config.trials, config.seed, config.window_bits, config.parallel)
    if config.output_format == "csv":
        emit(render_csv([{
            "colat": colat,
            "lon": lon,
            "sigma_colatitude": report.sigma_colatitude.estimate,
            "sigma_longitude": report.sigma_longitude.estimate,
            "mu_rotated": report.mu_rotated.estimate,
            "product": report.product,
            "abs_mu": report.abs_mu,
            "difference_std_error": report.difference_std_error,
        }]), output)
    else:
        emit(render_json(report), output)


@experiment.command()
@click.option('--slope', type=float, default=-5.0 / 3.0, help='Inclinação espectral s')
@click.option('--k-l', 'k_l', type=float, default=1.0, help='Número de onda base k_L')
@click.option('--levels', type=click.IntRange(min=1), default=30, help='Número de oitavas N')
@click.option('--energy-constant', type=float, default=1.0, help='Constante C de E(k) = C·k^s')
@click.option('--format', 'output_format', type=click.Choice(['json', 'csv']),
              default=lambda: settings.OUTPUT_FORMAT, help='Formato do relatório')
@click.option('--output', type=click.Path(dir_okay=False), default=None,
              help='Arquivo de saída (padrão: stdout)')
@handle_data_errors
def cascade(slope, k_l, levels, energy_constant, output_format, output):
    """Tempo de previsibilidade Ω(N) por oitavas."""
    spec = CascadeSpec(spectral_slope=slope, k_L=k_l, levels=levels, energy_constant=energy_constant)
    table = octave_table(spec)
    if output_format == "csv":
        emit(render_csv(table), output)
        return
    limit = omega_limit(spec)
    bound = tail_bound(spec)
    payload: Dict[str, Any] = {
        "op": "cascade",
        "spec": spec,
        "omega_sum": omega_sum(spec),
        "omega_limit": str(limit) if isinstance(limit, Divergent) else limit,
        "tail_bound": None if math.isinf(bound) else bound,
        "rows": table.to_dict(orient="records"),
    }
    emit(render_json(payload), output)


@experiment.command()
@click.option('--max-n', type=click.IntRange(min=0, max=20), default=10, help='Maior ordem n testada')
@experiment_options
@handle_data_errors
def noncomputability(max_n, seed, trials, parallel, window_bits, output_format, output):
    """Fração de resultados trocados por i^(1/2^n), n = 0..max_n."""
    config = _config(seed, trials, parallel, window_bits, output_format)
    reports = [flip_fraction(n, config.trials, config.seed, config.parallel) for n in range(max_n + 1)]
    if config.output_format == "csv":
        emit(render_csv(reports_to_rows(reports, "n"), columns=["n", "estimate", "std_error", "samples"]), output)
    else:
        emit(render_json(reports), output)


@experiment.command(name="grid-overlap")
@click.option('--meridians', 'meridians', type=click.IntRange(min=1), multiple=True, default=(4, 8, 16),
              show_default=True, help='Número N de meridianos (pode repetir)')
@click.option('--rotation', type=float, default=1.0, show_default=True,
              help='Inclinação do polo transformado (radianos)')
@click.option('--format', 'output_format', type=click.Choice(['json', 'csv']),
              default=lambda: settings.OUTPUT_FORMAT, help='Formato do relatório')
@click.option('--output', type=click.Path(dir_okay=False), default=None,
              help='Arquivo de saída (padrão: stdout)')
@handle_data_errors
def grid_overlap(meridians, rotation, output_format, output):
    """Pontos da grade computável que continuam na grade após a rotação."""
    rows = []
    for n_meridians in meridians:
        spec = GridSpec(N=n_meridians)
        points = overlap_points(spec, rotation)
        rows.append({
            "N": n_meridians,
            "rotation": rotation,
            "grid_points": spec.point_count,
            "count": len(points),
            "bruteforce": grid_overlap_bruteforce(spec, rotation),
            "points": [[p.m, p.n] for p in points],
        })
    if output_format == "csv":
        emit(render_csv([{k: v for k, v in row.items() if k != "points"} for row in rows]), output)
    else:
        emit(render_json(rows), output)


def main():
    cli(prog_name="bivalent")


__all__ = ["cli", "main", "DataError"]
