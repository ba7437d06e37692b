#!/usr/bin/env python3
"""
Script para reproduzir as estatísticas do modelo bivalente em lote.

Grava um JSON por experimento, as tabelas CSV e um metadata.json com o
resumo de aprovação (z-scores contra os valores de referência).
"""

import sys
import argparse
import math
from pathlib import Path
import logging

import numpy as np
from scipy import stats as scipy_stats
from tqdm import tqdm

# Adicionar src ao path
sys.path.append(str(Path(__file__).parent.parent))

from src.config import settings
from src.cascade import CascadeSpec, octave_table, omega_limit, omega_sum, tail_bound
from src.entanglement import ChshSettings, bell_chsh_scan, correlation_scan
from src.geometry import GridSpec, grid_overlap_bruteforce, grid_overlap_count
from src.latitude import ThresholdSpec, latitude_estimate
from src.measurement import born_estimate, flip_fraction, uncertainty_mc
from src.oracle import prob_up, singlet_correlation, state_from_point
from src.geometry import SpherePoint
from src.reports import render_csv, render_json, reports_to_rows, write_text
from src.utils.logging import setup_logging

logger = logging.getLogger(__name__)

BORN_ANGLES = [-math.pi / 2, -math.pi / 3, 0.0, math.pi / 6, math.pi / 4, math.pi / 2]
UNCERTAINTY_PAIRS = [
    (math.pi / 4, math.pi / 6),
    (math.pi / 3, math.pi / 4),
    (math.pi / 2, math.pi / 3),
    (2 * math.pi / 3, 5 * math.pi / 4),
    (math.pi / 6, 2.0),
]


def check(name: str, estimate: float, expected: float, std_error: float, sigmas: float = 4.0) -> dict:
    """
    Compara uma estimativa com o valor de referência.
    """
    if std_error > 0:
        z = (estimate - expected) / std_error
        p_value = float(2 * scipy_stats.norm.sf(abs(z)))
    else:
        z = 0.0 if estimate == expected else math.inf
        p_value = 1.0 if estimate == expected else 0.0
    passed = abs(z) <= sigmas
    if not passed:
        logger.warning(f"{name}: estimativa {estimate:.6f} fora de {sigmas}σ de {expected:.6f}")
    return {
        "check": name,
        "estimate": estimate,
        "expected": expected,
        "std_error": std_error,
        "z": z,
        "p_value": p_value,
        "passed": passed,
    }


def run_born(trials: int, seed: int, n_jobs: int, output_dir: Path) -> list:
    """Regra de Born contra (1 + sin θ)/2 e contra o oráculo."""
    reports, checks = [], []
    for theta in tqdm(BORN_ANGLES, desc="born"):
        report = born_estimate(theta, trials, seed, n_jobs=n_jobs)
        reports.append(report)
        oracle = prob_up(state_from_point(SpherePoint(theta=theta)))
        checks.append(check(f"born θ={theta:.4f}", report.estimate, oracle, report.std_error))
    write_text(output_dir / "born.json", render_json(reports))
    return checks


def run_latitude(length: int, seed: int, output_dir: Path) -> list:
    """Média e desvio da saída de j_θ numa sequência longa."""
    reports, checks = [], []
    for theta in tqdm([0.0, math.pi / 6, math.pi / 4, -math.pi / 3], desc="latitude"):
        report = latitude_estimate(ThresholdSpec(theta=theta), length, seed)
        reports.append(report)
        checks.append(check(f"latitude θ={theta:.4f}", report.estimate, math.sin(theta), report.std_error))
        std = math.sqrt(1 - report.estimate ** 2)
        checks.append({
            "check": f"latitude std θ={theta:.4f}",
            "estimate": std,
            "expected": abs(math.cos(theta)),
            "passed": abs(std - abs(math.cos(theta))) <= 0.01,
        })
    write_text(output_dir / "latitude.json", render_json(reports))
    return checks


def run_noncomputability(trials: int, seed: int, n_jobs: int, output_dir: Path) -> list:
    """Fração de resultados trocados por i^(1/2^n)."""
    reports = [flip_fraction(n, trials, seed, n_jobs) for n in tqdm(range(11), desc="noncomputability")]
    write_text(
        output_dir / "noncomputability.csv",
        render_csv(reports_to_rows(reports, "n"), columns=["n", "estimate", "std_error", "samples"]),
    )
    return [check(f"flip n={r.params['n']}", r.estimate, 0.5, r.std_error) for r in reports]


def run_uncertainty(trials: int, seed: int, n_jobs: int, output_dir: Path) -> list:
    """Identidade σ_θ̃·σ_λ = |μ_θ̃′|."""
    reports, checks = [], []
    for colat, lon in tqdm(UNCERTAINTY_PAIRS, desc="uncertainty"):
        report = uncertainty_mc(colat, lon, trials, seed, n_jobs=n_jobs)
        reports.append(report)
        checks.append(check(
            f"uncertainty θ̃={colat:.4f} λ={lon:.4f}",
            report.product, report.abs_mu, report.difference_std_error,
        ))
    write_text(output_dir / "uncertainty.json", render_json(reports))
    return checks


def run_epr(trials: int, seed: int, n_jobs: int, output_dir: Path) -> list:
    """Varredura de C(Δθ) e a combinação CHSH."""
    reports = correlation_scan(trials=trials, seed=seed, n_jobs=n_jobs)
    write_text(
        output_dir / "epr_scan.csv",
        render_csv(reports_to_rows(reports, "delta_theta"), columns=["delta_theta", "estimate", "std_error", "samples"]),
    )
    checks = [
        check(f"epr Δθ={r.params['delta_theta']:.4f}", r.estimate,
              singlet_correlation(r.params['delta_theta']), r.std_error)
        for r in reports
    ]
    chsh = bell_chsh_scan(ChshSettings.optimal(), trials, seed, n_jobs=n_jobs)
    write_text(output_dir / "chsh.json", render_json(chsh))
    checks.append({
        "check": "chsh",
        "estimate": chsh.estimate,
        "expected": 2 * math.sqrt(2),
        "passed": abs(chsh.estimate - 2 * math.sqrt(2)) <= 0.02,
    })
    return checks


def run_geometry(output_dir: Path) -> list:
    """Coincidências da grade computável sob rotação."""
    rng = np.random.default_rng(settings.DEFAULT_SEED)
    rows, checks = [], []
    for n_meridians in (4, 8, 16, 32):
        spec = GridSpec(N=n_meridians)
        for rotation in [0.0] + list(rng.uniform(0.05, math.pi / 2 - 0.05, size=5)):
            count = grid_overlap_count(spec, rotation)
            brute = grid_overlap_bruteforce(spec, rotation)
            rows.append({"N": n_meridians, "rotation": rotation, "count": count, "bruteforce": brute})
            expected_ok = count == spec.point_count if rotation == 0.0 else count <= 2
            checks.append({
                "check": f"grid N={n_meridians} rotação={rotation:.4f}",
                "estimate": count,
                "expected": brute,
                "passed": expected_ok and count == brute,
            })
    write_text(output_dir / "grid_overlap.csv", render_csv(rows))
    return checks


def run_cascade(output_dir: Path) -> list:
    """Ω(N) para a inclinação de Kolmogorov."""
    spec = CascadeSpec(levels=30)
    write_text(output_dir / "cascade.csv", render_csv(octave_table(spec)))
    limit = omega_limit(spec)
    return [{
        "check": "cascade Ω(30)",
        "estimate": omega_sum(spec),
        "expected": limit,
        "tail_bound": tail_bound(spec),
        "passed": abs(omega_sum(spec) - limit) <= 1e-3,
    }]


def main():
    """
    Função principal do script.
    """
    parser = argparse.ArgumentParser(description='Reproduzir as estatísticas do modelo bivalente')
    parser.add_argument('--trials', type=int, default=settings.DEFAULT_TRIALS,
                        help='Tentativas por estimativa')
    parser.add_argument('--seed', type=int, default=settings.DEFAULT_SEED,
                        help='Semente de 64 bits')
    parser.add_argument('--parallel', type=int, default=settings.PARALLEL_JOBS,
                        help='Processos do joblib')
    parser.add_argument('--length', type=int, default=1_000_000,
                        help='Comprimento das sequências dos testes de latitude')
    parser.add_argument('--output', type=str, default=settings.RESULTS_PATH,
                        help='Diretório dos resultados')
    parser.add_argument('--log-level', type=str, default='INFO', help='Nível de log')

    args = parser.parse_args()

    # Configurar logging
    setup_logging(log_level=args.log_level)

    try:
        output_dir = Path(args.output)
        output_dir.mkdir(parents=True, exist_ok=True)

        checks = []
        checks += run_born(args.trials, args.seed, args.parallel, output_dir)
        checks += run_latitude(args.length, args.seed, output_dir)
        checks += run_noncomputability(min(args.trials, 10_000), args.seed, args.parallel, output_dir)
        checks += run_uncertainty(4 * args.trials, args.seed, args.parallel, output_dir)
        checks += run_epr(args.trials, args.seed, args.parallel, output_dir)
        checks += run_geometry(output_dir)
        checks += run_cascade(output_dir)

        metadata = {
            "app": settings.APP_NAME,
            "version": settings.APP_VERSION,
            "seed": args.seed,
            "trials": args.trials,
            "checks": checks,
        }
        write_text(output_dir / "metadata.json", render_json(metadata))

        # Exibir resultados
        failed = [c for c in checks if not c["passed"]]
        print("\n=== Resultados ===")
        print(f"Resultados salvos em: {output_dir}")
        print(f"Verificações: {len(checks)}")
        print(f"Aprovadas: {len(checks) - len(failed)}")
        if failed:
            print("\n=== Falhas ===")
            for item in failed:
                print(f"{item['check']}: {item['estimate']} (esperado {item['expected']})")
            sys.exit(1)

        logger.info("Experimentos concluídos com sucesso!")

    except Exception as e:
        logger.error(f"Erro durante os experimentos: {e}")
        sys.exit(1)


if __name__ == "__main__":
    main()
