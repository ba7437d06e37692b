"""
Testes da interface de linha de comando.
"""

import json
import logging

import pytest
from click.testing import CliRunner

from src.cli import cli
from src.sequences import BitSequence, read_sequence, write_sequence


@pytest.fixture(scope="module")
def runner():
    """Runner do click com stderr separado de stdout."""
    return CliRunner(mix_stderr=False)


@pytest.fixture(autouse=True)
def reset_logging():
    """Remove os handlers que apontam para o stderr do runner."""
    yield
    root = logging.getLogger()
    for handler in root.handlers[:]:
        root.removeHandler(handler)


def invoke(runner, *args):
    return runner.invoke(cli, [str(a) for a in args])


class TestHelp:
    """Testes das mensagens de ajuda e erros de uso."""

    @pytest.mark.parametrize("command", [
        [], ["generate"], ["op"], ["stats"], ["experiment"],
        ["experiment", "born"], ["experiment", "epr"], ["experiment", "chsh"],
        ["experiment", "uncertainty"], ["experiment", "cascade"],
        ["experiment", "noncomputability"], ["experiment", "grid-overlap"],
    ])
    def test_help_exits_zero(self, runner, command):
        """Testa a ajuda de cada comando."""
        result = invoke(runner, *command, "--help")
        assert result.exit_code == 0
        assert "Usage" in result.stdout

    def test_version(self, runner):
        """Testa a opção --version."""
        result = invoke(runner, "--version")
        assert result.exit_code == 0
        assert "1.0.0" in result.stdout

    def test_unknown_flag(self, runner, tmp_path):
        """Testa que opção desconhecida sai com 2 sem gravar saída."""
        output = tmp_path / "out.json"
        result = invoke(runner, "experiment", "born", "--theta", "0.1", "--bogus", "--output", output)
        assert result.exit_code == 2
        assert not output.exists()

    def test_invalid_seed(self, runner):
        """Testa que semente negativa é erro de uso."""
        result = invoke(runner, "experiment", "born", "--theta", "0.1", "--seed", "-1")
        assert result.exit_code == 2

    def test_parallel_zero(self, runner):
        """Testa que --parallel 0 é erro de uso."""
        result = invoke(runner, "experiment", "born", "--theta", "0.1", "--trials", "10", "--parallel", "0")
        assert result.exit_code == 2


class TestSequenceCommands:
    """Testes de generate, op e stats."""

    def test_generate_and_stats(self, runner, tmp_path):
        """Testa generate seguido de stats."""
        path = tmp_path / "s.bsq"
        result = invoke(runner, "generate", path, "--length", "4096", "--seed", "7")
        assert result.exit_code == 0
        assert read_sequence(path).length == 4096

        result = invoke(runner, "stats", path)
        assert result.exit_code == 0
        summary = json.loads(result.stdout)
        assert summary["op"] == "stats"
        assert summary["count"] == 4096
        assert summary["variance"] == pytest.approx(1 - summary["mean"] ** 2)

    def test_generate_is_reproducible(self, runner, tmp_path):
        """Testa que a mesma semente gera o mesmo arquivo."""
        first, second = tmp_path / "a.bsq", tmp_path / "b.bsq"
        invoke(runner, "generate", first, "--length", "1000", "--seed", "3")
        invoke(runner, "generate", second, "--length", "1000", "--seed", "3")
        assert first.read_bytes() == second.read_bytes()

    def test_generate_alignment(self, runner, tmp_path):
        """Testa que comprimento desalinhado com --max-n é erro de dados."""
        path = tmp_path / "s.bsq"
        result = invoke(runner, "generate", path, "--length", "10", "--max-n", "3")
        assert result.exit_code == 3
        assert not path.exists()

    def test_half_turn_twice_restores_file(self, runner, sequence_file, tmp_path):
        """Testa que i^2 aplicado duas vezes restaura o arquivo."""
        once, twice = tmp_path / "once.bsq", tmp_path / "twice.bsq"
        assert invoke(runner, "op", sequence_file, once, "--i-power", "2").exit_code == 0
        assert invoke(runner, "op", once, twice, "--i-power", "2").exit_code == 0
        assert twice.read_bytes() == sequence_file.read_bytes()
        assert once.read_bytes() != sequence_file.read_bytes()

    def test_square_root_twice_equals_i(self, runner, sequence_file, tmp_path):
        """Testa que i^(1/2) duas vezes equivale a i."""
        half, half_twice, full = (tmp_path / name for name in ("h.bsq", "hh.bsq", "f.bsq"))
        invoke(runner, "op", sequence_file, half, "--i-power", "1/2")
        invoke(runner, "op", half, half_twice, "--i-power", "1/2")
        invoke(runner, "op", sequence_file, full, "--i-power", "1")
        assert half_twice.read_bytes() == full.read_bytes()

    def test_north_pole_file(self, runner, sequence_file, tmp_path):
        """Testa j_θ perto do polo norte pela linha de comando."""
        output = tmp_path / "north.bsq"
        result = invoke(runner, "op", sequence_file, output, "--j-theta", "1.5707963")
        assert result.exit_code == 0
        s = read_sequence(output)
        assert s.length == 4096 - 63
        assert s.count_ones() == s.length

    def test_negate(self, runner, tmp_path):
        """Testa --negate."""
        source, output = tmp_path / "in.bsq", tmp_path / "out.bsq"
        write_sequence(source, BitSequence.from_values([1, -1, 1]))
        assert invoke(runner, "op", source, output, "--negate").exit_code == 0
        assert read_sequence(output).values().tolist() == [-1, 1, -1]

    def test_exactly_one_operator(self, runner, sequence_file, tmp_path):
        """Testa que dois operadores juntos são erro de uso."""
        result = invoke(runner, "op", sequence_file, tmp_path / "o.bsq", "--negate", "--i-power", "1")
        assert result.exit_code == 2

    def test_non_dyadic_exponent(self, runner, sequence_file, tmp_path):
        """Testa que expoente não diádico é erro de uso."""
        output = tmp_path / "o.bsq"
        result = invoke(runner, "op", sequence_file, output, "--i-power", "1/3")
        assert result.exit_code == 2
        assert not output.exists()

    def test_unaligned_length(self, runner, tmp_path):
        """Testa que comprimento desalinhado é erro de dados."""
        source, output = tmp_path / "in.bsq", tmp_path / "out.bsq"
        write_sequence(source, BitSequence.constant(6))
        result = invoke(runner, "op", source, output, "--i-power", "1/2")
        assert result.exit_code == 3
        assert not output.exists()

    def test_malformed_input(self, runner, tmp_path):
        """Testa que arquivo malformado sai com 3 e stdout vazio."""
        source = tmp_path / "bad.bsq"
        source.write_bytes(b"not a sequence")
        result = invoke(runner, "stats", source)
        assert result.exit_code == 3
        assert result.stdout == ""

    def test_missing_input(self, runner, tmp_path):
        """Testa que arquivo inexistente é erro de uso."""
        result = invoke(runner, "stats", tmp_path / "missing.bsq")
        assert result.exit_code == 2


@pytest.mark.integration
class TestExperimentCommands:
    """Testes dos experimentos."""

    def test_born_is_byte_identical(self, runner):
        """Testa a reprodutibilidade byte a byte, inclusive em paralelo."""
        args = ["experiment", "born", "--theta", "0.5235987755982988", "--trials", "5000", "--seed", "7"]
        first = invoke(runner, *args)
        second = invoke(runner, *args)
        parallel = invoke(runner, *args, "--parallel", "2")
        assert first.exit_code == 0
        assert first.stdout == second.stdout == parallel.stdout
        report = json.loads(first.stdout)
        assert report["op"] == "born"
        assert report["seed"] == 7
        assert report["samples"] == 5000

    def test_born_several_angles_csv(self, runner):
        """Testa vários ângulos em CSV."""
        result = invoke(runner, "experiment", "born", "--theta", "0", "--theta", "1.5707963267948966",
                        "--trials", "2000", "--format", "csv")
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "theta,estimate,std_error,samples"
        assert lines[2].startswith("1.5707963267948966,1.0,0.0,2000")

    def test_output_file(self, runner, tmp_path):
        """Testa a gravação em --output."""
        output = tmp_path / "report.json"
        result = invoke(runner, "experiment", "born", "--theta", "0.2", "--trials", "1000", "--output", output)
        assert result.exit_code == 0
        assert result.stdout == ""
        assert json.loads(output.read_text())["op"] == "born"

    def test_epr(self, runner):
        """Testa C(π/3) ≈ -1/2."""
        result = invoke(runner, "experiment", "epr", "--delta-theta", "1.0471976",
                        "--trials", "100000", "--seed", "7")
        assert result.exit_code == 0
        assert json.loads(result.stdout)["estimate"] == pytest.approx(-0.5, abs=0.02)

    def test_epr_scan_csv(self, runner):
        """Testa a varredura de Δθ em CSV."""
        result = invoke(runner, "experiment", "epr", "--scan", "--points", "5", "--trials", "2000",
                        "--format", "csv")
        assert result.exit_code == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "delta_theta,estimate,std_error,samples"
        assert len(lines) == 6
        assert lines[1].startswith("0.0,-1.0,0.0,")

    def test_epr_requires_one_mode(self, runner):
        """Testa que --scan e --delta-theta são exclusivos e obrigatórios."""
        assert invoke(runner, "experiment", "epr", "--trials", "10").exit_code == 2
        assert invoke(runner, "experiment", "epr", "--scan", "--delta-theta", "1", "--trials", "10").exit_code == 2

    def test_chsh(self, runner):
        """Testa S = 2 com ângulos iguais."""
        result = invoke(runner, "experiment", "chsh", "--angles", "0", "0", "0", "0", "--trials", "500")
        assert result.exit_code == 0
        assert json.loads(result.stdout)["estimate"] == 2.0

    def test_uncertainty(self, runner):
        """Testa a incerteza no polo."""
        result = invoke(runner, "experiment", "uncertainty", "--colat", "0", "--lon", "1.0", "--trials", "2000")
        assert result.exit_code == 0
        report = json.loads(result.stdout)
        assert report["product"] == 0.0
        assert report["sigma_colatitude"]["op"] == "uncertainty_sigma_colatitude"

    def test_cascade_json(self, runner):
        """Testa a cascata em JSON."""
        result = invoke(runner, "experiment", "cascade", "--slope", "-1.6666667", "--levels", "30")
        assert result.exit_code == 0
        payload = json.loads(result.stdout)
        assert payload["rows"][-1]["omega_partial"] == pytest.approx(2.7024, abs=1e-4)
        assert payload["omega_limit"] == pytest.approx(2.7024, abs=1e-4)
        assert payload["spec"]["levels"] == 30

    def test_cascade_divergent(self, runner):
        """Testa a cascata divergente em JSON."""
        result = invoke(runner, "experiment", "cascade", "--slope", "-3", "--levels", "10")
        payload = json.loads(result.stdout)
        assert payload["omega_limit"] == "divergent"
        assert payload["tail_bound"] is None
        assert payload["omega_sum"] == pytest.approx(10.0)

    def test_cascade_csv(self, runner):
        """Testa a tabela da cascata em CSV."""
        result = invoke(runner, "experiment", "cascade", "--levels", "4", "--format", "csv")
        lines = result.stdout.splitlines()
        assert lines[0] == "n,k,tau,omega_partial"
        assert len(lines) == 5

    def test_cascade_invalid_wavenumber(self, runner):
        """Testa que k_L = 0 é erro de dados."""
        result = invoke(runner, "experiment", "cascade", "--k-l", "0")
        assert result.exit_code == 3

    def test_noncomputability(self, runner):
        """Testa a fração de trocas para n = 0..10."""
        result = invoke(runner, "experiment", "noncomputability", "--max-n", "10", "--trials", "10000")
        assert result.exit_code == 0
        reports = json.loads(result.stdout)
        assert [r["params"]["n"] for r in reports] == list(range(11))
        for report in reports:
            assert report["estimate"] == pytest.approx(0.5, abs=0.02)

    def test_grid_overlap(self, runner):
        """Testa a contagem da grade contra a força bruta."""
        result = invoke(runner, "experiment", "grid-overlap", "--rotation", "1.0")
        assert result.exit_code == 0
        rows = json.loads(result.stdout)
        assert [row["N"] for row in rows] == [4, 8, 16]
        for row in rows:
            assert row["count"] <= 2
            assert row["count"] == row["bruteforce"]

    def test_grid_overlap_identity(self, runner):
        """Testa a grade sem rotação em CSV."""
        result = invoke(runner, "experiment", "grid-overlap", "--meridians", "8", "--rotation", "0",
                        "--format", "csv")
        lines = result.stdout.splitlines()
        assert lines[0] == "N,rotation,grid_points,count,bruteforce"
        assert lines[1] == "8,0.0,136,136,136"
