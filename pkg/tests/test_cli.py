import json

import pytest
from click.testing import CliRunner

from dfolkit.cli.config.manager import ConfigManager
from dfolkit.cli.main import cli, main
from dfolkit.constants import CONFIG_KEYS
from dfolkit.corpus import corpus_path

pytestmark = pytest.mark.integration

CAT = str(corpus_path("cat.th"))
REFL = str(corpus_path("refl.prf"))


@pytest.fixture
def runner():
    return CliRunner()


def report(result):
    return json.loads(result.stdout)


class TestCheckProof:
    def test_accepted(self, runner):
        result = runner.invoke(cli, ["check-proof", CAT, REFL, "--json"])
        assert result.exit_code == 0
        data = report(result)
        assert data["ok"]
        assert data["details"]["height"] == 1
        assert data["details"]["rules"] == ["Ref x1"]

    def test_converted_proof(self, runner):
        universe = str(corpus_path("universe.th"))
        proof = str(corpus_path("forall_intro.prf"))
        result = runner.invoke(cli, ["check-proof", universe, proof, "--convert", "--json"])
        assert result.exit_code == 0
        data = report(result)
        assert data["details"]["converted_height"] == 3
        assert data["document"].startswith("(proof universe")

    def test_proof_about_another_theory(self, runner):
        semigroup = str(corpus_path("semigroup.th"))
        result = runner.invoke(cli, ["check-proof", semigroup, REFL, "--json"])
        assert result.exit_code == 2

    def test_kernel_rejection(self, runner, tmp_path):
        bad = tmp_path / "bad.prf"
        bad.write_text("(proof cat (Ref (seq (ctx (X Ob)) top (Eq (id X) (id X)))))")
        result = runner.invoke(cli, ["check-proof", CAT, str(bad), "--json"])
        assert result.exit_code == 1
        assert report(result)["error"]["error"] == "ProofError"

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(cli, ["check-proof", str(tmp_path / "nope.th"), REFL])
        assert result.exit_code == 2


class TestJudgements:
    def test_check(self, runner):
        result = runner.invoke(cli, ["check", CAT, "-j", "(type (ctx (X Ob)) (Hom X X))", "--json"])
        assert result.exit_code == 0
        assert report(result)["details"]["mode"] == "r5"

    def test_check_rejects(self, runner):
        result = runner.invoke(cli, ["check", CAT, "-j", "(term (ctx (X Ob)) X (Hom X X))"])
        assert result.exit_code == 1

    def test_infer(self, runner):
        args = ["infer", CAT, "-t", "(id X)", "--ctx", "(ctx (X Ob))", "--json"]
        result = runner.invoke(cli, args)
        assert result.exit_code == 0
        assert report(result)["details"]["type"] == "(Hom X X)"


class TestSignatures:
    def test_check_sig(self, runner):
        result = runner.invoke(cli, ["check-sig", CAT, "--json"])
        assert result.exit_code == 0
        details = report(result)["details"]
        assert details["types"] == ["Ob", "Hom"]
        assert details["predicates"] == ["Eq"]
        assert "assoc" in details["axioms"]

    def test_folds2sig(self, runner):
        result = runner.invoke(cli, ["folds2sig", str(corpus_path("k2.voc")), "--json"])
        assert result.exit_code == 0
        data = report(result)
        assert data["details"]["level_order"] == ["O", "A", "T"]
        assert data["document"].startswith("(theory k2")

    def test_sig2folds_round_trip(self, runner, tmp_path):
        k2 = str(corpus_path("k2.voc"))
        theory = tmp_path / "k2.th"
        result = runner.invoke(cli, ["folds2sig", k2, "--json"])
        theory.write_text(report(result)["document"])
        result = runner.invoke(cli, ["sig2folds", str(theory), "--compare", k2, "--json"])
        assert result.exit_code == 0
        assert report(result)["details"]["isomorphic_to"] == "k2"


class TestEval:
    def test_model_satisfies_its_theory(self, runner):
        args = [
            "eval",
            str(corpus_path("semigroup.th")),
            str(corpus_path("semigroup.model")),
            "-s",
            "(seq (ctx) top (Eq a b))",
            "--json",
        ]
        result = runner.invoke(cli, args)
        assert result.exit_code == 1
        details = report(result)["details"]
        assert details["failing_axioms"] == []
        assert details["holds"] is False


class TestLaws:
    def test_constructions_on_representatives(self, runner):
        args = ["laws", "--suite", "constructions", "--size", "1", "--representatives", "--json"]
        result = runner.invoke(cli, args)
        assert result.exit_code == 0
        details = report(result)["details"]
        assert details["representatives"] is True
        assert details["checked"] > 0
        assert details["failed"] == 0


class TestConfig:
    def test_config_file_sets_the_mode(self, runner, tmp_path):
        config = tmp_path / "dfolkit.toml"
        config.write_text('mode = "dfolstar"\njson = true\n')
        result = runner.invoke(cli, ["--config-file", str(config), "check-proof", CAT, REFL])
        assert result.exit_code == 0
        assert report(result)["details"]["mode"] == "dfolstar"

    def test_bad_mode_in_config(self, runner, tmp_path):
        config = tmp_path / "dfolkit.yaml"
        config.write_text("mode: classical\n")
        result = runner.invoke(cli, ["--config-file", str(config), "check-proof", CAT, REFL])
        assert result.exit_code == 2

    def test_unsupported_format(self, tmp_path):
        config = tmp_path / "dfolkit.ini"
        config.write_text("[dfolkit]\n")
        assert ConfigManager(str(config)).load_config() is None

    def test_unknown_keys_are_dropped(self, tmp_path):
        config = tmp_path / "dfolkit.json"
        config.write_text(json.dumps({"fuel": 50, "colour": "red"}))
        manager = ConfigManager(str(config))
        assert manager.config_data == {"fuel": 50}
        settings = manager.settings({"fuel": None, "json": True})
        assert settings["fuel"] == 50
        assert settings["json"] is True
        assert settings["mode"] == CONFIG_KEYS["mode"]


class TestMain:
    def test_exit_codes(self):
        assert main(["check-proof", CAT, REFL]) == 0
        assert main(["check-proof", CAT]) == 2

    def test_help(self, runner):
        result = runner.invoke(cli, [])
        assert result.exit_code == 0
        assert "check-proof" in result.output
