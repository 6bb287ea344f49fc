"""Tests the selfdeg command line"""

import json
import tempfile
from pathlib import Path
from unittest.mock import patch

import yaml

from selfdeg.cli import COMMANDS, TRIVIAL_BAND_NOTE, build_parser
from selfdeg.types.cli_types import OutputEnvelope

from .test_base import EXAMPLE_SUM, TestSelfDeg_Base


class TestSelfDeg_CLI(TestSelfDeg_Base):
    """Runs the command line in-process"""

    def test_golden_vectors(self):
        """Recorded invocations keep their exit code and stdout"""
        vectors = sorted(self.golden_dir.glob("*.yaml"))
        assert vectors
        for path in vectors:
            with open(path, encoding="utf-8") as fp:
                vector = yaml.safe_load(fp)
            code, out, _ = self.run_cli(*vector["argv"])
            assert code == vector["exit_code"], path.name
            assert out == vector["stdout"], path.name

    def test_json_envelope(self):
        """The JSON envelope validates against its model"""
        code, out, _ = self.run_cli("--json", "describe", "TB[2,1;1,1]")
        assert code == 0
        envelope = OutputEnvelope.model_validate_json(out)
        assert envelope.status == "ok"
        assert envelope.command == "describe"
        assert envelope.query == {"desc": "TB[2,1;1,1]"}
        assert envelope.geometry == "Sol"
        payload = json.loads(out)["result"]
        assert payload == {"kind": "set", "description": "{ p^2 - pr - r^2 : p, r ∈ Z }"}

    def test_published_schema(self):
        """docs/output-schema.json names every model and field of the envelope"""
        with open(self.root_dir / "docs" / "output-schema.json", encoding="utf-8") as fp:
            published = json.load(fp)
        current = OutputEnvelope.model_json_schema()
        assert published["required"] == current["required"]
        assert set(published["properties"]) == set(current["properties"])
        assert set(published["$defs"]) == set(current["$defs"])
        for name, definition in current["$defs"].items():
            assert set(published["$defs"][name].get("properties", {})) == set(
                definition.get("properties", {})
            ), name

    def test_flags_after_the_command(self):
        """Global flags work on either side of the subcommand"""
        code, out, _ = self.run_cli("list", "L(5,2)", "--from", "0", "--to", "5", "--json")
        assert code == 0
        payload = json.loads(out)
        assert payload["result"]["members"] == [0, 1, 4, 5]
        assert payload["query"] == {"desc": "L(5,2)", "lo": 0, "hi": 5}

    def test_parse_error(self):
        """Syntax and validation failures exit 1 with a located diagnostic"""
        code, out, err = self.run_cli("describe", "L(6,2)")
        assert code == 1
        assert out == ""
        assert "error: gcd(6, 2) ≠ 1" in err
        assert "4:5:" in err
        assert "      ^" in err

        code, out, err = self.run_cli("--json", "describe", "L(6,2)")
        assert code == 1
        envelope = json.loads(out)
        assert envelope["status"] == "error"
        assert envelope["result"]["exit_code"] == 1
        assert envelope["result"]["diagnostics"][0]["span"] == {"begin": 4, "end": 5}

    def test_deep_nesting(self):
        """Over-nested products are rejected as invalid input"""
        code, out, err = self.run_cli("describe", "Z(1)x" * 3000 + "T24")
        assert code == 1
        assert out == ""
        assert "nested" in err
        assert self.run_cli("canonical", "Z(1)x" * 3000 + "T24")[0] == 1

    def test_internal_error(self):
        """Unexpected exceptions exit 3 instead of escaping"""

        def broken(args):
            raise RuntimeError("boom")

        with patch.dict(COMMANDS, {"describe": broken}):
            code, out, err = self.run_cli("describe", "L(5,1)")
            assert code == 3
            assert out == ""
            assert "error: Internal error: RuntimeError: boom" in err
            code, out, _ = self.run_cli("--json", "describe", "L(5,1)")
            assert code == 3
            assert json.loads(out)["result"]["exit_code"] == 3
        assert self.run_cli("describe", "L(5,1)")[0] == 0

    def test_usage_errors(self):
        """Unknown commands, missing arguments and bad ranges exit 1"""
        assert self.run_cli()[0] == 1
        assert self.run_cli("frobnicate")[0] == 1
        assert self.run_cli("describe")[0] == 1
        assert self.run_cli("list", "L(5,1)", "--from", "3", "--to", "1")[0] == 1
        code, _, err = self.run_cli(
            "--max-enumeration-width", "10", "list", "L(5,1)", "--from", "1", "--to", "100"
        )
        assert code == 1
        assert "exceeds" in err
        assert self.run_cli("lens-reversal", "6", "2")[0] == 1
        assert self.run_cli("--version")[0] == 0

    def test_trivial_band(self):
        """The trivial band cannot be listed and leaves -1 undetermined"""
        code, out, _ = self.run_cli("list", "SF(o2; 1/5)", "--from", "0", "--to", "3")
        assert code == 2
        assert out == ""
        code, out, err = self.run_cli("contains", "SF(o2; 1/5)", "-1")
        assert code == 0
        assert out == "unknown\n"
        assert f"note: {TRIVIAL_BAND_NOTE}" in err
        code, out, _ = self.run_cli("--json", "minus-one", "SF(o2; 1/5)")
        assert json.loads(out)["result"] == {"kind": "membership", "value": None}

    def test_negative_degrees(self):
        """Negative numbers are read as arguments"""
        assert self.run_cli("contains", "TB[2,1;1,1]", "-1")[1] == "true\n"
        assert self.run_cli("contains", "TB[2,1;1,1]", "-2")[1] == "false\n"
        code, out, _ = self.run_cli("list", "TSB[1,2;1,3]", "--from", "-30", "--to", "30")
        assert code == 0
        assert out == "1 3 9 25 27\n"

    def test_zero(self):
        """0 is reported only on request, with a note otherwise"""
        code, out, err = self.run_cli("describe", "TSB[0,1;1,0]")
        assert out == "2Z + {1}\ngeometry: E3\n"
        assert "note: 0 (the degree of a constant map)" in err
        code, out, err = self.run_cli("--quiet", "describe", "TSB[0,1;1,0]")
        assert err == ""
        code, out, err = self.run_cli("--with-zero", "describe", "TSB[0,1;1,0]")
        assert out == "2Z + {1} ∪ {0}\ngeometry: E3\n"
        assert "note:" not in err
        assert self.run_cli("contains", "TSB[0,1;1,0]", "0")[1] == "false\n"
        assert self.run_cli("contains", "TSB[0,1;1,0]", "0", "--with-zero")[1] == "true\n"

    def test_config_file(self):
        """Settings come from a YAML file and flags override them"""
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "selfdeg.yaml"
            path.write_text("with_zero: true\nquiet: true\nmax_enumeration_width: 5\n")
            code, out, err = self.run_cli("--config", str(path), "contains", "TSB[0,1;1,0]", "0")
            assert (code, out, err) == (0, "true\n", "")
            code, _, _ = self.run_cli("--config", str(path), "list", "L(5,1)", "--from", "1", "--to", "9")
            assert code == 1
            code, _, _ = self.run_cli(
                "--config", str(path), "--max-enumeration-width", "9",
                "list", "L(5,1)", "--from", "1", "--to", "9",
            )
            assert code == 0
            path.write_text("max_enumeration_width: 0\n")
            assert self.run_cli("--config", str(path), "classify", "S2xS1")[0] == 1
        assert self.run_cli("--config", "/nonexistent/selfdeg.yaml", "classify", "S2xS1")[0] == 1

    def test_log_directory(self):
        """Engine and CLI logs go to files when a directory is configured"""
        with tempfile.TemporaryDirectory() as tmp:
            code, _, _ = self.run_cli(
                "--log-directory", tmp, "--log-level", "debug", "describe", "TB[2,1;1,1]"
            )
            assert code == 0
            log = (Path(tmp) / "selfdeg.engine.log").read_text()
            assert "Torus bundle (2,1;1,1)" in log
            assert "(DEBUG)" in log

    def test_other_commands(self):
        """classify, canonical and membership in plain text"""
        assert self.run_cli("classify", "L(2,1) # L(2,1)")[1] == "S2xE1\n"
        assert self.run_cli("classify", EXAMPLE_SUM)[1] == "NonPrime\n"
        assert self.run_cli("canonical", "~L(7,2)")[1] == "L(7,5)\n"
        assert self.run_cli("contains", "I120", "49")[1] == "true\n"
        assert self.run_cli("minus-one", "L(5,2)")[1] == "true\n"

    def test_deterministic(self):
        """Identical invocations print identical bytes"""
        argv = ("--json", "describe", EXAMPLE_SUM)
        assert self.run_cli(*argv) == self.run_cli(*argv)

    def test_parser_help(self):
        """Every subcommand is registered"""
        text = build_parser().format_help()
        for command in ("describe", "list", "contains", "classify", "minus-one", "canonical", "lens-reversal"):
            assert command in text
