# Standard library
import csv
import io
import json

# Local application
from linkforge.cli import main
from linkforge.cli.main import EXIT_DIVERGENCE, EXIT_TOPOLOGY, EXIT_USAGE
from linkforge.cli.sweep import SweepSpec, sweep_rows
from linkforge.geometry import Link, link_to_dict, make_circle

# Third party
import pytest


@pytest.fixture
def hopf_file(tmp_path):
    path = tmp_path / "hopf.json"
    code = main(
        [
            "build",
            "--family",
            "hopf-circles",
            "--params",
            "1.4142135623730951",
            "--vertices",
            "60",
            "--out",
            str(path),
        ]
    )
    assert code == 0
    return path


def read_json(capsys):
    return json.loads(capsys.readouterr().out)


class TestFileCommands:
    def test_energy(self, hopf_file, capsys):
        assert main(["energy", str(hopf_file)]) == 0
        out = read_json(capsys)
        assert set(out) == {"mobius", "md"}
        assert out["mobius"]["n_vertices"] == [60, 60]
        assert list(out["md"]["cross"]) == ["0-1"]

    def test_single_energy(self, hopf_file, capsys):
        assert main(["energy", str(hopf_file), "--energy", "md"]) == 0
        assert set(read_json(capsys)) == {"md"}

    def test_validate(self, hopf_file, capsys):
        assert main(["validate", str(hopf_file)]) == 0
        out = read_json(capsys)
        assert out["labels"] == ["xy-circle", "xz-circle"]
        assert out["valences"] == [1, 1]
        assert [abs(v) for v in out["linking"][0]] == [0, 1]
        assert out["near_resolution"] == []

    def test_touching(self, tmp_path):
        circle = make_circle(1.0, n=30)
        path = tmp_path / "double.json"
        path.write_text(json.dumps(link_to_dict(Link((circle, circle)))))
        assert main(["energy", str(path)]) == EXIT_DIVERGENCE

    def test_missing_file(self, tmp_path):
        assert main(["energy", str(tmp_path / "nothing.json")]) == EXIT_USAGE


class TestFamilyCommands:
    def test_families(self, capsys):
        assert main(["families"]) == 0
        schemas = {s["name"]: s for s in read_json(capsys)}
        incline = schemas["link633"]["params"][1]
        assert incline["unit"] == "deg"
        assert incline["default"] == pytest.approx(60.0)
        assert incline["bounds"] == [0.0, pytest.approx(180.0)]

    def test_build_unlinked(self, tmp_path):
        code = main(
            [
                "build",
                "--family",
                "hopf-circles",
                "--params",
                "3.0",
                "--out",
                str(tmp_path / "x.json"),
            ]
        )
        assert code == EXIT_TOPOLOGY

    def test_unknown_family(self, tmp_path):
        code = main(["build", "--family", "foobar", "--out", str(tmp_path / "x.json")])
        assert code == EXIT_USAGE

    def test_rejected_option(self, tmp_path):
        code = main(
            [
                "build",
                "--family",
                "hopf-circles",
                "--size",
                "3",
                "--out",
                str(tmp_path / "x.json"),
            ]
        )
        assert code == EXIT_USAGE

    def test_minimize(self, capsys):
        code = main(
            [
                "minimize",
                "--family",
                "hopf-polygons",
                "--energy",
                "md",
                "--x0",
                "1.0",
                "--method",
                "golden_section",
                "--bracket",
                "0.8,1.8",
                "--xtol",
                "1e-7",
            ]
        )
        assert code == 0
        out = read_json(capsys)
        assert out["family"] == "hopf-polygons"
        assert out["params"]["delta"] == pytest.approx(1.2033, abs=1e-3)
        assert out["params"]["phase1"] == pytest.approx(45.0)
        assert out["energy"] == pytest.approx(93.5, abs=0.1)


class TestSweep:
    def test_csv(self, tmp_path):
        out = tmp_path / "sweep.csv"
        code = main(
            [
                "sweep",
                "--family",
                "hopf-circles",
                "--param",
                "alpha",
                "--lo",
                "0.2",
                "--hi",
                "1.0",
                "--steps",
                "2",
                "--vertices",
                "60",
                "--out",
                str(out),
            ]
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out.read_text())))
        assert rows[0] == ["param", "energy", "self_0", "self_1", "cross_0_1"]
        # alpha = 0.2 leaves the circles unlinked
        assert rows[1] == ["0.2", "inf", "inf", "inf", "inf"]
        assert float(rows[2][1]) == pytest.approx(
            sum(float(v) for v in rows[2][2:])
        )

    def test_bad_range(self):
        code = main(
            [
                "sweep",
                "--family",
                "hopf-circles",
                "--param",
                "delta",
                "--lo",
                "1.5",
                "--hi",
                "1.0",
            ]
        )
        assert code == EXIT_USAGE

    def test_square_chain_minimum(self):
        spec = SweepSpec(
            "chain-congruent",
            "md",
            "spacing",
            1.3,
            1.7,
            81,
            options={"components": 3, "shape": "square"},
        )
        rows = sweep_rows(spec, progress=False)
        best = min(rows, key=lambda row: row["energy"])
        assert best["param"] == pytest.approx(1.505, abs=5e-3)


class TestArguments:
    def test_help(self, capsys):
        assert main(["--help"]) == 0

    def test_missing_command(self):
        assert main([]) == EXIT_USAGE

    def test_bad_numbers(self):
        code = main(["minimize", "--family", "hopf-circles", "--x0", "one"])
        assert code == EXIT_USAGE
