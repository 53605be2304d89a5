"""End-user command-line behavior, exercised in process."""

import csv
import json

import pytest

from tagorient.cli import main
from tagorient.harness import load_dataset
from tagorient.llm_tagger import ProviderConfig, build_prompt, cache_path


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParsing:
    def test_no_command(self):
        with pytest.raises(SystemExit) as err:
            main([])
        assert err.value.code == 2

    def test_missing_required_dataset(self):
        with pytest.raises(SystemExit) as err:
            main(["faults"])
        assert err.value.code == 2


class TestGtCpdag:
    def test_table_and_csv(self, capsys, tmp_path):
        code, out, err = run(
            capsys,
            "gt-cpdag",
            "--datasets",
            "cancer,asia",
            "--sid",
            "--out",
            str(tmp_path),
        )
        assert code == 0
        assert "dataset" in out and "cancer" in out and "asia" in out
        rows = list(csv.DictReader(open(tmp_path / "gt_cpdag.csv")))
        assert len(rows) == 2
        by_name = {r["dataset"]: r for r in rows}
        assert by_name["cancer"]["shd"] == "0"
        assert by_name["cancer"]["sid_high"] == "0"
        assert by_name["asia"]["shd"] == "3"
        assert by_name["asia"]["recall"] == "0.625"

    def test_tags_dir_enables_tagged_rows(self, capsys, tmp_path):
        net = load_dataset("cancer")
        lines = "\n".join(
            f"group{i}: {name}" for i, name in enumerate(net.names)
        )
        (tmp_path / "cancer.tags").write_text(lines + "\n")
        code, out, err = run(
            capsys, "gt-cpdag", "--datasets", "cancer", "--tags", str(tmp_path)
        )
        assert code == 0
        assert "tagged" in out

    def test_unknown_dataset(self, capsys):
        code, out, err = run(capsys, "gt-cpdag", "--datasets", "nope")
        assert code == 1
        assert err.startswith("error:")

    def test_bad_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "bad.conf"
        cfg.write_text("wat = 1\n")
        code, out, err = run(
            capsys, "gt-cpdag", "--datasets", "cancer", "--config", str(cfg)
        )
        assert code == 1
        assert "error:" in err


class TestExperimentCommands:
    def test_faults(self, capsys, tmp_path):
        code, out, err = run(
            capsys,
            "faults",
            "--dataset",
            "asia",
            "--layer-tags",
            "--kinds",
            "remove",
            "--max-k",
            "1",
            "--out",
            str(tmp_path),
        )
        assert code == 0
        rows = list(csv.DictReader(open(tmp_path / "faults_asia.csv")))
        assert [r["k"] for r in rows] == ["0", "1"]

    def test_undirect(self, capsys):
        code, out, err = run(
            capsys, "undirect", "--dataset", "asia", "--ks", "1"
        )
        assert code == 0
        assert "accuracy" in out and "1.0" in out

    def test_tag_noise(self, capsys):
        code, out, err = run(
            capsys,
            "tag-noise",
            "--dataset",
            "asia",
            "--levels",
            "0",
            "--seeds",
            "3",
        )
        assert code == 0
        assert out.count("\n") >= 3

    def test_mine(self, capsys):
        code, out, err = run(
            capsys, "mine", "--dataset", "asia", "--min-support", "2"
        )
        assert code == 0
        assert '" -> "' in out

    def test_sweep(self, capsys, tmp_path):
        code, out, err = run(
            capsys, "sweep", "--datasets", "cancer", "--out", str(tmp_path)
        )
        assert code == 0
        rows = list(csv.DictReader(open(tmp_path / "sweep.csv")))
        assert len(rows) == 400
        assert all(r["mean_f1"] == "1.0" for r in rows)

    def test_end2end_oracle(self, capsys, tmp_path):
        code, out, err = run(
            capsys,
            "end2end",
            "--dataset",
            "cancer",
            "--oracle",
            "--seeds",
            "4",
            "--out",
            str(tmp_path),
        )
        assert code == 0
        assert (tmp_path / "cancer" / "seed0-pc.edges").exists()
        assert (tmp_path / "cancer" / "seed0-tagged.edges").exists()
        assert not (tmp_path / "cancer" / "seed1-pc.edges").exists()
        rows = list(csv.DictReader(open(tmp_path / "end2end_cancer.csv")))
        assert [r["method"] for r in rows] == ["pc", "tagged"]


class TestTagCommand:
    def seed_cache(self, tmp_path, variables, reply):
        spec = build_prompt(variables)
        cfg = ProviderConfig(
            base_url="", model="stub-model", cache_dir=str(tmp_path)
        )
        path = cache_path(cfg, spec.render())
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(
            json.dumps({"choices": [{"message": {"content": reply}}]})
        )

    def test_cached_reply_written_to_file(self, capsys, tmp_path):
        self.seed_cache(tmp_path, ("A", "B"), "T: A, B\n")
        out_file = tmp_path / "got.tags"
        code, out, err = run(
            capsys,
            "tag",
            "--variables",
            "A,B",
            "--model",
            "stub-model",
            "--cache-dir",
            str(tmp_path),
            "--out",
            str(out_file),
        )
        assert code == 0
        assert out_file.read_text() == "T: A, B\n"

    def test_cached_reply_printed(self, capsys, tmp_path):
        self.seed_cache(tmp_path, ("A", "B"), "T: A\nU: B\n")
        code, out, err = run(
            capsys,
            "tag",
            "--variables",
            "A,B",
            "--model",
            "stub-model",
            "--cache-dir",
            str(tmp_path),
        )
        assert code == 0
        assert out == "T: A\nU: B\n"

    def test_needs_variable_source(self, capsys):
        code, out, err = run(capsys, "tag", "--model", "m")
        assert code == 1
        assert "error:" in err
