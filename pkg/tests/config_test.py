import pytest

from genbell.config import Config


def test_defaults(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "genbell.yaml").write_text("")
    cfg = Config()
    assert cfg.seed == 42
    assert cfg.trials == 200
    assert cfg.max_n == 8
    assert cfg.cellsize == 4
    assert cfg.log_level == "WARNING"


def test_sources_in_order(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "pyproject.toml").write_text('[tool.genbell]\nseed = 7\ntrials = 30\n')
    (tmp_path / "genbell.yaml").write_text("seed: 9\ncellsize: 2\nmax_n: 5\n")
    monkeypatch.setenv("GENBELL_TRIALS", "11")

    cfg = Config()
    assert cfg.trials == 11
    assert cfg.seed == 7
    assert cfg.cellsize == 2
    assert cfg.max_n == 5

    assert Config(seed=1).seed == 1


def test_invalid_values(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    (tmp_path / "genbell.yaml").write_text("seed: abc\n")
    with pytest.raises(ValueError):
        Config()

    (tmp_path / "genbell.yaml").write_text("- 1\n- 2\n")
    with pytest.raises(ValueError):
        Config()

    (tmp_path / "genbell.yaml").write_text("")
    monkeypatch.setenv("GENBELL_CELLSIZE", "0")
    with pytest.raises(ValueError):
        Config()
