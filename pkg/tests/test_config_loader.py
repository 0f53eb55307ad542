from pathlib import Path

import pytest

from nls.config_loader import load_app_config, load_convergence_config
from nls.errors import ConfigError
from nls.integrators import MethodId

ENV_KEYS = ["NLS_CACHE_DIR", "NLS_FFT_WORKERS", "NLS_STUDY_WORKERS", "NLS_LOG_LEVEL"]
CONFIGS = Path(__file__).resolve().parents[1] / "configs"


@pytest.fixture
def clean_env(monkeypatch, tmp_path):
    # set then delete so teardown also removes whatever load_dotenv adds
    for key in ENV_KEYS:
        monkeypatch.setenv(key, "")
        monkeypatch.delenv(key)
    monkeypatch.chdir(tmp_path)
    return tmp_path


class TestAppConfig:
    def test_defaults(self, clean_env):
        config = load_app_config()
        assert config.cache_dir == Path(".nls_cache")
        assert config.fft_workers == 1
        assert config.study_workers >= 1
        assert config.log_level == "WARNING"

    def test_environment_values(self, clean_env, monkeypatch):
        monkeypatch.setenv("NLS_FFT_WORKERS", "4")
        monkeypatch.setenv("NLS_LOG_LEVEL", "debug")
        config = load_app_config()
        assert config.fft_workers == 4
        assert config.log_level == "DEBUG"

    def test_env_file(self, clean_env):
        env = clean_env / "settings.env"
        env.write_text("NLS_CACHE_DIR=/tmp/refs\nNLS_STUDY_WORKERS=3\n")
        config = load_app_config(env)
        assert config.cache_dir == Path("/tmp/refs")
        assert config.study_workers == 3

    def test_missing_explicit_env_file(self, clean_env):
        with pytest.raises(ConfigError):
            load_app_config(clean_env / "absent.env")

    @pytest.mark.parametrize("value", ["0", "many"])
    def test_invalid_workers(self, clean_env, monkeypatch, value):
        monkeypatch.setenv("NLS_FFT_WORKERS", value)
        with pytest.raises(ConfigError) as info:
            load_app_config()
        assert info.value.exit_code == 4


class TestConvergenceConfig:
    def test_shipped_configs_load(self):
        spec = load_convergence_config(CONFIGS / "figure1_gamma2.env")
        assert (spec.d, spec.N, spec.gamma, spec.data_regularity) == (2, 128, 2.0, 4.0)
        assert spec.methods == [MethodId.LRI2, MethodId.LRI1]
        assert spec.taus[0] == 2.0**-4 and spec.taus[-1] == 2.0**-10
        assert spec.lam == -1 and spec.crossvalidate
        assert load_convergence_config(CONFIGS / "fast_1d.env").d == 1

    def test_flat_file(self, tmp_path):
        path = tmp_path / "study.env"
        path.write_text(
            "# comment\nd = 1\nN = 64\ngamma = 1.5\nmethods = lri2, strang\n"
            "taus = 2^-2, 2^-3, 2^-4\ntau_ref = 2^-8\nlambda = -1\ncrossvalidate = true\n"
        )
        spec = load_convergence_config(path)
        assert spec.N == 64
        assert spec.lam == -1
        assert spec.crossvalidate
        assert spec.taus == [0.25, 0.125, 0.0625]

    @pytest.mark.parametrize(
        "text",
        [
            "d=1\nresolution=64\n",
            "d=1\ntau_ref=\n",
            "d=1\nN\n",
            "d=1\nN=63\n",
            "taus=0.3\n",
        ],
    )
    def test_rejected_files(self, tmp_path, text):
        path = tmp_path / "bad.env"
        path.write_text(text)
        with pytest.raises(ConfigError):
            load_convergence_config(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_convergence_config(tmp_path / "nope.env")
