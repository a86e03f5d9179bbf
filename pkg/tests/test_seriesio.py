"""CSV/JSON formats: exact round trips and strict validation."""

import json

import numpy as np
import pytest

from tiltlat.engine import IntegratorConfig
from tiltlat.ensemble import EnsembleConfig, ObservableSeries
from tiltlat.errors import ConfigError
from tiltlat.model import LatticeParams, WavePacketSpec
from tiltlat.seriesio import (SERIES_HEADER, density_filename, read_density,
                              read_series, read_sidecar, run_config_from_dict,
                              run_config_to_dict, write_density, write_series,
                              write_sidecar)


def awkward_series():
    t = np.array([0.0, 1.0 / 3.0, 0.1 + 0.2, 62.83185307179586])
    s2 = np.array([100.0, 1e-17, 123.456789012345678, 198076.54321])
    return ObservableSeries(
        times=t, x=np.array([0.0, -2.5, 1e-300, 33.3]),
        sigma=np.sqrt(s2), sigma2=s2,
        stderr_sigma2=np.array([0.0, 1e-8, 2.0, 3.0]),
        l_min=-8, n_realizations=4,
        params=LatticeParams(J=1.0, dF=0.04))


def test_series_round_trip_is_exact(tmp_path):
    ser = awkward_series()
    path = tmp_path / "series.csv"
    write_series(ser, path)
    back = read_series(path)
    # repr-based formatting: every float survives the trip bit for bit
    for field in ("times", "x", "sigma", "sigma2", "stderr_sigma2"):
        assert np.array_equal(getattr(back, field), getattr(ser, field)), field


def test_series_file_layout(tmp_path):
    ser = awkward_series()
    path = tmp_path / "series.csv"
    write_series(ser, path, t_j=2.0 * np.pi)
    text = path.read_text()
    lines = text.splitlines()
    assert lines[0] == SERIES_HEADER == "t,t_over_TJ,x,sigma,sigma2,stderr_sigma2"
    assert text.endswith("\n")
    assert float(lines[4].split(",")[1]) == pytest.approx(10.0)  # t/T_J
    # without params the T_J denominator must be given
    bare = ObservableSeries(times=ser.times, x=ser.x, sigma=ser.sigma,
                            sigma2=ser.sigma2, stderr_sigma2=ser.stderr_sigma2,
                            l_min=0, n_realizations=1)
    with pytest.raises(ConfigError):
        write_series(bare, tmp_path / "other.csv")


def test_series_reader_names_missing_column(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("t,t_over_TJ,x,sigma,stderr_sigma2\n0.0,0.0,0.0,1.0,0.0\n")
    with pytest.raises(ConfigError, match="sigma2"):
        read_series(path)


def test_series_reader_rejects_reordered_and_ragged(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("t,x,t_over_TJ,sigma,sigma2,stderr_sigma2\n")
    with pytest.raises(ConfigError, match="header"):
        read_series(path)
    path.write_text(SERIES_HEADER + "\n1.0,2.0,3.0\n")
    with pytest.raises(ConfigError, match=":2"):
        read_series(path)
    path.write_text(SERIES_HEADER + "\n1.0,0.1,0.0,oops,1.0,0.0\n")
    with pytest.raises(ConfigError, match=":2"):
        read_series(path)


def test_density_round_trip(tmp_path):
    p = np.array([0.25, 0.5, 0.25])
    path = write_density(2.5, -1, p, tmp_path)
    assert path.name == density_filename(2.5) == "density_t2.5.csv"
    ls, ps = read_density(path)
    assert np.array_equal(ls, [-1, 0, 1])
    assert np.array_equal(ps, p)
    (tmp_path / "junk.csv").write_text("l,rho\n0,1.0\n")
    with pytest.raises(ConfigError):
        read_density(tmp_path / "junk.csv")


def test_run_config_round_trip():
    params = LatticeParams(J=2.0, dF=0.5, dFomega=0.605, omega=0.48, g=10.0)
    spec = WavePacketSpec("incoherent", 10.0)
    icfg = IntegratorConfig(dt=0.01, sampling_stride=25)
    ecfg = EnsembleConfig(n_realizations=6, master_seed=3)
    cfg = run_config_to_dict(params, spec, icfg, ecfg, 100.0,
                             window=(-512, 511), snapshot_times=[0.0, 50.0])
    p2, s2, i2, e2, tf, win, snaps = run_config_from_dict(cfg)
    assert p2 == params
    assert s2 == spec
    assert (i2.dt, i2.sampling_stride) == (0.01, 25)
    assert e2 == ecfg
    assert (tf, win, snaps) == (100.0, (-512, 511), [0.0, 50.0])
    # JSON round trip preserves everything as well
    assert run_config_from_dict(json.loads(json.dumps(cfg)))[0] == params


def test_run_config_rejects_unknown_keys():
    good = {"params": {"J": 1.0}, "packet": {"kind": "coherent"}, "t_final": 1.0}
    with pytest.raises(ConfigError, match="unknown key"):
        run_config_from_dict(dict(good, extra=1))
    with pytest.raises(ConfigError, match="params.*gg"):
        run_config_from_dict(dict(good, params={"J": 1.0, "gg": 2.0}))
    with pytest.raises(ConfigError, match="packet"):
        run_config_from_dict(dict(good, packet={"kind": "coherent", "width": 3}))
    with pytest.raises(ConfigError, match="integrator"):
        run_config_from_dict(dict(good, integrator={"dt": 0.1, "order": 2}))
    with pytest.raises(ConfigError, match="ensemble"):
        run_config_from_dict(dict(good, ensemble={"seed": 1}))


def test_run_config_requires_core_fields():
    with pytest.raises(ConfigError, match="t_final"):
        run_config_from_dict({"params": {"J": 1.0}, "packet": {"kind": "coherent"}})
    with pytest.raises(ConfigError, match="'J'"):
        run_config_from_dict({"params": {}, "packet": {"kind": "coherent"},
                              "t_final": 1.0})
    with pytest.raises(ConfigError, match="'kind'"):
        run_config_from_dict({"params": {"J": 1.0}, "packet": {}, "t_final": 1.0})
    with pytest.raises(ConfigError, match="window"):
        run_config_from_dict({"params": {"J": 1.0}, "packet": {"kind": "coherent"},
                              "t_final": 1.0, "window": [-5.5, 5.5]})


def test_sidecar_round_trip(tmp_path):
    cfg = {"params": {"J": 1.0}, "packet": {"kind": "coherent", "sigma0": 10.0},
           "t_final": 5.0}
    path = write_sidecar(tmp_path, cfg, "0.1.0", {"series": "series.csv"})
    assert path.name == "run.json"
    payload = read_sidecar(path)
    assert payload["config"] == cfg
    assert payload["outputs"] == {"series": "series.csv"}
    path.write_text(json.dumps({"schema": "other-v9", "version": "0",
                                "preset": None, "config": cfg, "outputs": {}}))
    with pytest.raises(ConfigError, match="schema"):
        read_sidecar(path)
    path.write_text("{not json")
    with pytest.raises(ConfigError):
        read_sidecar(path)
