# Copyright 2026 The sirsde Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import sirsde


def test_thresholds():
    assert sirsde.threshold_lambda(sirsde.example(1)) == pytest.approx(67.5)
    assert sirsde.threshold_lambda(sirsde.example(2)) == pytest.approx(16.5)
    assert sirsde.compute_dstar(sirsde.example(1)) == pytest.approx(7.75, rel=1e-10)
    assert sirsde.compute_cstar(sirsde.example(1)) == pytest.approx(1.9375, rel=1e-10)
    assert sirsde.compute_dstar(sirsde.example(2)) == -math.inf
    assert sirsde.compute_cstar(sirsde.example(2)) is None


def test_classify_report():
    rep = sirsde.classify(sirsde.example(3))
    assert rep["verdict"] == "Extinction"
    assert rep["lambda"] == pytest.approx(-0.25)
    assert "paper_note" in rep
    assert sirsde.classify(sirsde.example(2))["dstar"] == "-inf"


def test_validation_errors():
    with pytest.raises(sirsde.SirsdeError):
        sirsde.validate(sirsde.SirParams(0, 1, 1, 0, 0, 1, 1))
    with pytest.raises(ValueError):
        sirsde.validate(sirsde.SirParams(1, 1, 1, 0, 0, 0, 1))
    flipped = sirsde.validate(sirsde.SirParams(20, 4, 1, 10, 1, -1, 1))
    assert flipped == sirsde.example(1)


def test_stationary_density():
    d = sirsde.StationaryDensity.from_params(sirsde.example(1))
    assert d.shape == 3.0 and d.scale == 40.0
    assert d.mean() == pytest.approx(20.0)
    xs = np.array([1.0, 10.0, 100.0])
    assert np.all(np.diff(d.cdf(xs)) > 0)
    assert d.density(np.array([10.0]))[0] > d.density(np.array([5.0]))[0]
    samples = d.sample(20000, seed=3)
    assert np.all(samples > 0)
    assert np.median(samples) == pytest.approx(d.quantile(0.5), rel=0.05)


def test_simulate_is_reproducible_and_positive():
    p = sirsde.example(2)
    a = sirsde.simulate(p, t_final=5.0, record_stride=10, seed=4)
    b = sirsde.simulate(p, t_final=5.0, record_stride=10, seed=4)
    assert np.array_equal(a["S"], b["S"])
    assert np.all(a["S"] > 0) and np.all(a["I"] > 0)
    assert np.allclose(np.log(a["I"]), a["log_I"])
    assert a["t"][-1] == pytest.approx(5.0)


def test_lyapunov_and_brackets():
    p = sirsde.example(3)
    path = sirsde.simulate(p, t_final=100.0, record_stride=100, seed=5)
    slope, se = sirsde.lyapunov_exponent(path["t"], path["log_I"])
    assert slope < 0 and se > 0
    assert sirsde.lie_bracket_rank(sirsde.example(1), 1.0, 1.0) == 2


def test_run_example(tmp_path):
    files = sirsde.run_example(1, 7, tmp_path, 2)
    names = {f.name for f in files}
    assert {"trajectory.csv", "support_boundary.csv", "summary.json"} <= names
    first_row = (tmp_path / "support_boundary.csv").read_text().splitlines()[1].split(",")
    assert float(first_row[0]) == 1.0
    assert float(first_row[1]) == pytest.approx(1.9375, rel=1e-10)
