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

"""Python bindings for the sirsde stochastic SIR toolkit."""

import json as _json

from ._core import (
    SirParams,
    SirsdeError,
    StationaryDensity,
    compute_cstar,
    compute_dstar,
    example,
    generator_LU,
    lie_bracket_rank,
    lyapunov_exponent,
    reproduction_number,
    run_example,
    simulate,
    simulate_boundary,
    threshold_lambda,
    threshold_lambda_deterministic,
    tv_decay,
    validate,
)
from ._core import classify as _classify_json


def classify(params):
    """Closed-form classification report as a dict."""
    return _json.loads(_classify_json(params))


__all__ = [
    "SirParams",
    "SirsdeError",
    "StationaryDensity",
    "classify",
    "compute_cstar",
    "compute_dstar",
    "example",
    "generator_LU",
    "lie_bracket_rank",
    "lyapunov_exponent",
    "reproduction_number",
    "run_example",
    "simulate",
    "simulate_boundary",
    "threshold_lambda",
    "threshold_lambda_deterministic",
    "tv_decay",
    "validate",
]
