# Copyright 2026 The franfit Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Closing-price distribution fitting for franchise cohorts."""

from ._franfit import (  # noqa: F401
    FranfitError,
    KINDS,
    anderson_darling,
    classify_dispersion,
    cmd_cohort,
    cmd_fit,
    cmd_fundamentals,
    draw,
    fit,
    fit_all,
    fit_lognormal,
    ks_statistic,
    log_likelihood,
    max_drawdown,
    normalize,
    write_demo_tree,
)

__version__ = "0.1.0"
