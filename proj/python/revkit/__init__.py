# Copyright 2026 The Authors.
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

"""Fair reviewer assignment with Reviewer Round Robin.

Paper and reviewer ids are 0-based in this API.
"""

from revkit._core import (
    Allocation,
    Instance,
    RevkitError,
    SearchResult,
    bundle_value,
    check_approximation,
    check_ef1,
    estimate_alpha,
    estimate_gamma,
    exhaustive_alpha,
    exhaustive_best_order,
    exhaustive_gamma,
    f_value,
    full_report,
    generate_synthetic,
    greedy_rrr,
    is_complete,
    is_independent,
    load_instance,
    marginal_gain,
    naive_round_robin,
    reviewer_round_robin,
    set_to_order,
    usw,
    usw_rrr,
    validate_allocation,
)

__all__ = [
    "Allocation",
    "Instance",
    "RevkitError",
    "SearchResult",
    "bundle_value",
    "check_approximation",
    "check_ef1",
    "estimate_alpha",
    "estimate_gamma",
    "exhaustive_alpha",
    "exhaustive_best_order",
    "exhaustive_gamma",
    "f_value",
    "full_report",
    "generate_synthetic",
    "greedy_rrr",
    "is_complete",
    "is_independent",
    "load_instance",
    "marginal_gain",
    "naive_round_robin",
    "reviewer_round_robin",
    "set_to_order",
    "usw",
    "usw_rrr",
    "validate_allocation",
]
