# Copyright 2026 The qorder Authors
#
#    Licensed under the Apache License, Version 2.0 (the "License");
#    you may not use this file except in compliance with the License.
#    You may obtain a copy of the License at
#
#        http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS,
#    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
#    See the License for the specific language governing permissions and
#    limitations under the License.

"""Ordering QUBOs for sorting, search trees and heaps, solved by Hopfield descent."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401


def run_pipeline(values, program, cfg=None, restarts=None, seed=0):
    """Build, solve and certify one ordering problem. Returns (result, report)."""
    x = ValueVector(list(values))  # noqa: F405
    if cfg is None:
        cfg = BuilderConfig.defaults_for(len(x))  # noqa: F405
    network = qubo_to_hopfield(build_qubo(x, program, cfg))  # noqa: F405
    solver_cfg = SolverConfig()  # noqa: F405
    solver_cfg.restarts = len(x) ** 2 if restarts is None else restarts
    solver_cfg.seed = seed
    result = solve(network, solver_cfg, decodes_to_permutation)  # noqa: F405
    return result, certify(x, program, cfg, result.state)  # noqa: F405
