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

import pytest

import qorder

REFERENCE = [46, 52, -12, 33, 10, 51, 24]


@pytest.mark.parametrize(
    "make, expected",
    [
        (qorder.ascending_program, [-12, 10, 24, 33, 46, 51, 52]),
        (qorder.bst_program, [33, 10, 51, -12, 24, 46, 52]),
        (qorder.heap_program, [52, 24, 51, -12, 10, 33, 46]),
    ],
)
def test_reference_pipeline(make, expected):
    result, report = qorder.run_pipeline(REFERENCE, make(7))
    assert report.passed
    assert report.output == expected
    assert result.trace.flips == 7


def test_step_by_step():
    x = qorder.ValueVector(REFERENCE)
    inst = qorder.build_qubo(x, qorder.ascending_program(7))
    assert inst.dimension == 49
    net = qorder.qubo_to_hopfield(inst)
    result = qorder.solve(net, qorder.SolverConfig())
    energies = [step.energy for step in result.trace.steps]
    assert energies[0] == pytest.approx(-673.5, abs=0.05)
    assert energies[-1] == pytest.approx(-776.4, abs=0.05)
    p = qorder.decode_permutation(qorder.bipolar_to_binary(result.state))
    assert p.as_mapping == [2, 4, 6, 3, 0, 5, 1]
    assert qorder.apply_permutation(p, x) == [-12, 10, 24, 33, 46, 51, 52]


def test_oracles_and_errors():
    perm, objective = qorder.best_permutation(qorder.ValueVector([3, 1, 2]), qorder.ascending_program(3))
    assert perm.as_mapping == [1, 2, 0]
    assert objective == -14
    with pytest.raises(qorder.ZeroVector):
        qorder.build_qubo(qorder.ValueVector([0, 0]), qorder.ascending_program(2))
    with pytest.raises(qorder.Error):
        qorder.OrderProgram([1, 1])
    assert qorder.validate_heap([52, 24, 51, -12, 10, 33, 46], 7, 2)
