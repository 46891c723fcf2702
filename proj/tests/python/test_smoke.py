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

import os

import pytest

import revkit

DATA = os.environ.get("REVKIT_TEST_DATA_DIR", "")

INST_A = [
    [9, 3, 5, 9, 4, 4],
    [10, 4, 0, 10, 6, 5],
    [1, 1, 2, 2, 4, 4],
]


def inst_a():
    return revkit.Instance(INST_A, [1] * 6, 2)


def test_instance_shape():
    inst = inst_a()
    assert (inst.n, inst.m, inst.k) == (3, 6, 2)
    assert inst.value(1, 0) == 10.0
    assert "n=3" in repr(inst)


def test_rrr_matches_the_fixture():
    inst = inst_a()
    alloc = revkit.reviewer_round_robin(inst, [1, 0, 2])
    assert [sorted(b) for b in alloc.bundles] == [[2, 3], [0, 5], [1, 4]]
    assert revkit.usw(inst, alloc) == 34.0
    assert revkit.check_ef1(inst, alloc) == []
    assert revkit.validate_allocation(inst, alloc) == []
    assert revkit.is_complete(inst, alloc)
    assert not alloc.halted_early

    same, trace = revkit.reviewer_round_robin(inst, [1, 0, 2], trace=True)
    assert same == alloc
    assert trace.count("\n") >= 6


def test_greedy_and_oracle():
    inst = inst_a()
    res = revkit.greedy_rrr(inst)
    assert res.usw == 34.0
    assert res.order == [1, 0, 2]
    assert res.per_step_usw[-1] == res.usw
    order, best = revkit.exhaustive_best_order(inst)
    assert best >= res.usw
    assert revkit.usw_rrr(inst, order) == best


def test_greedy_is_deterministic_across_jobs():
    inst = revkit.generate_synthetic(12, 30, 2, seed=5)
    a = revkit.greedy_rrr(inst, subsample=4, seed=9, jobs=1)
    b = revkit.greedy_rrr(inst, subsample=4, seed=9, jobs=4)
    assert a.order == b.order
    assert a.usw == b.usw


def test_full_report_keys():
    inst = inst_a()
    report = revkit.full_report(inst, revkit.reviewer_round_robin(inst, [1, 0, 2]))
    for key in ("usw_mean", "nsw", "gini", "ef1_violations", "total_envy"):
        assert key in report
    assert report["ef1_violations"] == 0
    assert report["usw_mean"] == pytest.approx(34.0 / 3.0)


def test_set_to_order():
    tuples = [(1, 1), (0, 2), (1, 2), (2, 2)]
    assert revkit.set_to_order(tuples) == [1, 0, 2]
    assert not revkit.is_independent(tuples)


def test_errors_raise_revkit_error():
    with pytest.raises(revkit.RevkitError, match="NegativeValue"):
        revkit.Instance([[-1.0, 2.0]], [1, 1], 1)
    with pytest.raises(ValueError):
        revkit.reviewer_round_robin(inst_a(), [0, 0])


@pytest.mark.skipif(not DATA, reason="test data dir not set")
def test_load_instance_from_csv():
    inst = revkit.load_instance(os.path.join(DATA, "inst_a.csv"), "1", 2)
    assert (inst.n, inst.m) == (3, 6)
    assert revkit.greedy_rrr(inst).usw == 34.0
