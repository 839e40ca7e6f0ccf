# BSD 3-Clause License
#
# Copyright (c) 2025, the kdivpaths developers
#
# Redistribution and use in source and binary forms, with or without
# modification, are permitted provided that the following conditions are met:
#
# 1. Redistributions of source code must retain the above copyright notice, this
#    list of conditions and the following disclaimer.
#
# 2. Redistributions in binary form must reproduce the above copyright notice,
#    this list of conditions and the following disclaimer in the documentation
#    and/or other materials provided with the distribution.
#
# 3. Neither the name of the copyright holder nor the names of its
#    contributors may be used to endorse or promote products derived from
#    this software without specific prior written permission.
#
# THIS SOFTWARE IS PROVIDED BY THE COPYRIGHT HOLDERS AND CONTRIBUTORS "AS IS"
# AND ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
# IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE ARE
# DISCLAIMED. IN NO EVENT SHALL THE COPYRIGHT HOLDER OR CONTRIBUTORS BE LIABLE
# FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
# DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS OR
# SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION) HOWEVER
# CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT LIABILITY,
# OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY OUT OF THE USE
# OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF SUCH DAMAGE.


import pytest
import warp as wp

import kdivpaths as kp
from kdivpaths.geometry import count_above, general_baseline, interior_kdiv_labels

cuda_only = pytest.mark.skipif(not wp.is_cuda_available(), reason = "needs a CUDA device")

def _serial_bins(params):
    bins = [0] * params.n
    for path in kp.enumerate_family(params):
        for mark in range(1, params.j + 1):
            bins[kp.statistic_x(kp.MarkedPath(path, mark), params)] += 1
    return bins


def _serial_all_above(params, shift):
    baseline = kp.shifted_baseline(params, shift)
    labels = interior_kdiv_labels(params)
    return sum(
        1 for path in kp.enumerate_family(params)
        if count_above(kp.heights(path), labels, baseline) == len(labels)
    )

########################################################################################################################
################################################    test_histogram    ##################################################
########################################################################################################################

@pytest.mark.parametrize("n, k, j", [(1, 2, 1), (3, 2, 1), (5, 3, 1), (3, 2, 2), (4, 3, 3), (4, 4, 2)])
def test_mark_histogram_matches_serial(n, k, j):
    params = kp.FamilyParams(n, k, j)
    sweep = kp.FamilySweep.from_family(params, device = "cpu")
    assert sweep.count == params.size
    assert sweep.interior == n - 1
    
    bins, on_ranks = sweep.mark_histogram(j)
    assert bins == _serial_bins(params)
    assert bins == [kp.count_formula(params)] * n
    assert on_ranks == []


def test_mark_histogram_reports_on_points():
    # slope 0 through the origin: every path returning to height 0 at x = 2 touches the line
    sweep = kp.FamilySweep(4, 2, 2, 0, 4, device = "cpu")
    bins, on_ranks = sweep.mark_histogram(1)
    touching = [
        kp.rank(path) for path in kp.enumerate_paths(4, 2)
        if kp.heights(path)[2] == 0
    ]
    assert on_ranks == touching
    assert sum(bins) == 6

########################################################################################################################
################################################    test_all_above    ##################################################
########################################################################################################################

@pytest.mark.parametrize("n, k, j", [(3, 2, 1), (4, 3, 2), (5, 2, 3)])
def test_count_all_above_matches_serial(n, k, j):
    params = kp.FamilyParams(n, k, j)
    sweep = kp.FamilySweep.from_family(params, device = "cpu")
    for shift in range(j + 2):
        assert sweep.count_all_above(shift) == _serial_all_above(params, shift)


def test_count_all_above_sums_to_family_count():
    params = kp.FamilyParams(5, 3, 2)
    sweep = kp.FamilySweep.from_family(params, device = "cpu")
    total = sum(sweep.count_all_above(shift) for shift in range(params.j + 2))
    assert total == kp.count_formula(params)


def test_general_sweep():
    # d/n C(an, cn+d) for a=3, c=1, d=2, n=2
    sweep = kp.FamilySweep.from_general(3, 1, 2, 2, device = "cpu")
    assert sweep.block == 3
    assert sweep.rise == general_baseline(3, 1, 2, 0).rise
    assert sum(sweep.count_all_above(shift) for shift in range(4)) == kp.count_general_a(3, 1, 2, 2)


def test_sweep_rejects_bad_shapes():
    with pytest.raises(kp.UsageError):
        kp.FamilySweep(6, 7, 2, 1, 6, device = "cpu")
    with pytest.raises(kp.UsageError):
        kp.FamilySweep(6, 3, 4, 1, 6, device = "cpu")
    with pytest.raises(kp.UsageError):
        kp.FamilySweep(6, 3, 2, 1, 0, device = "cpu")

########################################################################################################################
###################################################    test_cuda    ####################################################
########################################################################################################################

@cuda_only
def test_cuda_sweep_matches_cpu():
    params = kp.FamilyParams(6, 3, 2)
    cpu = kp.FamilySweep.from_family(params, device = "cpu")
    gpu = kp.FamilySweep.from_family(params, device = "cuda:0")
    assert gpu.mark_histogram(params.j) == cpu.mark_histogram(params.j)
    for shift in range(params.j + 2):
        assert gpu.count_all_above(shift) == cpu.count_all_above(shift)
