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


import math

import pytest
from hypothesis import given, strategies as st

import kdivpaths as kp
from kdivpaths.counting import first_valid_n
from kdivpaths.errors import exact_div

########################################################################################################################
################################################    test_binomial    ###################################################
########################################################################################################################

def test_binomial():
    assert kp.binomial(6, 4) == 15
    assert kp.binomial(4, 0) == 1
    assert kp.binomial(4, 5) == 0
    assert kp.binomial(4, -1) == 0
    with pytest.raises(kp.UsageError):
        kp.binomial(-1, 0)


def test_exact_div():
    assert exact_div(5005, 5, "P(5,3,1)") == 1001
    with pytest.raises(kp.IntegralityError):
        exact_div(7, 2, "odd")

########################################################################################################################
##############################################    test_count_formula    ################################################
########################################################################################################################

@pytest.mark.parametrize("n, k, j, expected", [(3, 2, 1, 5), (5, 3, 1, 1001), (4, 3, 3, 594), (1, 2, 1, 1)])
def test_count_formula(n, k, j, expected):
    assert kp.count_formula(kp.FamilyParams(n, k, j)) == expected


def test_catalan_and_single_baseline_count():
    assert [kp.catalan(n) for n in range(1, 8)] == [1, 2, 5, 14, 42, 132, 429]
    assert [kp.single_baseline_count(n, 3) for n in range(1, 5)] == [3, 10, 42, 198]


def test_sequence():
    assert [value for _, value in kp.sequence(2, 1, 7)] == [1, 2, 5, 14, 42, 132, 429]
    assert [value for _, value in kp.sequence(3, 1, 4)] == [3, 10, 42, 198]
    assert [value for _, value in kp.sequence(4, 1, 3)] == [6, 28, 165]
    # n starts at the first valid family
    assert kp.sequence(2, 3, 3)[0][0] == 3
    assert first_valid_n(3, 5) == 3
    with pytest.raises(kp.UsageError):
        kp.sequence(1, 1, 3)


def test_bfile_and_oeis():
    assert kp.bfile_lines(kp.sequence(2, 1, 3)) == ["1 1", "2 2", "3 5"]
    assert kp.oeis_id(2, 1) == "A000108"
    assert kp.oeis_id(3, 1) == "A007226"
    assert kp.oeis_id(7, 5) is None


@given(st.integers(2, 12), st.integers(1, 30), st.data())
def test_count_formula_integral(k, n, data):
    j = data.draw(st.integers(1, (k - 1) * n))
    value = kp.count_formula(kp.FamilyParams(n, k, j))
    assert value * n == j * math.comb(k * n, n + j)

########################################################################################################################
################################################    test_unified    ####################################################
########################################################################################################################

@pytest.mark.parametrize(
    "a, b, c, d, n, expected",
    [
        (2, 0, 1, 1, 3, 5),
        (2, 1, 1, 1, 3, 5),
        (3, 0, 1, 2, 2, 15),
    ],
)
def test_unified_formula(a, b, c, d, n, expected):
    assert kp.unified_formula(kp.GeneralParams(a, b, c, d, n)) == expected


def test_unified_formula_invalid():
    with pytest.raises(kp.UsageError):
        kp.GeneralParams(1, 0, 1, 1, 3)
    with pytest.raises(kp.UsageError):
        kp.GeneralParams(2, 0, 2, 1, 1)
    with pytest.raises(kp.UsageError):
        kp.unified_formula(kp.GeneralParams(3, 5, 2, 1, 3))


def test_general_a_and_ne_counts():
    assert kp.count_general_a(2, 1, 1, 3) == 5
    assert kp.count_general_a(3, 1, 2, 2) == 15
    assert kp.count_general_a(4, 1, 2, 1) == 8
    assert kp.count_ne(1, 2, 2) == 2
    assert kp.count_ne(2, 2, 1) == 2
    assert kp.count_ne(3, 2, 1) == 5


@given(st.integers(2, 6), st.integers(1, 3), st.integers(1, 10))
def test_general_a_matches_family_formula(k, j, n):
    # c = 1 and d = j is the P(n, k, j) count
    if (k - 1) * n < j:
        return
    assert kp.count_general_a(k, 1, j, n) == kp.count_formula(kp.FamilyParams(n, k, j))
