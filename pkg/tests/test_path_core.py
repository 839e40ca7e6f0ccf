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

SAMPLE_PATH = "UDDUDUUUDDDDDUD"

@st.composite
def family_paths(draw):
    k = draw(st.integers(2, 4))
    n = draw(st.integers(1, 5))
    j = draw(st.integers(1, (k - 1) * n))
    params = kp.FamilyParams(n, k, j)
    r = draw(st.integers(0, params.size - 1))
    return params, r

########################################################################################################################
###################################################    test_parse    ###################################################
########################################################################################################################

def test_parse_and_render():
    assert kp.parse_path("UU").steps == (kp.Step.UP, kp.Step.UP)
    path = kp.parse_path(SAMPLE_PATH)
    assert len(path) == 15
    assert path.ups == 6
    assert kp.render_path(path) == SAMPLE_PATH
    assert str(path) == SAMPLE_PATH


@pytest.mark.parametrize("text", ["UX", "", "ud", "U D"])
def test_parse_rejects_bad_text(text):
    with pytest.raises(kp.UsageError):
        kp.parse_path(text)


def test_path_slicing_and_concatenation():
    path = kp.parse_path("UUDD")
    assert path[0] is kp.Step.UP
    assert kp.render_path(path[1:3]) == "UD"
    assert kp.render_path(path[2:] + path[:2]) == "DDUU"
    assert kp.render_path(path * 2) == "UUDDUUDD"

########################################################################################################################
##################################################    test_family    ###################################################
########################################################################################################################

def test_family_params():
    params = kp.FamilyParams(5, 3, 1)
    assert (params.length, params.ups, params.downs) == (15, 6, 9)
    assert params.size == 5005
    assert str(params) == "P(5,3,1)"
    assert params.as_dict() == {"n": 5, "k": 3, "j": 1}


@pytest.mark.parametrize("n, k, j", [(0, 2, 1), (1, 1, 1), (1, 2, 0), (1, 2, 2), (2, 3, 5)])
def test_family_params_invalid(n, k, j):
    with pytest.raises(kp.UsageError):
        kp.FamilyParams(n, k, j)


def test_validate_family():
    assert kp.validate_family(kp.parse_path(SAMPLE_PATH), kp.FamilyParams(5, 3, 1))
    assert kp.validate_family(kp.parse_path("UUUU"), kp.FamilyParams(2, 2, 2))
    assert not kp.validate_family(kp.parse_path("UUUU"), kp.FamilyParams(2, 2, 1))
    assert not kp.validate_family(kp.parse_path("UUD"), kp.FamilyParams(2, 2, 1))


def test_heights():
    assert kp.heights(kp.parse_path("UU")) == [0, 1, 2]
    assert kp.heights(kp.parse_path(SAMPLE_PATH)) == [0, 1, 0, -1, 0, -1, 0, 1, 2, 1, 0, -1, -2, -3, -2, -3]
    assert kp.heights(kp.parse_path("UDUUUDDDDDUDUDD")) == [0, 1, 0, 1, 2, 3, 2, 1, 0, -1, -2, -1, -2, -1, -2, -3]

########################################################################################################################
################################################    test_enumerate    ##################################################
########################################################################################################################

def test_enumerate_family():
    assert [kp.render_path(p) for p in kp.enumerate_family(kp.FamilyParams(1, 2, 1))] == ["UU"]
    
    paths = [kp.render_path(p) for p in kp.enumerate_family(kp.FamilyParams(3, 2, 1))]
    assert len(paths) == 15
    assert paths[0] == "UUUUDD"
    assert paths[-1] == "DDUUUU"
    assert [kp.rank(kp.parse_path(p)) for p in paths] == list(range(15))
    assert len(set(paths)) == 15
    
    assert sum(1 for _ in kp.enumerate_family(kp.FamilyParams(2, 3, 1))) == 20


def test_enumerate_rank_range():
    params = kp.FamilyParams(3, 2, 1)
    everything = list(kp.enumerate_family(params))
    assert list(kp.enumerate_family(params, start = 4, stop = 9)) == everything[4:9]
    assert list(kp.enumerate_family(params, stop = 0)) == []

########################################################################################################################
####################################################    test_rank    ###################################################
########################################################################################################################

def test_rank_examples():
    params = kp.FamilyParams(3, 2, 1)
    assert kp.rank(kp.parse_path("UUUUDD")) == 0
    assert kp.rank(kp.parse_path("DDUUUU")) == params.size - 1
    assert kp.render_path(kp.unrank(0, params)) == "UUUUDD"
    for index, path in enumerate(kp.enumerate_family(params)):
        assert kp.rank(path) == index


def test_unrank_out_of_range():
    params = kp.FamilyParams(3, 2, 1)
    with pytest.raises(kp.UsageError):
        kp.unrank(params.size, params)
    with pytest.raises(kp.UsageError):
        kp.unrank(-1, params)


@given(family_paths())
def test_unrank_is_inverse_of_rank(case):
    params, r = case
    path = kp.unrank(r, params)
    assert kp.validate_family(path, params)
    assert kp.rank(path) == r
    assert r < math.comb(params.length, params.ups)


@given(st.text(alphabet = "UD", min_size = 1, max_size = 40))
def test_parse_render_roundtrip(text):
    path = kp.parse_path(text)
    assert kp.render_path(path) == text
    profile = kp.heights(path)
    assert profile[-1] == path.ups - path.downs
    assert all(abs(b - a) == 1 for a, b in zip(profile, profile[1:]))
