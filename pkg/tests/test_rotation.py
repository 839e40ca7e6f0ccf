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


from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

import kdivpaths as kp

def _class_labels(text, params, side = "left"):
    labeled = kp.label_class(kp.orbit(kp.parse_path(text), params), side = side)
    return {(kp.render_path(obj.path), obj.mark): label for obj, label in labeled.assignments.items()}

########################################################################################################################
################################################    test_rotation    ###################################################
########################################################################################################################

def test_rotate_left_k():
    path = kp.parse_path("UDUUUDDDDDUDUDD")
    assert kp.render_path(kp.rotate_left_k(path, kp.FamilyParams(5, 3, 1))) == "UUDDDDDUDUDDUDU"
    assert kp.render_path(kp.rotate_left_k(kp.parse_path("UUUU"), kp.FamilyParams(2, 2, 2))) == "UUUU"


def test_rotate_left_k_needs_multiple_of_k():
    with pytest.raises(kp.UsageError):
        kp.rotate_left_k(kp.parse_path("UUUUD"), kp.FamilyParams(2, 2, 1))


@pytest.mark.parametrize(
    "text, n, k, j, root, power",
    [
        ("UUUDUUUD", 4, 2, 2, "UUUD", 2),
        ("UUUUUD", 3, 2, 2, "UUUUUD", 1),
        ("UU", 1, 2, 1, "UU", 1),
        ("UUUU", 2, 2, 2, "UU", 2),
    ],
)
def test_primitive_decomposition(text, n, k, j, root, power):
    decomposition = kp.primitive_decomposition(kp.parse_path(text), kp.FamilyParams(n, k, j))
    assert kp.render_path(decomposition.root) == root
    assert decomposition.power == power

########################################################################################################################
##################################################    test_orbit    ####################################################
########################################################################################################################

def test_orbit_examples():
    cls = kp.orbit(kp.parse_path("UUUUUD"), kp.FamilyParams(3, 2, 2))
    assert [kp.render_path(p) for p in cls.paths] == ["UUUUUD", "UUUDUU", "UDUUUU"]
    assert kp.render_path(cls.representative) == "UUUUUD"
    
    assert len(kp.orbit(kp.parse_path("UUUU"), kp.FamilyParams(2, 2, 2))) == 1


def test_orbit_starts_from_minimal_rank():
    cls = kp.orbit(kp.parse_path("UDUUUU"), kp.FamilyParams(3, 2, 2))
    assert kp.render_path(cls.representative) == "UUUUUD"


@pytest.mark.parametrize("n, k, j", [(4, 2, 2), (6, 2, 3), (4, 3, 2)])
def test_orbits_partition_family(n, k, j):
    params = kp.FamilyParams(n, k, j)
    seen = Counter()
    for path in kp.enumerate_family(params):
        cls = kp.orbit(path, params)
        power = kp.primitive_decomposition(path, params).power
        assert len(cls) == n // power
        seen[cls.paths] += 1
    # every member of a class lands on the same ordered tuple
    assert all(count == len(paths) for paths, count in seen.items())
    assert sum(len(paths) for paths in seen) == params.size

########################################################################################################################
##################################################    test_labels    ###################################################
########################################################################################################################

def test_label_class_three_two_two():
    labeled = kp.label_class(kp.orbit(kp.parse_path("UUUUUD"), kp.FamilyParams(3, 2, 2)))
    by_endpoint = {labeled.left_endpoints[obj]: label for obj, label in labeled.assignments.items()}
    assert by_endpoint == {(4, 6): 0, (2, 4): 0, (4, 4): 1, (0, 2): 1, (2, 2): 2, (0, 0): 2}
    assert labeled.label_counts() == Counter({0: 2, 1: 2, 2: 2})


def test_label_class_fixed_point():
    labels = _class_labels("UUUU", kp.FamilyParams(2, 2, 2))
    assert labels == {("UUUU", 1): 1, ("UUUU", 2): 0}


def test_right_endpoints_give_same_labels():
    params = kp.FamilyParams(3, 2, 2)
    labeled = kp.label_class(kp.orbit(kp.parse_path("UUUUUD"), params))
    right = labeled.endpoints("right")
    for obj, (x, y) in labeled.endpoints("left").items():
        assert right[obj] == (x + 6, y + 2)
    assert _class_labels("UUUUUD", params, side = "right") == _class_labels("UUUUUD", params)
    with pytest.raises(kp.UsageError):
        labeled.endpoints("middle")


@pytest.mark.parametrize(
    "text, n, k, j",
    [
        ("UDUUUDDDDDUDUDD", 5, 3, 1),
        ("UUUDDDDUUUDU", 4, 3, 3),
        ("UUUUUD", 3, 2, 2),
    ],
)
def test_labels_equal_statistic(text, n, k, j):
    params = kp.FamilyParams(n, k, j)
    labeled = kp.label_class(kp.orbit(kp.parse_path(text), params))
    power = kp.primitive_decomposition(kp.parse_path(text), params).power
    for obj, label in labeled.assignments.items():
        assert label == kp.statistic_x(obj, params)
    assert labeled.label_counts() == Counter({label: j // power for label in range(n)})

########################################################################################################################
################################################    test_bijection    ##################################################
########################################################################################################################

def test_bijection_inverse_examples():
    params = kp.FamilyParams(5, 3, 1)
    source = kp.bijection_inverse(kp.parse_path("UDDUDUUUDDDDDUD"), params)
    assert kp.render_path(source) == "UDUUUDDDDDUDUDD"
    assert kp.statistic_x(kp.MarkedPath(source, 1), params) == 4
    assert kp.bijection_inverse(source, params) == source


def test_bijection_to_identity_and_injective():
    params = kp.FamilyParams(3, 2, 1)
    sources = [p for p in kp.enumerate_family(params) if kp.statistic_x(kp.MarkedPath(p, 1), params) == 2]
    assert len(sources) == 5
    for path in sources:
        assert kp.bijection_to(path, 2, params) == path
    images = {kp.bijection_to(path, 0, params) for path in sources}
    assert len(images) == 5
    assert all(kp.statistic_x(kp.MarkedPath(q, 1), params) == 0 for q in images)


def test_bijection_roundtrip_exhaustive():
    params = kp.FamilyParams(4, 2, 1)
    for path in kp.enumerate_family(params):
        if kp.statistic_x(kp.MarkedPath(path, 1), params) != params.n - 1:
            continue
        for target in range(params.n):
            assert kp.bijection_inverse(kp.bijection_to(path, target, params), params) == path


def test_bijection_preconditions():
    params = kp.FamilyParams(3, 2, 1)
    low = next(p for p in kp.enumerate_family(params) if kp.statistic_x(kp.MarkedPath(p, 1), params) == 0)
    with pytest.raises(kp.UsageError):
        kp.bijection_to(low, 1, params)
    high = kp.bijection_inverse(low, params)
    with pytest.raises(kp.UsageError):
        kp.bijection_to(high, 3, params)
    with pytest.raises(kp.UsageError):
        kp.bijection_to(kp.parse_path("UUUUUD"), 0, kp.FamilyParams(3, 2, 2))
    with pytest.raises(kp.UsageError):
        kp.bijection_inverse(kp.parse_path("UUUUUD"), kp.FamilyParams(3, 2, 2))


@settings(max_examples = 50)
@given(st.integers(2, 4), st.integers(1, 6), st.data())
def test_bijection_inverse_reaches_top_label(k, n, data):
    params = kp.FamilyParams(n, k, 1)
    q = kp.unrank(data.draw(st.integers(0, params.size - 1)), params)
    source = kp.bijection_inverse(q, params)
    assert kp.statistic_x(kp.MarkedPath(source, 1), params) == n - 1
    assert kp.bijection_to(source, kp.statistic_x(kp.MarkedPath(q, 1), params), params) == q


@settings(max_examples = 50)
@given(st.integers(2, 4), st.integers(1, 6), st.data())
def test_orbit_is_closed_under_rotation(k, n, data):
    j = data.draw(st.integers(1, (k - 1) * n))
    params = kp.FamilyParams(n, k, j)
    path = kp.unrank(data.draw(st.integers(0, params.size - 1)), params)
    cls = kp.orbit(path, params)
    assert path in cls.paths
    assert len(set(cls.paths)) == len(cls)
    for t, member in enumerate(cls.paths):
        assert kp.rotate_left_k(member, params) == cls.paths[(t + 1) % len(cls)]
    decomposition = kp.primitive_decomposition(path, params)
    assert decomposition.root * decomposition.power == path
    assert len(cls) * decomposition.power == n
