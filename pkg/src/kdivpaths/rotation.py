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

"""Rotation by k steps, primitive decomposition, orbits, labeling of rotation classes and the j = 1 bijection."""

from collections import Counter
from dataclasses import dataclass, field

from .errors import UsageError
from .geometry import (
    Baseline,
    baseline_for,
    interior_kdiv_labels,
    relative_height,
    statistic_x,
)
from .path_core import (
    DiagonalPath,
    FamilyParams,
    MarkedPath,
    heights,
    rank_path,
    render_path,
    require_family,
)

########################################################################################################################
####################################################    Rotation    ####################################################
########################################################################################################################

def rotate_left_k(path: DiagonalPath, params: FamilyParams) -> DiagonalPath:
    """Move the first k steps of the path to its end."""
    if len(path) % params.k != 0:
        raise UsageError(
            f"path length must be divisible by k={params.k} (got length {len(path)})"
        )
    return path[params.k:] + path[:params.k]


@dataclass(frozen = True)
class PrimitiveDecomposition:
    root: DiagonalPath
    power: int


def primitive_decomposition(path: DiagonalPath, params: FamilyParams) -> PrimitiveDecomposition:
    """Write the path as root^r with len(root) divisible by k and r maximal."""
    require_family(path, params)
    # len(root) = kn / r is a multiple of k exactly when r divides n.
    for power in range(params.n, 0, -1):
        if params.n % power != 0:
            continue
        root = path[:len(path) // power]
        if root * power == path:
            if params.j % power != 0:
                raise AssertionError(
                    f"period {power} of {render_path(path)} does not divide j={params.j}"
                )
            return PrimitiveDecomposition(root, power)
    raise AssertionError("unreachable: power 1 always decomposes")

########################################################################################################################
#################################################    Rotation class    #################################################
########################################################################################################################

@dataclass(frozen = True)
class RotationClass:
    """An orbit under rotate_left_k, listed from its minimal-rank member: paths[t] = R^t(paths[0])."""
    paths: tuple[DiagonalPath, ...]
    params: FamilyParams

    @property
    def representative(self) -> DiagonalPath:
        return self.paths[0]

    def __len__(self) -> int:
        return len(self.paths)


def orbit(path: DiagonalPath, params: FamilyParams) -> RotationClass:
    require_family(path, params)
    members = [path]
    current = rotate_left_k(path, params)
    while current != path:
        members.append(current)
        current = rotate_left_k(current, params)
    start = min(range(len(members)), key = lambda t: rank_path(members[t]))
    return RotationClass(tuple(members[start:] + members[:start]), params)

########################################################################################################################
#################################################    Labeled class    ##################################################
########################################################################################################################

@dataclass(frozen = True)
class LabeledClass:
    """
    Labels for every object (R^t(P), m) of a rotation-equivalence class.

    Each object owns one baseline in the doubled diagram of P·P. Its left endpoint is
    (tk, H(tk) + 2(m-1)) and its right endpoint lies kn further right, `rise` higher.
    """
    cls: RotationClass
    assignments: dict[MarkedPath, int]
    left_endpoints: dict[MarkedPath, tuple[int, int]] = field(repr = False)

    def endpoints(self, side: str = "left") -> dict[MarkedPath, tuple[int, int]]:
        if side == "left":
            return dict(self.left_endpoints)
        if side != "right":
            raise UsageError(f"endpoint side must be 'left' or 'right' (got {side!r})")
        params = self.cls.params
        rise = baseline_for(params, 1).rise
        return {obj: (x + params.length, y + rise) for obj, (x, y) in self.left_endpoints.items()}

    def label_counts(self) -> Counter:
        return Counter(self.assignments.values())


def label_class(cls: RotationClass, side: str = "left") -> LabeledClass:
    """
    Label every baseline of the doubled diagram with the number of heavy points it passes under.

    The heavy points are the k-divisible points of P·P. The label of the object whose
    baseline starts at (x0, y0) counts the heavy points at x0 + ik, 0 < i < n, lying
    strictly above that line. `side` selects which endpoint anchors the line; both
    anchors describe the same line, so the labels agree.
    """
    params = cls.params
    profile = heights(cls.representative * 2)
    rise = baseline_for(params, 1).rise
    offsets = interior_kdiv_labels(params)
    left_endpoints = {}
    assignments = {}
    for t, member in enumerate(cls.paths):
        x0 = t * params.k
        for mark in range(1, params.j + 1):
            obj = MarkedPath(member, mark)
            y0 = profile[x0] + 2 * (mark - 1)
            left_endpoints[obj] = (x0, y0)
            if side == "right":
                anchor = Baseline(rise, params.length, y0 + rise)
                anchor_x = x0 + params.length
            else:
                anchor = Baseline(rise, params.length, y0)
                anchor_x = x0
            assignments[obj] = sum(
                1 for offset in offsets
                if relative_height(anchor, x0 + offset - anchor_x, profile[x0 + offset]) > 0
            )
    return LabeledClass(cls, assignments, left_endpoints)

########################################################################################################################
###################################################    Bijection    ####################################################
########################################################################################################################

def _require_single_mark(params: FamilyParams):
    if params.j != 1:
        raise UsageError(f"the rotation bijection is defined for j = 1 (got j={params.j})")


def bijection_to(path: DiagonalPath, target: int, params: FamilyParams) -> DiagonalPath:
    """Map a path with X = n - 1 to the member of its rotation class with X = target."""
    _require_single_mark(params)
    if not 0 <= target < params.n:
        raise UsageError(f"target must lie in 0..{params.n - 1} (got {target})")
    if statistic_x(MarkedPath(path, 1), params) != params.n - 1:
        raise UsageError(f"bijection source must have X = {params.n - 1} (got {render_path(path)})")
    labeled = label_class(orbit(path, params))
    for obj, label in labeled.assignments.items():
        if label == target:
            return obj.path
    raise AssertionError(f"label {target} unused in the class of {render_path(path)}")


def bijection_inverse(q: DiagonalPath, params: FamilyParams) -> DiagonalPath:
    """
    Recover the X = n - 1 path from any member of its class.

    Split q = B·A at its lowest k-divisible point relative to the parallel baselines and return A·B.
    """
    _require_single_mark(params)
    require_family(q, params)
    profile = heights(q)
    baseline = baseline_for(params, 1)
    cut = min(
        range(0, params.length, params.k),
        key = lambda x: relative_height(baseline, x, profile[x]),
    )
    return q[cut:] + q[:cut]
