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

"""Verification suites: each one checks a statement exhaustively and returns a `VerificationReport`."""

import csv
import io
import json
import logging
import math
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .config import VerifyConfig
from .counting import (
    GeneralParams,
    count_formula,
    count_general_a,
    count_ne,
    first_valid_n,
    unified_formula,
)
from .errors import IntegralityError, UsageError
from .geometry import (
    block_labels,
    count_above,
    general_baseline,
    lemma_no_kdiv_on_baseline,
    shifted_baseline,
    statistic_x,
    terminal_clears,
)
from .ne_paths import (
    NEParams,
    enumerate_weakly_above,
    high_points_same_height,
    marked_ne_objects,
    ne_final_bijection,
    ne_histogram,
    ne_statistic_x,
    render_ne_path,
    weakly_above_count,
)
from .path_core import (
    DiagonalPath,
    FamilyParams,
    MarkedPath,
    enumerate_family,
    enumerate_paths,
    heights,
    rank_path,
    render_path,
    unrank,
)
from .rotation import (
    RotationClass,
    bijection_inverse,
    bijection_to,
    label_class,
    orbit,
    primitive_decomposition,
)
from .sweep import FamilySweep

logger = logging.getLogger(__name__)

SUITES = (
    "uniform",
    "lemma",
    "orbits",
    "labels",
    "bijection",
    "corollary",
    "main",
    "general-a",
    "general-b",
    "integrality",
    "all",
)

########################################################################################################################
####################################################    Reports    #####################################################
########################################################################################################################

@dataclass(frozen = True)
class Witness:
    """One counterexample: the offending path (empty for aggregate checks), its mark and the mismatch."""
    path: str
    mark: int | None
    expected: str
    actual: str
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "path": self.path,
            "mark": self.mark,
            "expected": self.expected,
            "actual": self.actual,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    suite: str
    params: dict
    cases: int
    bins: list[int] | None
    failures: list[Witness]
    failure_count: int
    elapsed_ms: int

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def as_dict(self) -> dict:
        """JSON-ready form. Big integers become decimal strings."""
        data = {
            "suite": self.suite,
            "params": self.params,
            "cases": self.cases,
        }
        if self.bins is not None:
            data["bins"] = [str(value) for value in self.bins]
        data["passed"] = self.passed
        data["failure_count"] = self.failure_count
        data["failures"] = [witness.as_dict() for witness in self.failures]
        data["elapsed_ms"] = self.elapsed_ms
        return data


@dataclass
class _Collector:
    """Keeps the first `limit` witnesses and counts all of them."""
    limit: int
    witnesses: list[Witness] = field(default_factory = list)
    count: int = 0
    started: float = field(default_factory = time.perf_counter)

    def fail(self, path: str, mark: int | None, expected, actual, detail: str = ""):
        self.count += 1
        if len(self.witnesses) < self.limit:
            self.witnesses.append(Witness(path, mark, str(expected), str(actual), detail))

    def check(self, ok: bool, path: str, mark: int | None, expected, actual, detail: str = ""):
        if not ok:
            self.fail(path, mark, expected, actual, detail)

    def report(self, suite: str, params: dict, cases: int, bins: list[int] | None = None) -> VerificationReport:
        elapsed_ms = int((time.perf_counter() - self.started) * 1000)
        report = VerificationReport(suite, params, cases, bins, self.witnesses, self.count, elapsed_ms)
        logger.info(
            "%s %s: %d cases, %d failures, %d ms",
            suite, params, cases, self.count, elapsed_ms,
        )
        return report


def merge_reports(suite: str, reports: list[VerificationReport], config: VerifyConfig) -> VerificationReport:
    """Fold the per-family reports of a grid run into one report."""
    failures = [witness for report in reports for witness in report.failures][:config.max_witnesses]
    return VerificationReport(
        suite = suite,
        params = {"grid": [report.params for report in reports]},
        cases = sum(report.cases for report in reports),
        bins = None,
        failures = failures,
        failure_count = sum(report.failure_count for report in reports),
        elapsed_ms = sum(report.elapsed_ms for report in reports),
    )

########################################################################################################################
#################################################    Serial helpers    #################################################
########################################################################################################################

def _serial_histogram(params: FamilyParams) -> list[int]:
    bins = [0] * params.n
    for path in enumerate_family(params):
        for mark in range(1, params.j + 1):
            bins[statistic_x(MarkedPath(path, mark), params)] += 1
    return bins


def _serial_all_above(length: int, ups: int, block: int, baseline) -> int:
    labels = block_labels(length, block)
    return sum(
        1 for path in enumerate_paths(length, ups)
        if count_above(heights(path), labels, baseline) == len(labels)
    )


def corollary_paths(params: FamilyParams) -> list[DiagonalPath]:
    """Paths with every interior k-divisible point strictly above the (mark 1) baseline."""
    return [
        path for path in enumerate_family(params)
        if statistic_x(MarkedPath(path, 1), params) == params.n - 1
    ]


def rotation_classes(params: FamilyParams) -> Iterator[RotationClass]:
    """Every rotation class of P(n, k, j) once, in order of its minimal rank."""
    seen = set()
    for index, path in enumerate(enumerate_family(params)):
        if index in seen:
            continue
        cls = orbit(path, params)
        seen.update(rank_path(member) for member in cls.paths)
        yield cls


def _sweep(params: FamilyParams, config: VerifyConfig) -> FamilySweep:
    return FamilySweep.from_family(params, device = config.device)

########################################################################################################################
#################################################    Family suites    ##################################################
########################################################################################################################

def verify_uniform(params: FamilyParams, config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """X is uniform on 0..n-1 over P(n, k, j) x [j]: every bin equals j C(kn, n+j) / n."""
    config.check_budget(params.size, str(params))
    collector = _Collector(config.max_witnesses)
    expected = count_formula(params)
    if config.parallel:
        bins, _ = _sweep(params, config).mark_histogram(params.j)
    else:
        bins = _serial_histogram(params)
    for value, actual in enumerate(bins):
        collector.check(actual == expected, "", None, expected, actual, f"bin {value}")
    return collector.report("uniform", params.as_dict(), params.j * params.size, bins)


def verify_lemma(params: FamilyParams, config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """No interior k-divisible point lies on any of the j baselines."""
    config.check_budget(params.size, str(params))
    collector = _Collector(config.max_witnesses)
    if config.parallel:
        _, on_ranks = _sweep(params, config).mark_histogram(params.j)
    else:
        on_ranks = [
            index for index, path in enumerate(enumerate_family(params))
            if not all(lemma_no_kdiv_on_baseline(MarkedPath(path, mark), params) for mark in range(1, params.j + 1))
        ]
    for rank in on_ranks:
        collector.fail(render_path(unrank(rank, params)), None, "no ON verdict", "ON")
    cases = params.j * params.size * (params.n - 1)
    return collector.report("lemma", params.as_dict(), cases)


def verify_corollary(params: FamilyParams, config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """1/n C(kn, n+1) paths of P(n, k) have every interior k-divisible point strictly above the baseline."""
    if params.j != 1:
        raise UsageError(f"corollary suite needs j = 1 (got j={params.j})")
    config.check_budget(params.size, str(params))
    collector = _Collector(config.max_witnesses)
    expected = count_formula(params)
    if config.parallel:
        actual = _sweep(params, config).count_all_above(0)
    else:
        actual = len(corollary_paths(params))
    collector.check(actual == expected, "", 1, expected, actual, "paths with X = n-1")
    return collector.report("corollary", params.as_dict(), params.size, [actual])


def verify_main(params: FamilyParams, config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """
    Paths started at (0, -2i) with all interior k-divisible points above the origin line, summed over i.
    
    Counted paths must also end weakly above the line. Every member ends 2(j - i - 1) above
    it, so only shifts 0..j-1 qualify and they must add up to j/n C(kn, n+j). Shifts j and
    j+1 are still swept and reported as raw interior-only counts (nonzero once k >= 3), but
    they contribute nothing to the sum.
    """
    config.check_budget(params.size, str(params))
    collector = _Collector(config.max_witnesses)
    shifts = range(params.j + 2)
    if config.parallel:
        sweep = _sweep(params, config)
        counts = [sweep.count_all_above(shift) for shift in shifts]
    else:
        counts = [
            _serial_all_above(params.length, params.ups, params.k, shifted_baseline(params, shift))
            for shift in shifts
        ]
        # The shift framing and the mark framing (m = i + 1) must give the same counts.
        for shift in range(params.j):
            by_mark = sum(
                1 for path in enumerate_family(params)
                if statistic_x(MarkedPath(path, shift + 1), params) == params.n - 1
            )
            collector.check(by_mark == counts[shift], "", shift + 1, counts[shift], by_mark, f"mark framing of shift {shift}")
    expected = count_formula(params)
    for shift in shifts:
        qualifies = terminal_clears(params, shift)
        collector.check(qualifies == (shift < params.j), "", None, shift < params.j, qualifies, f"terminal point of shift {shift}")
    total = sum(count for shift, count in zip(shifts, counts) if terminal_clears(params, shift))
    collector.check(total == expected, "", None, expected, total, "sum over shifts with a clear terminal point")
    return collector.report("main", params.as_dict(), params.size * len(shifts), counts)


def verify_orbits(params: FamilyParams, config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """Every orbit under rotate_left_k has size n/r with r | gcd(n, j), and the orbits partition the family."""
    config.check_budget(params.size, str(params))
    collector = _Collector(config.max_witnesses)
    classes = 0
    covered = 0
    sizes = Counter()
    for cls in rotation_classes(params):
        classes += 1
        covered += len(cls)
        sizes[len(cls)] += 1
        power = primitive_decomposition(cls.representative, params).power
        text = render_path(cls.representative)
        collector.check(len(cls) * power == params.n, text, None, params.n // power, len(cls), "orbit size n/r")
        collector.check(math.gcd(params.n, params.j) % power == 0, text, None, "r | gcd(n,j)", power, "period")
    collector.check(covered == params.size, "", None, params.size, covered, "orbit sizes sum")
    details = params.as_dict() | {"orbit_sizes": {str(size): count for size, count in sorted(sizes.items())}}
    return collector.report("orbits", details, classes)


def verify_labels(params: FamilyParams, config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """
    Each class uses every label 0..n-1 exactly j/r times.

    The label multiplicities are the substantive check. Labels are read with the same exact side
    test as X, and the right-endpoint anchoring describes the same line, so the label-equals-X
    and left/right checks only guard against regressions in `label_class` itself.
    """
    config.check_budget(params.size, str(params))
    collector = _Collector(config.max_witnesses)
    objects = 0
    for cls in rotation_classes(params):
        labeled = label_class(cls)
        mirrored = label_class(cls, side = "right")
        power = primitive_decomposition(cls.representative, params).power
        counts = labeled.label_counts()
        for label in range(params.n):
            collector.check(
                counts.get(label, 0) == params.j // power,
                render_path(cls.representative), None, params.j // power, counts.get(label, 0), f"uses of label {label}",
            )
        for obj, label in labeled.assignments.items():
            objects += 1
            text = render_path(obj.path)
            collector.check(statistic_x(obj, params) == label, text, obj.mark, label, statistic_x(obj, params), "X of labeled object")
            collector.check(mirrored.assignments[obj] == label, text, obj.mark, label, mirrored.assignments[obj], "right endpoint label")
    return collector.report("labels", params.as_dict(), objects)


def verify_bijection(params: FamilyParams, config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """bijection_to(., i) maps {X = n-1} injectively onto {X = i} and bijection_inverse undoes it."""
    if params.j != 1:
        raise UsageError(f"bijection suite needs j = 1 (got j={params.j})")
    config.check_budget(params.size, str(params))
    collector = _Collector(config.max_witnesses)
    sources = corollary_paths(params)
    cases = 0
    for target in range(params.n):
        images = set()
        for path in sources:
            cases += 1
            image = bijection_to(path, target, params)
            images.add(image)
            text = render_path(path)
            value = statistic_x(MarkedPath(image, 1), params)
            collector.check(value == target, text, 1, target, value, f"X of image for target {target}")
            back = bijection_inverse(image, params)
            collector.check(back == path, text, 1, text, render_path(back), f"inverse for target {target}")
        collector.check(len(images) == len(sources), "", None, len(sources), len(images), f"distinct images for target {target}")
    for path in enumerate_family(params):
        cases += 1
        value = statistic_x(MarkedPath(path, 1), params)
        again = bijection_to(bijection_inverse(path, params), value, params)
        collector.check(again == path, render_path(path), 1, render_path(path), render_path(again), "round trip")
    return collector.report("bijection", params.as_dict(), cases)

########################################################################################################################
#############################################    Generalizations    ####################################################
########################################################################################################################

def verify_general_a(a: int, c: int, d: int, n: int, config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """d/n C(an, cn+d) paths of cn+d upsteps among an steps clear the line of slope -((a-2c)n-2)/(an), summed over shifts."""
    general = GeneralParams(a, 0, c, d, n)
    length, ups = a * n, c * n + d
    size = math.comb(length, ups)
    config.check_budget(size, f"general family {general.as_dict()}")
    collector = _Collector(config.max_witnesses)
    if config.parallel:
        sweep = FamilySweep.from_general(a, c, d, n, device = config.device)
        counts = [sweep.count_all_above(shift) for shift in range(d)]
    else:
        counts = [_serial_all_above(length, ups, a, general_baseline(a, c, n, shift)) for shift in range(d)]
    expected = count_general_a(a, c, d, n)
    total = sum(counts)
    collector.check(total == expected, "", None, expected, total, "sum over shifts 0..d-1")
    params = {"a": a, "c": c, "d": d, "n": n}
    return collector.report("general-a", params, size * d, counts)


def verify_general_b(n: int, k: int, j: int, config: VerifyConfig = VerifyConfig()) -> VerificationReport:
    """High-point statistic is uniform on 1..kn+j, and the final bijection hits exactly the weakly-above paths."""
    params = NEParams(n, k, j)
    config.check_budget(math.comb(params.length, n), f"NE family {params.as_dict()}")
    collector = _Collector(config.max_witnesses)
    expected = count_ne(n, k, j)
    
    bins = ne_histogram(params)
    for value, actual in enumerate(bins, start = 1):
        collector.check(actual == expected, "", None, expected, actual, f"bin {value}")
    
    images = []
    for marked in marked_ne_objects(params):
        if ne_statistic_x(marked) == params.length:
            images.append(ne_final_bijection(marked))
    image_set = set(images)
    collector.check(len(image_set) == len(images), "", None, len(images), len(image_set), "injective final bijection")
    target = set(enumerate_weakly_above(params))
    for path in sorted(render_ne_path(p) for p in image_set ^ target):
        collector.fail(path, None, "in both image and weakly-above set", "in only one", "image set")
    
    counted = weakly_above_count(params)
    collector.check(counted == expected, "", None, expected, counted, "weakly-above count")
    
    same_height = ne_histogram(params, reading = high_points_same_height)
    details = params.as_dict() | {
        "same_height_bins": [str(value) for value in same_height],
        "same_height_uniform": len(set(same_height)) == 1,
    }
    return collector.report("general-b", details, j * math.comb(params.length, n), bins)


def verify_integrality(
    n_max: int = 12,
    k_max: int = 5,
    unified_limits: tuple[int, int, int, int, int] = (5, 3, 3, 4, 10),
    config: VerifyConfig = VerifyConfig(),
) -> VerificationReport:
    """
    Both identities hold with zero remainder across a parameter sweep.
    
    `unified_limits` bounds (a, b, c, d, n) for the unified formula; a starts at 2, the others at their minimum.
    """
    collector = _Collector(config.max_witnesses)
    cases = 0
    for k in range(2, k_max + 1):
        for n in range(1, n_max + 1):
            for j in range(1, (k - 1) * n + 1):
                cases += 1
                try:
                    count_formula(FamilyParams(n, k, j))
                except IntegralityError as exc:
                    collector.fail("", None, "integer", "remainder", str(exc))
    a_max, b_max, c_max, d_max, un_max = unified_limits
    for a in range(2, a_max + 1):
        for b in range(0, b_max + 1):
            for c in range(1, c_max + 1):
                for d in range(1, d_max + 1):
                    for n in range(1, un_max + 1):
                        if a * d - b * c <= 0 or a * n + b < c * n + d:
                            continue
                        cases += 1
                        try:
                            unified_formula(GeneralParams(a, b, c, d, n))
                        except IntegralityError as exc:
                            collector.fail("", None, "integer", "remainder", str(exc))
    params = {"n_max": n_max, "k_max": k_max, "unified_limits": list(unified_limits)}
    return collector.report("integrality", params, cases)

########################################################################################################################
####################################################    Grids    #######################################################
########################################################################################################################

def family_grid(
    ks: Iterable[int] = (2, 3, 4),
    j_max: int = 4,
    n_max: int = 12,
    budget: int = 10**6,
    single_mark: bool = False,
) -> list[FamilyParams]:
    """Valid families with k in `ks`, j <= j_max, n <= n_max and C(kn, n+j) <= budget."""
    grid = []
    for k in ks:
        for j in range(1, (1 if single_mark else j_max) + 1):
            for n in range(first_valid_n(k, j), n_max + 1):
                params = FamilyParams(n, k, j)
                if params.size <= budget:
                    grid.append(params)
    return grid


def general_a_grid(n_max: int = 12, budget: int = 10**6) -> list[tuple[int, int, int, int]]:
    """(a, c, d, n) with a in 2..4, c < a, d <= 3 and an enumeration within budget."""
    grid = []
    for a in (2, 3, 4):
        for c in range(1, a):
            for d in range(1, 4):
                for n in range(1, n_max + 1):
                    if a * n >= c * n + d and math.comb(a * n, c * n + d) <= budget:
                        grid.append((a, c, d, n))
    return grid


def general_b_grid(max_length: int = 18, j_max: int = 4, budget: int = 10**6) -> list[tuple[int, int, int]]:
    """(n, k, j) with k in 2..4, j <= j_max, kn + j <= max_length and C(kn + j, n) <= budget."""
    return [
        (n, k, j)
        for k in (2, 3, 4)
        for j in range(1, j_max + 1)
        for n in range(1, max_length + 1)
        if k * n + j <= max_length and math.comb(k * n + j, n) <= budget
    ]


_FAMILY_SUITES = {
    "uniform": verify_uniform,
    "lemma": verify_lemma,
    "orbits": verify_orbits,
    "labels": verify_labels,
    "bijection": verify_bijection,
    "corollary": verify_corollary,
    "main": verify_main,
}


def run_suite(
    suite: str,
    config: VerifyConfig = VerifyConfig(),
    params: FamilyParams | None = None,
    general: tuple[int, int, int, int] | None = None,
    ne: NEParams | None = None,
    ks: Iterable[int] = (2, 3, 4),
    j_max: int = 4,
    n_max: int = 12,
) -> list[VerificationReport]:
    """
    Run one suite (or all of them) and return one report per suite.
    
    `params` pins a single family; otherwise the suite sweeps its grid. `general` pins
    (a, c, d, n) for general-a and `ne` pins general-b.
    """
    if suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r} (choose from {', '.join(SUITES)})")
    ks = list(ks)
    if not ks or min(ks) < 2:
        raise UsageError(f"k values must be a nonempty list of integers >= 2 (got {ks})")
    if suite == "all":
        return [
            report
            for name in SUITES[:-1]
            if not (params is not None and params.j != 1 and name in ("bijection", "corollary"))
            for report in run_suite(name, config, params, general, ne, ks, j_max, n_max)
        ]
    
    logger.info("running suite %s", suite)
    if suite == "integrality":
        return [verify_integrality(n_max = n_max, k_max = max(5, max(ks)), config = config)]
    
    if suite == "general-a":
        if general is not None:
            return [verify_general_a(*general, config = config)]
        reports = [verify_general_a(*item, config = config) for item in general_a_grid(n_max, config.budget)]
        return [merge_reports(suite, reports, config)]
    
    if suite == "general-b":
        if ne is not None:
            return [verify_general_b(ne.n, ne.k, ne.j, config = config)]
        reports = [verify_general_b(*item, config = config) for item in general_b_grid(j_max = j_max, budget = config.budget)]
        return [merge_reports(suite, reports, config)]
    
    check = _FAMILY_SUITES[suite]
    single_mark = suite in ("bijection", "corollary")
    if params is not None:
        return [check(params, config)]
    grid = family_grid(ks, j_max, n_max, config.budget, single_mark = single_mark)
    return [merge_reports(suite, [check(family, config) for family in grid], config)]

########################################################################################################################
###################################################    Rendering    ####################################################
########################################################################################################################

CSV_FIELDS = ("suite", "params", "cases", "passed", "failure_count", "bins", "elapsed_ms")


def to_json(reports: list[VerificationReport]) -> str:
    """One report renders as an object, several as an array."""
    payload = [report.as_dict() for report in reports]
    return json.dumps(payload[0] if len(payload) == 1 else payload, indent = 2)


def to_csv(reports: list[VerificationReport]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator = "\n")
    writer.writerow(CSV_FIELDS)
    for report in reports:
        writer.writerow([
            report.suite,
            json.dumps(report.params, separators = (",", ":")),
            report.cases,
            report.passed,
            report.failure_count,
            " ".join(str(value) for value in report.bins) if report.bins is not None else "",
            report.elapsed_ms,
        ])
    return buffer.getvalue().rstrip("\n")


def to_text(reports: list[VerificationReport]) -> str:
    lines = []
    for report in reports:
        status = "PASS" if report.passed else "FAIL"
        lines.append(f"{report.suite}: {status} ({report.cases} cases, {report.failure_count} failures, {report.elapsed_ms} ms)")
        if report.bins is not None:
            lines.append("  bins: " + " ".join(str(value) for value in report.bins))
        for witness in report.failures:
            mark = "" if witness.mark is None else f" mark {witness.mark}"
            lines.append(
                f"  {witness.path or '-'}{mark}: expected {witness.expected}, got {witness.actual}"
                + (f" [{witness.detail}]" if witness.detail else "")
            )
    return "\n".join(lines)


RENDERERS = {"json": to_json, "csv": to_csv, "text": to_text}
