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

########################################################################################################################
##################################################    path_core.py    ##################################################
########################################################################################################################

from .path_core import (
	Step,
	FamilyParams,
	DiagonalPath,
	MarkedPath,
	parse_path,
	render_path,
	validate_family,
	heights,
	enumerate_paths,
	enumerate_family,
	rank_path,
	unrank_path,
	rank,
	unrank,
)

__all__ = [
	"Step",
	"FamilyParams",
	"DiagonalPath",
	"MarkedPath",
	"parse_path",
	"render_path",
	"validate_family",
	"heights",
	"enumerate_paths",
	"enumerate_family",
	"rank_path",
	"unrank_path",
	"rank",
	"unrank",
]

########################################################################################################################
##################################################    geometry.py    ###################################################
########################################################################################################################

from .geometry import (
	Baseline,
	SideResult,
	baseline_for,
	shifted_baseline,
	general_baseline,
	relative_height,
	side_of_baseline,
	interior_kdiv_labels,
	kdiv_verdicts,
	statistic_x,
	lemma_no_kdiv_on_baseline,
	terminal_clears,
)

__all__ += [
	"Baseline",
	"SideResult",
	"baseline_for",
	"shifted_baseline",
	"general_baseline",
	"relative_height",
	"side_of_baseline",
	"interior_kdiv_labels",
	"kdiv_verdicts",
	"statistic_x",
	"lemma_no_kdiv_on_baseline",
	"terminal_clears",
]

########################################################################################################################
##################################################    rotation.py    ###################################################
########################################################################################################################

from .rotation import (
	PrimitiveDecomposition,
	RotationClass,
	LabeledClass,
	rotate_left_k,
	primitive_decomposition,
	orbit,
	label_class,
	bijection_to,
	bijection_inverse,
)

__all__ += [
	"PrimitiveDecomposition",
	"RotationClass",
	"LabeledClass",
	"rotate_left_k",
	"primitive_decomposition",
	"orbit",
	"label_class",
	"bijection_to",
	"bijection_inverse",
]

########################################################################################################################
##################################################    counting.py    ###################################################
########################################################################################################################

from .counting import (
	GeneralParams,
	binomial,
	count_formula,
	catalan,
	single_baseline_count,
	sequence,
	bfile_lines,
	oeis_id,
	unified_formula,
	count_general_a,
	count_ne,
)

__all__ += [
	"GeneralParams",
	"binomial",
	"count_formula",
	"catalan",
	"single_baseline_count",
	"sequence",
	"bfile_lines",
	"oeis_id",
	"unified_formula",
	"count_general_a",
	"count_ne",
]

########################################################################################################################
##################################################    ne_paths.py    ###################################################
########################################################################################################################

from .ne_paths import (
	NEStep,
	NEParams,
	NEPath,
	MarkedNEPath,
	parse_ne_path,
	render_ne_path,
	ne_height,
	ne_heights,
	high_points,
	high_points_same_height,
	ne_statistic_x,
	ne_final_bijection,
	ne_histogram,
	enumerate_ne_family,
	enumerate_weakly_above,
	weakly_above_count,
)

__all__ += [
	"NEStep",
	"NEParams",
	"NEPath",
	"MarkedNEPath",
	"parse_ne_path",
	"render_ne_path",
	"ne_height",
	"ne_heights",
	"high_points",
	"high_points_same_height",
	"ne_statistic_x",
	"ne_final_bijection",
	"ne_histogram",
	"enumerate_ne_family",
	"enumerate_weakly_above",
	"weakly_above_count",
]

########################################################################################################################
#####################################################    sweep    ######################################################
########################################################################################################################

from .sweep import FamilySweep

__all__ += [
	"FamilySweep",
]

########################################################################################################################
###################################################    verify.py    ####################################################
########################################################################################################################

from .config import VerifyConfig
from .errors import UsageError, IntegralityError
from .verify import (
	VerificationReport,
	Witness,
	run_suite,
	verify_uniform,
	verify_lemma,
	verify_orbits,
	verify_labels,
	verify_bijection,
	verify_corollary,
	verify_main,
	verify_general_a,
	verify_general_b,
	verify_integrality,
)

__all__ += [
	"VerifyConfig",
	"UsageError",
	"IntegralityError",
	"VerificationReport",
	"Witness",
	"run_suite",
	"verify_uniform",
	"verify_lemma",
	"verify_orbits",
	"verify_labels",
	"verify_bijection",
	"verify_corollary",
	"verify_main",
	"verify_general_a",
	"verify_general_b",
	"verify_integrality",
]
