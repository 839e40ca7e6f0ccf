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

import os
from dataclasses import dataclass, replace

from .errors import UsageError

########################################################################################################################
####################################################    config    ######################################################
########################################################################################################################

DEFAULT_BUDGET = 10**6
DEFAULT_MAX_WITNESSES = 20


@dataclass(frozen = True)
class VerifyConfig:
    """
    Settings shared by every verification suite.

    Attributes
    ----------
    budget : int
        Largest family size a suite may enumerate exhaustively.
    max_witnesses : int
        Number of failure witnesses kept per report (the failure count is always complete).
    parallel : bool
        Run the data-parallel Warp sweep where a suite supports it, otherwise enumerate serially.
    device : str or None
        Warp device for the sweep ("cpu", "cuda:0", ...). None selects Warp's default device.
    """
    budget: int = DEFAULT_BUDGET
    max_witnesses: int = DEFAULT_MAX_WITNESSES
    parallel: bool = True
    device: str | None = None

    def __post_init__(self):
        if self.budget < 1:
            raise UsageError(f"budget must be positive (got {self.budget})")
        if self.max_witnesses < 0:
            raise UsageError(f"max_witnesses must be nonnegative (got {self.max_witnesses})")

    @classmethod
    def from_env(cls, environ = None) -> "VerifyConfig":
        """Build a config from KDIVPATHS_BUDGET, KDIVPATHS_DEVICE and KDIVPATHS_SERIAL."""
        environ = os.environ if environ is None else environ
        config = cls()
        if "KDIVPATHS_BUDGET" in environ:
            try:
                budget = int(environ["KDIVPATHS_BUDGET"])
            except ValueError:
                raise UsageError(
                    f"KDIVPATHS_BUDGET must be an integer (got {environ['KDIVPATHS_BUDGET']!r})"
                ) from None
            config = replace(config, budget = budget)
        if environ.get("KDIVPATHS_DEVICE"):
            config = replace(config, device = environ["KDIVPATHS_DEVICE"])
        if environ.get("KDIVPATHS_SERIAL", "").lower() in ("1", "true", "yes"):
            config = replace(config, parallel = False)
        return config

    def check_budget(self, size: int, what: str):
        """Raise `UsageError` when `size` objects would exceed the enumeration budget."""
        if size > self.budget:
            raise UsageError(
                f"{what} has {size} members, over the enumeration budget "
                f"(got budget {self.budget}; raise it with --budget)"
            )
