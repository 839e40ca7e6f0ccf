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

"""Command-line interface: counting, enumeration, statistics, orbits and verification suites.

Exit codes: 0 success or pass, 1 verification failure, 2 usage or input error.
"""

import argparse
import logging
import sys
from dataclasses import replace

from .config import VerifyConfig
from .counting import GeneralParams, bfile_lines, count_formula, oeis_id, sequence, unified_formula
from .errors import IntegralityError, UsageError
from .geometry import statistic_x
from .ne_paths import NEParams
from .path_core import FamilyParams, MarkedPath, enumerate_family, parse_path, render_path
from .rotation import label_class, orbit
from .verify import RENDERERS, SUITES, run_suite

logger = logging.getLogger("kdivpaths")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

########################################################################################################################
####################################################    Logging    #####################################################
########################################################################################################################

def setup_logging(verbosity: int) -> logging.Logger:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logger.setLevel(level)
    if not logger.handlers:
        console = logging.StreamHandler(sys.stderr)
        console.setFormatter(
            logging.Formatter("%(asctime)s - %(levelname)s - %(message)s", datefmt = "%Y-%m-%d %H:%M:%S")
        )
        logger.addHandler(console)
    for handler in logger.handlers:
        handler.setLevel(level)
    return logger

########################################################################################################################
####################################################    Parser    ######################################################
########################################################################################################################

def _k_list(text: str) -> list[int]:
    try:
        values = [int(item) for item in text.split(",") if item]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers (got {text!r})") from None
    if not values or min(values) < 2:
        raise argparse.ArgumentTypeError(f"expected a nonempty list of k values >= 2 (got {text!r})")
    return values


def _add_family(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument("--n", type = int, required = required)
    parser.add_argument("--k", type = int, required = required)
    parser.add_argument("--j", type = int, required = required)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog = "kdivpaths",
        description = "Lattice paths counted by j/n C(kn, n+j): counts, statistics and exhaustive verification.",
    )
    parser.add_argument("-v", "--verbose", action = "count", default = 0, help = "log to stderr (-vv for debug)")
    commands = parser.add_subparsers(dest = "command", required = True)
    
    count = commands.add_parser("count", help = "print j/n C(kn, n+j)")
    _add_family(count)
    
    general = commands.add_parser("count-general", help = "print (ad-bc)/(an+b) C(an+b, cn+d)")
    for name in ("a", "b", "c", "d", "n"):
        general.add_argument(f"--{name}", type = int, required = True)
    
    seq = commands.add_parser("seq", help = "print the sequence in n for fixed k, j")
    seq.add_argument("--k", type = int, required = True)
    seq.add_argument("--j", type = int, required = True)
    seq.add_argument("--n-max", type = int, required = True)
    seq.add_argument("--bfile", action = "store_true", help = "OEIS b-file lines 'n value'")
    
    enum = commands.add_parser("enumerate", help = "list the paths of P(n, k, j) in lexicographic order")
    _add_family(enum)
    enum.add_argument("--limit", type = int, default = None)
    
    stat = commands.add_parser("stat", help = "print X of a marked path")
    stat.add_argument("--path", required = True)
    _add_family(stat)
    stat.add_argument("--mark", type = int, default = 1)
    
    orb = commands.add_parser("orbit", help = "list the rotation class of a path with the label of every object")
    orb.add_argument("--path", required = True)
    _add_family(orb)
    
    verify = commands.add_parser("verify", help = "run a verification suite")
    verify.add_argument("--suite", choices = SUITES, required = True)
    _add_family(verify, required = False)
    verify.add_argument("--a", type = int)
    verify.add_argument("--c", type = int)
    verify.add_argument("--d", type = int)
    verify.add_argument("--k-values", type = _k_list, default = [2, 3, 4])
    verify.add_argument("--j-max", type = int, default = 4)
    verify.add_argument("--n-max", type = int, default = 12)
    verify.add_argument("--budget", type = int, default = None)
    verify.add_argument("--serial", action = "store_true", help = "enumerate serially instead of on a Warp device")
    verify.add_argument("--device", default = None, help = "Warp device, e.g. cpu or cuda:0")
    verify.add_argument("--format", choices = sorted(RENDERERS), default = "text")
    return parser

########################################################################################################################
###################################################    Commands    #####################################################
########################################################################################################################

def _family(args) -> FamilyParams:
    return FamilyParams(args.n, args.k, args.j)


def _run(args) -> int:
    if args.command == "count":
        print(count_formula(_family(args)))
        return EXIT_OK
    
    if args.command == "count-general":
        print(unified_formula(GeneralParams(args.a, args.b, args.c, args.d, args.n)))
        return EXIT_OK
    
    if args.command == "seq":
        pairs = sequence(args.k, args.j, args.n_max)
        if oeis_id(args.k, args.j):
            logger.info("k=%d, j=%d is OEIS %s", args.k, args.j, oeis_id(args.k, args.j))
        if args.bfile:
            for line in bfile_lines(pairs):
                print(line)
        else:
            print(", ".join(str(value) for _, value in pairs))
        return EXIT_OK
    
    if args.command == "enumerate":
        if args.limit is not None and args.limit < 0:
            raise UsageError(f"--limit must be nonnegative (got {args.limit})")
        for path in enumerate_family(_family(args), stop = args.limit):
            print(render_path(path))
        return EXIT_OK
    
    if args.command == "stat":
        print(statistic_x(MarkedPath(parse_path(args.path), args.mark), _family(args)))
        return EXIT_OK
    
    if args.command == "orbit":
        labeled = label_class(orbit(parse_path(args.path), _family(args)))
        for obj, label in labeled.assignments.items():
            print(f"{render_path(obj.path)} {obj.mark} {label}")
        return EXIT_OK
    
    return _verify(args)


def _verify(args) -> int:
    config = VerifyConfig.from_env()
    if args.budget is not None:
        config = replace(config, budget = args.budget)
    if args.serial:
        config = replace(config, parallel = False)
    if args.device is not None:
        config = replace(config, device = args.device)
    
    family_flags = (args.n, args.k, args.j)
    params = None
    ne = None
    if all(flag is not None for flag in family_flags):
        if args.suite == "general-b":
            ne = NEParams(*family_flags)
        else:
            params = FamilyParams(*family_flags)
    elif any(flag is not None for flag in family_flags) and args.suite != "general-a":
        raise UsageError("--n, --k and --j must be given together")
    
    general = None
    general_flags = (args.a, args.c, args.d, args.n)
    if args.suite == "general-a" and any(flag is not None for flag in (args.a, args.c, args.d)):
        if any(flag is None for flag in general_flags):
            raise UsageError("general-a needs --a, --c, --d and --n together")
        general = general_flags
        params = None
    
    reports = run_suite(
        args.suite,
        config = config,
        params = params,
        general = general,
        ne = ne,
        ks = args.k_values,
        j_max = args.j_max,
        n_max = args.n_max,
    )
    print(RENDERERS[args.format](reports))
    return EXIT_OK if all(report.passed for report in reports) else EXIT_FAILED


def main(argv = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed usage on stderr.
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    setup_logging(args.verbose)
    try:
        return _run(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"kdivpaths: error: {exc}", file = sys.stderr)
        return EXIT_USAGE
    except IntegralityError as exc:
        logger.error("internal arithmetic failure: %s", exc)
        return EXIT_FAILED
