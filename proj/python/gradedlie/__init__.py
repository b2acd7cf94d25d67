# Copyright 2026 The gradedlie Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# =========================================================================
"""Graded Lie algebra toolkit.

Index combinatorics on Z/n, free Lie algebra quotients with graded relator
families, and the check harness. Structured inputs and outputs are plain dicts
in the same JSON shapes the ``gradedlie`` command-line tool reads and writes.
"""

import json as _json
import os as _os

from ._core import (
    BudgetExceeded,
    InputError,
    __version__,
    dependency_set,
    dtilde_set,
    is_minus_one_dependent,
    run_cli,
    witt_dimension,
)
from . import _core

__all__ = [
    "BudgetExceeded",
    "InputError",
    "__version__",
    "build",
    "check",
    "constants",
    "decompose",
    "dependency_set",
    "dtilde_set",
    "fuzz",
    "is_minus_one_dependent",
    "run_cli",
    "witt_dimension",
]


def check(config, timings=False):
    """Run one check. ``config`` is a dict such as
    ``{"lemma": "lemma3", "modulus": 7, "indices": [1, 2, 3], "cutoff": 6}``."""
    return _json.loads(_core._check(_json.dumps(config), timings))


def fuzz(lemma, runs=100, seed=1, max_modulus=15, budget_seconds=0.0):
    return _json.loads(_core._fuzz(lemma, runs, seed, max_modulus, budget_seconds))


def constants(f1=3, exact_digits=False):
    return _json.loads(_core._constants(f1, exact_digits))


def _tool(args):
    code, out, err = run_cli(list(args) + ["--output", "json"])
    if code == 2:
        raise InputError(err.strip())
    if code == 3:
        raise BudgetExceeded(err.strip())
    if code == 4:
        raise RuntimeError(err.strip())
    return code, _json.loads(out)


def build(path, derived=False, cutoff=None):
    """Component dimensions of the presentation stored at ``path``."""
    args = ["build", _os.fspath(path)]
    if derived:
        args.append("--derived")
    if cutoff is not None:
        args += ["--cutoff", str(cutoff)]
    return _tool(args)[1]


def decompose(path):
    """Eigenspace decomposition and checks for the algebra file at ``path``.
    Returns ``(passed, report)``."""
    code, report = _tool(["decompose", _os.fspath(path)])
    return code == 0, report
