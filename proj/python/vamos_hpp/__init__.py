# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact verification of the half-plane property for extended Vamos matroids."""

import json
import os
import pathlib

from vamos_hpp._core import (
    DomainError,
    LoadError,
    Matroid,
    ParseError,
    StructuralError,
    are_isomorphic,
    basis_polynomial,
    check_three_partition,
    contract_element,
    delete_element,
    dual,
    has_v8_minor,
    is_matroid,
    matroid_from_json,
    minor,
    rayleigh_difference,
    resolve_matroid,
    uniform_matroid,
    vamos_matroid,
)
from vamos_hpp import _core

__all__ = [
    "DomainError",
    "LoadError",
    "Matroid",
    "ParseError",
    "StructuralError",
    "are_isomorphic",
    "basis_polynomial",
    "certify_tree",
    "certify_v10",
    "check_three_partition",
    "contract_element",
    "data_dir",
    "delete_element",
    "dual",
    "has_v8_minor",
    "is_matroid",
    "isomorphism_claims",
    "matroid_from_json",
    "minor",
    "rayleigh_difference",
    "rayleigh_spot_check",
    "resolve_matroid",
    "sample_stability",
    "uniform_matroid",
    "vamos_matroid",
    "verify_certificate",
]


def data_dir():
  """Bundled data: $VAMOS_DATA_DIR, the installed copy, or the source tree."""
  env = os.environ.get("VAMOS_DATA_DIR")
  if env:
    return pathlib.Path(env)
  packaged = pathlib.Path(__file__).parent / "data"
  if packaged.is_dir():
    return packaged
  return pathlib.Path(_core.DEFAULT_DATA_DIR)


def verify_certificate(path):
  return json.loads(_core.verify_certificate_json(os.fspath(path)))


def certify_v10(jobs=1):
  return json.loads(_core.certify_v10_json(os.fspath(data_dir()), jobs))


def certify_tree(tree, cert_dir, matroid_dir=None, jobs=1):
  matroid_dir = matroid_dir or data_dir() / "matroids"
  return json.loads(
      _core.certify_tree_json(
          os.fspath(tree), os.fspath(cert_dir), os.fspath(matroid_dir), jobs))


def isomorphism_claims():
  return json.loads(_core.isomorphism_claims_json(os.fspath(data_dir())))


def sample_stability(matroid, trials=1000, seed=42, jobs=1):
  return json.loads(_core.sample_stability_json(matroid, trials, seed, jobs))


def rayleigh_spot_check(matroid, i, j, trials=1000, seed=42):
  return json.loads(_core.rayleigh_spot_check_json(matroid, i, j, trials, seed))
