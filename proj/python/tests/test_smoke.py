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

import pytest

import vamos_hpp as vh


def test_vamos_matroids():
  v8, v10 = vh.vamos_matroid(4), vh.vamos_matroid(5)
  assert (len(v8), len(v10)) == (65, 203)
  assert v10.rank == 4 and v10.n == 10
  assert vh.is_matroid(v10) and vh.check_three_partition(v10)
  assert [1, 2, 3, 4] not in v8.bases
  with pytest.raises(vh.DomainError):
    vh.vamos_matroid(3)


def test_minors_and_isomorphism():
  v10 = vh.vamos_matroid(5)
  assert vh.has_v8_minor(v10) == ([9, 10], [])
  assert vh.minor(v10, deletions=[9, 10]) == vh.vamos_matroid(4)
  assert vh.are_isomorphic(vh.minor(v10, [5]), vh.minor(v10, [7])) is not None
  assert vh.are_isomorphic(vh.vamos_matroid(4), vh.uniform_matroid(4, 8)) is None
  assert vh.dual(vh.dual(v10)) == v10


def test_json_round_trip():
  v8 = vh.vamos_matroid(4)
  assert vh.matroid_from_json(v8.to_json()) == v8
  with pytest.raises(ValueError):
    vh.Matroid(3, 2, [[1, 2, 3]])


def test_polynomials():
  assert vh.rayleigh_difference(vh.uniform_matroid(2, 3), 1, 2) == "+1 x3^2\n"
  f8 = vh.basis_polynomial(vh.vamos_matroid(4))
  assert f8.count("\n") == 65
  with pytest.raises(vh.DomainError):
    vh.rayleigh_difference(vh.uniform_matroid(2, 3), 1, 1)


def test_certificates_and_tree():
  for k in range(1, 6):
    r = vh.verify_certificate(vh.data_dir() / "certificates" / f"cert{k}.json")
    assert r["identity"] and r["psd"], r
  report = vh.certify_v10()
  assert report["verdict"] == "pass"
  assert report["certificates_verified"] == 5
  assert all(c["holds"] for c in vh.isomorphism_claims())


def test_missing_certificates(tmp_path):
  with pytest.raises(vh.LoadError):
    vh.certify_tree(vh.data_dir() / "proofs" / "v10.json", tmp_path)


def test_sampling():
  assert vh.sample_stability(vh.vamos_matroid(5), trials=200)["verdict"] == "pass"
  assert vh.rayleigh_spot_check(vh.vamos_matroid(4), 7, 8, trials=200)["verdict"] == "pass"
  fano = vh.resolve_matroid(str(vh.data_dir() / "matroids" / "fano.json"))
  report = vh.sample_stability(fano, trials=200, seed=1)
  assert report["verdict"] == "fail" and report["failures"]
  assert vh.sample_stability(fano, trials=200, seed=1) == report
