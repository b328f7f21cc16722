// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace vamos {

// Lowercase hex SHA-256 of a file's bytes. LoadError if unreadable.
std::string sha256_file(const std::filesystem::path& path);

struct ChecksumEntry {
  std::string file;  // relative to the data directory
  std::string expected;
  std::string actual;  // empty if the file is missing
  bool ok() const { return expected == actual; }
};

// Checks every entry of <data_dir>/SHA256SUMS (sha256sum format).
// LoadError if the manifest is missing, ParseError if a line is malformed.
std::vector<ChecksumEntry> verify_checksums(const std::filesystem::path& data_dir);

}  // namespace vamos
