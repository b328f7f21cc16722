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

#include "vamos/checksum.hpp"

#include <openssl/evp.h>

#include <array>
#include <memory>
#include <sstream>

#include "vamos/error.hpp"
#include "vamos/io.hpp"

namespace vamos {

std::string sha256_file(const std::filesystem::path& path) {
  const std::string bytes = read_text_file(path);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest.data(), &length) != 1) {
    throw LoadError("SHA-256 failed for " + path.string());
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < length; ++k) {
    out += kHex[digest[k] >> 4];
    out += kHex[digest[k] & 0xf];
  }
  return out;
}

std::vector<ChecksumEntry> verify_checksums(const std::filesystem::path& data_dir) {
  std::istringstream manifest(read_text_file(data_dir / "SHA256SUMS"));
  std::vector<ChecksumEntry> out;
  std::string line;
  int line_no = 0;
  while (std::getline(manifest, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.size() < 67 || line[64] != ' ') {
      throw ParseError("SHA256SUMS line " + std::to_string(line_no) + " is malformed");
    }
    ChecksumEntry e;
    e.expected = line.substr(0, 64);
    e.file = line.substr(line[65] == '*' || line[65] == ' ' ? 66 : 65);
    const auto path = data_dir / e.file;
    if (std::filesystem::exists(path)) e.actual = sha256_file(path);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace vamos
