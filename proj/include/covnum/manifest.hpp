#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "covnum/io.hpp"

namespace covnum {

std::string sha256_hex(const std::string& bytes);
std::string tool_version();

// Everything that determines an artifact. The thread count is deliberately
// absent: outputs do not depend on it.
struct RunManifest {
  std::string subcommand;
  Json parameters = Json::object();
  std::uint64_t seed = 0;
  std::string tool_version;
  std::vector<std::pair<std::string, std::string>> input_digests;  // (name, sha256)
  std::string output_digest;
};

Json to_json(const RunManifest& m);
RunManifest run_manifest_from_json(const Json& j);

}  // namespace covnum
