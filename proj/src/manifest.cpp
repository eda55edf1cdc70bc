#include "covnum/manifest.hpp"

#include <array>
#include <memory>

#include <openssl/evp.h>

#include "covnum/errors.hpp"

#ifndef COVNUM_VERSION
#define COVNUM_VERSION "unknown"
#endif

namespace covnum {

std::string sha256_hex(const std::string& bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  ensure(ctx != nullptr, "EVP_MD_CTX_new failed");
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  ensure(EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) == 1 &&
             EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) == 1 &&
             EVP_DigestFinal_ex(ctx.get(), digest.data(), &len) == 1,
         "sha256 failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 15]);
  }
  return out;
}

std::string tool_version() { return COVNUM_VERSION; }

Json to_json(const RunManifest& m) {
  Json j;
  j["subcommand"] = m.subcommand;
  j["parameters"] = m.parameters;
  j["seed"] = m.seed;
  j["tool_version"] = m.tool_version;
  Json inputs = Json::array();
  for (const auto& [name, digest] : m.input_digests) {
    inputs.push_back({{"name", name}, {"sha256", digest}});
  }
  j["input_digests"] = inputs;
  j["output_digest"] = m.output_digest;
  return j;
}

RunManifest run_manifest_from_json(const Json& j) {
  require(j.is_object(), "manifest must be an object");
  RunManifest m;
  try {
    m.subcommand = j.at("subcommand").get<std::string>();
    m.parameters = j.at("parameters");
    m.seed = j.at("seed").get<std::uint64_t>();
    m.tool_version = j.at("tool_version").get<std::string>();
    for (const Json& in : j.at("input_digests")) {
      m.input_digests.emplace_back(in.at("name").get<std::string>(), in.at("sha256").get<std::string>());
    }
    m.output_digest = j.at("output_digest").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

}  // namespace covnum
