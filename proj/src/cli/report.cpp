#include "unital/cli/report.hpp"

#include <iomanip>
#include <sstream>

#include <openssl/evp.h>

#include "unital/errors.hpp"

namespace unital::cli {

using nlohmann::json;

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

json Report::body() const {
  json checks = json::array();
  for (const auto& c : verification.checks)
    checks.push_back({{"name", c.name}, {"status", c.passed ? "PASS" : "FAIL"}, {"witness", c.witness}});
  json counts = json::object();
  for (const auto& [k, v] : verification.counts) counts[k] = v;
  return {{"command", command},      {"input_digest", input_digest}, {"checks", checks},
          {"counts", counts},        {"data", data},                 {"status", passed() ? "PASS" : "FAIL"}};
}

std::string Report::digest() const { return sha256_hex(body().dump()); }

json Report::to_json() const {
  return {{"body", body()}, {"digest", digest()}, {"timing_ms", timing_ms}, {"exit_code", exit_code()}};
}

namespace {

void text_value(std::ostringstream& out, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (x.is_structured() && !x.empty()) {
        out << pad << k << ":\n";
        text_value(out, x, indent + 2);
      } else {
        out << pad << k << ": " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
      }
    }
  } else if (v.is_array()) {
    // short scalar arrays on one line
    bool flat = true;
    for (const auto& x : v) flat = flat && !x.is_object();
    if (flat) {
      out << pad << v.dump() << "\n";
      return;
    }
    for (const auto& x : v) {
      bool scalars = true;
      for (const auto& [k, y] : x.items()) scalars = scalars && !y.is_structured();
      if (!scalars) {
        out << pad << "-\n";
        text_value(out, x, indent + 2);
        continue;
      }
      out << pad << "-";
      std::string sep = " ";
      for (const auto& [k, y] : x.items()) {
        out << sep << k << ": " << (y.is_string() ? y.get<std::string>() : y.dump());
        sep = ", ";
      }
      out << "\n";
    }
  } else {
    out << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream out;
  out << "command: " << command.value("name", std::string()) << "\n";
  out << "input:   " << input_digest << "\n";
  for (const auto& c : verification.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.witness.empty()) out << "  [" << c.witness << "]";
    out << "\n";
  }
  if (!verification.counts.empty()) {
    out << "counts:\n";
    for (const auto& [k, v] : verification.counts) out << "  " << k << " = " << v << "\n";
  }
  if (!data.empty()) {
    out << "data:\n";
    text_value(out, data, 2);
  }
  out << "status: " << (passed() ? "PASS" : "FAIL") << "\n";
  out << "digest: " << digest() << "\n";
  out << "timing: " << std::fixed << std::setprecision(3) << timing_ms << " ms\n";
  return out.str();
}

json error_json(const std::string& command, int code, const std::string& message) {
  return {{"command", command},
          {"status", code == exit_cap_exceeded ? "CAP_EXCEEDED" : "INPUT_ERROR"},
          {"exit_code", code},
          {"message", message}};
}

std::string error_text(const std::string& command, int code, const std::string& message) {
  return command + ": " + (code == exit_cap_exceeded ? "cap exceeded: " : "input error: ") + message + "\n";
}

}  // namespace unital::cli
