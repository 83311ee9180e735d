#pragma once

#include <string>

#include <json.hpp>

#include "unital/verification.hpp"

namespace unital::cli {

enum ExitCode : int { exit_pass = 0, exit_check_failed = 1, exit_input_error = 2, exit_cap_exceeded = 3 };

/// Machine-readable result of one command. Everything except `timing_ms`
/// goes into the checked body, so identical inputs give identical digests.
struct Report {
  nlohmann::json command;  // echo: name and options
  std::string input_digest;
  VerificationReport verification;
  nlohmann::json data = nlohmann::json::object();
  double timing_ms = 0;

  bool passed() const { return verification.passed(); }
  int exit_code() const { return passed() ? exit_pass : exit_check_failed; }

  nlohmann::json body() const;
  /// SHA-256 of the compact dump of body(); keys are sorted by the json type.
  std::string digest() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

std::string sha256_hex(const std::string& bytes);

/// Report for a command that stopped on an error.
nlohmann::json error_json(const std::string& command, int code, const std::string& message);
std::string error_text(const std::string& command, int code, const std::string& message);

}  // namespace unital::cli
