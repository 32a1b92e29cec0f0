#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cohn {

// FNV-1a over the raw bytes; enough to fingerprint inputs in reports.
inline std::string content_digest(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int k = 15; k >= 0; --k) {
    out[k] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

// Deterministic run summary: fixed field order, no timestamps (wall time goes
// to stderr so stdout stays byte-stable across runs).
struct RunReport {
  std::string command;
  std::string inputs_digest = "-";
  std::vector<std::string> details;
  bool pass = true;

  void check(const std::string& name, bool ok) {
    details.push_back(std::string(ok ? "pass" : "FAIL") + " " + name);
    if (!ok) pass = false;
  }
  void note(const std::string& line) { details.push_back(line); }

  std::string text() const {
    std::string out = "command: " + command + "\n";
    out += "inputs: " + inputs_digest + "\n";
    for (const auto& d : details) out += d + "\n";
    out += std::string("outcome: ") + (pass ? "pass" : "fail") + "\n";
    return out;
  }
};

}  // namespace cohn
