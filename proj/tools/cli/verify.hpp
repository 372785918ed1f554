#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace unitysum::cli {

enum class VerifyLevel { kQuick, kFull };

struct VerifyOptions {
  VerifyLevel level = VerifyLevel::kQuick;
  std::optional<std::filesystem::path> store;
  bool fault_prune = false;
};

// Runs every invariant suite, prints one "PASS name" / "FAIL name: why"
// line each, and returns the number of failures. Store problems throw
// Error(kIo).
int run_verify(const VerifyOptions& opts, std::ostream& out);

}  // namespace unitysum::cli
