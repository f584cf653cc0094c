#pragma once
// Small I/O helpers shared by the report writers and the CLI.

#include <filesystem>
#include <stdexcept>
#include <string>

namespace qcorr {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest round-trip decimal form (std::to_chars); "nan" for NaN.
std::string format_double(double value);

// Writes bytes as-is (LF line endings are the callers' responsibility).
void write_text_file(const std::filesystem::path& path, const std::string& content);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace qcorr
