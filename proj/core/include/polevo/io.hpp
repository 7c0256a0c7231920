#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace polevo {

/// Shortest decimal form that round-trips the exact double.
std::string format_double(double v);

/// Splits on commas; no quoting (none of the formats need it).
std::vector<std::string> split_csv_line(const std::string& line);

/// FNV-1a 64-bit, hex encoded; stable across platforms and runs.
std::string fnv1a_hex(std::string_view data);

/// Writes via a temp file in the same directory plus rename, so readers
/// never observe a truncated file. Throws IoError.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

/// Whole-file read. Throws IoError naming the path.
std::string read_file(const std::filesystem::path& path);

/// `# tool-version: ..., config-hash: ...` comment line for tabular outputs.
std::string file_header_comment(std::string_view config_hash);

}  // namespace polevo
