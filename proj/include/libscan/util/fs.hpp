#pragma once

#include <filesystem>
#include <string>

namespace libscan::util {

/// Reads a whole file as bytes. Throws std::runtime_error on I/O failure.
std::string read_file(const std::filesystem::path& path);

/// Writes `content` via a temporary file in the same directory, then renames
/// over the target, so readers never observe a half-written file.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// Current UTC time as an ISO-8601 string (second resolution).
std::string iso8601_now();

}  // namespace libscan::util
