#pragma once

#include <cstdint>
#include <string>

namespace fairpursuit {

// Write via a temp file in the same directory, then rename into place.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

// FNV-1a over the file bytes; used for determinism checks and manifests.
std::uint64_t file_checksum(const std::string& path);
std::uint64_t string_checksum(const std::string& text);

// Shortest decimal form that round-trips the exact double ("1.2", "0.05").
std::string format_double(double v);

}  // namespace fairpursuit
