#ifndef URD_SERIALIZE_HPP
#define URD_SERIALIZE_HPP

#include "urd/design.hpp"

#include <filesystem>
#include <string>

namespace urd {

inline constexpr int kSchemaVersion = 1;

// Canonical design-file text. The design is normalized first, so equal
// designs always produce identical bytes.
std::string encode(const Design& d);

// Parses a design file and returns its normalized form. Throws DecodeError
// naming the offending location (e.g. "classes[3].blocks[1]").
Design decode(const std::string& text);

Design read_design(const std::filesystem::path& file);
void write_design(const std::filesystem::path& file, const Design& d);

} // namespace urd

#endif // URD_SERIALIZE_HPP
