#pragma once

// Text formats.
//
// relmat v1:  first line n, then n lines of n characters from {0,1}.
//             Whitespace inside lines and blank lines are ignored.
// cayley v1:  a line of comma-separated labels, then k lines of k
//             comma-separated 1-based element indices, optionally followed
//             by a line `identity=<label>`.

#include <filesystem>
#include <string>
#include <string_view>

#include "hallkit/relation.hpp"
#include "hallkit/semigroup.hpp"

namespace hallkit {

Relation parse_relmat(std::string_view text);
std::string emit_relmat(const Relation& r);
Relation parse_relation_file(const std::filesystem::path& path);

// With `require_identity`, a missing `identity=` trailer is an error. A
// trailer naming a non-identity element is always an error.
FiniteSemigroup parse_cayley(std::string_view text, bool require_identity = false);
std::string emit_cayley(const FiniteSemigroup& s);
FiniteSemigroup parse_cayley_file(const std::filesystem::path& path, bool require_identity = false);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace hallkit
