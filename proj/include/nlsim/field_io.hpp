#pragma once

#include <filesystem>
#include <iosfwd>

#include "nlsim/field.hpp"

namespace nlsim {

/// Text serialization:
///   line 1: "<dim> <n> <L> <rep>"   (rep is "physical" or "frequency",
///           L printed with 17 significant digits)
///   then n^d lines "<re> <im>" in row-major sample order, %.17g each.
/// Reading back reproduces the samples bit for bit.
void write_field(std::ostream& os, const Field& f);
Field read_field(std::istream& is);

void save_field(const std::filesystem::path& path, const Field& f);
Field load_field(const std::filesystem::path& path);

}  // namespace nlsim
