#ifndef INEXP_IDEAL_FILE_HPP
#define INEXP_IDEAL_FILE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inexp/standard_basis.hpp"

namespace inexp {

/// On-disk ideal definition: a single JSON document with fields
/// {"variables": [...], "generators": [...], "k": optional, "seed": optional}.
struct IdealFile {
    std::vector<std::string> variables;
    std::vector<std::string> generator_sources;
    std::optional<std::size_t> k;
    std::optional<std::uint64_t> seed;
    IdealPresentation presentation;
    std::string raw; // exact file bytes, for the input digest
};

/// Parses the JSON text; DomainError / ParseError on malformed input.
IdealFile ideal_file_from_text(const std::string& text);

/// Reads and parses the file at `path`.
IdealFile load_ideal_file(const std::string& path);

} // namespace inexp

#endif
