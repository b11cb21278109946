#ifndef INEXP_SHA256_HPP
#define INEXP_SHA256_HPP

#include <string>
#include <string_view>

namespace inexp {

/// Hex digest of the input bytes (FIPS 180-4). Used to fingerprint report
/// inputs; not a security boundary.
std::string sha256_hex(std::string_view data);

} // namespace inexp

#endif
