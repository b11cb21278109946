#ifndef INEXP_VERSION_HPP
#define INEXP_VERSION_HPP

namespace inexp {

inline constexpr const char* kVersion = "0.1.0";

} // namespace inexp

#endif
