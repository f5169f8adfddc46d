#ifndef TRH_VERSION_HPP
#define TRH_VERSION_HPP

namespace trh {

inline constexpr const char* version = "0.1.0";

} // namespace trh

#endif
