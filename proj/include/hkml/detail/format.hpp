#ifndef HKML_DETAIL_FORMAT_HPP
#define HKML_DETAIL_FORMAT_HPP

#include <charconv>
#include <string>

namespace hkml::detail {

// Shortest decimal form that round-trips to the same double.
inline std::string fmt_double(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace hkml::detail

#endif
