#pragma once

#include <cstdint>
#include <string>

namespace transversal {

inline std::uint64_t fnv1a64(const std::string& data)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& data);

}  // namespace transversal
