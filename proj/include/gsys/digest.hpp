#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace gsys {

/// FNV-1a, 64-bit. Stable across platforms and runs, unlike std::hash.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

inline std::string to_hex(std::uint64_t value) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (std::size_t i = 16; i-- > 0;) {
        out[i] = digits[value & 0xF];
        value >>= 4;
    }
    return out;
}

inline std::string fnv1a64_hex(std::string_view bytes) { return to_hex(fnv1a64(bytes)); }

}  // namespace gsys
