#pragma once

#include <cstdint>
#include <string_view>

// Window signatures for the rolling searches. Both accumulate into 64 bits
// with wrapping arithmetic; overflow produces a different but equally valid
// signature.
namespace scout::rolling {

using Signature = std::uint64_t;

inline Signature sum_of(std::u32string_view window) noexcept {
    Signature sig = 0;
    for (char32_t c : window) {
        sig += c;
    }
    return sig;
}

inline Signature roll_sum(Signature sig, char32_t leaving, char32_t entering) noexcept {
    return sig - leaving + entering;
}

inline Signature xor_of(std::u32string_view window) noexcept {
    Signature sig = 0;
    for (char32_t c : window) {
        sig ^= c;
    }
    return sig;
}

inline Signature roll_xor(Signature sig, char32_t leaving, char32_t entering) noexcept {
    return sig ^ leaving ^ entering;
}

} // namespace scout::rolling
