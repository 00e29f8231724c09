#include "scout/oracle.hpp"

namespace scout {

bool matches_at(std::u32string_view target, std::u32string_view pattern, std::size_t at) noexcept {
    if (at > target.size() || target.size() - at < pattern.size()) {
        return false;
    }
    for (std::size_t j = 0; j < pattern.size(); ++j) {
        if (target[at + j] != pattern[j]) {
            return false;
        }
    }
    return true;
}

std::optional<std::size_t> oracle_index_of(std::u32string_view target, std::u32string_view pattern) noexcept {
    if (pattern.size() > target.size()) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i + pattern.size() <= target.size(); ++i) {
        if (matches_at(target, pattern, i)) {
            return i;
        }
    }
    return std::nullopt;
}

} // namespace scout
