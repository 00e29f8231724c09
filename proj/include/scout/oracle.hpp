#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace scout {

/// Ground truth: uninstrumented double-loop scan. Empty pattern -> 0.
std::optional<std::size_t> oracle_index_of(std::u32string_view target, std::u32string_view pattern) noexcept;

/// True when `pattern` occurs in `target` starting at `at`.
bool matches_at(std::u32string_view target, std::u32string_view pattern, std::size_t at) noexcept;

} // namespace scout
