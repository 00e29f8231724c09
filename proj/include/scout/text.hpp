#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scout {

/// Thrown when a byte sequence is not well-formed UTF-8.
class DecodeError : public std::runtime_error {
public:
    DecodeError(std::size_t byte_offset, const std::string& what);

    /// Offset of the first byte of the offending sequence.
    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

/**
 * Immutable sequence of Unicode scalar values.
 *
 * Every algorithm in the library treats one element of this sequence as one
 * character, so a pattern containing "à" has length 1 regardless of how many
 * bytes its UTF-8 encoding takes.
 */
class CodePointText {
public:
    CodePointText() = default;

    /// Takes ownership of already-decoded code points. Surrogates and values
    /// above U+10FFFF are rejected with std::invalid_argument.
    explicit CodePointText(std::u32string points);

    /// Decodes UTF-8; throws DecodeError on malformed input.
    static CodePointText from_utf8(std::string_view utf8);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }

    /// Unchecked access; use InstrumentedReader for counted reads.
    char32_t operator[](std::size_t i) const noexcept { return points_[i]; }

    std::u32string_view view() const noexcept { return points_; }

    std::string to_utf8() const;

    /// True when every code point is below 256.
    bool is_byte_range() const noexcept;

    friend bool operator==(const CodePointText&, const CodePointText&) = default;

private:
    std::u32string points_;
};

/// Decodes UTF-8 into a CodePointText.
inline CodePointText from_string(std::string_view utf8) {
    return CodePointText::from_utf8(utf8);
}

/// Encodes a single scalar value, appending to `out`.
void append_utf8(std::string& out, char32_t cp);

bool is_scalar_value(char32_t cp) noexcept;

} // namespace scout
