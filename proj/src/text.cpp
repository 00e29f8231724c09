#include "scout/text.hpp"

#include <algorithm>

namespace scout {

DecodeError::DecodeError(std::size_t byte_offset, const std::string& what)
    : std::runtime_error("invalid UTF-8 at byte " + std::to_string(byte_offset) + ": " + what),
      byte_offset_(byte_offset) {}

bool is_scalar_value(char32_t cp) noexcept {
    return cp <= 0x10FFFF && (cp < 0xD800 || cp > 0xDFFF);
}

CodePointText::CodePointText(std::u32string points) : points_(std::move(points)) {
    for (char32_t cp : points_) {
        if (!is_scalar_value(cp)) {
            throw std::invalid_argument("not a Unicode scalar value");
        }
    }
}

CodePointText CodePointText::from_utf8(std::string_view utf8) {
    std::u32string out;
    out.reserve(utf8.size());

    const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(utf8[i]); };
    std::size_t i = 0;
    while (i < utf8.size()) {
        const unsigned char lead = byte(i);
        if (lead < 0x80) {
            out.push_back(lead);
            ++i;
            continue;
        }

        std::size_t len = 0;
        char32_t cp = 0;
        char32_t min = 0;
        if ((lead & 0xE0) == 0xC0) {
            len = 2; cp = lead & 0x1F; min = 0x80;
        } else if ((lead & 0xF0) == 0xE0) {
            len = 3; cp = lead & 0x0F; min = 0x800;
        } else if ((lead & 0xF8) == 0xF0) {
            len = 4; cp = lead & 0x07; min = 0x10000;
        } else {
            throw DecodeError(i, "invalid lead byte");
        }
        if (i + len > utf8.size()) {
            throw DecodeError(i, "truncated sequence");
        }
        for (std::size_t k = 1; k < len; ++k) {
            const unsigned char cont = byte(i + k);
            if ((cont & 0xC0) != 0x80) {
                throw DecodeError(i, "invalid continuation byte");
            }
            cp = (cp << 6) | (cont & 0x3F);
        }
        if (cp < min) {
            throw DecodeError(i, "overlong encoding");
        }
        if (!is_scalar_value(cp)) {
            throw DecodeError(i, "surrogate or out-of-range code point");
        }
        out.push_back(cp);
        i += len;
    }

    CodePointText text;
    text.points_ = std::move(out);
    return text;
}

void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string CodePointText::to_utf8() const {
    std::string out;
    out.reserve(points_.size());
    for (char32_t cp : points_) {
        append_utf8(out, cp);
    }
    return out;
}

bool CodePointText::is_byte_range() const noexcept {
    return std::all_of(points_.begin(), points_.end(), [](char32_t cp) { return cp < 256; });
}

} // namespace scout
