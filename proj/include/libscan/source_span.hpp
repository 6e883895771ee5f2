#pragma once

#include <cstddef>

namespace libscan {

/// Half-open byte range [start, end) into the original source text.
struct Span {
    std::size_t start = 0;
    std::size_t end = 0;

    bool contains(const Span& other) const {
        return start <= other.start && other.end <= end;
    }
    bool operator==(const Span&) const = default;
};

}  // namespace libscan
