#include "libscan/label.hpp"

#include <cctype>
#include <stdexcept>

namespace libscan {

int encode_label(PatternLabel label) {
    return static_cast<int>(label);
}

PatternLabel decode_label(int code) {
    if (code < 0 || code >= kLabelCount)
        throw std::out_of_range("label code out of range: " + std::to_string(code));
    return static_cast<PatternLabel>(code);
}

std::string to_string(PatternLabel label) {
    if (label == PatternLabel::None)
        return "NONE";
    return "P" + std::to_string(static_cast<int>(label) + 1);
}

std::optional<PatternLabel> parse_label(std::string_view text) {
    std::string upper;
    upper.reserve(text.size());
    for (char c : text)
        upper.push_back(char(std::toupper(static_cast<unsigned char>(c))));
    if (upper == "NONE")
        return PatternLabel::None;
    if (upper.size() == 2 && upper[0] == 'P' && upper[1] >= '1' && upper[1] <= '8')
        return static_cast<PatternLabel>(upper[1] - '1');
    return std::nullopt;
}

}  // namespace libscan
