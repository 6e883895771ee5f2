#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace libscan {

/// The nine-way misuse classification. P1..P8 are the positive classes,
/// None the negative class.
enum class PatternLabel : int {
    P1 = 0,
    P2 = 1,
    P3 = 2,
    P4 = 3,
    P5 = 4,
    P6 = 5,
    P7 = 6,
    P8 = 7,
    None = 8,
};

inline constexpr int kLabelCount = 9;
inline constexpr int kPositiveLabelCount = 8;

inline constexpr std::array<PatternLabel, kLabelCount> all_labels() {
    return {PatternLabel::P1, PatternLabel::P2, PatternLabel::P3,
            PatternLabel::P4, PatternLabel::P5, PatternLabel::P6,
            PatternLabel::P7, PatternLabel::P8, PatternLabel::None};
}

/// Fixed integer encoding: P1 -> 0, P2 -> 1, ..., P8 -> 7, NONE -> 8.
int encode_label(PatternLabel label);

/// Inverse of encode_label. Throws std::out_of_range outside [0, 8].
PatternLabel decode_label(int code);

/// "P1".."P8" or "NONE".
std::string to_string(PatternLabel label);

/// Case-insensitive parse of "p1".."p8" / "none". Empty optional otherwise.
std::optional<PatternLabel> parse_label(std::string_view text);

}  // namespace libscan
