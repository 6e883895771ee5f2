#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace libscan::util {

/// Incremental SHA-256 (FIPS 180-4). Used for prompt and config digests.
class Sha256 {
public:
    Sha256();

    void update(const void* data, std::size_t len);
    void update(std::string_view s) { update(s.data(), s.size()); }

    /// Finalizes and returns the digest as a lowercase hex string.
    std::string hex_digest();

private:
    void process_block(const std::uint8_t* block);

    std::uint32_t state_[8];
    std::uint64_t bit_count_ = 0;
    std::uint8_t buffer_[64];
    std::size_t buffer_len_ = 0;
};

/// One-shot convenience wrapper.
std::string sha256_hex(std::string_view data);

}  // namespace libscan::util
