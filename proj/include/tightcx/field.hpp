#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace tightcx {

/// Coefficient field: the rationals (characteristic 0) or a prime field
/// F_p with p < 2^31.  Primality is checked at construction.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(0); }
    /// Throws InvalidInput unless p is prime and fits in 31 bits.
    static FieldSpec prime(std::uint32_t p);

    std::uint32_t characteristic() const { return char_; }
    bool isRationals() const { return char_ == 0; }

    /// "Q", "F2", "F3", "F5", ...
    std::string name() const;
    /// Accepts "q", "f2", "f3", "fp:<p>" (case-insensitive).
    static std::optional<FieldSpec> parse(std::string_view text);

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.char_ == b.char_;
    }
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) {
        return !(a == b);
    }

private:
    explicit FieldSpec(std::uint32_t c) : char_(c) {}
    std::uint32_t char_;
};

bool is_prime_u32(std::uint32_t n);

} // namespace tightcx
