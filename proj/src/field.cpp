#include "tightcx/field.hpp"

#include <algorithm>
#include <cctype>

#include "tightcx/errors.hpp"

namespace tightcx {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, b, m);
        b = mulmod_u64(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

// Deterministic Miller-Rabin; the bases {2, 7, 61} decide primality for
// everything below 2^32.
bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 7ull, 61ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 31))
        throw InvalidInput("field characteristic must be < 2^31");
    if (!is_prime_u32(p))
        throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

std::string FieldSpec::name() const {
    if (char_ == 0) return "Q";
    return "F" + std::to_string(char_);
}

std::optional<FieldSpec> FieldSpec::parse(std::string_view text) {
    std::string t(text);
    std::transform(t.begin(), t.end(), t.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (t == "q" || t == "0") return rationals();
    if (t == "f2") return prime(2);
    if (t == "f3") return prime(3);
    if (t.rfind("fp:", 0) == 0) {
        const std::string digits = t.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        unsigned long p = 0;
        try {
            p = std::stoul(digits);
        } catch (const std::exception&) {
            return std::nullopt;
        }
        if (p >= (1ul << 31) || !is_prime_u32(static_cast<std::uint32_t>(p)))
            return std::nullopt;
        return prime(static_cast<std::uint32_t>(p));
    }
    return std::nullopt;
}

} // namespace tightcx
