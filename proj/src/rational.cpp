#include "tightcx/rational.hpp"

#include <charconv>
#include <ostream>

namespace tightcx {

Rational::Rational(long num, long den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw InvalidInput("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.isZero()) throw InvalidInput("rational division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::str() const {
    if (isInteger()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::optional<Rational> Rational::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    const auto slash = text.find('/');
    const std::string numPart(text.substr(0, slash));
    std::string denPart = slash == std::string_view::npos
                              ? std::string("1")
                              : std::string(text.substr(slash + 1));
    if (numPart.empty() || denPart.empty()) return std::nullopt;
    mpz_class num, den;
    if (mpz_set_str(num.get_mpz_t(), numPart.c_str(), 10) != 0) return std::nullopt;
    if (mpz_set_str(den.get_mpz_t(), denPart.c_str(), 10) != 0) return std::nullopt;
    if (den == 0) return std::nullopt;
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational make_rational(long num, long den) { return Rational(num, den); }

mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

} // namespace tightcx
