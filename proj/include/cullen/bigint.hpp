#ifndef CULLEN_BIGINT_HPP
#define CULLEN_BIGINT_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace cullen {

// Exact arbitrary-precision integers and rationals. All sequence values,
// Cullen numbers and polynomial evaluations in this library are exact; no
// rounding happens outside RealEnclosure.
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt pow2(unsigned long e) { return pow_int(BigInt(2), e); }

// Number of base-10 digits of |v|. Rejects v = 0.
// mpz_sizeinbase may overestimate by one; settle by comparing with 10^(d-1).
inline unsigned long decimal_digit_count(const BigInt& v) {
    if (v == 0) throw std::invalid_argument("decimal_digit_count: value must be nonzero");
    BigInt a = abs(v);
    unsigned long d = mpz_sizeinbase(a.get_mpz_t(), 10);
    if (d == 1) return 1;
    BigInt p = pow_int(BigInt(10), d - 1);
    return a >= p ? d : d - 1;
}

// If m = 2^s returns s, otherwise empty. m must be >= 1.
inline std::optional<unsigned long> power_of_two_exponent(const BigInt& m) {
    if (m < 1) throw std::invalid_argument("power_of_two_exponent: m must be >= 1");
    if (mpz_popcount(m.get_mpz_t()) != 1) return std::nullopt;
    return mpz_scan1(m.get_mpz_t(), 0);
}

inline bool is_power_of_two(const BigInt& m) {
    return m >= 1 && mpz_popcount(m.get_mpz_t()) == 1;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

inline BigInt bigint_from_decimal(const std::string& s) {
    try {
        return BigInt(s);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a decimal integer: '" + s + "'");
    }
}

}  // namespace cullen

#endif
