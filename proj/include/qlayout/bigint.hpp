#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qlayout {

// Label arithmetic (weights, nesting-values, matching-values, layer-groups)
// runs on arbitrary-precision integers: values grow like (delta-1)^height.
using BigInt = mpz_class;

inline BigInt bigint_pow(std::uint64_t base, std::uint64_t exp) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
    return out;
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline bool fits_u64(const BigInt& v) {
    return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

// Caller checks fits_u64 first; LP64 assumed (unsigned long holds 64 bits).
inline std::uint64_t to_u64(const BigInt& v) {
    static_assert(sizeof(unsigned long) == 8);
    return mpz_get_ui(v.get_mpz_t());
}

}  // namespace qlayout
