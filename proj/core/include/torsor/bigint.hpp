#ifndef TORSOR_BIGINT_HPP
#define TORSOR_BIGINT_HPP

#include <gmpxx.h>

#include <string>

#include "torsor/errors.hpp"

namespace torsor {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline bool is_zero(const BigInt& x) { return sgn(x) == 0; }
inline bool is_zero(const BigRat& x) { return sgn(x) == 0; }

inline BigInt big_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt big_pow(long base, unsigned long e) { return big_pow(BigInt(base), e); }

/// Exact division; throws DivisibilityError if the quotient is not integral.
inline BigInt divexact(const BigInt& a, const BigInt& b, const char* what = "integer division") {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw DivisibilityError(std::string(what) + ": " + a.get_str() + " not divisible by " + b.get_str());
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// ring-trait hooks used by the generic Witt machinery
inline BigInt ring_zero(const BigInt&) { return BigInt(0); }
inline BigInt ring_one(const BigInt&) { return BigInt(1); }
inline BigInt ring_embed_int(const BigInt&, const BigInt& n) { return n; }

namespace detail {
/// ADL dispatch for element zero tests inside class templates (where an
/// unqualified is_zero would be shadowed by the member of the same name).
template <class R>
bool elt_is_zero(const R& x) {
    return is_zero(x);
}
}  // namespace detail

}  // namespace torsor

#endif
