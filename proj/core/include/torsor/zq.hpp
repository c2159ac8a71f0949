#ifndef TORSOR_ZQ_HPP
#define TORSOR_ZQ_HPP

#include <array>
#include <cstdint>
#include <memory>

#include "torsor/field.hpp"

namespace torsor {

class ZqRing;

/// The truncated Witt ring W_N(F_{p^d}) in its unramified presentation
/// (Z/p^N)[t]/(Phi), Phi a monic lift of the field modulus.  Elements carry
/// Teichmueller lifts and exact division by powers of p (with a divisibility
/// check), which is all the ghost machinery needs.
class ZqRing {
   public:
    static const ZqRing* get(const FieldSpec* residue_field, int n_levels);

    const FieldSpec* residue_field() const noexcept { return fq_; }
    long p() const noexcept { return fq_->p(); }
    int degree() const noexcept { return fq_->degree(); }
    int levels() const noexcept { return n_; }
    std::int64_t pn() const noexcept { return pn_; }
    const std::array<std::int64_t, FieldSpec::kMaxDegree + 1>& phi() const noexcept { return phi_; }

   private:
    ZqRing(const FieldSpec* fq, int n);
    const FieldSpec* fq_;
    int n_;
    std::int64_t pn_;
    std::array<std::int64_t, FieldSpec::kMaxDegree + 1> phi_{};  // ascending, monic, degree d
    friend class ZqRegistry;
};

class Zq {
   public:
    Zq() : ring_(nullptr) { c_.fill(0); }
    Zq(const ZqRing* ring, std::int64_t n);
    static Zq from_int(const ZqRing* ring, std::int64_t n) { return Zq(ring, n); }
    /// Element with the given coordinate vector (reduced mod p^N).
    static Zq from_coords(const ZqRing* ring, const std::array<std::int64_t, FieldSpec::kMaxDegree>& c);

    const ZqRing* ring() const noexcept { return ring_; }
    bool is_zero() const noexcept;

    Zq operator+(const Zq& o) const;
    Zq operator-(const Zq& o) const;
    Zq operator*(const Zq& o) const;
    Zq operator-() const;
    bool operator==(const Zq& o) const;
    bool operator!=(const Zq& o) const { return !(*this == o); }

    /// Multiplicative inverse of a unit (nonzero residue mod p).
    Zq inverse() const;
    /// True iff every coordinate is divisible by p^j.
    bool divisible_by_p(int j) const;
    /// Exact division by p^j; the result is meaningful modulo p^(N-j).
    /// Throws DivisibilityError if not divisible.
    Zq divide_by_p(int j) const;
    /// Reduction modulo p onto the residue field.
    Fq mod_p() const;
    /// Agreement modulo p^j.
    bool congruent(const Zq& o, int j) const;

    std::string str() const;

   private:
    const ZqRing* ring_;
    std::array<std::int64_t, FieldSpec::kMaxDegree> c_;
    void require_same(const Zq& o) const;
};

/// Teichmueller lift: the unique root of x^q = x above c.
Zq teichmuller(const ZqRing* ring, const Fq& c);

inline bool is_zero(const Zq& x) { return x.is_zero(); }
inline Zq ring_zero(const Zq& sample) { return Zq(sample.ring(), 0); }
inline Zq ring_one(const Zq& sample) { return Zq(sample.ring(), 1); }
Zq ring_embed_int(const Zq& sample, const BigInt& n);
inline Zq ring_inv(const Zq& x) { return x.inverse(); }

}  // namespace torsor

#endif
