#ifndef TORSOR_FIELD_HPP
#define TORSOR_FIELD_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "torsor/bigint.hpp"
#include "torsor/errors.hpp"

namespace torsor {

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// Description of the working coefficient field F_{p^d}.
///
/// Instances are interned: requesting the same (p, modulus) twice returns the
/// same object, so element-level compatibility checks are pointer comparisons.
/// All created specs are kept alive for the lifetime of the process.
class FieldSpec {
   public:
    static constexpr int kMaxDegree = 12;
    static constexpr std::uint64_t kMaxOrder = 1u << 20;  // enumeration stays feasible

    /// The prime field F_p.  p must be prime (verified).
    static FieldSpecPtr prime(long p);

    /// F_{p^d} presented as F_p[t]/(modulus).  `modulus` is given by ascending
    /// coefficients, degree d >= 2, and must be irreducible over F_p (verified
    /// by trial division against all monic factors of degree <= d/2).
    static FieldSpecPtr extension(long p, std::vector<long> modulus);

    long p() const noexcept { return p_; }
    int degree() const noexcept { return d_; }
    std::uint64_t order() const noexcept { return q_; }
    /// Ascending coefficients of the extension modulus (size d+1); empty when d == 1.
    const std::vector<long>& modulus() const noexcept { return mod_; }

   private:
    FieldSpec(long p, int d, std::vector<long> mod, std::uint64_t q)
        : p_(p), d_(d), q_(q), mod_(std::move(mod)) {}
    long p_;
    int d_;
    std::uint64_t q_;
    std::vector<long> mod_;
    friend class FieldRegistry;  // interning registry (field.cpp)
};

/// Element of F_{p^d}: a polynomial residue of degree < d over F_p.
/// Immutable value type; arithmetic between elements of different specs throws.
class Fq {
   public:
    Fq() : spec_(nullptr) { c_.fill(0); }
    /// The residue of the integer n.
    Fq(const FieldSpec* spec, long n);
    static Fq from_int(const FieldSpecPtr& spec, long n) { return Fq(spec.get(), n); }
    static Fq from_int(const FieldSpec* spec, long n) { return Fq(spec, n); }
    /// Coefficient vector (ascending, length <= d).
    static Fq from_coeffs(const FieldSpec* spec, const std::vector<long>& coeffs);
    /// The class of t in F_p[t]/(modulus); requires d >= 2.
    static Fq generator(const FieldSpec* spec);

    const FieldSpec* spec() const noexcept { return spec_; }
    bool valid() const noexcept { return spec_ != nullptr; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    Fq operator+(const Fq& o) const;
    Fq operator-(const Fq& o) const;
    Fq operator*(const Fq& o) const;
    Fq operator/(const Fq& o) const;
    Fq operator-() const;
    Fq& operator+=(const Fq& o) { return *this = *this + o; }
    Fq& operator-=(const Fq& o) { return *this = *this - o; }
    Fq& operator*=(const Fq& o) { return *this = *this * o; }
    bool operator==(const Fq& o) const;
    bool operator!=(const Fq& o) const { return !(*this == o); }

    Fq inverse() const;  ///< throws DomainError on zero
    Fq pow(const BigInt& e) const;
    Fq pow(long e) const;
    /// x -> x^p, the arithmetic Frobenius.
    Fq frobenius() const;
    /// The unique p-th root (k' is perfect).
    Fq pth_root() const;
    /// r-fold p-th root, i.e. the unique p^r-th root.
    Fq pth_root(int r) const;

    /// Index in 0..q-1: the base-p digit encoding of the coefficient vector.
    std::uint64_t index() const;
    static Fq from_index(const FieldSpec* spec, std::uint64_t idx);

    /// Canonical text form: decimal for d == 1, polynomial in t otherwise
    /// (descending powers, '*' between coefficient and t-power), e.g. "2*t^2+t+1".
    std::string str() const;

    long coeff(int i) const { return c_[i]; }

   private:
    const FieldSpec* spec_;
    std::array<std::int32_t, FieldSpec::kMaxDegree> c_;
    void require_same(const Fq& o) const;
};

inline bool is_zero(const Fq& x) { return x.is_zero(); }
inline Fq ring_zero(const Fq& sample) { return Fq(sample.spec(), 0); }
inline Fq ring_one(const Fq& sample) { return Fq(sample.spec(), 1); }
Fq ring_embed_int(const Fq& sample, const BigInt& n);
inline Fq ring_inv(const Fq& x) { return x.inverse(); }

/// All q elements in index order; q is capped by FieldSpec::kMaxOrder.
std::vector<Fq> all_elements(const FieldSpec* spec);

/// A field embedding k' -> k'' determined by the image of the generator.
class FieldEmbedding {
   public:
    FieldEmbedding(const FieldSpec* from, const FieldSpec* to, const Fq& t_image)
        : from_(from), to_(to), t_image_(t_image) {}
    const FieldSpec* from() const noexcept { return from_; }
    const FieldSpec* to() const noexcept { return to_; }
    Fq map(const Fq& a) const;

   private:
    const FieldSpec* from_;
    const FieldSpec* to_;
    Fq t_image_;
};

/// An extension of `base` with at least `min_order` elements together with an
/// embedding; the identity when base is already large enough.  The extension
/// modulus is found by deterministic search and the result is cached, so the
/// same request always produces the same field.
const FieldEmbedding& extend_field(const FieldSpec* base, std::uint64_t min_order);

}  // namespace torsor

#endif
