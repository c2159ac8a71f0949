#ifndef TORSOR_POLY_HPP
#define TORSOR_POLY_HPP

#include <utility>
#include <vector>

#include "torsor/field.hpp"

namespace torsor {

/// Dense univariate polynomial over a commutative ring R, ascending
/// coefficients, normalized so the zero polynomial is the empty vector.
template <class R>
class Poly {
   public:
    Poly() = default;
    explicit Poly(const R& c0) {
        if (!detail::elt_is_zero(c0)) c_.push_back(c0);
    }
    static Poly from_coeffs(std::vector<R> c) {
        Poly r;
        r.c_ = std::move(c);
        r.trim();
        return r;
    }

    bool is_zero() const noexcept { return c_.empty(); }
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<R>& coeffs() const noexcept { return c_; }
    const R& lead() const { return c_.back(); }
    /// Number of leading zero roots, i.e. ord_{x=0}; zero polynomial yields -1.
    long trailing_order() const {
        if (c_.empty()) return -1;
        long i = 0;
        while (detail::elt_is_zero(c_[static_cast<std::size_t>(i)])) ++i;
        return i;
    }

    Poly operator+(const Poly& o) const {
        std::vector<R> r = c_.size() >= o.c_.size() ? c_ : o.c_;
        const std::vector<R>& s = c_.size() >= o.c_.size() ? o.c_ : c_;
        for (std::size_t i = 0; i < s.size(); ++i) r[i] = r[i] + s[i];
        return from_coeffs(std::move(r));
    }
    Poly operator-() const {
        std::vector<R> r = c_;
        for (auto& x : r) x = -x;
        return from_coeffs(std::move(r));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<R> r(c_.size() + o.c_.size() - 1, ring_zero(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (detail::elt_is_zero(c_[i])) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        }
        return from_coeffs(std::move(r));
    }
    Poly operator*(const R& s) const {
        std::vector<R> r = c_;
        for (auto& x : r) x = x * s;
        return from_coeffs(std::move(r));
    }
    bool operator==(const Poly& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    R eval(const R& x) const {
        if (c_.empty()) return ring_zero(x);
        R acc = c_.back();
        for (long i = degree() - 1; i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
        return acc;
    }

    /// Formal derivative.
    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<R> r;
        r.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r.push_back(c_[i] * ring_embed_int(c_[i], BigInt(static_cast<long>(i))));
        return from_coeffs(std::move(r));
    }

    /// Multiply by x^k.
    Poly shifted_up(long k) const {
        if (is_zero()) return Poly();
        std::vector<R> r(c_.size() + static_cast<std::size_t>(k), ring_zero(c_[0]));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(k)] = c_[i];
        return from_coeffs(std::move(r));
    }

   private:
    std::vector<R> c_;
    void trim() {
        while (!c_.empty() && detail::elt_is_zero(c_.back())) c_.pop_back();
    }
};

template <class R>
bool is_zero(const Poly<R>& f) {
    return f.is_zero();
}

// Field-specific polynomial algorithms (over F_{p^d}).
using FqPoly = Poly<Fq>;

std::pair<FqPoly, FqPoly> poly_divmod(const FqPoly& a, const FqPoly& b);
FqPoly poly_gcd(FqPoly a, FqPoly b);  ///< monic gcd; gcd(0,0) = 0
FqPoly poly_monic(const FqPoly& a);
FqPoly poly_pow(const FqPoly& a, long e);
/// p(x + a)
FqPoly poly_taylor_shift(const FqPoly& f, const Fq& a);
/// x^n * p(1/x) where n = deg p
FqPoly poly_reverse(const FqPoly& f);
/// Roots in F_{p^d} with multiplicities plus the (possibly constant) rootless cofactor.
struct RootSplit {
    std::vector<std::pair<Fq, long>> roots;
    FqPoly cofactor;
};
RootSplit poly_roots(const FqPoly& f);
bool poly_is_pth_power(const FqPoly& f);
FqPoly poly_pth_root(const FqPoly& f);  ///< throws DomainError if not a p-th power

/// Element of F_{p^d}(x) in canonical form: denominator monic, gcd(num, den) = 1.
class RationalFunction {
   public:
    RationalFunction() = default;  ///< zero
    explicit RationalFunction(const Fq& c) : num_(FqPoly(c)), den_(FqPoly(ring_one(c))) {}
    RationalFunction(FqPoly num, FqPoly den);  ///< normalizes; throws on zero denominator
    static RationalFunction zero(const FieldSpec* spec) {
        return RationalFunction(Fq::from_int(spec, 0));
    }
    static RationalFunction var(const FieldSpec* spec);  ///< the coordinate function x

    const FqPoly& num() const noexcept { return num_; }
    const FqPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.degree() <= 0 && den_.degree() <= 0; }
    const FieldSpec* spec() const;  ///< null for the default-constructed zero

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;  ///< throws on division by zero
    RationalFunction operator-() const;
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    /// deg num - deg den; throws DomainError on the zero function.
    long degree() const;
    RationalFunction pow(long e) const;
    RationalFunction derivative() const;
    Fq eval(const Fq& x) const;  ///< throws DomainError at a pole
    /// ord_{x=0}: trailing order of num minus trailing order of den.
    long order_at_zero() const;  ///< throws DomainError on zero
    /// Leading expansion coefficient at x = 0.
    Fq leading_at_zero() const;

    bool is_pth_power() const;
    RationalFunction pth_root() const;

    /// Canonical text in the given variable; "num/den" with parentheses as needed.
    std::string str(char var) const;

   private:
    FqPoly num_, den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline RationalFunction ring_zero(const RationalFunction& sample) {
    return sample.spec() ? RationalFunction::zero(sample.spec()) : RationalFunction();
}
inline RationalFunction ring_one(const RationalFunction& sample) {
    return RationalFunction(Fq::from_int(sample.spec(), 1));
}
inline RationalFunction ring_embed_int(const RationalFunction& sample, const BigInt& n) {
    return RationalFunction(ring_embed_int(Fq::from_int(sample.spec(), 0), n));
}
inline RationalFunction ring_inv(const RationalFunction& x) {
    return ring_one(x) / x;
}

std::string poly_str(const FqPoly& f, char var);

}  // namespace torsor

#endif
