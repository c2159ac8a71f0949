#ifndef TORSOR_LAURENT_HPP
#define TORSOR_LAURENT_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "torsor/errors.hpp"
#include "torsor/point.hpp"
#include "torsor/poly.hpp"

namespace torsor {

/// Truncated Laurent series over R in the local variable u.
///
/// The value is sum_{k in [val, prec)} c[k-val] u^k + O(u^prec): every
/// coefficient below `prec` is exactly known.  Precision propagates
/// pessimistically through arithmetic; asking for a coefficient at or beyond
/// `prec` throws PrecisionError.  The leading stored coefficient is nonzero;
/// a series with no known nonzero coefficient keeps val == prec ("zero modulo
/// u^prec").  Exactly-known series (images of rational data) use the kExact
/// sentinel.
template <class R>
class Laurent {
   public:
    static constexpr long kExact = 1L << 40;

    Laurent(const R& sample, long val, long prec, std::vector<R> coeffs)
        : zero_(ring_zero(sample)), val_(val), prec_(std::min(prec, kExact)), c_(std::move(coeffs)) {
        normalize();
    }
    /// Zero modulo u^prec.
    static Laurent zero_mod(const R& sample, long prec) { return Laurent(sample, prec, prec, {}); }
    static Laurent constant(const R& value, long prec = kExact) {
        return Laurent(value, 0, prec, {value});
    }
    static Laurent monomial(const R& value, long k, long prec = kExact) {
        return Laurent(value, k, prec, {value});
    }

    long valuation() const {
        if (c_.empty()) throw PrecisionError("valuation of a series with no known nonzero term");
        return val_;
    }
    bool is_zero() const noexcept { return c_.empty(); }  // zero modulo u^prec
    long precision() const noexcept { return prec_; }
    const R& sample() const noexcept { return zero_; }

    /// Coefficient of u^k; throws PrecisionError for k >= prec.
    R coeff(long k) const {
        if (k >= prec_) throw PrecisionError("coefficient u^" + std::to_string(k) + " beyond precision");
        if (c_.empty() || k < val_ || k >= val_ + static_cast<long>(c_.size())) return zero_;
        return c_[static_cast<std::size_t>(k - val_)];
    }

    /// Coefficient of u^{-1}; throws PrecisionError when the window cannot certify it.
    R residue() const {
        if (prec_ < 0) throw PrecisionError("residue: precision window does not reach u^-1");
        return coeff(-1);
    }

    Laurent operator+(const Laurent& o) const { return add_sub(o, false); }
    Laurent operator-(const Laurent& o) const { return add_sub(o, true); }
    Laurent operator-() const {
        std::vector<R> r = c_;
        for (auto& x : r) x = -x;
        return Laurent(zero_, val_, prec_, std::move(r));
    }
    Laurent operator*(const Laurent& o) const {
        long p = sat_add(std::min(sat_add(prec_, o.low()), sat_add(o.prec_, low())), 0);
        if (c_.empty() || o.c_.empty()) return zero_mod(zero_, p);
        long lo = val_ + o.val_;
        if (lo >= p) return zero_mod(zero_, p);
        long hi = std::min(p, stored_end() + o.stored_end() - 1);
        std::vector<R> r(static_cast<std::size_t>(hi - lo), zero_);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (detail::elt_is_zero(c_[i])) continue;
            long base = val_ + static_cast<long>(i) + o.val_;
            if (base >= hi) break;
            std::size_t jmax = std::min(o.c_.size(), static_cast<std::size_t>(hi - base));
            for (std::size_t j = 0; j < jmax; ++j)
                r[static_cast<std::size_t>(base - lo) + j] = r[static_cast<std::size_t>(base - lo) + j] + c_[i] * o.c_[j];
        }
        return Laurent(zero_, lo, p, std::move(r));
    }
    Laurent operator*(const R& s) const {
        std::vector<R> r = c_;
        for (auto& x : r) x = x * s;
        return Laurent(zero_, val_, prec_, std::move(r));
    }

    /// Multiplicative inverse; requires a known nonzero leading term and a
    /// finite precision window (truncate exact series before inverting).
    Laurent inverse() const {
        if (c_.empty()) throw DomainError("inverse of a series that is zero to working precision");
        if (prec_ >= kExact)
            throw DomainError("inverse of an exact series needs an explicit truncation");
        long n = prec_ - val_;
        R d0 = ring_inv(c_[0]);
        std::vector<R> d(static_cast<std::size_t>(std::max<long>(n, 1)), zero_);
        d[0] = d0;
        for (long k = 1; k < n; ++k) {
            R acc = zero_;
            for (long j = 1; j <= k; ++j) {
                if (j < static_cast<long>(c_.size()) && !detail::elt_is_zero(c_[static_cast<std::size_t>(j)]))
                    acc = acc + c_[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(k - j)];
            }
            d[static_cast<std::size_t>(k)] = -(acc * d0);
        }
        return Laurent(zero_, -val_, -val_ + n, std::move(d));
    }

    /// Formal d/du; precision drops by one.
    Laurent derivative() const {
        long p = sat_add(prec_, -1);
        std::vector<R> r;
        long lo = 0;
        bool started = false;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            long k = val_ + static_cast<long>(i);
            if (k == 0) continue;
            R v = c_[i] * ring_embed_int(zero_, BigInt(k));
            if (!started) {
                if (detail::elt_is_zero(v)) continue;
                lo = k - 1;
                started = true;
            }
            while (static_cast<long>(r.size()) < k - 1 - lo) r.push_back(zero_);
            r.push_back(v);
        }
        if (!started) return zero_mod(zero_, p);
        return Laurent(zero_, lo, p, std::move(r));
    }

    Laurent truncated(long new_prec) const {
        long p = std::min(prec_, new_prec);
        std::vector<R> r;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            long k = val_ + static_cast<long>(i);
            if (k >= p) break;
            r.push_back(c_[i]);
        }
        return Laurent(zero_, c_.empty() ? p : val_, p, std::move(r));
    }

    /// Multiplication by u^k.
    Laurent shifted(long k) const {
        return Laurent(zero_, val_ + k, sat_add(prec_, k), c_);
    }

    /// Agreement of all coefficients below min(prec, o.prec).
    bool agrees_with(const Laurent& o) const {
        long p = std::min(prec_, o.prec_);
        long lo = std::min(c_.empty() ? p : val_, o.c_.empty() ? p : o.val_);
        for (long k = lo; k < p; ++k)
            if (!(coeff(k) == o.coeff(k))) return false;
        return true;
    }

    long low() const noexcept { return c_.empty() ? prec_ : val_; }
    /// One past the last stored coefficient; coefficients in [stored_end, prec) are zero.
    long stored_end() const noexcept { return c_.empty() ? prec_ : val_ + static_cast<long>(c_.size()); }

   private:
    R zero_;
    long val_, prec_;
    std::vector<R> c_;

    static long sat_add(long a, long b) {
        if (a >= kExact || b >= kExact) return kExact;
        long s = a + b;
        return s >= kExact ? kExact : s;
    }

    Laurent add_sub(const Laurent& o, bool negate) const {
        long p = std::min(prec_, o.prec_);
        long lo = std::min(c_.empty() ? p : val_, o.c_.empty() ? p : o.val_);
        if (lo >= p) return zero_mod(zero_, p);
        long hi = std::min(p, std::max(stored_end(), o.stored_end()));
        hi = std::max(hi, lo);
        std::vector<R> r(static_cast<std::size_t>(hi - lo), zero_);
        accumulate(r, lo, hi, *this, false);
        accumulate(r, lo, hi, o, negate);
        return Laurent(zero_, lo, p, std::move(r));
    }

    static void accumulate(std::vector<R>& r, long lo, long p, const Laurent& s, bool negate) {
        for (std::size_t i = 0; i < s.c_.size(); ++i) {
            long k = s.val_ + static_cast<long>(i);
            if (k >= p) break;
            auto& slot = r[static_cast<std::size_t>(k - lo)];
            slot = negate ? slot - s.c_[i] : slot + s.c_[i];
        }
    }

    void normalize() {
        std::size_t drop = 0;
        while (drop < c_.size() && detail::elt_is_zero(c_[drop])) ++drop;
        if (drop > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(drop));
            val_ += static_cast<long>(drop);
        }
        long keep = prec_ - val_;
        if (keep < static_cast<long>(c_.size()))
            c_.resize(static_cast<std::size_t>(std::max<long>(keep, 0)));
        while (!c_.empty() && detail::elt_is_zero(c_.back())) c_.pop_back();
        if (c_.empty()) val_ = prec_;
    }
};

template <class R>
bool is_zero(const Laurent<R>& s) {
    return s.is_zero();
}
template <class R>
Laurent<R> ring_zero(const Laurent<R>& sample) {
    return Laurent<R>::zero_mod(sample.sample(), Laurent<R>::kExact);
}
template <class R>
Laurent<R> ring_one(const Laurent<R>& sample) {
    return Laurent<R>::constant(ring_one(sample.sample()));
}
template <class R>
Laurent<R> ring_embed_int(const Laurent<R>& sample, const BigInt& n) {
    return Laurent<R>::constant(ring_embed_int(sample.sample(), n));
}
template <class R>
Laurent<R> ring_inv(const Laurent<R>& x) {
    return x.inverse();
}

using FqLaurent = Laurent<Fq>;

/// Rewrite f in the local coordinate at the given point: u = x - a at a finite
/// point, u = 1/x at infinity.  Exact (the result is again rational).
RationalFunction local_coordinate_form(const RationalFunction& f, const PointOfP1& at);

/// Expansion of a nonzero rational function g(u) at u = 0 with `terms` correct
/// coefficients from the valuation on; the zero function yields the exact zero
/// series.
FqLaurent expand_at_zero(const RationalFunction& g, long terms);

/// Expansion of f at a point of P^1 (module algebra's laurent_expand).
FqLaurent laurent_expand(const RationalFunction& f, const PointOfP1& at, long terms);

/// Element of (1 + u k'[[u]])^x / (1 + u^n k'[[u]])^x: a unit held modulo u^n.
class PrincipalUnit {
   public:
    PrincipalUnit(const FieldSpec* spec, long n);  ///< the identity at level n
    /// From coefficients c[0..n-1] with c[0] == 1.
    static PrincipalUnit from_coeffs(long n, std::vector<Fq> c);
    /// Truncation of a valuation-zero series with constant term 1; needs prec >= n.
    static PrincipalUnit from_series(const FqLaurent& s, long n);

    long level() const noexcept { return n_; }
    const Fq& coeff(long i) const { return c_[static_cast<std::size_t>(i)]; }
    const FieldSpec* spec() const noexcept { return c_[0].spec(); }
    bool is_one() const;

    PrincipalUnit operator*(const PrincipalUnit& o) const;
    PrincipalUnit inverse() const;
    bool operator==(const PrincipalUnit& o) const { return n_ == o.n_ && c_ == o.c_; }
    bool operator!=(const PrincipalUnit& o) const { return !(*this == o); }

    FqLaurent series() const;  ///< as a Laurent series known modulo u^n
    std::string str() const;

   private:
    long n_;
    std::vector<Fq> c_;
};

}  // namespace torsor

#endif
