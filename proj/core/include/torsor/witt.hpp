#ifndef TORSOR_WITT_HPP
#define TORSOR_WITT_HPP

#include <cstdint>
#include <deque>
#include <map>
#include <vector>

#include "torsor/bigint.hpp"
#include "torsor/errors.hpp"

namespace torsor {

/// Monomial in countably many variables: dense exponent vector with trailing
/// zeros trimmed.  Variable encoding used by the Witt laws: X_i <-> 2i,
/// Y_i <-> 2i+1, so the polynomials for length m' < m are literal prefixes.
struct ZMonomial {
    std::vector<std::uint16_t> e;
    bool operator<(const ZMonomial& o) const { return e < o.e; }
    bool operator==(const ZMonomial& o) const { return e == o.e; }
    ZMonomial operator*(const ZMonomial& o) const {
        ZMonomial r;
        r.e.resize(std::max(e.size(), o.e.size()), 0);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += e[i];
        for (std::size_t i = 0; i < o.e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
};

/// Sparse multivariate polynomial over Z.
class ZPoly {
   public:
    ZPoly() = default;
    static ZPoly constant(const BigInt& c) {
        ZPoly r;
        if (!detail::elt_is_zero(c)) r.t_[ZMonomial{}] = c;
        return r;
    }
    static ZPoly variable(int idx, unsigned exp = 1) {
        ZPoly r;
        if (exp == 0) return constant(1);
        ZMonomial m;
        m.e.resize(static_cast<std::size_t>(idx) + 1, 0);
        m.e[static_cast<std::size_t>(idx)] = static_cast<std::uint16_t>(exp);
        r.t_[std::move(m)] = 1;
        return r;
    }

    bool is_zero() const noexcept { return t_.empty(); }
    std::size_t term_count() const noexcept { return t_.size(); }

    ZPoly& operator+=(const ZPoly& o) {
        for (auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    ZPoly& operator-=(const ZPoly& o) {
        for (auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    ZPoly operator+(const ZPoly& o) const {
        ZPoly r = *this;
        r += o;
        return r;
    }
    ZPoly operator-(const ZPoly& o) const {
        ZPoly r = *this;
        r -= o;
        return r;
    }
    ZPoly operator*(const ZPoly& o) const {
        ZPoly r;
        for (auto& [m1, c1] : t_)
            for (auto& [m2, c2] : o.t_) r.add_term(m1 * m2, c1 * c2);
        return r;
    }
    ZPoly operator*(const BigInt& s) const {
        if (detail::elt_is_zero(s)) return ZPoly();
        ZPoly r = *this;
        for (auto& [m, c] : r.t_) c *= s;
        return r;
    }
    ZPoly pow(unsigned long e) const {
        ZPoly acc = constant(1);
        ZPoly base = *this;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }
    /// Divide every coefficient by s exactly; throws DivisibilityError otherwise.
    ZPoly divexact_int(const BigInt& s) const {
        ZPoly r;
        for (auto& [m, c] : t_) r.t_[m] = divexact(c, s, "Witt law recursion");
        return r;
    }
    bool operator==(const ZPoly& o) const { return t_ == o.t_; }

    /// Evaluate at vals[var]; vals must cover every variable that occurs.
    template <class R>
    R eval(const std::vector<R>& vals) const {
        if (vals.empty()) throw DomainError("ZPoly::eval needs at least one value for context");
        R acc = ring_zero(vals[0]);
        std::vector<std::vector<R>> pows(vals.size());
        for (auto& [m, c] : t_) {
            R term = ring_embed_int(vals[0], c);
            for (std::size_t v = 0; v < m.e.size(); ++v) {
                unsigned e = m.e[v];
                if (e == 0) continue;
                if (v >= vals.size()) throw DomainError("ZPoly::eval: missing variable value");
                auto& tab = pows[v];
                if (tab.empty()) tab.push_back(ring_one(vals[0]));
                while (tab.size() <= e) tab.push_back(tab.back() * vals[v]);
                term = term * tab[e];
            }
            acc = acc + term;
        }
        return acc;
    }

   private:
    std::map<ZMonomial, BigInt> t_;
    void add_term(const ZMonomial& m, const BigInt& c) {
        if (detail::elt_is_zero(c)) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (detail::elt_is_zero(it->second)) t_.erase(it);
        }
    }
};

/// Ghost polynomial w_j = sum_{i<=j} p^i X_i^(p^(j-i)) in the X-variables of
/// the interleaved encoding (X_i <-> 2i) or plain encoding (X_i <-> i).
ZPoly ghost_poly(long p, int j, int stride, int offset);

/// Universal addition/multiplication/negation polynomials for p-typical Witt
/// vectors, computed once per prime by the ghost recursion over Z and cached.
/// The ghost identities are re-verified symbolically for lengths <= 4.
///
/// Lengths are capped: a soft default of 4 (extendable per call site) and a
/// hard bound keeping p^(m-1) <= 128 so polynomial size stays sane.
///
/// Population is write-once under an internal lock; stored polynomials are
/// never mutated afterwards (deque storage keeps references stable).  Code
/// that evaluates laws from several threads should touch the needed (p, m)
/// once beforehand.
class WittLaws {
   public:
    static const WittLaws& get(long p, int m, bool extend_cap = false);
    static int default_cap() noexcept;
    static void set_default_cap(int m);
    static int hard_cap(long p);

    long p() const noexcept { return p_; }
    const ZPoly& sum(int j) const { return sum_[static_cast<std::size_t>(j)]; }
    const ZPoly& prod(int j) const { return prod_[static_cast<std::size_t>(j)]; }
    const ZPoly& neg(int j) const { return neg_[static_cast<std::size_t>(j)]; }

   private:
    explicit WittLaws(long p) : p_(p) {}
    void extend(int m);
    long p_;
    std::deque<ZPoly> sum_, prod_, neg_;  // grown under the registry lock
    friend class WittLawsRegistry;
};

template <class R>
R ring_pow(R x, unsigned long e) {
    R acc = ring_one(x);
    while (e > 0) {
        if (e & 1) acc = acc * x;
        x = x * x;
        e >>= 1;
    }
    return acc;
}

/// Truncated p-typical Witt vector over a coefficient domain R.
template <class R>
class WittVector {
   public:
    WittVector(long p, std::vector<R> comps) : p_(p), a_(std::move(comps)) {
        if (a_.empty()) throw DomainError("Witt vectors have length >= 1");
    }
    static WittVector zeros(long p, int m, const R& sample) {
        return WittVector(p, std::vector<R>(static_cast<std::size_t>(m), ring_zero(sample)));
    }
    /// Teichmueller representative (x, 0, ..., 0).
    static WittVector teichmuller(long p, const R& x, int m) {
        WittVector r = zeros(p, m, x);
        r.a_[0] = x;
        return r;
    }

    long p() const noexcept { return p_; }
    int length() const noexcept { return static_cast<int>(a_.size()); }
    const R& comp(int i) const { return a_[static_cast<std::size_t>(i)]; }
    const std::vector<R>& comps() const noexcept { return a_; }
    R& comp_mut(int i) { return a_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (auto& x : a_)
            if (!detail::elt_is_zero(x)) return false;
        return true;
    }
    bool operator==(const WittVector& o) const {
        if (p_ != o.p_ || a_.size() != o.a_.size()) return false;
        for (std::size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] == o.a_[i])) return false;
        return true;
    }
    bool operator!=(const WittVector& o) const { return !(*this == o); }

   private:
    long p_;
    std::vector<R> a_;

    template <class S>
    friend WittVector<S> witt_add(const WittVector<S>&, const WittVector<S>&, bool);
    template <class S>
    friend WittVector<S> witt_mul(const WittVector<S>&, const WittVector<S>&, bool);
    template <class S>
    friend WittVector<S> witt_neg(const WittVector<S>&, bool);
};

namespace detail {
template <class R>
std::vector<R> interleave(const WittVector<R>& a, const WittVector<R>& b) {
    std::vector<R> v;
    v.reserve(a.comps().size() * 2);
    for (int i = 0; i < a.length(); ++i) {
        v.push_back(a.comp(i));
        v.push_back(b.comp(i));
    }
    return v;
}
template <class R>
void require_compatible(const WittVector<R>& a, const WittVector<R>& b) {
    if (a.p() != b.p()) throw DomainError("Witt vectors over different primes");
    if (a.length() != b.length()) throw DomainError("Witt vectors of different lengths");
}
}  // namespace detail

template <class R>
WittVector<R> witt_add(const WittVector<R>& a, const WittVector<R>& b, bool extend_cap = false) {
    detail::require_compatible(a, b);
    const WittLaws& laws = WittLaws::get(a.p(), a.length(), extend_cap);
    std::vector<R> vals = detail::interleave(a, b);
    std::vector<R> out;
    out.reserve(a.comps().size());
    for (int j = 0; j < a.length(); ++j) out.push_back(laws.sum(j).template eval<R>(vals));
    return WittVector<R>(a.p(), std::move(out));
}

template <class R>
WittVector<R> witt_mul(const WittVector<R>& a, const WittVector<R>& b, bool extend_cap = false) {
    detail::require_compatible(a, b);
    const WittLaws& laws = WittLaws::get(a.p(), a.length(), extend_cap);
    std::vector<R> vals = detail::interleave(a, b);
    std::vector<R> out;
    out.reserve(a.comps().size());
    for (int j = 0; j < a.length(); ++j) out.push_back(laws.prod(j).template eval<R>(vals));
    return WittVector<R>(a.p(), std::move(out));
}

template <class R>
WittVector<R> witt_neg(const WittVector<R>& a, bool extend_cap = false) {
    const WittLaws& laws = WittLaws::get(a.p(), a.length(), extend_cap);
    std::vector<R> vals;
    vals.reserve(a.comps().size() * 2);
    for (int i = 0; i < a.length(); ++i) {  // neg polys use the interleaved X slots
        vals.push_back(a.comp(i));
        vals.push_back(ring_zero(a.comp(0)));
    }
    std::vector<R> out;
    out.reserve(a.comps().size());
    for (int j = 0; j < a.length(); ++j) out.push_back(laws.neg(j).template eval<R>(vals));
    return WittVector<R>(a.p(), std::move(out));
}

template <class R>
WittVector<R> witt_sub(const WittVector<R>& a, const WittVector<R>& b, bool extend_cap = false) {
    return witt_add(a, witt_neg(b, extend_cap), extend_cap);
}

/// Componentwise x -> x^p; only defined over F_p-algebras (p = 0 in R).
template <class R>
WittVector<R> frobenius(const WittVector<R>& a) {
    const R& sample = a.comp(0);
    if (!detail::elt_is_zero(ring_embed_int(sample, BigInt(a.p()))))
        throw DomainError("frobenius requested over a domain that is not an F_p-algebra");
    std::vector<R> out;
    out.reserve(a.comps().size());
    for (int i = 0; i < a.length(); ++i)
        out.push_back(ring_pow(a.comp(i), static_cast<unsigned long>(a.p())));
    return WittVector<R>(a.p(), std::move(out));
}

/// (a_0, ..., a_{m-1}) -> (0, a_0, ..., a_{m-2}); length is preserved.
template <class R>
WittVector<R> verschiebung(const WittVector<R>& a) {
    std::vector<R> out;
    out.reserve(a.comps().size());
    out.push_back(ring_zero(a.comp(0)));
    for (int i = 0; i + 1 < a.length(); ++i) out.push_back(a.comp(i));
    return WittVector<R>(a.p(), std::move(out));
}

/// Drop the last component (W_m -> W_{m-1}); length must be >= 2.
template <class R>
WittVector<R> restrict(const WittVector<R>& a) {
    if (a.length() < 2) throw DomainError("restriction needs length >= 2");
    std::vector<R> out(a.comps().begin(), a.comps().end() - 1);
    return WittVector<R>(a.p(), std::move(out));
}

/// Ghost components over a torsion-free domain.
std::vector<BigInt> ghost(const WittVector<BigInt>& a);
/// Inverse of ghost; throws DivisibilityError when the recursion is not exact.
WittVector<BigInt> unghost(long p, const std::vector<BigInt>& w);

/// The constant Witt vector of the integer n (ghost components all n),
/// embedded into the domain R.
template <class R>
WittVector<R> int_to_witt(long p, int m, const BigInt& n, const R& sample) {
    std::vector<BigInt> w(static_cast<std::size_t>(m), n);
    WittVector<BigInt> z = unghost(p, w);
    std::vector<R> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) out.push_back(ring_embed_int(sample, z.comp(i)));
    return WittVector<R>(p, std::move(out));
}

}  // namespace torsor

#endif
