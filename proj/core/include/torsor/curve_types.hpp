#ifndef TORSOR_CURVE_TYPES_HPP
#define TORSOR_CURVE_TYPES_HPP

#include <map>
#include <string>

#include "torsor/point.hpp"

namespace torsor {

/// Effective divisor sum n_x * x on P^1 with all n_x >= 1 (absent points have
/// multiplicity 0).  Carries the pointwise lattice structure.
class Modulus {
   public:
    Modulus() = default;

    void set(const PointOfP1& x, long mult) {
        if (mult < 0) throw DomainError("modulus multiplicities must be >= 0");
        if (mult == 0)
            m_.erase(x);
        else
            m_[x] = mult;
    }
    long at(const PointOfP1& x) const {
        auto it = m_.find(x);
        return it == m_.end() ? 0 : it->second;
    }
    bool is_zero() const noexcept { return m_.empty(); }
    long degree() const {
        long d = 0;
        for (auto& [x, n] : m_) d += n;
        return d;
    }
    const std::map<PointOfP1, long>& support() const noexcept { return m_; }

    bool operator==(const Modulus& o) const { return m_ == o.m_; }
    bool operator!=(const Modulus& o) const { return !(*this == o); }
    /// Pointwise partial order.
    bool leq(const Modulus& o) const {
        for (auto& [x, n] : m_)
            if (n > o.at(x)) return false;
        return true;
    }

    static Modulus inf(const Modulus& a, const Modulus& b) {
        Modulus r;
        for (auto& [x, n] : a.m_) {
            long m = std::min(n, b.at(x));
            if (m > 0) r.m_[x] = m;
        }
        return r;
    }
    static Modulus sup(const Modulus& a, const Modulus& b) {
        Modulus r = a;
        for (auto& [x, n] : b.m_) r.m_[x] = std::max(r.at(x), n);
        return r;
    }

    std::string str() const {
        if (m_.empty()) return "0";
        std::string out;
        for (auto& [x, n] : m_) {
            if (!out.empty()) out += ",";
            out += x.str() + ":" + std::to_string(n);
        }
        return out;
    }

   private:
    std::map<PointOfP1, long> m_;
};

}  // namespace torsor

#endif
