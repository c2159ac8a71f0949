#ifndef TORSOR_POINT_HPP
#define TORSOR_POINT_HPP

#include <string>

#include "torsor/field.hpp"

namespace torsor {

/// A k'-rational point of P^1: either a finite point a or infinity.
/// The local uniformizer is u = x - a, respectively u = 1/x.
class PointOfP1 {
   public:
    static PointOfP1 finite(const Fq& a) { return PointOfP1(false, a); }
    static PointOfP1 infinity(const FieldSpec* spec) {
        return PointOfP1(true, Fq::from_int(spec, 0));
    }

    bool is_infinity() const noexcept { return inf_; }
    const Fq& value() const {
        if (inf_) throw DomainError("value() of the point at infinity");
        return a_;
    }
    const FieldSpec* spec() const noexcept { return a_.spec(); }

    bool operator==(const PointOfP1& o) const {
        return inf_ == o.inf_ && (inf_ || a_ == o.a_);
    }
    bool operator!=(const PointOfP1& o) const { return !(*this == o); }
    /// Deterministic order: finite points by element index, infinity last.
    bool operator<(const PointOfP1& o) const {
        if (inf_ != o.inf_) return !inf_;
        if (inf_) return false;
        return a_.index() < o.a_.index();
    }

    std::string str() const { return inf_ ? "inf" : a_.str(); }

   private:
    PointOfP1(bool inf, const Fq& a) : inf_(inf), a_(a) {}
    bool inf_;
    Fq a_;
};

}  // namespace torsor

#endif
