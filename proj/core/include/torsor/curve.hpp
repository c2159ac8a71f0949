#ifndef TORSOR_CURVE_HPP
#define TORSOR_CURVE_HPP

#include "torsor/curve_types.hpp"
#include "torsor/laurent.hpp"

namespace torsor {

/// A rational differential form f dx on P^1.
class DifferentialForm {
   public:
    DifferentialForm() = default;  ///< the zero form
    explicit DifferentialForm(RationalFunction f) : f_(std::move(f)) {}

    const RationalFunction& coefficient() const noexcept { return f_; }
    bool is_zero() const noexcept { return f_.is_zero(); }

    DifferentialForm operator+(const DifferentialForm& o) const {
        return DifferentialForm(f_ + o.f_);
    }
    DifferentialForm operator-() const { return DifferentialForm(-f_); }
    DifferentialForm scaled(const RationalFunction& h) const { return DifferentialForm(f_ * h); }
    bool operator==(const DifferentialForm& o) const { return f_ == o.f_; }

   private:
    RationalFunction f_;
};

/// ord_x(omega): at a finite point the order of f, at infinity the order in
/// u = 1/x of -u^{-2} f(1/u) (from dx = -u^{-2} du).  Throws on the zero form.
long ord_at(const DifferentialForm& omega, const PointOfP1& x);

/// The exterior derivative f -> f' dx.
DifferentialForm d(const RationalFunction& f);

/// The Cartier operator on f dx, computed as (-(d/dx)^(p-1) f)^(1/p) dx.
/// Writing f = sum_i g_i^p x^i this returns g_{p-1} dx; the (p-1)-fold
/// derivative collapses every basis term except i = p-1, whose coefficient
/// survives as -g_{p-1}^p by Wilson's theorem.
DifferentialForm cartier(const DifferentialForm& omega);

/// Membership in the Cartier kernel (the forms with vanishing Cartier image).
bool is_alpha_p_form(const DifferentialForm& omega);

/// All points where omega has nonzero order (requires the critical points to
/// split over k'; throws NonRationalPointError otherwise), with their orders.
std::vector<std::pair<PointOfP1, long>> divisor_of(const DifferentialForm& omega);

/// Zeros and poles of a nonzero rational function, k'-rational or throw.
std::vector<std::pair<PointOfP1, long>> divisor_of(const RationalFunction& g);

}  // namespace torsor

#endif
