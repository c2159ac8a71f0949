#ifndef TORSOR_LOCAL_SYMBOL_HPP
#define TORSOR_LOCAL_SYMBOL_HPP

#include "torsor/laurent.hpp"
#include "torsor/witt.hpp"
#include "torsor/zq.hpp"

namespace torsor {

/// Value of a local symbol for H = W_m: a Witt vector over k'.
using SymbolValue = WittVector<Fq>;

/// Local symbol for H = G_a: Res(f dg/g).  Both series need enough precision
/// to certify the u^{-1} coefficient of f g'/g; otherwise PrecisionError.
Fq symbol_ga(const FqLaurent& f, const FqLaurent& g);

/// Schmid-Witt symbol kernel for H = W_m over L = k'((u)).
///
/// Components of f and the nonzero g are lifted coefficientwise through
/// Teichmueller representatives into Laurent series over the length-(m+delta)
/// Witt ring of k' (in its unramified presentation Z_q/p^(m+delta)); the
/// ghost residues w_j = Res(ghost_j(f~) dg~/g~) are formed and the ghost
/// vector is inverted, each step dividing exactly by p^j, then reduced mod p.
/// A failed division throws DivisibilityError; delta defaults to m.
SymbolValue schmid_witt_symbol(long p, const std::vector<FqLaurent>& f, const FqLaurent& g,
                               int delta = -1);

/// Element of W_m(L) whose components are exact rational functions of the
/// local variable u, so expansions can be regenerated at any precision.
class LocalWittElement {
   public:
    LocalWittElement(long p, std::vector<RationalFunction> comps);
    static LocalWittElement from_witt(const WittVector<RationalFunction>& w) {
        return LocalWittElement(w.p(), w.comps());
    }

    long p() const noexcept { return p_; }
    int length() const noexcept { return static_cast<int>(c_.size()); }
    const RationalFunction& comp(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<RationalFunction>& comps() const noexcept { return c_; }
    const FieldSpec* spec() const noexcept { return spec_; }

    bool is_integral() const;  ///< every component has ord_{u=0} >= 0
    /// Pole bound J(f) = 1 + max_i p^(m-1-i) max(0, -v(f_i)).
    long pole_bound() const;
    std::vector<FqLaurent> expanded(long rel_prec) const;
    WittVector<RationalFunction> as_witt() const { return WittVector<RationalFunction>(p_, c_); }

   private:
    long p_;
    const FieldSpec* spec_;
    std::vector<RationalFunction> c_;
};

struct SymbolOptions {
    long prec_override = 0;  ///< relative expansion precision; 0 picks the bound
    int delta_override = -1;
    bool stable = false;  ///< recompute at doubled precision and delta+2 and compare
};

/// Symbol of an exact local element against a nonzero rational g(u), with
/// automatic precision selection and retry.
SymbolValue local_symbol(const LocalWittElement& f, const RationalFunction& g,
                         const SymbolOptions& opt = {});

/// Membership in fil_n: n = 0 is integrality of the representative as given;
/// for n >= 1 the symbol must vanish against the generators 1 - c u^j for
/// every j from n to the pole bound and c running over an F_p-basis of k'.
bool fil_membership(const LocalWittElement& f, long n, const SymbolOptions& opt = {});

/// Least n with fil_membership true.
long fil_level(const LocalWittElement& f, const SymbolOptions& opt = {});

/// Sum over the points of P^1 of the local symbols of a global pair: the
/// components of f are rational in x, g is a nonzero rational function, and
/// every critical point must be k'-rational.  Vanishes identically.
SymbolValue reciprocity_sum(const WittVector<RationalFunction>& f, const RationalFunction& g,
                            const SymbolOptions& opt = {});

}  // namespace torsor

#endif
