#ifndef TORSOR_GLOBAL_CLASS_HPP
#define TORSOR_GLOBAL_CLASS_HPP

#include <set>

#include "torsor/conductor.hpp"
#include "torsor/curve.hpp"

namespace torsor {

/// A torsor class over U = P^1 minus S presented by regular data: per
/// local-local or ASW factor a Witt vector of rational functions regular on U
/// (a class modulo F^r, resp. Artin-Schreier, images), or a rational g
/// invertible on U modulo n-th powers for mu_n.  Regularity/invertibility on
/// U is verified at construction; critical points must be k'-rational.
class GlobalTorsorClass {
   public:
    static GlobalTorsorClass local_local(const GroupSpec& g,
                                         std::vector<WittVector<RationalFunction>> data,
                                         std::set<PointOfP1> S);
    static GlobalTorsorClass etale_asw(const GroupSpec& g, WittVector<RationalFunction> data,
                                       std::set<PointOfP1> S);
    static GlobalTorsorClass kummer(const GroupSpec& g, RationalFunction data,
                                    std::set<PointOfP1> S);

    const GroupSpec& group() const noexcept { return group_; }
    const std::set<PointOfP1>& S() const noexcept { return S_; }
    const std::vector<WittVector<RationalFunction>>& witt_data() const noexcept { return data_; }
    const RationalFunction& kummer_data() const noexcept { return kummer_; }
    const FieldSpec* spec() const noexcept { return spec_; }

    /// Restriction to the completion at x (exact substitution into the local
    /// coordinate).
    LocalTorsorClass localize(const PointOfP1& x) const;

   private:
    GroupSpec group_;
    std::vector<WittVector<RationalFunction>> data_;
    RationalFunction kummer_;
    std::set<PointOfP1> S_;
    const FieldSpec* spec_ = nullptr;
};

struct ModulusResult {
    Modulus modulus;
    bool trivial = false;
};

/// Minimal modulus of an alpha_p class through its differential: omega = df,
/// coefficient max(0, -ord_x(omega)) at each x in S.  A vanishing
/// differential means the class is trivial (reported through the flag).
ModulusResult alpha_p_modulus(const GlobalTorsorClass& P);

/// Minimal modulus of a local-local class through local conductors.
Modulus local_local_modulus(const GlobalTorsorClass& P, const SymbolOptions& opt = {});

/// Minimal modulus of a mu_n class: coefficient 1 exactly at the x in S with
/// n not dividing ord_x(g).
Modulus kummer_modulus(const GlobalTorsorClass& P);

/// Minimal modulus of a Z/p^m class through the classical ASW conductor.
Modulus asw_modulus(const GlobalTorsorClass& P, const SymbolOptions& opt = {});

/// Variant dispatch; alpha_p classes go through the differential route.
/// Returns the triviality flag alongside.
ModulusResult minimal_modulus(const GlobalTorsorClass& P, const SymbolOptions& opt = {});

/// Membership in F_m: the modulus (supported on S) dominates the minimal one.
bool filtration_member(const GlobalTorsorClass& P, const Modulus& m, const SymbolOptions& opt = {});

/// rank of H^1(U, mu_{p^n}) = p-rank + #S - 1 (S nonempty).
long mu_rank(long p, long n, long num_points, long p_rank);

}  // namespace torsor

#endif
