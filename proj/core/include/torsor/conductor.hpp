#ifndef TORSOR_CONDUCTOR_HPP
#define TORSOR_CONDUCTOR_HPP

#include "torsor/local_symbol.hpp"

namespace torsor {

/// The finite abelian group schemes this library computes with:
///  - LocalLocal: a finite product of Frobenius kernels W_m[F^r]
///  - EtaleASW:   the constant group Z/p^m (Artin-Schreier-Witt route)
///  - Kummer:     mu_n
struct GroupSpec {
    enum class Kind { LocalLocal, EtaleASW, Kummer };
    Kind kind = Kind::LocalLocal;
    long p = 0;
    std::vector<std::pair<int, int>> factors;  // LocalLocal: (m_j, r_j)
    int m = 0;                                 // EtaleASW
    long n = 0;                                // Kummer

    static GroupSpec local_local(long p, std::vector<std::pair<int, int>> factors);
    static GroupSpec etale_asw(long p, int m);
    static GroupSpec kummer(long p, long n);
    std::string str() const;
};

/// The smooth resolution a conductor computation runs through: for a factor
/// W_m[F^r] the sequence 0 -> W_m[F^r] -> W_m --F^r--> W_m -> 0, for Z/p^m
/// the sequence 0 -> Z/p^m -> W_m --F-1--> W_m -> 0.  Admissibility (the
/// induced maps on Ext^1(W_l, -) are injective) holds for these by the
/// Frobenius-kernel criterion and is recorded, not recomputed.
struct ResolutionSpec {
    int m = 1;
    int r = 1;                  // F-power; ignored on the Artin-Schreier route
    bool artin_schreier = false;
    static ResolutionSpec for_factor(int m, int r) { return {m, r, false}; }
    static ResolutionSpec for_asw(int m) { return {m, 1, true}; }
    std::string str() const {
        std::string mid = "W_" + std::to_string(m);
        std::string map = artin_schreier ? "F-1" : "F^" + std::to_string(r);
        std::string ker = artin_schreier ? "Z/p^" + std::to_string(m)
                                         : mid + "[F^" + std::to_string(r) + "]";
        return "0 -> " + ker + " -> " + mid + " --" + map + "--> " + mid + " -> 0";
    }
};

/// A cohomology class over L = k'((u)) presented by exact representatives:
/// per local-local factor a Witt vector modulo F^r-images, for Z/p^m a Witt
/// vector modulo Artin-Schreier images, for mu_n a nonzero g modulo n-th
/// powers.
struct LocalTorsorClass {
    GroupSpec group;
    std::vector<LocalWittElement> reps;  // LocalLocal (one per factor) / EtaleASW (one)
    RationalFunction kummer_rep;

    static LocalTorsorClass local_local(const GroupSpec& g, std::vector<LocalWittElement> reps);
    static LocalTorsorClass etale_asw(const GroupSpec& g, LocalWittElement rep);
    static LocalTorsorClass kummer(const GroupSpec& g, RationalFunction rep);
};

/// Greedy pole reduction of the representatives: as long as a component's
/// leading principal term is an F^r-image (pole order divisible by p^r; the
/// coefficient root always exists over perfect k'), subtract F^r(h) for the
/// matching monomial Witt vector h — or wp(h) = F(h) - h on the
/// Artin-Schreier route.  Slots are scanned lowest first, so the vector of
/// pole orders decreases lexicographically and the loop terminates.
LocalTorsorClass reduce_class(const LocalTorsorClass& c);

/// Exact test that w is F^r(sigma) for some Witt vector sigma of rational
/// components (slotwise p^r-th root peeling).
bool is_frobenius_power_image(const WittVector<RationalFunction>& w, int r);

/// Class equality via reduction: the difference must reduce to an integral
/// representative that is itself an image of the defining map.
bool classes_equal(const LocalTorsorClass& a, const LocalTorsorClass& b);

/// The conductor of a local-local class: the least n with some representative
/// in fil_n, computed by reducing first and taking the filtration level of the
/// result (maximum over factors).  An EtaleASW class is accepted and routed
/// to asw_conductor.
long local_conductor(const LocalTorsorClass& c, const SymbolOptions& opt = {});

/// Classical Artin-Schreier-Witt conductor: 0 for unramified classes,
/// otherwise 1 + max_i p^(m-1-i) d_i over the reduced representative.
long asw_conductor(const LocalTorsorClass& c, const SymbolOptions& opt = {});

}  // namespace torsor

#endif
