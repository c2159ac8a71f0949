#ifndef TORSOR_ARTIN_HASSE_HPP
#define TORSOR_ARTIN_HASSE_HPP

#include <map>
#include <vector>

#include "torsor/laurent.hpp"
#include "torsor/witt.hpp"

namespace torsor {

/// First `terms` coefficients of F(u) = exp(-sum_{s>=0} u^(p^s)/p^s) over Q.
std::vector<BigRat> artin_hasse_series_q(long p, long terms);

/// The same series reduced mod p.  Every denominator is checked to be prime
/// to p before reduction (a denominator divisible by p would be a bug, not an
/// input problem).  Cached per prime.
std::vector<long> artin_hasse_series(long p, long terms);

/// Least r with p^r >= n/i (equivalently i p^r >= n); the Witt length of slot i.
int slot_length(long p, long n, long i);

/// All pairs (i, r_i) with 1 <= i < n, p not dividing i, ordered by i.
std::vector<std::pair<long, int>> unipotent_slots(long p, long n);

/// prod_s F(a_s u^(i p^s)) at level n, for a Witt vector a of length
/// slot_length(p, n, i).  Requires p not dividing i and 1 <= i < n.
PrincipalUnit unit_from_witt(const WittVector<Fq>& a, long i, long n);

/// The coordinates of a level-n principal unit under the splitting of
/// (1 + u k'[[u]])/(1 + u^n): one Witt vector of length r_i per prime-to-p
/// index i < n.  Every slot is present (zero vectors included).
struct UnitDecomposition {
    long p = 0;
    long n = 0;
    std::map<long, WittVector<Fq>> slots;

    long slot_total() const {
        long s = 0;
        for (auto& [i, w] : slots) s += w.length();
        return s;
    }
};

/// Greedy inverse of the splitting: peel the lowest nonzero coefficient
/// c_j u^j, factor j = i p^s with p not dividing i, record the component and
/// divide the matching F-factor out.  Exact at every level.
UnitDecomposition decompose_unit(const PrincipalUnit& v);

/// Multiply the slots back together; inverse of decompose_unit.
PrincipalUnit reassemble_unit(const UnitDecomposition& dec, const FieldSpec* spec);

}  // namespace torsor

#endif
