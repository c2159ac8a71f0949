#ifndef TORSOR_STRUCTURE_HPP
#define TORSOR_STRUCTURE_HPP

#include <string>

#include "torsor/artin_hasse.hpp"
#include "torsor/curve_types.hpp"

namespace torsor {

/// Symbolic description of a generalized Jacobian J_{X,m} and of the
/// invariants read off from it.
struct StructureReport {
    long torus_rank = 0;
    long abelian_dim = 0;
    std::map<PointOfP1, std::vector<std::pair<long, int>>> unipotent_factors;  // point -> (i, r_i)
    long dim_total = 0;
    std::vector<std::string> notes;
};

/// The Witt-group decomposition of the level-n local unit group: all (i, r_i)
/// with 1 <= i < n prime to p, r_i least with p^(r_i) >= n/i.
std::vector<std::pair<long, int>> decompose_local_unipotent(long n, long p);

/// Structure of J_{X,m} for a curve of genus g and p-rank f_X.
StructureReport jacobian_report(long p, long g, long f_X, const Modulus& m);

/// Factor list of the unipotent fundamental group quotient attached to the
/// singular curve of the modulus: Z_p^(#S-1) plus one W[F^(r_{x,i})] per point
/// and prime-to-p index below the multiplicity.
std::vector<std::string> uni_ab_factors(long p, const Modulus& m);

/// Multiplicative-part description: Diag of the Jacobian torsion times the
/// corank-one kernel of the sum map on (Q/Z)^S.
std::vector<std::string> mult_part_report(long num_points, const std::string& torsion_descriptor);

/// n * dim J_{X,m}: the exponent e with |J_{X,m}[F^n]| = p^e.
long frobenius_kernel_exponent(long p, long g, const Modulus& m, long n);

/// Finite-level shape of the maximal pro-p quotient.
struct ProPReport {
    long p = 0;
    long n = 0;
    long free_rank = 0;  // number of Z/p^n factors from the Jacobian
    std::map<PointOfP1, std::pair<long, std::vector<std::pair<long, int>>>> local_levels;
    std::vector<std::string> notes;
};
ProPReport pro_p_report(long p, const Modulus& m, long n, long f_X);

}  // namespace torsor

#endif
