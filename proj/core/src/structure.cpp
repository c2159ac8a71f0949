#include "torsor/structure.hpp"

namespace torsor {

std::vector<std::pair<long, int>> decompose_local_unipotent(long n, long p) {
    if (n < 1) throw DomainError("level must be >= 1");
    return unipotent_slots(p, n);
}

StructureReport jacobian_report(long p, long g, long f_X, const Modulus& m) {
    if (g < 0 || f_X < 0 || f_X > g) throw DomainError("need 0 <= f_X <= g");
    StructureReport r;
    r.abelian_dim = g;
    long s = static_cast<long>(m.support().size());
    r.torus_rank = s > 0 ? s - 1 : 0;
    long unip = 0;
    for (auto& [x, nx] : m.support()) {
        auto slots = decompose_local_unipotent(nx, p);
        for (auto& [i, ri] : slots) unip += ri;
        r.unipotent_factors.emplace(x, std::move(slots));
    }
    r.dim_total = g + (s > 0 ? m.degree() - 1 : 0);
    r.notes.push_back("abelian part: J_X of dimension " + std::to_string(g) + ", p-rank " +
                      std::to_string(f_X));
    if (s > 0) {
        r.notes.push_back("torus part: G_m^" + std::to_string(r.torus_rank));
        r.notes.push_back("unipotent part: dimension " + std::to_string(unip) +
                          " split into Witt groups per point");
    }
    return r;
}

std::vector<std::string> uni_ab_factors(long p, const Modulus& m) {
    if (m.support().empty()) throw DomainError("uni_ab_factors needs a nonempty support");
    std::vector<std::string> out;
    long s = static_cast<long>(m.support().size());
    out.push_back("Z_p^" + std::to_string(s - 1));
    for (auto& [x, nx] : m.support()) {
        (void)x;
        for (long i = 1; i <= nx - 1; ++i) {
            if (i % p == 0) continue;
            int r = 0;
            long w = i;
            while (w < nx) {
                w *= p;
                ++r;
            }
            out.push_back("W[F^" + std::to_string(r) + "]");
        }
    }
    return out;
}

std::vector<std::string> mult_part_report(long num_points, const std::string& torsion_descriptor) {
    std::vector<std::string> out;
    if (num_points < 0) throw DomainError("negative point count");
    bool torsion_trivial = torsion_descriptor.empty() || torsion_descriptor == "trivial";
    if (num_points <= 1 && torsion_trivial) {
        out.push_back("trivial group");
        return out;
    }
    std::string tors = torsion_trivial ? "trivial" : torsion_descriptor;
    out.push_back("Diag(J_X(k)_tor x ker(Sigma: (Q/Z)^" + std::to_string(num_points) +
                  " -> Q/Z))");
    out.push_back("J_X(k)_tor = " + tors);
    if (num_points >= 1)
        out.push_back("ker Sigma: divisible of corank-1 rank " + std::to_string(num_points - 1));
    return out;
}

long frobenius_kernel_exponent(long p, long g, const Modulus& m, long n) {
    (void)p;
    if (n < 0) throw DomainError("Frobenius power must be >= 0");
    long s = static_cast<long>(m.support().size());
    long dim = g + (s > 0 ? m.degree() - 1 : 0);
    return n * dim;
}

ProPReport pro_p_report(long p, const Modulus& m, long n, long f_X) {
    if (n < 1) throw DomainError("level n must be >= 1");
    if (f_X < 0) throw DomainError("negative p-rank");
    ProPReport r;
    r.p = p;
    r.n = n;
    r.free_rank = f_X;
    long pn = 1;
    bool overflow = false;
    for (long i = 0; i < n && !overflow; ++i) {
        if (pn > (1L << 40) / p)
            overflow = true;
        else
            pn *= p;
    }
    for (auto& [x, nx] : m.support()) {
        long level = overflow ? nx : std::min(pn, nx);
        std::vector<std::pair<long, int>> slots =
            level >= 2 ? decompose_local_unipotent(level, p) : std::vector<std::pair<long, int>>{};
        r.local_levels.emplace(x, std::make_pair(level, std::move(slots)));
    }
    r.notes.push_back("free part: (Z/p^" + std::to_string(n) + ")^" + std::to_string(f_X) +
                      " from the Jacobian p-divisible group");
    r.notes.push_back(
        "local parts are reported as Hom(U^(1)/U^(level), Q_p/Z_p) through their Witt slots");
    return r;
}

}  // namespace torsor
