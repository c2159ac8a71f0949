#include "torsor/artin_hasse.hpp"

#include <mutex>

namespace torsor {

std::vector<BigRat> artin_hasse_series_q(long p, long terms) {
    if (terms < 1) throw DomainError("need at least one term");
    // F' = -(sum_s u^(p^s - 1)) F gives (k+1) f_{k+1} = -sum_{p^s - 1 <= k} f_{k - p^s + 1}
    std::vector<BigRat> f(static_cast<std::size_t>(terms));
    f[0] = 1;
    for (long k = 0; k + 1 < terms; ++k) {
        BigRat acc = 0;
        for (long ps = 1; ps - 1 <= k; ps *= p) acc += f[static_cast<std::size_t>(k - ps + 1)];
        acc /= BigRat(k + 1);
        f[static_cast<std::size_t>(k + 1)] = -acc;
    }
    return f;
}

namespace {

std::mutex g_ah_mu;
std::map<long, std::vector<long>> g_ah_cache;

}  // namespace

std::vector<long> artin_hasse_series(long p, long terms) {
    std::lock_guard<std::mutex> lk(g_ah_mu);
    auto& cached = g_ah_cache[p];
    if (static_cast<long>(cached.size()) < terms) {
        auto fq = artin_hasse_series_q(p, terms);
        std::vector<long> red;
        red.reserve(fq.size());
        BigInt bp(p);
        for (auto& c : fq) {
            if (mpz_divisible_p(c.get_den().get_mpz_t(), bp.get_mpz_t()))
                throw Error("Artin-Hasse coefficient has denominator divisible by p");
            BigInt deninv, num = c.get_num() % bp, den = c.get_den() % bp;
            if (!mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), bp.get_mpz_t()))
                throw Error("Artin-Hasse denominator not invertible mod p");
            BigInt r = (num * deninv) % bp;
            if (sgn(r) < 0) r += bp;
            red.push_back(r.get_si());
        }
        cached = std::move(red);
    }
    std::vector<long> out(cached.begin(), cached.begin() + terms);
    return out;
}

int slot_length(long p, long n, long i) {
    if (i < 1 || i >= n || i % p == 0) throw DomainError("slot index must satisfy 1 <= i < n, p not dividing i");
    int r = 0;
    long w = i;
    while (w < n) {
        w *= p;
        ++r;
    }
    return r;  // least r with i p^r >= n
}

std::vector<std::pair<long, int>> unipotent_slots(long p, long n) {
    std::vector<std::pair<long, int>> out;
    for (long i = 1; i < n; ++i)
        if (i % p != 0) out.emplace_back(i, slot_length(p, n, i));
    return out;
}

namespace {

// multiply the level-n coefficient vector by F(a u^j) in place
void mul_by_F_factor(std::vector<Fq>& unit, long n, const Fq& a, long j,
                     const std::vector<long>& F) {
    if (a.is_zero()) return;
    const FieldSpec* spec = a.spec();
    std::vector<Fq> factor(static_cast<std::size_t>(n), Fq::from_int(spec, 0));
    Fq apow = Fq::from_int(spec, 1);
    for (long k = 0; k * j < n; ++k) {
        factor[static_cast<std::size_t>(k * j)] = apow * Fq::from_int(spec, F[static_cast<std::size_t>(k)]);
        apow = apow * a;
    }
    std::vector<Fq> out(static_cast<std::size_t>(n), Fq::from_int(spec, 0));
    for (long i = 0; i < n; ++i) {
        if (unit[static_cast<std::size_t>(i)].is_zero()) continue;
        for (long k = 0; i + k * j < n; ++k)
            out[static_cast<std::size_t>(i + k * j)] +=
                unit[static_cast<std::size_t>(i)] * factor[static_cast<std::size_t>(k * j)];
    }
    unit = std::move(out);
}

}  // namespace

PrincipalUnit unit_from_witt(const WittVector<Fq>& a, long i, long n) {
    long p = a.p();
    int r = slot_length(p, n, i);
    if (a.length() != r)
        throw DomainError("Witt length " + std::to_string(a.length()) + " does not match slot length " +
                          std::to_string(r));
    const FieldSpec* spec = a.comp(0).spec();
    auto F = artin_hasse_series(p, n);
    std::vector<Fq> unit(static_cast<std::size_t>(n), Fq::from_int(spec, 0));
    unit[0] = Fq::from_int(spec, 1);
    long jp = i;
    for (int s = 0; s < r; ++s) {
        if (jp < n) mul_by_F_factor(unit, n, a.comp(s), jp, F);
        jp *= p;
    }
    return PrincipalUnit::from_coeffs(n, std::move(unit));
}

UnitDecomposition decompose_unit(const PrincipalUnit& v) {
    const FieldSpec* spec = v.spec();
    long p = spec->p();
    long n = v.level();
    UnitDecomposition dec;
    dec.p = p;
    dec.n = n;
    for (auto& [i, r] : unipotent_slots(p, n))
        dec.slots.emplace(i, WittVector<Fq>::zeros(p, r, Fq::from_int(spec, 0)));

    auto F = artin_hasse_series(p, n);
    std::vector<Fq> work;
    work.reserve(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) work.push_back(v.coeff(k));
    for (long j = 1; j < n; ++j) {
        Fq c = work[static_cast<std::size_t>(j)];
        if (c.is_zero()) continue;
        long s = 0, i = j;
        while (i % p == 0) {
            i /= p;
            ++s;
        }
        Fq a = -c;
        dec.slots.at(i).comp_mut(static_cast<int>(s)) = a;
        // divide the factor out: work *= F(a u^j)^{-1}
        std::vector<Fq> fac(static_cast<std::size_t>(n), Fq::from_int(spec, 0));
        fac[0] = Fq::from_int(spec, 1);
        mul_by_F_factor(fac, n, a, j, F);
        PrincipalUnit inv = PrincipalUnit::from_coeffs(n, std::move(fac)).inverse();
        PrincipalUnit cur = PrincipalUnit::from_coeffs(n, std::move(work));
        PrincipalUnit next = cur * inv;
        work.clear();
        for (long k = 0; k < n; ++k) work.push_back(next.coeff(k));
    }
    for (long j = 1; j < n; ++j)
        if (!work[static_cast<std::size_t>(j)].is_zero())
            throw Error("unit decomposition did not terminate at the identity");
    return dec;
}

PrincipalUnit reassemble_unit(const UnitDecomposition& dec, const FieldSpec* spec) {
    PrincipalUnit acc(spec, dec.n);
    for (auto& [i, a] : dec.slots) acc = acc * unit_from_witt(a, i, dec.n);
    return acc;
}

}  // namespace torsor
