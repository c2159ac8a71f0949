#include "torsor/witt.hpp"

#include <atomic>
#include <memory>
#include <mutex>

namespace torsor {

ZPoly ghost_poly(long p, int j, int stride, int offset) {
    ZPoly w;
    BigInt pi = 1;
    for (int i = 0; i <= j; ++i) {
        unsigned long e = 1;
        for (int k = 0; k < j - i; ++k) e *= static_cast<unsigned long>(p);
        w += ZPoly::variable(stride * i + offset, static_cast<unsigned>(e)) * pi;
        pi *= p;
    }
    return w;
}

namespace {

std::atomic<int> g_default_cap{4};

}  // namespace

class WittLawsRegistry {
   public:
    static WittLawsRegistry& instance() {
        static WittLawsRegistry reg;
        return reg;
    }
    const WittLaws& get(long p, int m) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = laws_.find(p);
        if (it == laws_.end()) it = laws_.emplace(p, std::unique_ptr<WittLaws>(new WittLaws(p))).first;
        it->second->extend(m);
        return *it->second;
    }

   private:
    std::mutex mu_;
    std::map<long, std::unique_ptr<WittLaws>> laws_;
};

int WittLaws::default_cap() noexcept { return g_default_cap.load(); }

void WittLaws::set_default_cap(int m) {
    if (m < 1) throw DomainError("Witt length cap must be >= 1");
    g_default_cap.store(m);
}

int WittLaws::hard_cap(long p) {
    int m = 1;
    long w = 1;
    while (w <= 32 / p) {
        w *= p;
        ++m;
    }
    return m;  // largest m with p^(m-1) <= 32: keeps the law polynomials small
}

const WittLaws& WittLaws::get(long p, int m, bool extend_cap) {
    if (p < 2) throw DomainError("Witt laws need a prime p >= 2");
    if (m < 1) throw DomainError("Witt length must be >= 1");
    if (m > hard_cap(p))
        throw DomainError("Witt length " + std::to_string(m) + " exceeds the p = " +
                          std::to_string(p) + " hard cap " + std::to_string(hard_cap(p)));
    if (!extend_cap && m > default_cap())
        throw DomainError("Witt length " + std::to_string(m) + " exceeds the configured cap " +
                          std::to_string(default_cap()));
    return WittLawsRegistry::instance().get(p, m);
}

void WittLaws::extend(int m) {
    // Ghost recursion: p^j * S_j = w_j(X) + w_j(Y) - sum_{i<j} p^i S_i^(p^(j-i)),
    // and analogously with * for products and unary - for negation.
    for (int j = static_cast<int>(sum_.size()); j < m; ++j) {
        BigInt pj = big_pow(p_, static_cast<unsigned long>(j));
        ZPoly wx = ghost_poly(p_, j, 2, 0);
        ZPoly wy = ghost_poly(p_, j, 2, 1);

        ZPoly sum_acc, prod_acc, neg_acc;
        BigInt pi = 1;
        for (int i = 0; i < j; ++i) {
            unsigned long e = 1;
            for (int k = 0; k < j - i; ++k) e *= static_cast<unsigned long>(p_);
            sum_acc += sum_[static_cast<std::size_t>(i)].pow(e) * pi;
            prod_acc += prod_[static_cast<std::size_t>(i)].pow(e) * pi;
            neg_acc += neg_[static_cast<std::size_t>(i)].pow(e) * pi;
            pi *= p_;
        }
        sum_.push_back((wx + wy - sum_acc).divexact_int(pj));
        prod_.push_back((wx * wy - prod_acc).divexact_int(pj));
        neg_.push_back((ZPoly() - wx - neg_acc).divexact_int(pj));

        if (j <= 3) {
            // re-derive the ghost identity from the stored polynomials
            ZPoly gs, gp, gn;
            BigInt q = 1;
            for (int i = 0; i <= j; ++i) {
                unsigned long e = 1;
                for (int k = 0; k < j - i; ++k) e *= static_cast<unsigned long>(p_);
                gs += sum_[static_cast<std::size_t>(i)].pow(e) * q;
                gp += prod_[static_cast<std::size_t>(i)].pow(e) * q;
                gn += neg_[static_cast<std::size_t>(i)].pow(e) * q;
                q *= p_;
            }
            if (!(gs == wx + wy) || !(gp == wx * wy) || !(gn == ZPoly() - wx))
                throw Error("Witt law self-check failed at p = " + std::to_string(p_) +
                            ", j = " + std::to_string(j));
        }
    }
}

std::vector<BigInt> ghost(const WittVector<BigInt>& a) {
    std::vector<BigInt> w;
    w.reserve(a.comps().size());
    for (int j = 0; j < a.length(); ++j) {
        BigInt acc = 0, pi = 1;
        for (int i = 0; i <= j; ++i) {
            unsigned long e = 1;
            for (int k = 0; k < j - i; ++k) e *= static_cast<unsigned long>(a.p());
            acc += pi * big_pow(a.comp(i), e);
            pi *= a.p();
        }
        w.push_back(acc);
    }
    return w;
}

WittVector<BigInt> unghost(long p, const std::vector<BigInt>& w) {
    if (w.empty()) throw DomainError("unghost of an empty ghost vector");
    std::vector<BigInt> a;
    a.reserve(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) {
        BigInt acc = w[j], pi = 1;
        for (std::size_t i = 0; i < j; ++i) {
            unsigned long e = 1;
            for (std::size_t k = 0; k < j - i; ++k) e *= static_cast<unsigned long>(p);
            acc -= pi * big_pow(a[i], e);
            pi *= p;
        }
        a.push_back(divexact(acc, big_pow(p, static_cast<unsigned long>(j)), "ghost inversion"));
    }
    return WittVector<BigInt>(p, std::move(a));
}

}  // namespace torsor
