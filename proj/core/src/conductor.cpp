#include "torsor/conductor.hpp"

namespace torsor {

GroupSpec GroupSpec::local_local(long p, std::vector<std::pair<int, int>> factors) {
    if (factors.empty()) throw DomainError("local-local group needs at least one factor");
    for (auto& [m, r] : factors) {
        if (m < 1 || r < 1) throw DomainError("W_m[F^r] needs m >= 1 and r >= 1");
        if (m > WittLaws::hard_cap(p)) throw DomainError("factor length exceeds the Witt cap");
    }
    GroupSpec g;
    g.kind = Kind::LocalLocal;
    g.p = p;
    g.factors = std::move(factors);
    return g;
}

GroupSpec GroupSpec::etale_asw(long p, int m) {
    if (m < 1) throw DomainError("Z/p^m needs m >= 1");
    if (m > WittLaws::hard_cap(p)) throw DomainError("m exceeds the Witt cap");
    GroupSpec g;
    g.kind = Kind::EtaleASW;
    g.p = p;
    g.m = m;
    return g;
}

GroupSpec GroupSpec::kummer(long p, long n) {
    if (n < 2) throw DomainError("mu_n needs n >= 2");
    GroupSpec g;
    g.kind = Kind::Kummer;
    g.p = p;
    g.n = n;
    return g;
}

std::string GroupSpec::str() const {
    switch (kind) {
        case Kind::LocalLocal: {
            std::string out;
            for (auto& [m, r] : factors) {
                if (!out.empty()) out += "x";
                out += "W" + std::to_string(m) + "[F^" + std::to_string(r) + "]";
            }
            return out;
        }
        case Kind::EtaleASW:
            return "Z/p^" + std::to_string(m);
        case Kind::Kummer:
            return "mu_" + std::to_string(n);
    }
    return "?";
}

LocalTorsorClass LocalTorsorClass::local_local(const GroupSpec& g,
                                               std::vector<LocalWittElement> reps) {
    if (g.kind != GroupSpec::Kind::LocalLocal) throw DomainError("group is not local-local");
    if (reps.size() != g.factors.size()) throw DomainError("one representative per factor required");
    for (std::size_t j = 0; j < reps.size(); ++j)
        if (reps[j].length() != g.factors[j].first)
            throw DomainError("representative length does not match the factor's m");
    LocalTorsorClass c;
    c.group = g;
    c.reps = std::move(reps);
    return c;
}

LocalTorsorClass LocalTorsorClass::etale_asw(const GroupSpec& g, LocalWittElement rep) {
    if (g.kind != GroupSpec::Kind::EtaleASW) throw DomainError("group is not etale ASW");
    if (rep.length() != g.m) throw DomainError("representative length does not match m");
    LocalTorsorClass c;
    c.group = g;
    c.reps.push_back(std::move(rep));
    return c;
}

LocalTorsorClass LocalTorsorClass::kummer(const GroupSpec& g, RationalFunction rep) {
    if (g.kind != GroupSpec::Kind::Kummer) throw DomainError("group is not Kummer");
    if (rep.is_zero()) throw DomainError("Kummer representative must be nonzero");
    LocalTorsorClass c;
    c.group = g;
    c.kummer_rep = std::move(rep);
    return c;
}

namespace {

// pole order at u = 0, or 0 for integral/zero components
long pole_order(const RationalFunction& f) {
    if (f.is_zero()) return 0;
    return std::max<long>(0, -f.order_at_zero());
}

// Witt monomial supported in one slot
WittVector<RationalFunction> slot_monomial(long p, int m, int slot, const RationalFunction& v) {
    auto w = WittVector<RationalFunction>::zeros(p, m, v);
    w.comp_mut(slot) = v;
    return w;
}

WittVector<RationalFunction> frobenius_power(WittVector<RationalFunction> w, int r) {
    for (int i = 0; i < r; ++i) w = frobenius(w);
    return w;
}

// greedy reduction of one Witt representative along the given resolution;
// the Artin-Schreier route subtracts wp(h) = F(h) - h
WittVector<RationalFunction> reduce_witt(WittVector<RationalFunction> w, const ResolutionSpec& res) {
    long p = w.p();
    int m = w.length();
    bool asw = res.artin_schreier;
    int r = res.r;
    long pr = 1;
    for (int i = 0; i < (asw ? 1 : r); ++i) pr *= p;
    const FieldSpec* spec = nullptr;
    for (auto& f : w.comps())
        if (f.spec()) spec = f.spec();
    if (!spec) throw DomainError("reduction without field context");
    RationalFunction u = RationalFunction::var(spec);

    for (;;) {
        int slot = -1;
        for (int i = 0; i < m; ++i) {
            const RationalFunction& fi = w.comp(i);
            long d = pole_order(fi);
            if (d > 0 && d % pr == 0) {
                slot = i;
                break;
            }
        }
        if (slot < 0) return w;
        const RationalFunction& fi = w.comp(slot);
        long d = pole_order(fi);
        Fq root = fi.leading_at_zero().pth_root(asw ? 1 : r);
        RationalFunction hval = RationalFunction(root) * u.pow(-(d / pr));
        WittVector<RationalFunction> h = slot_monomial(p, m, slot, hval);
        WittVector<RationalFunction> image =
            asw ? witt_sub(frobenius(h), h, true) : frobenius_power(h, r);
        w = witt_sub(w, image, true);
    }
}

}  // namespace

LocalTorsorClass reduce_class(const LocalTorsorClass& c) {
    LocalTorsorClass out = c;
    switch (c.group.kind) {
        case GroupSpec::Kind::LocalLocal:
            for (std::size_t j = 0; j < c.reps.size(); ++j) {
                auto res = ResolutionSpec::for_factor(c.group.factors[j].first,
                                                      c.group.factors[j].second);
                out.reps[j] = LocalWittElement::from_witt(reduce_witt(c.reps[j].as_witt(), res));
            }
            return out;
        case GroupSpec::Kind::EtaleASW: {
            auto w = reduce_witt(c.reps[0].as_witt(), ResolutionSpec::for_asw(c.group.m));
            out.reps[0] = LocalWittElement::from_witt(w);
            return out;
        }
        case GroupSpec::Kind::Kummer:
            throw DomainError("reduce_class applies to local-local and etale ASW classes");
    }
    return out;
}

bool is_frobenius_power_image(const WittVector<RationalFunction>& w, int r) {
    long p = w.p();
    int m = w.length();
    WittVector<RationalFunction> cur = w;
    const FieldSpec* spec = nullptr;
    for (auto& f : cur.comps())
        if (f.spec()) spec = f.spec();
    if (!spec) return true;  // all zero
    long pr = 1;
    for (int i = 0; i < r; ++i) pr *= p;
    for (int slot = 0; slot < m; ++slot) {
        const RationalFunction& fi = cur.comp(slot);
        if (fi.is_zero()) continue;
        // the slot value must be a p^r-th power as a rational function of u
        RationalFunction sigma = fi;
        for (int i = 0; i < r; ++i) {
            if (!sigma.is_pth_power()) return false;
            sigma = sigma.pth_root();
        }
        auto h = slot_monomial(p, m, slot, sigma);
        cur = witt_sub(cur, frobenius_power(h, r), true);
        if (!cur.comp(slot).is_zero()) return false;
    }
    return cur.is_zero();
}

bool classes_equal(const LocalTorsorClass& a, const LocalTorsorClass& b) {
    if (a.group.kind != b.group.kind || a.group.p != b.group.p) return false;
    switch (a.group.kind) {
        case GroupSpec::Kind::LocalLocal: {
            if (a.group.factors != b.group.factors) return false;
            for (std::size_t j = 0; j < a.reps.size(); ++j) {
                auto diff = witt_sub(a.reps[j].as_witt(), b.reps[j].as_witt(), true);
                auto red = reduce_witt(diff, ResolutionSpec::for_factor(a.group.factors[j].first,
                                                                        a.group.factors[j].second));
                if (!is_frobenius_power_image(red, a.group.factors[j].second)) return false;
            }
            return true;
        }
        case GroupSpec::Kind::EtaleASW: {
            // Geometric convention (k' stands in for an algebraically closed
            // residue field): an integral difference is an Artin-Schreier
            // image, since wp is onto W_m(O) there.
            if (a.group.m != b.group.m) return false;
            auto diff = witt_sub(a.reps[0].as_witt(), b.reps[0].as_witt(), true);
            auto red = reduce_witt(diff, ResolutionSpec::for_asw(a.group.m));
            return LocalWittElement::from_witt(red).is_integral();
        }
        case GroupSpec::Kind::Kummer: {
            // Same convention: units of k-bar[[u]] are n-divisible, so the
            // class of g is determined by ord(g) mod n.
            if (a.group.n != b.group.n) return false;
            RationalFunction q = a.kummer_rep / b.kummer_rep;
            return q.order_at_zero() % a.group.n == 0;
        }
    }
    return false;
}

long local_conductor(const LocalTorsorClass& c, const SymbolOptions& opt) {
    if (c.group.kind == GroupSpec::Kind::Kummer)
        throw DomainError("local_conductor applies to local-local (or etale ASW) classes");
    if (c.group.kind == GroupSpec::Kind::EtaleASW) return asw_conductor(c, opt);
    LocalTorsorClass red = reduce_class(c);
    long best = 0;
    for (auto& rep : red.reps) best = std::max(best, fil_level(rep, opt));
    return best;
}

long asw_conductor(const LocalTorsorClass& c, const SymbolOptions& opt) {
    (void)opt;
    if (c.group.kind != GroupSpec::Kind::EtaleASW)
        throw DomainError("asw_conductor applies to etale ASW classes");
    LocalTorsorClass red = reduce_class(c);
    const LocalWittElement& f = red.reps[0];
    if (f.is_integral()) return 0;
    long p = c.group.p;
    int m = f.length();
    long best = 0;
    for (int i = 0; i < m; ++i) {
        long d = pole_order(f.comp(i));
        long weight = 1;
        for (int k = 0; k < m - 1 - i; ++k) weight *= p;
        best = std::max(best, weight * d);
    }
    return 1 + best;
}

}  // namespace torsor
