#include "torsor/global_class.hpp"

namespace torsor {

namespace {

// every zero (for invertibility) or pole of f must lie in S
void require_critical_in_S(const RationalFunction& f, const std::set<PointOfP1>& S,
                           bool invertible_required, const FieldSpec* spec) {
    if (f.is_zero()) {
        if (invertible_required) throw DomainError("Kummer data must be nonzero");
        return;
    }
    auto check = [&](const FqPoly& poly, const char* what) {
        RootSplit rs = poly_roots(poly);
        if (rs.cofactor.degree() > 0)
            throw NonRationalPointError(std::string(what) +
                                        " has an irreducible factor of degree > 1 over k'");
        for (auto& [a, m] : rs.roots) {
            (void)m;
            if (!S.count(PointOfP1::finite(a)))
                throw DomainError("class data is not regular on U: critical point " + a.str() +
                                  " lies outside S");
        }
    };
    check(f.den(), "denominator");
    if (invertible_required) check(f.num(), "numerator");
    long dinf = f.num().degree() - f.den().degree();
    bool inf_critical = invertible_required ? (dinf != 0) : (dinf > 0);
    if (inf_critical && !S.count(PointOfP1::infinity(spec)))
        throw DomainError("class data is not regular on U: infinity is critical but not in S");
}

}  // namespace

GlobalTorsorClass GlobalTorsorClass::local_local(const GroupSpec& g,
                                                 std::vector<WittVector<RationalFunction>> data,
                                                 std::set<PointOfP1> S) {
    if (g.kind != GroupSpec::Kind::LocalLocal) throw DomainError("group is not local-local");
    if (data.size() != g.factors.size()) throw DomainError("one Witt vector per factor required");
    GlobalTorsorClass P;
    P.group_ = g;
    P.S_ = std::move(S);
    for (std::size_t j = 0; j < data.size(); ++j) {
        if (data[j].length() != g.factors[j].first)
            throw DomainError("Witt data length does not match the factor's m");
        for (auto& f : data[j].comps())
            if (f.spec()) P.spec_ = f.spec();
    }
    if (!P.spec_) throw DomainError("class data needs field context");
    for (auto& w : data)
        for (auto& f : w.comps()) require_critical_in_S(f, P.S_, false, P.spec_);
    P.data_ = std::move(data);
    return P;
}

GlobalTorsorClass GlobalTorsorClass::etale_asw(const GroupSpec& g,
                                               WittVector<RationalFunction> data,
                                               std::set<PointOfP1> S) {
    if (g.kind != GroupSpec::Kind::EtaleASW) throw DomainError("group is not etale ASW");
    if (data.length() != g.m) throw DomainError("Witt data length does not match m");
    GlobalTorsorClass P;
    P.group_ = g;
    P.S_ = std::move(S);
    for (auto& f : data.comps())
        if (f.spec()) P.spec_ = f.spec();
    if (!P.spec_) throw DomainError("class data needs field context");
    for (auto& f : data.comps()) require_critical_in_S(f, P.S_, false, P.spec_);
    P.data_.push_back(std::move(data));
    return P;
}

GlobalTorsorClass GlobalTorsorClass::kummer(const GroupSpec& g, RationalFunction data,
                                            std::set<PointOfP1> S) {
    if (g.kind != GroupSpec::Kind::Kummer) throw DomainError("group is not Kummer");
    GlobalTorsorClass P;
    P.group_ = g;
    P.S_ = std::move(S);
    P.spec_ = data.spec();
    if (!P.spec_) throw DomainError("class data needs field context");
    require_critical_in_S(data, P.S_, true, P.spec_);
    P.kummer_ = std::move(data);
    return P;
}

LocalTorsorClass GlobalTorsorClass::localize(const PointOfP1& x) const {
    switch (group_.kind) {
        case GroupSpec::Kind::LocalLocal: {
            std::vector<LocalWittElement> reps;
            for (auto& w : data_) {
                std::vector<RationalFunction> comps;
                for (auto& f : w.comps()) comps.push_back(local_coordinate_form(f, x));
                reps.emplace_back(group_.p, std::move(comps));
            }
            return LocalTorsorClass::local_local(group_, std::move(reps));
        }
        case GroupSpec::Kind::EtaleASW: {
            std::vector<RationalFunction> comps;
            for (auto& f : data_[0].comps()) comps.push_back(local_coordinate_form(f, x));
            return LocalTorsorClass::etale_asw(group_, LocalWittElement(group_.p, std::move(comps)));
        }
        case GroupSpec::Kind::Kummer:
            return LocalTorsorClass::kummer(group_, local_coordinate_form(kummer_, x));
    }
    throw DomainError("unknown group variant");
}

ModulusResult alpha_p_modulus(const GlobalTorsorClass& P) {
    const GroupSpec& g = P.group();
    if (g.kind != GroupSpec::Kind::LocalLocal || g.factors.size() != 1 ||
        g.factors[0] != std::pair<int, int>(1, 1))
        throw DomainError("alpha_p_modulus needs G = alpha_p = W_1[F^1]");
    const RationalFunction& f = P.witt_data()[0].comp(0);
    DifferentialForm omega = d(f);
    ModulusResult out;
    if (omega.is_zero()) {
        out.trivial = true;  // f is a p-th power of a function regular on U
        return out;
    }
    for (const PointOfP1& x : P.S()) {
        long o = ord_at(omega, x);
        if (o < 0) out.modulus.set(x, -o);
    }
    return out;
}

Modulus local_local_modulus(const GlobalTorsorClass& P, const SymbolOptions& opt) {
    if (P.group().kind != GroupSpec::Kind::LocalLocal)
        throw DomainError("local_local_modulus needs a local-local group");
    Modulus m;
    for (const PointOfP1& x : P.S()) {
        long c = local_conductor(P.localize(x), opt);
        if (c > 0) m.set(x, c);
    }
    return m;
}

Modulus kummer_modulus(const GlobalTorsorClass& P) {
    if (P.group().kind != GroupSpec::Kind::Kummer)
        throw DomainError("kummer_modulus needs G = mu_n");
    Modulus m;
    for (const PointOfP1& x : P.S()) {
        long o = local_coordinate_form(P.kummer_data(), x).order_at_zero();
        if (o % P.group().n != 0) m.set(x, 1);
    }
    return m;
}

Modulus asw_modulus(const GlobalTorsorClass& P, const SymbolOptions& opt) {
    if (P.group().kind != GroupSpec::Kind::EtaleASW)
        throw DomainError("asw_modulus needs G = Z/p^m");
    Modulus m;
    for (const PointOfP1& x : P.S()) {
        long c = asw_conductor(P.localize(x), opt);
        if (c > 0) m.set(x, c);
    }
    return m;
}

ModulusResult minimal_modulus(const GlobalTorsorClass& P, const SymbolOptions& opt) {
    switch (P.group().kind) {
        case GroupSpec::Kind::LocalLocal:
            if (P.group().factors.size() == 1 && P.group().factors[0] == std::pair<int, int>(1, 1))
                return alpha_p_modulus(P);
            return {local_local_modulus(P, opt), false};
        case GroupSpec::Kind::EtaleASW: {
            Modulus m = asw_modulus(P, opt);
            return {m, false};
        }
        case GroupSpec::Kind::Kummer: {
            Modulus m = kummer_modulus(P);
            return {m, false};
        }
    }
    throw DomainError("unknown group variant");
}

bool filtration_member(const GlobalTorsorClass& P, const Modulus& m, const SymbolOptions& opt) {
    for (auto& [x, mult] : m.support()) {
        (void)mult;
        if (!P.S().count(x)) throw DomainError("modulus must be supported on S");
    }
    return minimal_modulus(P, opt).modulus.leq(m);
}

long mu_rank(long p, long n, long num_points, long p_rank) {
    (void)p;
    (void)n;
    if (num_points < 1) throw DomainError("mu_rank needs a nonempty S");
    if (p_rank < 0) throw DomainError("negative p-rank");
    return p_rank + num_points - 1;
}

}  // namespace torsor
