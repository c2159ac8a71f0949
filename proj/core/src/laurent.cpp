#include "torsor/laurent.hpp"

namespace torsor {

RationalFunction local_coordinate_form(const RationalFunction& f, const PointOfP1& at) {
    if (f.is_zero()) return f;
    if (!at.is_infinity()) {
        FqPoly n = poly_taylor_shift(f.num(), at.value());
        FqPoly d = poly_taylor_shift(f.den(), at.value());
        return RationalFunction(n, d);
    }
    // x = 1/u: f(1/u) = u^(deg den - deg num) * rev(num)/rev(den)
    long dn = f.num().degree(), dd = f.den().degree();
    FqPoly n = poly_reverse(f.num());
    FqPoly d = poly_reverse(f.den());
    if (dd >= dn)
        n = n.shifted_up(dd - dn);
    else
        d = d.shifted_up(dn - dd);
    return RationalFunction(n, d);
}

FqLaurent expand_at_zero(const RationalFunction& g, long terms) {
    if (terms < 1) throw DomainError("expansion needs at least one term");
    Fq zero = Fq::from_int(g.spec() ? g.spec() : nullptr, 0);
    if (g.is_zero()) {
        if (!g.spec()) throw DomainError("expansion of a context-free zero");
        return FqLaurent::zero_mod(zero, FqLaurent::kExact);
    }
    long tn = g.num().trailing_order();
    long td = g.den().trailing_order();
    long ord = tn - td;
    // unit parts: num/u^tn and den/u^td, both nonzero at u = 0
    const auto& nc = g.num().coeffs();
    const auto& dc = g.den().coeffs();
    auto ncoeff = [&](long i) {
        long k = i + tn;
        return k <= g.num().degree() ? nc[static_cast<std::size_t>(k)] : zero;
    };
    auto dcoeff = [&](long i) {
        long k = i + td;
        return k <= g.den().degree() ? dc[static_cast<std::size_t>(k)] : zero;
    };
    Fq d0i = dcoeff(0).inverse();
    std::vector<Fq> s(static_cast<std::size_t>(terms), zero);
    for (long k = 0; k < terms; ++k) {
        Fq acc = ncoeff(k);
        for (long j = 1; j <= k; ++j) acc -= dcoeff(j) * s[static_cast<std::size_t>(k - j)];
        s[static_cast<std::size_t>(k)] = acc * d0i;
    }
    return FqLaurent(zero, ord, ord + terms, std::move(s));
}

FqLaurent laurent_expand(const RationalFunction& f, const PointOfP1& at, long terms) {
    return expand_at_zero(local_coordinate_form(f, at), terms);
}

PrincipalUnit::PrincipalUnit(const FieldSpec* spec, long n) : n_(n) {
    if (n < 1) throw DomainError("unit level must be >= 1");
    c_.assign(static_cast<std::size_t>(n), Fq::from_int(spec, 0));
    c_[0] = Fq::from_int(spec, 1);
}

PrincipalUnit PrincipalUnit::from_coeffs(long n, std::vector<Fq> c) {
    if (n < 1 || static_cast<long>(c.size()) != n) throw DomainError("bad unit coefficient vector");
    if (!c[0].is_one()) throw DomainError("principal unit must have constant term 1");
    PrincipalUnit u(c[0].spec(), n);
    u.c_ = std::move(c);
    return u;
}

PrincipalUnit PrincipalUnit::from_series(const FqLaurent& s, long n) {
    if (n < 1) throw DomainError("unit level must be >= 1");
    std::vector<Fq> c;
    c.reserve(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) c.push_back(s.coeff(k));  // PrecisionError if short
    if (!c[0].is_one()) throw DomainError("series is not a principal unit (constant term != 1)");
    if (!s.is_zero() && s.valuation() < 0) throw DomainError("series is not integral");
    return from_coeffs(n, std::move(c));
}

bool PrincipalUnit::is_one() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

PrincipalUnit PrincipalUnit::operator*(const PrincipalUnit& o) const {
    if (n_ != o.n_) throw DomainError("unit levels differ");
    if (spec() != o.spec()) throw DomainError("unit fields differ");
    std::vector<Fq> r(static_cast<std::size_t>(n_), Fq::from_int(spec(), 0));
    for (long i = 0; i < n_; ++i) {
        if (c_[static_cast<std::size_t>(i)].is_zero()) continue;
        for (long j = 0; i + j < n_; ++j)
            r[static_cast<std::size_t>(i + j)] +=
                c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
    }
    return from_coeffs(n_, std::move(r));
}

PrincipalUnit PrincipalUnit::inverse() const {
    std::vector<Fq> d(static_cast<std::size_t>(n_), Fq::from_int(spec(), 0));
    d[0] = Fq::from_int(spec(), 1);
    for (long k = 1; k < n_; ++k) {
        Fq acc = Fq::from_int(spec(), 0);
        for (long j = 1; j <= k; ++j)
            acc += c_[static_cast<std::size_t>(j)] * d[static_cast<std::size_t>(k - j)];
        d[static_cast<std::size_t>(k)] = -acc;
    }
    return from_coeffs(n_, std::move(d));
}

FqLaurent PrincipalUnit::series() const {
    return FqLaurent(c_[0], 0, n_, c_);
}

std::string PrincipalUnit::str() const {
    std::string out = "1";
    for (long i = 1; i < n_; ++i) {
        const Fq& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        out += "+";
        if (!c.is_one()) out += (c.spec()->degree() > 1 ? "(" + c.str() + ")*" : c.str() + "*");
        out += (i == 1) ? "u" : "u^" + std::to_string(i);
    }
    return out;
}

}  // namespace torsor
