#include "torsor/poly.hpp"

#include <algorithm>

namespace torsor {

std::pair<FqPoly, FqPoly> poly_divmod(const FqPoly& a, const FqPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree()) return {FqPoly(), a};
    Fq lead_inv = b.lead().inverse();
    std::vector<Fq> rem(a.coeffs());
    std::vector<Fq> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1),
                         ring_zero(b.lead()));
    for (long k = a.degree(); k >= b.degree(); --k) {
        Fq f = rem[static_cast<std::size_t>(k)] * lead_inv;
        if (!f.is_zero()) {
            quot[static_cast<std::size_t>(k - b.degree())] = f;
            for (long i = 0; i <= b.degree(); ++i)
                rem[static_cast<std::size_t>(k - b.degree() + i)] -=
                    f * b.coeffs()[static_cast<std::size_t>(i)];
        }
    }
    rem.resize(static_cast<std::size_t>(std::max<long>(b.degree(), 0)), ring_zero(b.lead()));
    return {FqPoly::from_coeffs(std::move(quot)), FqPoly::from_coeffs(std::move(rem))};
}

FqPoly poly_monic(const FqPoly& a) {
    if (a.is_zero()) return a;
    return a * a.lead().inverse();
}

FqPoly poly_gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
        FqPoly r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    return poly_monic(a);
}

FqPoly poly_pow(const FqPoly& a, long e) {
    if (e < 0) throw DomainError("negative polynomial power");
    if (a.is_zero()) {
        if (e == 0) throw DomainError("0^0 of zero polynomial without context");
        return FqPoly();
    }
    FqPoly acc(ring_one(a.lead()));
    FqPoly base = a;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

FqPoly poly_taylor_shift(const FqPoly& f, const Fq& a) {
    if (f.is_zero()) return f;
    FqPoly xa = FqPoly::from_coeffs({a, ring_one(a)});
    FqPoly acc(f.lead());
    for (long i = f.degree() - 1; i >= 0; --i)
        acc = acc * xa + FqPoly(f.coeffs()[static_cast<std::size_t>(i)]);
    return acc;
}

FqPoly poly_reverse(const FqPoly& f) {
    std::vector<Fq> c(f.coeffs().rbegin(), f.coeffs().rend());
    return FqPoly::from_coeffs(std::move(c));
}

RootSplit poly_roots(const FqPoly& f) {
    RootSplit out;
    out.cofactor = f;
    if (f.is_zero() || f.degree() == 0) return out;
    const FieldSpec* spec = f.lead().spec();
    for (std::uint64_t i = 0; i < spec->order(); ++i) {
        Fq a = Fq::from_index(spec, i);
        if (out.cofactor.degree() < 1) break;
        if (!out.cofactor.eval(a).is_zero()) continue;
        FqPoly lin = FqPoly::from_coeffs({-a, ring_one(a)});
        long mult = 0;
        for (;;) {
            auto [q, r] = poly_divmod(out.cofactor, lin);
            if (!r.is_zero()) break;
            out.cofactor = q;
            ++mult;
        }
        out.roots.emplace_back(a, mult);
    }
    return out;
}

bool poly_is_pth_power(const FqPoly& f) {
    if (f.is_zero()) return true;
    long p = f.lead().spec()->p();
    for (long i = 0; i <= f.degree(); ++i)
        if (i % p != 0 && !f.coeffs()[static_cast<std::size_t>(i)].is_zero()) return false;
    return true;
}

FqPoly poly_pth_root(const FqPoly& f) {
    if (f.is_zero()) return f;
    if (!poly_is_pth_power(f)) throw DomainError("polynomial is not a p-th power");
    long p = f.lead().spec()->p();
    std::vector<Fq> c;
    for (long i = 0; i <= f.degree(); i += p)
        c.push_back(f.coeffs()[static_cast<std::size_t>(i)].pth_root());
    return FqPoly::from_coeffs(std::move(c));
}

RationalFunction::RationalFunction(FqPoly num, FqPoly den) {
    if (den.is_zero()) throw DomainError("division by the zero polynomial");
    if (num.is_zero()) {
        num_ = FqPoly();
        den_ = FqPoly(ring_one(den.lead()));
        return;
    }
    FqPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_divmod(num, g).first;
        den = poly_divmod(den, g).first;
    }
    Fq li = den.lead().inverse();
    num_ = num * li;
    den_ = den * li;
}

RationalFunction RationalFunction::var(const FieldSpec* spec) {
    Fq one = Fq::from_int(spec, 1);
    return RationalFunction(FqPoly::from_coeffs({ring_zero(one), one}), FqPoly(one));
}

const FieldSpec* RationalFunction::spec() const {
    if (!den_.is_zero()) return den_.lead().spec();
    return nullptr;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (is_zero() && !spec()) return o;
    if (o.is_zero() && !o.spec()) return *this;
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) {
        const FieldSpec* s = spec() ? spec() : o.spec();
        return s ? zero(s) : RationalFunction();
    }
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw DomainError("division by the zero function");
    if (is_zero()) return *this;
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

long RationalFunction::degree() const {
    if (is_zero()) throw DomainError("degree of the zero function");
    return num_.degree() - den_.degree();
}

RationalFunction RationalFunction::pow(long e) const {
    if (e < 0) return (ring_one(*this) / *this).pow(-e);
    if (is_zero()) {
        if (e == 0) throw DomainError("0^0");
        return *this;
    }
    return RationalFunction(poly_pow(num_, e), poly_pow(den_, e));
}

RationalFunction RationalFunction::derivative() const {
    if (is_zero()) return *this;
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Fq RationalFunction::eval(const Fq& x) const {
    Fq d = den_.eval(x);
    if (d.is_zero()) throw DomainError("evaluation at a pole");
    if (is_zero()) return ring_zero(x);
    return num_.eval(x) / d;
}

long RationalFunction::order_at_zero() const {
    if (is_zero()) throw DomainError("order of the zero function");
    return num_.trailing_order() - den_.trailing_order();
}

Fq RationalFunction::leading_at_zero() const {
    if (is_zero()) throw DomainError("leading coefficient of the zero function");
    long tn = num_.trailing_order(), td = den_.trailing_order();
    Fq cn = num_.coeffs()[static_cast<std::size_t>(tn)];
    Fq cd = den_.coeffs()[static_cast<std::size_t>(td)];
    return cn / cd;
}

bool RationalFunction::is_pth_power() const {
    if (is_zero()) return true;
    return poly_is_pth_power(num_) && poly_is_pth_power(den_);
}

RationalFunction RationalFunction::pth_root() const {
    if (is_zero()) return *this;
    return RationalFunction(poly_pth_root(num_), poly_pth_root(den_));
}

std::string poly_str(const FqPoly& f, char var) {
    if (f.is_zero()) return "0";
    std::string out;
    bool ext = f.lead().spec()->degree() > 1;
    for (long i = f.degree(); i >= 0; --i) {
        const Fq& c = f.coeffs()[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += "+";
        std::string cs = c.str();
        if (i == 0) {
            out += (ext && cs.find('+') != std::string::npos) ? "(" + cs + ")" : cs;
            continue;
        }
        if (!c.is_one()) {
            out += (ext && (cs.find('+') != std::string::npos || cs.find('t') != std::string::npos))
                       ? "(" + cs + ")*"
                       : cs + "*";
        }
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

std::string RationalFunction::str(char var) const {
    if (is_zero()) return "0";
    std::string n = poly_str(num_, var);
    if (den_.degree() == 0) return n;
    std::string d = poly_str(den_, var);
    bool npar = num_.degree() > 0 && n.find('+') != std::string::npos;
    bool dpar = den_.degree() > 0;
    return (npar ? "(" + n + ")" : n) + "/" + (dpar ? "(" + d + ")" : d);
}

}  // namespace torsor
