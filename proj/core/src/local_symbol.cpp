#include "torsor/local_symbol.hpp"

#include <set>

#include "torsor/curve.hpp"

namespace torsor {

Fq symbol_ga(const FqLaurent& f, const FqLaurent& g) {
    if (g.is_zero()) throw DomainError("local symbol needs g != 0");
    return (f * g.derivative() * g.inverse()).residue();
}

namespace {

Laurent<Zq> lift_series(const ZqRing* ring, const FqLaurent& s) {
    std::vector<Zq> c;
    long lo = s.low();
    for (long k = lo; k < s.stored_end(); ++k) c.push_back(teichmuller(ring, s.coeff(k)));
    return Laurent<Zq>(Zq(ring, 0), lo, s.precision(), std::move(c));
}

}  // namespace

SymbolValue schmid_witt_symbol(long p, const std::vector<FqLaurent>& f, const FqLaurent& g,
                               int delta) {
    if (f.empty()) throw DomainError("empty Witt element");
    if (g.is_zero()) throw DomainError("local symbol needs g != 0");
    int m = static_cast<int>(f.size());
    if (delta < 0) delta = m;
    const FieldSpec* spec = g.sample().spec() ? g.sample().spec() : f[0].sample().spec();
    if (!spec) throw DomainError("local symbol without field context");
    int levels = m + delta;
    const ZqRing* ring = ZqRing::get(spec, levels);

    Laurent<Zq> gt = lift_series(ring, g);
    Laurent<Zq> dlog = gt.derivative() * gt.inverse();

    std::vector<Laurent<Zq>> ft;
    ft.reserve(f.size());
    for (auto& fi : f) ft.push_back(lift_series(ring, fi));

    // ghost residues w_j = Res(ghost_j(f~) dlog g~)
    std::vector<Zq> w;
    w.reserve(static_cast<std::size_t>(m));
    Zq zero(ring, 0);
    for (int j = 0; j < m; ++j) {
        Laurent<Zq> ghost_j = Laurent<Zq>::zero_mod(zero, Laurent<Zq>::kExact);
        std::int64_t pi = 1;
        for (int i = 0; i <= j; ++i) {
            unsigned long e = 1;
            for (int k = 0; k < j - i; ++k) e *= static_cast<unsigned long>(p);
            ghost_j = ghost_j + ring_pow(ft[static_cast<std::size_t>(i)], e) * Zq(ring, pi);
            pi *= p;
        }
        w.push_back((ghost_j * dlog).residue());
    }

    // invert the ghost vector; division by p^j is exact by the residue theorem
    std::vector<Zq> b;
    b.reserve(w.size());
    for (int j = 0; j < m; ++j) {
        Zq acc = w[static_cast<std::size_t>(j)];
        std::int64_t pi = 1;
        for (int i = 0; i < j; ++i) {
            unsigned long e = 1;
            for (int k = 0; k < j - i; ++k) e *= static_cast<unsigned long>(p);
            acc = acc - ring_pow(b[static_cast<std::size_t>(i)], e) * Zq(ring, pi);
            pi *= p;
        }
        b.push_back(acc.divide_by_p(j));
    }

    std::vector<Fq> out;
    out.reserve(b.size());
    for (auto& x : b) out.push_back(x.mod_p());
    return SymbolValue(p, std::move(out));
}

LocalWittElement::LocalWittElement(long p, std::vector<RationalFunction> comps)
    : p_(p), c_(std::move(comps)) {
    if (c_.empty()) throw DomainError("Witt elements have length >= 1");
    spec_ = nullptr;
    for (auto& f : c_)
        if (f.spec()) {
            if (spec_ && spec_ != f.spec()) throw DomainError("components over different fields");
            spec_ = f.spec();
        }
    if (!spec_) throw DomainError("local element needs at least one component with field context");
    if (spec_->p() != p) throw DomainError("component field characteristic differs from p");
    // context-free zeros are normalized into the common field
    for (auto& f : c_)
        if (!f.spec()) f = RationalFunction::zero(spec_);
}

bool LocalWittElement::is_integral() const {
    for (auto& f : c_)
        if (!f.is_zero() && f.order_at_zero() < 0) return false;
    return true;
}

long LocalWittElement::pole_bound() const {
    long m = length();
    long best = 0;
    for (long i = 0; i < m; ++i) {
        const auto& f = c_[static_cast<std::size_t>(i)];
        if (f.is_zero()) continue;
        long pole = std::max<long>(0, -f.order_at_zero());
        long weight = 1;
        for (long k = 0; k < m - 1 - i; ++k) weight *= p_;
        best = std::max(best, weight * pole);
    }
    return 1 + best;
}

std::vector<FqLaurent> LocalWittElement::expanded(long rel_prec) const {
    std::vector<FqLaurent> out;
    out.reserve(c_.size());
    for (auto& f : c_) out.push_back(expand_at_zero(f, rel_prec));
    return out;
}

namespace {

SymbolValue symbol_once(const LocalWittElement& f, const RationalFunction& g, long rel, int delta) {
    std::vector<FqLaurent> fe = f.expanded(rel);
    FqLaurent ge = expand_at_zero(g, rel);
    return schmid_witt_symbol(f.p(), fe, ge, delta);
}

}  // namespace

SymbolValue local_symbol(const LocalWittElement& f, const RationalFunction& g,
                         const SymbolOptions& opt) {
    if (g.is_zero()) throw DomainError("local symbol needs g != 0");
    long vg = g.order_at_zero();
    long rel = opt.prec_override > 0 ? opt.prec_override
                                     : f.pole_bound() + std::abs(vg) + 8;
    int delta = opt.delta_override >= 0 ? opt.delta_override : static_cast<int>(f.length());
    for (int attempt = 0;; ++attempt) {
        try {
            SymbolValue v = symbol_once(f, g, rel, delta);
            if (opt.stable) {
                SymbolValue w = symbol_once(f, g, 2 * rel, delta + 2);
                if (!(v == w))
                    throw Error("local symbol unstable under doubled precision / raised slack");
            }
            return v;
        } catch (const PrecisionError&) {
            if (attempt >= 4) throw;
            rel *= 2;
        } catch (const DivisibilityError&) {
            if (attempt >= 1) throw;
            delta += 2;  // one automatic slack raise, then fail
        }
    }
}

namespace {

RationalFunction embed_rational(const FieldEmbedding& emb, const RationalFunction& f) {
    if (f.is_zero()) return RationalFunction::zero(emb.to());
    auto map_poly = [&](const FqPoly& p) {
        std::vector<Fq> c;
        c.reserve(p.coeffs().size());
        for (auto& a : p.coeffs()) c.push_back(emb.map(a));
        return FqPoly::from_coeffs(std::move(c));
    };
    return RationalFunction(map_poly(f.num()), map_poly(f.den()));
}

}  // namespace

// The symbol against 1 - c u^j is a polynomial map in c of degree at most
// B/j, B the weighted pole bound: each ghost residue picks coefficients of
// u^{-sj} with s <= pole/j, and the ghost inversion never raises the degree
// past B/j.  Vanishing at deg+1 distinct points of any field therefore
// certifies vanishing for every c in k-bar, which is what the filtration of
// the (geometric) theory asks for.  When k' itself is too small the values
// are drawn from a deterministic extension.
bool fil_membership(const LocalWittElement& f, long n, const SymbolOptions& opt) {
    if (n < 0) throw DomainError("filtration level must be >= 0");
    if (n == 0) return f.is_integral();
    long J = f.pole_bound();
    long B = J - 1;
    const FieldSpec* spec = f.spec();
    for (long j = n; j <= J; ++j) {
        long deg = B / j + 1;  // one spare point beyond the bound
        const FieldEmbedding& emb = extend_field(spec, static_cast<std::uint64_t>(deg) + 2);
        const FieldSpec* big = emb.to();
        LocalWittElement fe = f;
        if (big != spec) {
            std::vector<RationalFunction> comps;
            for (auto& h : f.comps()) comps.push_back(embed_rational(emb, h));
            fe = LocalWittElement(f.p(), std::move(comps));
        }
        RationalFunction one(Fq::from_int(big, 1));
        RationalFunction u = RationalFunction::var(big);
        for (long ci = 1; ci <= deg + 1; ++ci) {
            Fq c = Fq::from_index(big, static_cast<std::uint64_t>(ci));
            RationalFunction g = one - RationalFunction(c) * u.pow(j);
            if (!local_symbol(fe, g, opt).is_zero()) return false;
        }
    }
    return true;
}

long fil_level(const LocalWittElement& f, const SymbolOptions& opt) {
    if (f.is_integral()) return 0;
    // one sweep: the level is one past the largest generator index that pairs
    // nontrivially (beyond the pole bound everything dies by valuation count)
    long J = f.pole_bound();
    long B = J - 1;
    const FieldSpec* spec = f.spec();
    long maxbad = 0;
    for (long j = 1; j <= J; ++j) {
        long deg = B / j + 1;
        const FieldEmbedding& emb = extend_field(spec, static_cast<std::uint64_t>(deg) + 2);
        const FieldSpec* big = emb.to();
        LocalWittElement fe = f;
        if (big != spec) {
            std::vector<RationalFunction> comps;
            for (auto& h : f.comps()) comps.push_back(embed_rational(emb, h));
            fe = LocalWittElement(f.p(), std::move(comps));
        }
        RationalFunction one(Fq::from_int(big, 1));
        RationalFunction u = RationalFunction::var(big);
        for (long ci = 1; ci <= deg + 1; ++ci) {
            Fq c = Fq::from_index(big, static_cast<std::uint64_t>(ci));
            RationalFunction g = one - RationalFunction(c) * u.pow(j);
            if (!local_symbol(fe, g, opt).is_zero()) {
                maxbad = j;
                break;
            }
        }
    }
    return maxbad + 1;
}

SymbolValue reciprocity_sum(const WittVector<RationalFunction>& f, const RationalFunction& g,
                            const SymbolOptions& opt) {
    if (g.is_zero()) throw DomainError("reciprocity needs g != 0");
    const FieldSpec* spec = g.spec();
    long p = f.p();
    int m = f.length();

    std::set<PointOfP1> pts;
    for (auto& [x, o] : divisor_of(g)) {
        (void)o;
        pts.insert(x);
    }
    for (int i = 0; i < m; ++i) {
        const RationalFunction& fi = f.comp(i);
        if (fi.is_zero()) continue;
        RootSplit rs = poly_roots(fi.den());
        if (rs.cofactor.degree() > 0)
            throw NonRationalPointError(
                "reciprocity: component denominator has an irreducible factor of degree > 1");
        for (auto& [a, mult] : rs.roots) {
            (void)mult;
            pts.insert(PointOfP1::finite(a));
        }
        if (!fi.is_zero() && fi.num().degree() > fi.den().degree())
            pts.insert(PointOfP1::infinity(spec));
    }

    SymbolValue total = SymbolValue::zeros(p, m, Fq::from_int(spec, 0));
    for (const PointOfP1& x : pts) {
        std::vector<RationalFunction> comps;
        comps.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) comps.push_back(local_coordinate_form(f.comp(i), x));
        LocalWittElement floc(p, comps);
        RationalFunction gloc = local_coordinate_form(g, x);
        if (floc.is_integral() && gloc.order_at_zero() == 0) continue;
        total = witt_add(total, local_symbol(floc, gloc, opt), true);
    }
    return total;
}

}  // namespace torsor
