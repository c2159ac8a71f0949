#include "torsor/curve.hpp"

namespace torsor {

namespace {

// split a polynomial into k'-rational roots, throwing if a factor resists
std::vector<std::pair<Fq, long>> split_roots(const FqPoly& f, const char* what) {
    RootSplit rs = poly_roots(f);
    if (rs.cofactor.degree() > 0)
        throw NonRationalPointError(std::string(what) +
                                    ": a critical point is not rational over k' "
                                    "(irreducible factor of degree " +
                                    std::to_string(rs.cofactor.degree()) +
                                    "); enlarge the field (d)");
    return rs.roots;
}

}  // namespace

long ord_at(const DifferentialForm& omega, const PointOfP1& x) {
    if (omega.is_zero()) throw DomainError("order of the zero form");
    const RationalFunction& f = omega.coefficient();
    if (!x.is_infinity()) return local_coordinate_form(f, x).order_at_zero();
    // dx = -u^{-2} du in the chart u = 1/x
    RationalFunction g = local_coordinate_form(f, x);
    return g.order_at_zero() - 2;
}

DifferentialForm d(const RationalFunction& f) { return DifferentialForm(f.derivative()); }

DifferentialForm cartier(const DifferentialForm& omega) {
    if (omega.is_zero()) return omega;
    const RationalFunction& f = omega.coefficient();
    long p = f.spec()->p();
    RationalFunction g = f;
    for (long i = 0; i + 1 < p; ++i) g = g.derivative();
    g = -g;
    if (g.is_zero()) return DifferentialForm(g);
    if (!g.is_pth_power()) throw Error("Cartier: derivative collapse is not a p-th power");
    return DifferentialForm(g.pth_root());
}

bool is_alpha_p_form(const DifferentialForm& omega) { return cartier(omega).is_zero(); }

std::vector<std::pair<PointOfP1, long>> divisor_of(const RationalFunction& g) {
    if (g.is_zero()) throw DomainError("divisor of the zero function");
    std::vector<std::pair<PointOfP1, long>> out;
    for (auto& [a, m] : split_roots(g.num(), "divisor"))
        out.emplace_back(PointOfP1::finite(a), m);
    for (auto& [a, m] : split_roots(g.den(), "divisor"))
        out.emplace_back(PointOfP1::finite(a), -m);
    long dinf = g.den().degree() - g.num().degree();
    if (dinf != 0) out.emplace_back(PointOfP1::infinity(g.spec()), dinf);
    return out;
}

std::vector<std::pair<PointOfP1, long>> divisor_of(const DifferentialForm& omega) {
    if (omega.is_zero()) throw DomainError("divisor of the zero form");
    const RationalFunction& f = omega.coefficient();
    std::vector<std::pair<PointOfP1, long>> out;
    for (auto& [a, m] : split_roots(f.num(), "divisor"))
        out.emplace_back(PointOfP1::finite(a), m);
    for (auto& [a, m] : split_roots(f.den(), "divisor"))
        out.emplace_back(PointOfP1::finite(a), -m);
    PointOfP1 inf = PointOfP1::infinity(f.spec());
    long oinf = ord_at(omega, inf);
    if (oinf != 0) out.emplace_back(inf, oinf);
    return out;
}

}  // namespace torsor
