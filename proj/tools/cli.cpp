#include "cli.hpp"

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "torsor/artin_hasse.hpp"
#include "torsor/global_class.hpp"
#include "torsor/parse.hpp"
#include "torsor/selftest.hpp"
#include "torsor/structure.hpp"

namespace torsor::cli {

namespace {

using json = nlohmann::ordered_json;

struct CommonOpts {
    long p = 0;
    int d = 1;
    std::string field_modulus;
    bool pretty = false;
    long precision_override = 0;
};

FieldSpecPtr make_spec(const CommonOpts& o) {
    if (!o.field_modulus.empty()) {
        auto fp = FieldSpec::prime(o.p);
        RationalFunction r = parse_rational(o.field_modulus, fp, 't');
        if (r.den().degree() != 0) throw DomainError("field modulus must be a polynomial in t");
        std::vector<long> coeffs;
        for (auto& c : r.num().coeffs()) coeffs.push_back(c.coeff(0));
        auto spec = FieldSpec::extension(o.p, coeffs);
        if (o.d != 1 && o.d != spec->degree())
            throw DomainError("--d disagrees with the degree of --field-modulus");
        return spec;
    }
    if (o.d > 1)
        throw DomainError("extension fields need --field-modulus (no built-in polynomial table)");
    return FieldSpec::prime(o.p);
}

void emit(std::ostream& out, const CommonOpts& o, const json& j) {
    if (o.pretty)
        out << j.dump(2) << "\n";
    else
        out << j.dump() << "\n";
}

json modulus_to_json(const Modulus& m) {
    json arr = json::array();
    for (auto& [x, n] : m.support()) arr.push_back({{"point", x.str()}, {"multiplicity", n}});
    return arr;
}

json witt_to_json(const WittVector<Fq>& w) {
    json arr = json::array();
    for (int i = 0; i < w.length(); ++i) arr.push_back(w.comp(i).str());
    return arr;
}

json witt_rational_to_json(const std::vector<RationalFunction>& comps, char var) {
    json arr = json::array();
    for (auto& f : comps) arr.push_back(f.str(var));
    return arr;
}

GroupSpec parse_group(const std::string& text, long p) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.rfind("Z/p^", 0) == 0) return GroupSpec::etale_asw(p, std::stoi(s.substr(4)));
    if (s == "Z/p") return GroupSpec::etale_asw(p, 1);
    if (s.rfind("mu_", 0) == 0) return GroupSpec::kummer(p, std::stol(s.substr(3)));
    // product of W<m>[F^<r>] factors separated by 'x'
    std::vector<std::pair<int, int>> factors;
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == 'x') ++pos;
        if (pos >= s.size() || s[pos] != 'W') throw DomainError("bad group spec '" + text + "'");
        ++pos;
        std::size_t br = s.find("[F^", pos);
        if (br == std::string::npos) throw DomainError("bad group spec '" + text + "'");
        int m = std::stoi(s.substr(pos, br - pos));
        std::size_t close = s.find(']', br);
        if (close == std::string::npos) throw DomainError("bad group spec '" + text + "'");
        int r = std::stoi(s.substr(br + 3, close - br - 3));
        factors.emplace_back(m, r);
        pos = close + 1;
    }
    if (factors.empty()) throw DomainError("bad group spec '" + text + "'");
    return GroupSpec::local_local(p, factors);
}

// local Kummer conductor: tame, so 0 or 1 by divisibility of the valuation
long kummer_local_conductor(const LocalTorsorClass& c) {
    return c.kummer_rep.order_at_zero() % c.group.n == 0 ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact ramification invariants of finite abelian torsors over P^1"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOpts common;
    app.add_option("--p", common.p, "characteristic (prime)");
    app.add_option("--d", common.d, "extension degree of the working field");
    app.add_option("--field-modulus", common.field_modulus,
                   "monic irreducible polynomial in t over F_p (required when d > 1)");
    app.add_flag("--pretty", common.pretty, "indented JSON output");
    bool json_flag = false;
    app.add_flag("--json", json_flag, "compact JSON output (default)");
    app.add_option("--precision-override", common.precision_override,
                   "expert: force the relative series precision");

    // -- witt ------------------------------------------------------------
    auto* sub_witt = app.add_subcommand("witt", "truncated Witt vector arithmetic");
    struct {
        int m = 0;
        std::string op, a, b, domain = "field";
    } w;
    sub_witt->add_option("--m", w.m, "length")->required();
    sub_witt->add_option("--op", w.op, "add|mul|sub|neg|frobenius|verschiebung|restrict|teichmuller|ghost|unghost")
        ->required();
    sub_witt->add_option("--a", w.a, "Witt literal [expr,...]")->required();
    sub_witt->add_option("--b", w.b, "second operand for add/mul/sub");
    sub_witt->add_option("--domain", w.domain, "field|int (default field)");

    // -- unit-decompose ----------------------------------------------------
    auto* sub_unit = app.add_subcommand("unit-decompose", "split a principal unit into Witt slots");
    struct {
        long n = 0;
        std::string unit;
    } ud;
    sub_unit->add_option("--n", ud.n, "level (quotient modulo 1 + u^n)")->required();
    sub_unit->add_option("--unit", ud.unit, "unit expression in u")->required();

    // -- symbol ------------------------------------------------------------
    auto* sub_sym = app.add_subcommand("symbol", "local symbol (f, g)");
    struct {
        int m = 1;
        std::string f, g, at;
    } sy;
    sub_sym->add_option("--m", sy.m, "Witt length of f")->required();
    sub_sym->add_option("--f", sy.f, "Witt literal, components rational in u (or x with --at)")
        ->required();
    sub_sym->add_option("--g", sy.g, "nonzero rational in u (or x with --at)")->required();
    sub_sym->add_option("--at", sy.at, "expand x-rational data at this point first");

    // -- fil-level -----------------------------------------------------------
    auto* sub_fil = app.add_subcommand("fil-level", "Rosenlicht-Serre filtration level");
    struct {
        int m = 1;
        std::string f;
    } fl;
    sub_fil->add_option("--m", fl.m, "Witt length of f")->required();
    sub_fil->add_option("--f", fl.f, "Witt literal, components rational in u")->required();

    // -- conductor ----------------------------------------------------------
    auto* sub_cond = app.add_subcommand("conductor", "local conductor of a class over k'((u))");
    struct {
        std::string group, cls;
    } cd;
    sub_cond->add_option("--group", cd.group, "W<m>[F^<r>](x...)|Z/p^<m>|mu_<n>")->required();
    sub_cond->add_option("--class", cd.cls, "Witt literal(s) ';'-separated, or a u-expression for mu_n")
        ->required();

    // -- modulus -------------------------------------------------------------
    auto* sub_mod = app.add_subcommand("modulus", "minimal modulus of a global class on P^1");
    struct {
        std::string type, data, S, group;
        long n = 0;
    } md;
    sub_mod->add_option("--type", md.type, "alpha_p|local-local|asw|kummer")->required();
    sub_mod->add_option("--data", md.data,
                        "class data: expression or Witt literal(s); the Witt length is the "
                        "literal's length")
        ->required();
    sub_mod->add_option("--S", md.S, "points, e.g. \"0,1,inf\"")->required();
    sub_mod->add_option("--group", md.group, "group spec for --type local-local");
    sub_mod->add_option("--n", md.n, "n for --type kummer");

    // -- jacobian ------------------------------------------------------------
    auto* sub_jac = app.add_subcommand("jacobian", "structure report for J_{X,m}");
    struct {
        long genus = 0, prank = 0;
        std::string modulus;
    } jc;
    sub_jac->add_option("--genus", jc.genus, "genus g")->required();
    sub_jac->add_option("--prank", jc.prank, "p-rank f_X")->required();
    sub_jac->add_option("--modulus", jc.modulus, "modulus, e.g. \"0:4,inf:7\"")->required();

    // -- uni-ab ---------------------------------------------------------------
    auto* sub_uni = app.add_subcommand("uni-ab", "unipotent factor list for the singular curve");
    struct {
        std::string modulus;
    } ua;
    sub_uni->add_option("--modulus", ua.modulus, "modulus")->required();

    // -- pro-p ------------------------------------------------------------------
    auto* sub_prop = app.add_subcommand("pro-p", "finite-level pro-p quotient report");
    struct {
        std::string modulus;
        long n = 1, prank = 0;
    } pp;
    sub_prop->add_option("--modulus", pp.modulus, "modulus (may be empty)");
    sub_prop->add_option("--n", pp.n, "level p^n")->required();
    sub_prop->add_option("--prank", pp.prank, "p-rank f_X")->required();

    // -- verify --------------------------------------------------------------
    auto* sub_verify = app.add_subcommand("verify", "run the built-in property suites");
    struct {
        std::uint64_t seed = 1;
        bool full = false;
    } vf;
    sub_verify->add_option("--seed", vf.seed, "PRNG seed");
    sub_verify->add_flag("--full", vf.full, "larger sample counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        SymbolOptions sopt;
        sopt.prec_override = common.precision_override;

        if (*sub_verify) {
            auto results = torsor::selftest::run_all(vf.seed, !vf.full);
            json suites = json::array();
            bool all = true;
            for (auto& r : results) {
                suites.push_back({{"name", r.name}, {"ok", r.ok}});
                all = all && r.ok;
                err << (r.ok ? "[PASS] " : "[FAIL] ") << r.name;
                if (!r.ok) err << ": " << r.detail;
                err << "  (" << r.seconds << "s)\n";
            }
            json j{{"schema", "1"}, {"seed", vf.seed}, {"suites", suites}, {"ok", all}};
            emit(out, common, j);
            return all ? 0 : 1;
        }

        if (common.p == 0) throw DomainError("--p is required");
        FieldSpecPtr spec = make_spec(common);
        long p = spec->p();

        if (*sub_witt) {
            json j{{"schema", "1"}};
            if (w.domain == "int") {
                auto av = parse_witt_literal_int(w.a);
                if (static_cast<int>(av.size()) != w.m) throw DomainError("literal length != m");
                if (w.op == "ghost") {
                    auto g = ghost(WittVector<BigInt>(p, av));
                    json arr = json::array();
                    for (auto& x : g) arr.push_back(x.get_str());
                    j["ghost"] = arr;
                } else if (w.op == "unghost") {
                    auto z = unghost(p, av);
                    json arr = json::array();
                    for (int i = 0; i < z.length(); ++i) arr.push_back(z.comp(i).get_str());
                    j["result"] = arr;
                } else {
                    WittVector<BigInt> a(p, av);
                    WittVector<BigInt> res = a;
                    if (w.op == "neg") {
                        res = witt_neg(a);
                    } else if (w.op == "add" || w.op == "mul" || w.op == "sub") {
                        auto bv = parse_witt_literal_int(w.b);
                        if (bv.size() != av.size()) throw DomainError("operand lengths differ");
                        WittVector<BigInt> b(p, bv);
                        res = w.op == "add" ? witt_add(a, b)
                                            : (w.op == "mul" ? witt_mul(a, b) : witt_sub(a, b));
                    } else if (w.op == "verschiebung") {
                        res = verschiebung(a);
                    } else if (w.op == "restrict") {
                        res = restrict(a);
                    } else {
                        throw DomainError("op '" + w.op + "' not available over the integer domain");
                    }
                    json arr = json::array();
                    for (int i = 0; i < res.length(); ++i) arr.push_back(res.comp(i).get_str());
                    j["result"] = arr;
                }
                emit(out, common, j);
                return 0;
            }
            auto parse_field_witt = [&](const std::string& text) {
                auto comps = parse_witt_literal(text, spec, 0);
                std::vector<Fq> cv;
                for (auto& f : comps) {
                    if (!f.is_constant() && !f.is_zero())
                        throw DomainError("field-domain Witt components must be constants");
                    cv.push_back(f.is_zero() ? Fq::from_int(spec.get(), 0)
                                             : f.eval(Fq::from_int(spec.get(), 0)));
                }
                if (static_cast<int>(cv.size()) != w.m) throw DomainError("literal length != m");
                return WittVector<Fq>(p, cv);
            };
            if (w.op == "teichmuller") {
                Fq x = parse_element(w.a, spec);
                json arr = witt_to_json(WittVector<Fq>::teichmuller(p, x, w.m));
                j["result"] = arr;
            } else if (w.op == "ghost" || w.op == "unghost") {
                throw DomainError("ghost/unghost need --domain int (torsion-free)");
            } else {
                WittVector<Fq> a = parse_field_witt(w.a);
                WittVector<Fq> res = a;
                if (w.op == "neg")
                    res = witt_neg(a);
                else if (w.op == "frobenius")
                    res = frobenius(a);
                else if (w.op == "verschiebung")
                    res = verschiebung(a);
                else if (w.op == "restrict")
                    res = restrict(a);
                else if (w.op == "add" || w.op == "mul" || w.op == "sub") {
                    WittVector<Fq> b = parse_field_witt(w.b);
                    res = w.op == "add" ? witt_add(a, b)
                                        : (w.op == "mul" ? witt_mul(a, b) : witt_sub(a, b));
                } else {
                    throw DomainError("unknown op '" + w.op + "'");
                }
                j["result"] = witt_to_json(res);
            }
            emit(out, common, j);
            return 0;
        }

        if (*sub_unit) {
            if (ud.n < 1) throw DomainError("--n must be >= 1");
            // lengths r_i can exceed the default cap; raise it for this level
            int need = ud.n >= 2 ? slot_length(p, ud.n, 1) : 1;
            if (need > WittLaws::default_cap()) WittLaws::set_default_cap(need);
            RationalFunction uexpr = parse_rational(ud.unit, spec, 'u');
            PrincipalUnit v = PrincipalUnit::from_series(expand_at_zero(uexpr, ud.n + 1), ud.n);
            auto dec = decompose_unit(v);
            json slots = json::array();
            for (auto& [i, a] : dec.slots) slots.push_back({{"i", i}, {"witt", witt_to_json(a)}});
            json j{{"schema", "1"}, {"p", p}, {"n", ud.n}, {"slots", slots}};
            emit(out, common, j);
            return 0;
        }

        if (*sub_sym || *sub_fil) {
            std::string ftext = *sub_sym ? sy.f : fl.f;
            int m = *sub_sym ? sy.m : fl.m;
            std::vector<RationalFunction> comps;
            if (*sub_sym && !sy.at.empty()) {
                PointOfP1 at = parse_point(sy.at, spec);
                for (auto& f : parse_witt_literal(ftext, spec, 'x'))
                    comps.push_back(local_coordinate_form(f, at));
            } else {
                comps = parse_witt_literal(ftext, spec, 'u');
            }
            if (static_cast<int>(comps.size()) != m) throw DomainError("literal length != m");
            LocalWittElement f(p, comps);
            if (*sub_fil) {
                json j{{"schema", "1"}, {"level", fil_level(f, sopt)}};
                emit(out, common, j);
                return 0;
            }
            RationalFunction g;
            if (!sy.at.empty()) {
                PointOfP1 at = parse_point(sy.at, spec);
                g = local_coordinate_form(parse_rational(sy.g, spec, 'x'), at);
            } else {
                g = parse_rational(sy.g, spec, 'u');
            }
            SymbolValue v = local_symbol(f, g, sopt);
            json j{{"schema", "1"}, {"value", witt_to_json(v)}};
            emit(out, common, j);
            return 0;
        }

        if (*sub_cond) {
            GroupSpec g = parse_group(cd.group, p);
            json j{{"schema", "1"}};
            if (g.kind == GroupSpec::Kind::Kummer) {
                RationalFunction rep = parse_rational(cd.cls, spec, 'u');
                auto cls = LocalTorsorClass::kummer(g, rep);
                j["conductor"] = kummer_local_conductor(cls);
                j["reduced"] = json::array({rep.str('u')});
                emit(out, common, j);
                return 0;
            }
            std::vector<std::string> parts;
            std::string cur;
            int depth = 0;
            for (char ch : cd.cls) {
                if (ch == '[') ++depth;
                if (ch == ']') --depth;
                if (ch == ';' && depth == 0) {
                    parts.push_back(cur);
                    cur.clear();
                } else {
                    cur += ch;
                }
            }
            parts.push_back(cur);
            LocalTorsorClass cls = [&] {
                if (g.kind == GroupSpec::Kind::EtaleASW) {
                    if (parts.size() != 1) throw DomainError("Z/p^m takes a single Witt literal");
                    return LocalTorsorClass::etale_asw(
                        g, LocalWittElement(p, parse_witt_literal(parts[0], spec, 'u')));
                }
                if (parts.size() != g.factors.size())
                    throw DomainError("one Witt literal per factor, ';'-separated");
                std::vector<LocalWittElement> reps;
                for (auto& t : parts)
                    reps.emplace_back(p, parse_witt_literal(t, spec, 'u'));
                return LocalTorsorClass::local_local(g, std::move(reps));
            }();
            long c = local_conductor(cls, sopt);
            auto red = reduce_class(cls);
            json reduced = json::array();
            for (auto& rep : red.reps) {
                json arr = witt_rational_to_json(rep.comps(), 'u');
                reduced.push_back(arr);
            }
            j["conductor"] = c;
            j["reduced"] = reduced;
            emit(out, common, j);
            return 0;
        }

        if (*sub_mod) {
            auto S = parse_point_set(md.S, spec);
            GlobalTorsorClass P = [&]() -> GlobalTorsorClass {
                if (md.type == "alpha_p") {
                    RationalFunction f = parse_rational(md.data, spec, 'x');
                    return GlobalTorsorClass::local_local(
                        GroupSpec::local_local(p, {{1, 1}}),
                        {WittVector<RationalFunction>(p, {f})}, S);
                }
                if (md.type == "local-local") {
                    if (md.group.empty()) throw DomainError("--type local-local needs --group");
                    GroupSpec g = parse_group(md.group, p);
                    if (g.kind != GroupSpec::Kind::LocalLocal)
                        throw DomainError("--group must be a product of W_m[F^r]");
                    std::vector<std::string> parts;
                    std::string cur;
                    int depth = 0;
                    for (char ch : md.data) {
                        if (ch == '[') ++depth;
                        if (ch == ']') --depth;
                        if (ch == ';' && depth == 0) {
                            parts.push_back(cur);
                            cur.clear();
                        } else
                            cur += ch;
                    }
                    parts.push_back(cur);
                    if (parts.size() != g.factors.size())
                        throw DomainError("one Witt literal per factor, ';'-separated");
                    std::vector<WittVector<RationalFunction>> data;
                    for (auto& t : parts)
                        data.emplace_back(p, parse_witt_literal(t, spec, 'x'));
                    return GlobalTorsorClass::local_local(g, std::move(data), S);
                }
                if (md.type == "asw") {
                    auto comps = parse_witt_literal(md.data, spec, 'x');
                    return GlobalTorsorClass::etale_asw(
                        GroupSpec::etale_asw(p, static_cast<int>(comps.size())),
                        WittVector<RationalFunction>(p, comps), S);
                }
                if (md.type == "kummer") {
                    if (md.n < 2) throw DomainError("--type kummer needs --n >= 2");
                    return GlobalTorsorClass::kummer(GroupSpec::kummer(p, md.n),
                                                     parse_rational(md.data, spec, 'x'), S);
                }
                throw DomainError("unknown --type '" + md.type + "'");
            }();
            ModulusResult r = minimal_modulus(P, sopt);
            json j{{"schema", "1"},
                   {"modulus", modulus_to_json(r.modulus)},
                   {"trivial", r.trivial}};
            emit(out, common, j);
            return 0;
        }

        if (*sub_jac) {
            Modulus m = parse_modulus(jc.modulus, spec);
            auto rep = jacobian_report(p, jc.genus, jc.prank, m);
            json factors = json::array();
            for (auto& [x, slots] : rep.unipotent_factors) {
                json sl = json::array();
                for (auto& [i, r] : slots) sl.push_back({{"i", i}, {"r", r}});
                factors.push_back({{"point", x.str()}, {"slots", sl}});
            }
            json j{{"schema", "1"},        {"torus_rank", rep.torus_rank},
                   {"abelian_dim", rep.abelian_dim}, {"dim_total", rep.dim_total},
                   {"unipotent_factors", factors},   {"notes", rep.notes}};
            emit(out, common, j);
            return 0;
        }

        if (*sub_uni) {
            Modulus m = parse_modulus(ua.modulus, spec);
            json j{{"schema", "1"}, {"factors", uni_ab_factors(p, m)}};
            emit(out, common, j);
            return 0;
        }

        if (*sub_prop) {
            Modulus m = parse_modulus(pp.modulus, spec);
            auto rep = pro_p_report(p, m, pp.n, pp.prank);
            json pts = json::array();
            for (auto& [x, lv] : rep.local_levels) {
                json sl = json::array();
                for (auto& [i, r] : lv.second) sl.push_back({{"i", i}, {"r", r}});
                pts.push_back({{"point", x.str()}, {"level", lv.first}, {"slots", sl}});
            }
            json j{{"schema", "1"}, {"n", rep.n},       {"free_rank", rep.free_rank},
                   {"points", pts}, {"notes", rep.notes}};
            emit(out, common, j);
            return 0;
        }

        throw DomainError("no subcommand given");
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace torsor::cli
