#include "torsor/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace torsor {

namespace {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

long norm_mod(long a, long p) {
    long r = a % p;
    return r < 0 ? r + p : r;
}

// dense F_p[t] helpers on ascending coefficient vectors (no trailing zeros)
using PVec = std::vector<long>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long inv_mod(long a, long p) {
    long t = 0, nt = 1, r = p, nr = norm_mod(a, p);
    while (nr != 0) {
        long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return norm_mod(t, p);
}

// remainder of a by monic-normalizable b
PVec pmod(PVec a, const PVec& b, long p) {
    ptrim(a);
    long lead_inv = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        long f = norm_mod(a.back() * lead_inv, p);
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = norm_mod(a[off + i] - f * b[i], p);
        ptrim(a);
    }
    return a;
}

bool divides(const PVec& b, const PVec& a, long p) { return pmod(a, b, p).empty(); }

// brute-force irreducibility: no monic factor of degree 1..deg/2
bool is_irreducible(const PVec& m, long p) {
    int d = static_cast<int>(m.size()) - 1;
    for (int e = 1; 2 * e <= d; ++e) {
        std::uint64_t count = 1;
        for (int i = 0; i < e; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PVec f(e + 1, 0);
            f[e] = 1;
            std::uint64_t v = idx;
            for (int i = 0; i < e; ++i) {
                f[i] = static_cast<long>(v % p);
                v /= p;
            }
            if (divides(f, m, p)) return false;
        }
    }
    return true;
}

}  // namespace

class FieldRegistry {
   public:
    static FieldRegistry& instance() {
        static FieldRegistry reg;
        return reg;
    }
    FieldSpecPtr intern(long p, int d, std::vector<long> mod) {
        std::uint64_t q = 1;
        for (int i = 0; i < d; ++i) {
            q *= static_cast<std::uint64_t>(p);
            if (q > FieldSpec::kMaxOrder) throw DomainError("field order p^d exceeds the supported bound");
        }
        std::lock_guard<std::mutex> lk(mu_);
        auto key = std::make_pair(p, mod);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
        auto sp = FieldSpecPtr(new FieldSpec(p, d, mod, q));
        map_.emplace(std::move(key), sp);
        return sp;
    }

   private:
    std::mutex mu_;
    std::map<std::pair<long, std::vector<long>>, FieldSpecPtr> map_;
};

FieldSpecPtr FieldSpec::prime(long p) {
    if (p >= 32768) throw DomainError("prime p too large for this library");
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
    return FieldRegistry::instance().intern(p, 1, {});
}

FieldSpecPtr FieldSpec::extension(long p, std::vector<long> modulus) {
    if (p >= 32768) throw DomainError("prime p too large for this library");
    if (!is_prime(p)) throw DomainError("p = " + std::to_string(p) + " is not prime");
    for (auto& c : modulus) c = norm_mod(c, p);
    ptrim(modulus);
    int d = static_cast<int>(modulus.size()) - 1;
    if (d < 2) throw DomainError("extension modulus must have degree >= 2");
    if (d > kMaxDegree) throw DomainError("extension degree exceeds the supported bound");
    // normalize monic
    if (modulus.back() != 1) {
        long f = inv_mod(modulus.back(), p);
        for (auto& c : modulus) c = norm_mod(c * f, p);
    }
    if (!is_irreducible(modulus, p))
        throw DomainError("extension modulus is reducible over F_" + std::to_string(p));
    return FieldRegistry::instance().intern(p, d, std::move(modulus));
}

Fq::Fq(const FieldSpec* spec, long n) : spec_(spec) {
    c_.fill(0);
    if (!spec) throw DomainError("null field spec");
    c_[0] = static_cast<std::int32_t>(norm_mod(n, spec->p()));
}

Fq Fq::from_coeffs(const FieldSpec* spec, const std::vector<long>& coeffs) {
    if (!spec) throw DomainError("null field spec");
    if (static_cast<int>(coeffs.size()) > spec->degree())
        throw DomainError("coefficient vector longer than field degree");
    Fq r(spec, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        r.c_[i] = static_cast<std::int32_t>(norm_mod(coeffs[i], spec->p()));
    return r;
}

Fq Fq::generator(const FieldSpec* spec) {
    if (!spec || spec->degree() < 2) throw DomainError("t is only defined for extension fields (d > 1)");
    Fq r(spec, 0);
    r.c_[1] = 1;
    return r;
}

void Fq::require_same(const Fq& o) const {
    if (spec_ == nullptr || o.spec_ == nullptr) throw DomainError("operation on uninitialized field element");
    if (spec_ != o.spec_) throw DomainError("field elements belong to different field specs");
}

bool Fq::is_zero() const noexcept {
    if (!spec_) return true;
    for (int i = 0; i < spec_->degree(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Fq::is_one() const noexcept {
    if (!spec_) return false;
    if (c_[0] != 1) return false;
    for (int i = 1; i < spec_->degree(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Fq Fq::operator+(const Fq& o) const {
    require_same(o);
    Fq r = *this;
    long p = spec_->p();
    for (int i = 0; i < spec_->degree(); ++i) r.c_[i] = static_cast<std::int32_t>((r.c_[i] + o.c_[i]) % p);
    return r;
}

Fq Fq::operator-(const Fq& o) const {
    require_same(o);
    Fq r = *this;
    long p = spec_->p();
    for (int i = 0; i < spec_->degree(); ++i)
        r.c_[i] = static_cast<std::int32_t>(norm_mod(r.c_[i] - o.c_[i], p));
    return r;
}

Fq Fq::operator-() const {
    if (!spec_) throw DomainError("operation on uninitialized field element");
    Fq r = *this;
    long p = spec_->p();
    for (int i = 0; i < spec_->degree(); ++i) r.c_[i] = static_cast<std::int32_t>(norm_mod(-r.c_[i], p));
    return r;
}

Fq Fq::operator*(const Fq& o) const {
    require_same(o);
    int d = spec_->degree();
    long p = spec_->p();
    if (d == 1) {
        Fq r(spec_, 0);
        r.c_[0] = static_cast<std::int32_t>((static_cast<std::int64_t>(c_[0]) * o.c_[0]) % p);
        return r;
    }
    std::array<std::int64_t, 2 * FieldSpec::kMaxDegree> prod{};
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) prod[i + j] += static_cast<std::int64_t>(c_[i]) * o.c_[j];
    }
    const auto& m = spec_->modulus();
    for (int k = 2 * d - 2; k >= d; --k) {
        std::int64_t f = prod[k] % p;
        if (f == 0) continue;
        for (int i = 0; i < d; ++i) prod[k - d + i] -= f * m[i];  // m monic: kills prod[k]
        prod[k] = 0;
    }
    Fq r(spec_, 0);
    for (int i = 0; i < d; ++i) r.c_[i] = static_cast<std::int32_t>(norm_mod(prod[i] % p, p));
    return r;
}

Fq Fq::inverse() const {
    if (!spec_) throw DomainError("operation on uninitialized field element");
    if (is_zero()) throw DomainError("inverse of zero field element");
    long p = spec_->p();
    int d = spec_->degree();
    if (d == 1) {
        Fq r(spec_, 0);
        r.c_[0] = static_cast<std::int32_t>(inv_mod(c_[0], p));
        return r;
    }
    // extended Euclid in F_p[t] against the field modulus
    PVec r0 = spec_->modulus(), r1;
    for (int i = 0; i < d; ++i) r1.push_back(c_[i]);
    ptrim(r1);
    PVec s0 = {}, s1 = {1};
    while (!r1.empty() && r1.size() > 1) {
        // one division step
        long li = inv_mod(r1.back(), p);
        PVec q;  // quotient accumulates implicitly through s-updates
        PVec rem = r0;
        PVec snew = s0;
        while (rem.size() >= r1.size()) {
            long f = norm_mod(rem.back() * li, p);
            std::size_t off = rem.size() - r1.size();
            // rem -= f * t^off * r1 ; snew -= f * t^off * s1
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[off + i] = norm_mod(rem[off + i] - f * r1[i], p);
            if (snew.size() < off + s1.size()) snew.resize(off + s1.size(), 0);
            for (std::size_t i = 0; i < s1.size(); ++i)
                snew[off + i] = norm_mod(snew[off + i] - f * s1[i], p);
            ptrim(rem);
            if (rem.empty()) break;
        }
        r0 = r1;
        s0 = s1;
        r1 = rem;
        s1 = snew;
        ptrim(s1);
    }
    if (r1.empty()) throw DomainError("inverse: element not invertible (internal)");
    long li = inv_mod(r1[0], p);
    PVec inv = s1;
    for (auto& x : inv) x = norm_mod(x * li, p);
    inv = pmod(inv, spec_->modulus(), p);
    std::vector<long> cv(inv.begin(), inv.end());
    return from_coeffs(spec_, cv);
}

Fq Fq::operator/(const Fq& o) const { return *this * o.inverse(); }

bool Fq::operator==(const Fq& o) const {
    if (spec_ != o.spec_) return false;
    if (!spec_) return true;
    for (int i = 0; i < spec_->degree(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

Fq Fq::pow(const BigInt& e) const {
    if (!spec_) throw DomainError("operation on uninitialized field element");
    if (sgn(e) < 0) return inverse().pow(-e);
    Fq base = *this;
    Fq acc = ring_one(*this);
    BigInt k = e;
    while (sgn(k) > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Fq Fq::pow(long e) const { return pow(BigInt(e)); }

Fq Fq::frobenius() const { return pow(spec_->p()); }

Fq Fq::pth_root() const {
    // x^(p^(d-1)) inverts Frobenius since x^(p^d) = x
    Fq r = *this;
    for (int i = 0; i < spec_->degree() - 1; ++i) r = r.frobenius();
    return r;
}

Fq Fq::pth_root(int r) const {
    Fq x = *this;
    for (int i = 0; i < r; ++i) x = x.pth_root();
    return x;
}

std::uint64_t Fq::index() const {
    if (!spec_) throw DomainError("operation on uninitialized field element");
    std::uint64_t idx = 0;
    for (int i = spec_->degree() - 1; i >= 0; --i)
        idx = idx * static_cast<std::uint64_t>(spec_->p()) + static_cast<std::uint64_t>(c_[i]);
    return idx;
}

Fq Fq::from_index(const FieldSpec* spec, std::uint64_t idx) {
    if (!spec) throw DomainError("null field spec");
    Fq r(spec, 0);
    for (int i = 0; i < spec->degree(); ++i) {
        r.c_[i] = static_cast<std::int32_t>(idx % static_cast<std::uint64_t>(spec->p()));
        idx /= static_cast<std::uint64_t>(spec->p());
    }
    if (idx != 0) throw DomainError("element index out of range");
    return r;
}

std::string Fq::str() const {
    if (!spec_) return "0";
    if (spec_->degree() == 1) return std::to_string(c_[0]);
    std::string out;
    for (int i = spec_->degree() - 1; i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c_[i]);
        } else {
            if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
            out += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

Fq ring_embed_int(const Fq& sample, const BigInt& n) {
    BigInt r = n % sample.spec()->p();
    long v = r.get_si();
    return Fq::from_int(sample.spec(), v);
}

std::vector<Fq> all_elements(const FieldSpec* spec) {
    std::vector<Fq> out;
    out.reserve(spec->order());
    for (std::uint64_t i = 0; i < spec->order(); ++i) out.push_back(Fq::from_index(spec, i));
    return out;
}

Fq FieldEmbedding::map(const Fq& a) const {
    if (a.spec() != from_) throw DomainError("embedding applied to an element of another field");
    if (from_ == to_) return a;
    Fq acc = Fq::from_int(to_, 0);
    for (int i = from_->degree() - 1; i >= 0; --i)
        acc = acc * t_image_ + Fq::from_int(to_, a.coeff(i));
    return acc;
}

const FieldEmbedding& extend_field(const FieldSpec* base, std::uint64_t min_order) {
    static std::mutex mu;
    static std::map<std::pair<const FieldSpec*, std::uint64_t>, std::unique_ptr<FieldEmbedding>>
        cache;
    std::lock_guard<std::mutex> lk(mu);
    auto key = std::make_pair(base, min_order);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;

    std::unique_ptr<FieldEmbedding> emb;
    if (base->order() >= min_order) {
        emb = std::make_unique<FieldEmbedding>(base, base, Fq::from_int(base, 0));
    } else {
        long p = base->p();
        int d = base->degree();
        int e = d;
        std::uint64_t q = base->order();
        while (q < min_order) {
            e += d;  // keep the base degree dividing the extension degree
            q = 1;
            for (int i = 0; i < e; ++i) q *= static_cast<std::uint64_t>(p);
            if (q > FieldSpec::kMaxOrder)
                throw DomainError("required coefficient extension exceeds the field-order bound");
        }
        // deterministic search for a monic irreducible of degree e
        FieldSpecPtr ext;
        std::uint64_t count = 1;
        for (int i = 0; i < e; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<long> mod(static_cast<std::size_t>(e) + 1, 0);
            mod[static_cast<std::size_t>(e)] = 1;
            std::uint64_t v = idx;
            for (int i = 0; i < e; ++i) {
                mod[static_cast<std::size_t>(i)] = static_cast<long>(v % static_cast<std::uint64_t>(p));
                v /= static_cast<std::uint64_t>(p);
            }
            try {
                ext = FieldSpec::extension(p, mod);
                break;
            } catch (const DomainError&) {
                continue;
            }
        }
        if (!ext) throw DomainError("no irreducible extension modulus found");
        // image of the base generator: a root of the base modulus in the extension
        Fq t_image = Fq::from_int(ext.get(), 0);
        if (d > 1) {
            bool found = false;
            for (std::uint64_t i = 0; i < ext->order() && !found; ++i) {
                Fq r = Fq::from_index(ext.get(), i);
                Fq acc = Fq::from_int(ext.get(), 0);
                for (int k = d; k >= 0; --k)
                    acc = acc * r + Fq::from_int(ext.get(), base->modulus()[static_cast<std::size_t>(k)]);
                if (acc.is_zero()) {
                    t_image = r;
                    found = true;
                }
            }
            if (!found) throw Error("no root of the base modulus in the extension");
        }
        emb = std::make_unique<FieldEmbedding>(base, ext.get(), t_image);
    }
    auto [it, ok] = cache.emplace(key, std::move(emb));
    (void)ok;
    return *it->second;
}

}  // namespace torsor
