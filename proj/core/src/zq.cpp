#include "torsor/zq.hpp"

#include <map>
#include <mutex>

namespace torsor {

namespace {

std::int64_t norm(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

class ZqRegistry {
   public:
    static ZqRegistry& instance() {
        static ZqRegistry reg;
        return reg;
    }
    const ZqRing* get(const FieldSpec* fq, int n) {
        std::lock_guard<std::mutex> lk(mu_);
        auto key = std::make_pair(fq, n);
        auto it = map_.find(key);
        if (it == map_.end())
            it = map_.emplace(key, std::unique_ptr<ZqRing>(new ZqRing(fq, n))).first;
        return it->second.get();
    }

   private:
    std::mutex mu_;
    std::map<std::pair<const FieldSpec*, int>, std::unique_ptr<ZqRing>> map_;
};

ZqRing::ZqRing(const FieldSpec* fq, int n) : fq_(fq), n_(n) {
    if (n < 1 || n > 24) throw DomainError("Zq levels out of range");
    pn_ = 1;
    for (int i = 0; i < n; ++i) {
        // keep p^N below 2^31 so coordinate products stay inside int64
        if (pn_ > (std::int64_t(1) << 31) / fq->p())
            throw DomainError("p^N too large for the Zq representation");
        pn_ *= fq->p();
    }
    // monic integer lift of the field modulus; degree-1 fields use t itself
    if (fq->degree() == 1) {
        phi_[0] = 0;
        phi_[1] = 1;
    } else {
        for (std::size_t i = 0; i < fq->modulus().size(); ++i) phi_[i] = fq->modulus()[i];
    }
}

const ZqRing* ZqRing::get(const FieldSpec* residue_field, int n_levels) {
    return ZqRegistry::instance().get(residue_field, n_levels);
}

Zq::Zq(const ZqRing* ring, std::int64_t n) : ring_(ring) {
    c_.fill(0);
    if (!ring) throw DomainError("null Zq ring");
    c_[0] = norm(n, ring->pn());
}

void Zq::require_same(const Zq& o) const {
    if (!ring_ || !o.ring_) throw DomainError("operation on uninitialized Zq element");
    if (ring_ != o.ring_) throw DomainError("Zq elements from different rings");
}

bool Zq::is_zero() const noexcept {
    if (!ring_) return true;
    for (int i = 0; i < ring_->degree(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Zq Zq::operator+(const Zq& o) const {
    require_same(o);
    Zq r = *this;
    for (int i = 0; i < ring_->degree(); ++i) r.c_[i] = norm(r.c_[i] + o.c_[i], ring_->pn());
    return r;
}

Zq Zq::operator-(const Zq& o) const {
    require_same(o);
    Zq r = *this;
    for (int i = 0; i < ring_->degree(); ++i) r.c_[i] = norm(r.c_[i] - o.c_[i], ring_->pn());
    return r;
}

Zq Zq::operator-() const {
    if (!ring_) throw DomainError("operation on uninitialized Zq element");
    Zq r = *this;
    for (int i = 0; i < ring_->degree(); ++i) r.c_[i] = norm(-r.c_[i], ring_->pn());
    return r;
}

Zq Zq::operator*(const Zq& o) const {
    require_same(o);
    int d = ring_->degree();
    std::int64_t m = ring_->pn();
    if (d == 1) {
        Zq r(ring_, 0);
        r.c_[0] = norm((c_[0] % m) * (o.c_[0] % m) % m, m);
        return r;
    }
    std::array<std::int64_t, 2 * FieldSpec::kMaxDegree> prod{};
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) prod[i + j] = norm(prod[i + j] + c_[i] * o.c_[j] % m, m);
    }
    const auto& phi = ring_->phi();
    for (int k = 2 * d - 2; k >= d; --k) {
        std::int64_t f = prod[k];
        if (f == 0) continue;
        for (int i = 0; i < d; ++i) prod[k - d + i] = norm(prod[k - d + i] - f * phi[i] % m, m);
        prod[k] = 0;
    }
    Zq r(ring_, 0);
    for (int i = 0; i < d; ++i) r.c_[i] = prod[i];
    return r;
}

bool Zq::operator==(const Zq& o) const {
    if (ring_ != o.ring_) return false;
    if (!ring_) return true;
    for (int i = 0; i < ring_->degree(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

Fq Zq::mod_p() const {
    if (!ring_) throw DomainError("operation on uninitialized Zq element");
    std::vector<long> cv;
    for (int i = 0; i < ring_->degree(); ++i) cv.push_back(static_cast<long>(c_[i] % ring_->p()));
    return Fq::from_coeffs(ring_->residue_field(), cv);
}

Zq Zq::inverse() const {
    if (!ring_) throw DomainError("operation on uninitialized Zq element");
    Fq r0 = mod_p();
    if (r0.is_zero()) throw DomainError("inverse of a non-unit Zq element");
    // lift the residue-field inverse, then Newton: x <- x(2 - ax)
    Fq i0 = r0.inverse();
    Zq x(ring_, 0);
    for (int i = 0; i < ring_->degree(); ++i) x.c_[i] = i0.coeff(i);
    Zq two(ring_, 2);
    for (int it = 0; it < ring_->levels() + 1; ++it) {
        Zq e = two - (*this) * x;
        Zq nx = x * e;
        if (nx == x) break;
        x = nx;
    }
    return x;
}

bool Zq::divisible_by_p(int j) const {
    if (!ring_) throw DomainError("operation on uninitialized Zq element");
    std::int64_t pj = 1;
    for (int i = 0; i < j; ++i) pj *= ring_->p();
    for (int i = 0; i < ring_->degree(); ++i)
        if (c_[i] % pj != 0) return false;
    return true;
}

Zq Zq::divide_by_p(int j) const {
    if (!divisible_by_p(j))
        throw DivisibilityError("Zq element not divisible by p^" + std::to_string(j));
    std::int64_t pj = 1;
    for (int i = 0; i < j; ++i) pj *= ring_->p();
    Zq r = *this;
    for (int i = 0; i < ring_->degree(); ++i) r.c_[i] = c_[i] / pj;
    return r;
}

bool Zq::congruent(const Zq& o, int j) const {
    require_same(o);
    std::int64_t pj = 1;
    for (int i = 0; i < j; ++i) pj *= ring_->p();
    for (int i = 0; i < ring_->degree(); ++i)
        if (norm(c_[i] - o.c_[i], pj) != 0) return false;
    return true;
}

std::string Zq::str() const {
    if (!ring_) return "0";
    std::string out;
    for (int i = ring_->degree() - 1; i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0)
            out += std::to_string(c_[i]);
        else {
            if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
            out += (i == 1) ? "t" : "t^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

Zq Zq::from_coords(const ZqRing* ring, const std::array<std::int64_t, FieldSpec::kMaxDegree>& c) {
    Zq r(ring, 0);
    for (int i = 0; i < ring->degree(); ++i) r.c_[i] = norm(c[i], ring->pn());
    return r;
}

Zq teichmuller(const ZqRing* ring, const Fq& c) {
    if (c.spec() != ring->residue_field())
        throw DomainError("Teichmueller lift: element not in the residue field");
    thread_local std::map<std::pair<const ZqRing*, std::uint64_t>, Zq> cache;
    auto key = std::make_pair(ring, c.index());
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    std::array<std::int64_t, FieldSpec::kMaxDegree> raw{};
    for (int i = 0; i < ring->degree(); ++i) raw[i] = c.coeff(i);
    Zq y = Zq::from_coords(ring, raw);
    // Frobenius-Hensel: iterating x -> x^q gains one p-digit per step
    unsigned long q = static_cast<unsigned long>(ring->residue_field()->order());
    for (int it = 0; it < ring->levels(); ++it) {
        Zq acc(ring, 1), base = y;
        unsigned long e = q;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        if (acc == y) break;
        y = acc;
    }
    if (cache.size() < 65536) cache.emplace(key, y);
    return y;
}

Zq ring_embed_int(const Zq& sample, const BigInt& n) {
    BigInt r = n % BigInt(static_cast<long>(sample.ring()->pn()));
    return Zq(sample.ring(), r.get_si());
}

}  // namespace torsor
