#include "charp/fq.hpp"

#include <algorithm>
#include <array>

namespace charp {

namespace {

using Digits = std::vector<std::uint32_t>;

// Dense univariate arithmetic over F_p, used only for modulus validation
// and embedding computations.

Digits trim(Digits a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Digits poly_mul(const Digits& a, const Digits& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
    return trim(std::move(r));
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::uint32_t r = 1;
    std::uint64_t base = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = std::uint32_t(r * base % p);
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

Digits poly_mod(Digits a, const Digits& m, std::uint32_t p) {
    const size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod(m.back(), p);
    a = trim(std::move(a));
    while (a.size() > dm) {
        std::uint32_t c = std::uint32_t(std::uint64_t(a.back()) * lead_inv % p);
        size_t shift = a.size() - 1 - dm;
        for (size_t i = 0; i <= dm; ++i) {
            std::uint64_t s = std::uint64_t(c) * m[i] % p;
            a[shift + i] = std::uint32_t((a[shift + i] + p - s) % p);
        }
        a = trim(std::move(a));
    }
    return a;
}

Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& m, std::uint32_t p) {
    return poly_mod(poly_mul(a, b, p), m, p);
}

Digits poly_powmod(Digits base, std::uint64_t e, const Digits& m, std::uint32_t p) {
    Digits r = {1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Digits poly_gcd(Digits a, Digits b, std::uint32_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        Digits r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod m, by k successive p-th powers.
Digits frob_power(const Digits& m, std::uint32_t p, std::uint32_t k) {
    Digits x = {0, 1};
    for (std::uint32_t i = 0; i < k; ++i) x = poly_powmod(x, p, m, p);
    return x;
}

bool is_irreducible(const Digits& m, std::uint32_t p) {
    const std::uint32_t e = std::uint32_t(m.size()) - 1;
    if (e == 0) return false;
    // Rabin: x^(p^e) == x mod m, and gcd(x^(p^(e/l)) - x, m) == 1 for each
    // prime l | e.
    Digits xe = frob_power(m, p, e);
    Digits x = {0, 1};
    if (poly_mod([&] {
            Digits d = xe;
            d.resize(std::max(d.size(), x.size()), 0);
            for (size_t i = 0; i < x.size(); ++i) d[i] = (d[i] + p - x[i]) % p;
            return trim(std::move(d));
        }(), m, p) != Digits{})
        return false;
    for (std::uint32_t l = 2; l <= e; ++l) {
        if (e % l != 0) continue;
        bool prime_l = true;
        for (std::uint32_t d = 2; d * d <= l; ++d)
            if (l % d == 0) prime_l = false;
        if (!prime_l) continue;
        Digits xf = frob_power(m, p, e / l);
        Digits diff = xf;
        diff.resize(std::max(diff.size(), size_t(2)), 0);
        diff[1] = (diff[1] + p - 1) % p;
        diff = trim(std::move(diff));
        Digits g = poly_gcd(m, diff, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FqField::FqField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    q_ = 1;
    for (std::uint32_t i = 0; i < e_; ++i) q_ *= p_;
}

FqFieldPtr FqField::make(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
    if (!is_prime(p)) throw DomainError("characteristic must be prime, got " + std::to_string(p));
    if (p > kMaxPrime) throw DomainError("characteristic too large (limit 251)");
    if (modulus.size() < 2) throw DomainError("modulus must have degree >= 1");
    std::uint32_t e = std::uint32_t(modulus.size()) - 1;
    if (e > kMaxDegree) throw DomainError("extension degree too large (limit 8)");
    Digits m(modulus);
    for (auto& c : m) c %= p;
    if (m.back() != 1) throw DomainError("modulus must be monic");
    if (!is_irreducible(m, p))
        throw DomainError("modulus is reducible over the prime field");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > (std::uint64_t(1) << 32)) throw DomainError("field too large (q must be <= 2^32)");
    }
    return FqFieldPtr(new FqField(p, e, std::move(m)));
}

FqFieldPtr FqField::make(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw DomainError("characteristic must be prime, got " + std::to_string(p));
    if (p > kMaxPrime) throw DomainError("characteristic too large (limit 251)");
    if (e == 0 || e > kMaxDegree) throw DomainError("extension degree must be in [1, 8]");
    if (e == 1) {
        return FqFieldPtr(new FqField(p, 1, {0, 1}));
    }
    // First irreducible monic polynomial in counting order of the low
    // coefficient word; this makes printed elements reproducible.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < e; ++i) count *= p;
    for (std::uint64_t w = 0; w < count; ++w) {
        Digits m(e + 1, 0);
        std::uint64_t x = w;
        for (std::uint32_t i = 0; i < e; ++i) {
            m[i] = std::uint32_t(x % p);
            x /= p;
        }
        m[e] = 1;
        if (is_irreducible(m, p)) return FqFieldPtr(new FqField(p, e, std::move(m)));
    }
    throw DomainError("no irreducible modulus found");  // unreachable
}

bool FqField::same_field(const FqField& other) const {
    return p_ == other.p_ && e_ == other.e_ && modulus_ == other.modulus_;
}

fq_repr FqField::from_int(std::int64_t n) const {
    std::int64_t r = n % std::int64_t(p_);
    if (r < 0) r += p_;
    return fq_repr(r);
}

fq_repr FqField::generator() const {
    if (e_ < 2) throw DomainError("prime field has no extension generator");
    return fq_repr(1) << 8;
}

fq_repr FqField::element(std::uint64_t index) const {
    fq_repr r = 0;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r |= fq_repr(index % p_) << (8 * i);
        index /= p_;
    }
    return r;
}

std::uint64_t FqField::index_of(fq_repr a) const {
    std::uint64_t idx = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        idx += coord(a, i) * mult;
        mult *= p_;
    }
    return idx;
}

fq_repr FqField::add(fq_repr a, fq_repr b) const {
    fq_repr r = 0;
    for (std::uint32_t i = 0; i < e_; ++i)
        r |= fq_repr((coord(a, i) + coord(b, i)) % p_) << (8 * i);
    return r;
}

fq_repr FqField::sub(fq_repr a, fq_repr b) const {
    fq_repr r = 0;
    for (std::uint32_t i = 0; i < e_; ++i)
        r |= fq_repr((coord(a, i) + p_ - coord(b, i)) % p_) << (8 * i);
    return r;
}

fq_repr FqField::neg(fq_repr a) const { return sub(0, a); }

fq_repr FqField::mul(fq_repr a, fq_repr b) const {
    if (a == 0 || b == 0) return 0;
    std::array<std::uint32_t, 2 * kMaxDegree> acc{};
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t ai = coord(a, i);
        if (!ai) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            acc[i + j] = (acc[i + j] + ai * coord(b, j)) % p_;
    }
    // Reduce by the monic modulus.
    for (std::int32_t d = 2 * std::int32_t(e_) - 2; d >= std::int32_t(e_); --d) {
        std::uint32_t c = acc[d];
        if (!c) continue;
        acc[d] = 0;
        for (std::uint32_t i = 0; i < e_; ++i) {
            std::uint32_t s = std::uint32_t(std::uint64_t(c) * modulus_[i] % p_);
            acc[d - e_ + i] = (acc[d - e_ + i] + p_ - s) % p_;
        }
    }
    fq_repr r = 0;
    for (std::uint32_t i = 0; i < e_; ++i) r |= fq_repr(acc[i]) << (8 * i);
    return r;
}

fq_repr FqField::scalar_mul(std::uint32_t c, fq_repr a) const {
    c %= p_;
    fq_repr r = 0;
    for (std::uint32_t i = 0; i < e_; ++i)
        r |= fq_repr(std::uint64_t(c) * coord(a, i) % p_) << (8 * i);
    return r;
}

fq_repr FqField::pow(fq_repr a, std::uint64_t n) const {
    fq_repr r = one(), base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

fq_repr FqField::inv(fq_repr a) const {
    if (a == 0) throw DomainError("division by zero in F_q");
    return pow(a, q_ - 2);
}

fq_repr FqField::pth_root(fq_repr a) const {
    fq_repr r = a;
    for (std::uint32_t i = 0; i + 1 < e_; ++i) r = frobenius(r);
    return r;
}

std::uint32_t FqField::trace_to_prime(fq_repr a) const {
    fq_repr s = 0, x = a;
    for (std::uint32_t i = 0; i < e_; ++i) {
        s = add(s, x);
        x = frobenius(x);
    }
    for (std::uint32_t i = 1; i < e_; ++i)
        if (coord(s, i) != 0) throw DomainError("trace did not land in the prime field");
    return coord(s, 0);
}

fq_repr FqField::trace_to(fq_repr a, const FqFieldPtr& sub) const {
    if (sub->p() != p_) throw DomainError("trace target has different characteristic");
    const std::uint32_t d = sub->degree();
    if (e_ % d != 0) throw DomainError("not a subfield: degree does not divide");
    if (same_field(*sub)) return a;
    // Galois-orbit sum over Gal(F_q / F_{q'}).
    fq_repr s = 0, x = a;
    const std::uint32_t steps = e_ / d;
    for (std::uint32_t i = 0; i < steps; ++i) {
        s = add(s, x);
        for (std::uint32_t j = 0; j < d; ++j) x = frobenius(x);
    }
    if (d == 1) return sub->from_int(coord(s, 0));
    // Embed F_{q'} in F_q: the root of sub's modulus with the smallest
    // element index, then solve for coordinates by Gaussian elimination.
    if (q_ > (1u << 16)) throw DomainError("subfield conversion limited to q <= 65536");
    fq_repr root = 0;
    bool found = false;
    for (std::uint64_t idx = 0; idx < q_; ++idx) {
        fq_repr c = element(idx);
        fq_repr v = 0;
        for (std::int32_t i = std::int32_t(d); i >= 0; --i)
            v = add(mul(v, c), from_int(sub->modulus()[size_t(i)]));
        if (v == 0) {
            root = c;
            found = true;
            break;
        }
    }
    if (!found) throw DomainError("subfield embedding not found");
    // Columns: coordinates of root^j for j < d; solve M y = s over F_p.
    std::vector<std::vector<std::uint32_t>> m(e_, std::vector<std::uint32_t>(d + 1, 0));
    fq_repr pw = one();
    for (std::uint32_t j = 0; j < d; ++j) {
        for (std::uint32_t i = 0; i < e_; ++i) m[i][j] = coord(pw, i);
        pw = mul(pw, root);
    }
    for (std::uint32_t i = 0; i < e_; ++i) m[i][d] = coord(s, i);
    std::uint32_t row = 0;
    std::vector<std::int32_t> pivot_col(d, -1);
    for (std::uint32_t col = 0; col < d && row < e_; ++col) {
        std::uint32_t sel = row;
        while (sel < e_ && m[sel][col] == 0) ++sel;
        if (sel == e_) continue;
        std::swap(m[sel], m[row]);
        std::uint32_t piv_inv = inv_mod(m[row][col], p_);
        for (std::uint32_t j = 0; j <= d; ++j)
            m[row][j] = std::uint32_t(std::uint64_t(m[row][j]) * piv_inv % p_);
        for (std::uint32_t i = 0; i < e_; ++i) {
            if (i == row || m[i][col] == 0) continue;
            std::uint32_t f = m[i][col];
            for (std::uint32_t j = 0; j <= d; ++j) {
                std::uint32_t sub_v = std::uint32_t(std::uint64_t(f) * m[row][j] % p_);
                m[i][j] = (m[i][j] + p_ - sub_v) % p_;
            }
        }
        pivot_col[col] = std::int32_t(row);
        ++row;
    }
    fq_repr out = 0;
    for (std::uint32_t col = 0; col < d; ++col)
        if (pivot_col[col] >= 0) out |= fq_repr(m[size_t(pivot_col[col])][d]) << (8 * col);
    return out;
}

std::string FqField::to_string(fq_repr a, const std::string& gen_name) const {
    if (a == 0) return "0";
    if (e_ == 1) return std::to_string(coord(a, 0));
    std::string s;
    for (std::int32_t i = std::int32_t(e_) - 1; i >= 0; --i) {
        std::uint32_t c = coord(a, std::uint32_t(i));
        if (!c) continue;
        if (!s.empty()) s += " + ";
        if (i == 0) {
            s += std::to_string(c);
        } else {
            if (c != 1) s += std::to_string(c) + "*";
            s += gen_name;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace charp
