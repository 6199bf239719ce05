#include "fqt/field.hpp"

#include "fqt/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace fqt {

namespace {

using Coeffs = std::vector<unsigned>;

void trim(Coeffs& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
    for (unsigned x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw DivisionByZero("no inverse mod p");
}

// Remainder of a modulo b over F_p; b nonzero.
Coeffs rem_mod_p(Coeffs a, const Coeffs& b, unsigned p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const unsigned lead_inv = inv_mod(b.back(), p);
    while (a.size() > db) {
        const std::size_t shift = a.size() - 1 - db;
        const unsigned c = a.back() * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = (a[shift + i] + (p - c) * b[i]) % p;
        trim(a);
    }
    return a;
}

// Frozen table of default moduli, low degree first.
const std::map<std::pair<unsigned, unsigned>, Coeffs>& default_moduli() {
    static const std::map<std::pair<unsigned, unsigned>, Coeffs> table{
        {{2, 2}, {1, 1, 1}},                // x^2 + x + 1
        {{2, 3}, {1, 1, 0, 1}},             // x^3 + x + 1
        {{2, 4}, {1, 1, 0, 0, 1}},          // x^4 + x + 1
        {{2, 5}, {1, 0, 1, 0, 0, 1}},       // x^5 + x^2 + 1
        {{2, 6}, {1, 1, 0, 0, 0, 0, 1}},    // x^6 + x + 1
        {{3, 2}, {1, 0, 1}},                // x^2 + 1
        {{3, 3}, {1, 2, 0, 1}},             // x^3 + 2x + 1
        {{5, 2}, {2, 0, 1}},                // x^2 + 2
        {{7, 2}, {1, 0, 1}},                // x^2 + 1
    };
    return table;
}

} // namespace

bool is_prime_number(unsigned n) noexcept {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const Coeffs& f_in, unsigned p) {
    Coeffs f = f_in;
    trim(f);
    if (f.size() < 2) return false;
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; d <= deg / 2; ++d) {
        // Monic candidates of degree d: p^d choices for the lower coefficients.
        unsigned count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (unsigned code = 0; code < count; ++code) {
            Coeffs g(d + 1, 0);
            unsigned c = code;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[d] = 1;
            if (rem_mod_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::optional<Coeffs> Field::default_modulus(unsigned p, unsigned r) {
    if (r == 1) return Coeffs{0, 1};
    const auto& t = default_moduli();
    auto it = t.find({p, r});
    if (it == t.end()) return std::nullopt;
    return it->second;
}

FieldPtr Field::make(unsigned p, unsigned r, std::optional<Coeffs> modulus) {
    if (!is_prime_number(p)) throw InputError("characteristic " + std::to_string(p) + " is not prime");
    if (r == 0) throw InputError("extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxOrder) throw InputError("field order exceeds " + std::to_string(kMaxOrder));
    }
    Coeffs f;
    if (modulus) {
        f = *modulus;
        for (unsigned c : f)
            if (c >= p) throw InputError("modulus coefficient out of range for F_" + std::to_string(p));
        if (f.size() != r + 1 || f.back() != 1)
            throw InputError("modulus must be monic of degree " + std::to_string(r));
        if (r > 1 && !is_irreducible_mod_p(f, p)) throw InputError("modulus is reducible over F_" + std::to_string(p));
        if (r == 1) f = {0, 1};
    } else {
        auto def = default_modulus(p, r);
        if (!def)
            throw InputError("no built-in modulus for q = " + std::to_string(q) + "; pass one explicitly");
        f = *def;
    }
    return FieldPtr(new Field(p, r, std::move(f)));
}

Field::Field(unsigned p, unsigned r, Coeffs modulus) : p_(p), r_(r), q_(1), modulus_(std::move(modulus)) {
    for (unsigned i = 0; i < r_; ++i) q_ *= p_;
    const unsigned q = q_;

    auto digits = [&](unsigned v) {
        Coeffs d(r_, 0);
        for (unsigned i = 0; i < r_; ++i) {
            d[i] = v % p_;
            v /= p_;
        }
        return d;
    };
    auto encode = [&](const Coeffs& d) {
        unsigned v = 0;
        for (unsigned i = r_; i-- > 0;) v = v * p_ + (i < d.size() ? d[i] : 0);
        return v;
    };

    add_.resize(std::size_t{q} * q);
    neg_.resize(q);
    for (unsigned a = 0; a < q; ++a) {
        const Coeffs da = digits(a);
        Coeffs dn(r_);
        for (unsigned i = 0; i < r_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<Elem>(encode(dn));
        for (unsigned b = 0; b < q; ++b) {
            const Coeffs db = digits(b);
            Coeffs ds(r_);
            for (unsigned i = 0; i < r_; ++i) ds[i] = (da[i] + db[i]) % p_;
            add_[idx(a, b)] = static_cast<Elem>(encode(ds));
        }
    }

    // Schoolbook product reduced modulo the modulus; used only to seed the log tables.
    auto mul_slow = [&](unsigned a, unsigned b) {
        const Coeffs da = digits(a), db = digits(b);
        Coeffs prod(2 * r_, 0);
        for (unsigned i = 0; i < r_; ++i)
            for (unsigned j = 0; j < r_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        if (r_ == 1) return prod[0];
        return encode(rem_mod_p(prod, modulus_, p_));
    };

    log_.assign(q, 0);
    antilog_.assign(q - 1, 1);
    for (unsigned g = 1; g < q; ++g) {
        unsigned x = 1;
        unsigned order = 0;
        do {
            x = mul_slow(x, g);
            ++order;
        } while (x != 1);
        if (order == q - 1) {
            generator_ = static_cast<Elem>(g);
            break;
        }
    }
    unsigned x = 1;
    for (unsigned k = 0; k < q - 1; ++k) {
        antilog_[k] = static_cast<Elem>(x);
        log_[x] = k;
        x = mul_slow(x, generator_);
    }

    mul_.assign(std::size_t{q} * q, 0);
    inv_.assign(q, 0);
    for (unsigned a = 1; a < q; ++a) {
        for (unsigned b = 1; b < q; ++b) mul_[idx(a, b)] = antilog_[(log_[a] + log_[b]) % (q - 1)];
        inv_[a] = antilog_[(q - 1 - log_[a]) % (q - 1)];
    }
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
    return inv_[a];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return antilog_[static_cast<std::size_t>((log_[a] * (e % (q_ - 1))) % (q_ - 1))];
}

std::string Field::spec() const {
    return std::to_string(p_) + "^" + std::to_string(r_);
}

} // namespace fqt
