#include "fqt/poly.hpp"

#include "fqt/errors.hpp"
#include "fqt/simd/kernels.hpp"

#include <algorithm>

namespace fqt {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_)
        if (!field_->contains(c)) throw InputError("coefficient " + std::to_string(c) + " not in F_" + std::to_string(field_->q()));
    canonicalize();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), std::vector<Elem>{c}); }

Poly Poly::monomial(FieldPtr field, std::size_t k, Elem c) {
    std::vector<Elem> v(k + 1, 0);
    v[k] = c;
    return Poly(std::move(field), std::move(v));
}

void Poly::canonicalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& o) const {
    if (!same_field(field_, o.field_)) throw InputError("polynomials over different fields");
}

Poly Poly::operator+(const Poly& o) const {
    require_same_field(o);
    const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    const auto a = dense(n), b = o.dense(n);
    Poly out(field_);
    out.coeffs_.resize(n);
    simd::add(*field_, out.coeffs_, a, b);
    out.canonicalize();
    return out;
}

Poly Poly::operator-(const Poly& o) const {
    require_same_field(o);
    const std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    const auto a = dense(n), b = o.dense(n);
    Poly out(field_);
    out.coeffs_.resize(n);
    simd::sub(*field_, out.coeffs_, a, b);
    out.canonicalize();
    return out;
}

Poly Poly::operator-() const { return zero(field_) - *this; }

Poly Poly::operator*(const Poly& o) const {
    require_same_field(o);
    Poly out(field_);
    if (is_zero() || o.is_zero()) return out;
    out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        simd::axpy(*field_, std::span(out.coeffs_).subspan(i, o.coeffs_.size()), o.coeffs_, coeffs_[i]);
    out.canonicalize();
    return out;
}

Poly Poly::scaled(Elem c) const {
    Poly out = *this;
    simd::scale(*field_, out.coeffs_, c);
    out.canonicalize();
    return out;
}

Poly Poly::shifted(std::size_t k) const {
    Poly out(field_);
    if (is_zero()) return out;
    out.coeffs_.assign(k, 0);
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

Poly Poly::unshifted(std::size_t k) const {
    if (is_zero()) return *this;
    for (std::size_t i = 0; i < k; ++i)
        if ((*this)[i] != 0) throw InvariantError("polynomial not divisible by t^" + std::to_string(k));
    return Poly(field_, std::vector<Elem>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

Poly Poly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(field_->inv(leading()));
}

std::vector<Elem> Poly::dense(std::size_t width) const {
    if (coeffs_.size() > width) throw InvariantError("polynomial wider than requested row");
    std::vector<Elem> v(width, 0);
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin());
    return v;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(coeffs_[i]);
    }
    return s;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) noexcept {
    if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
    for (std::size_t i = a.coeffs_.size(); i-- > 0;)
        if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::size_t PolyHash::operator()(const Poly& p) const noexcept {
    // FNV-1a over the coefficient bytes.
    std::size_t h = 1469598103934665603ull;
    for (Elem c : p.coeffs()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace fqt
