#include "fqt/subspace.hpp"

#include "fqt/echelon.hpp"
#include "fqt/errors.hpp"

#include <algorithm>

namespace fqt {

namespace {

std::size_t width_for(const std::vector<Poly>& polys) {
    Degree d = kNegInf;
    for (const Poly& p : polys) d = std::max(d, p.degree());
    return d == kNegInf ? 0 : static_cast<std::size_t>(d) + 1;
}

} // namespace

Subspace Subspace::span(const FieldPtr& field, const std::vector<Poly>& generators) {
    for (const Poly& g : generators)
        if (!same_field(field, g.field())) throw InputError("generator over a different field");
    const std::size_t w = width_for(generators);
    Echelon ech(field, w);
    for (const Poly& g : generators) ech.insert(g.dense(w));
    std::vector<Poly> basis;
    for (Row& r : ech.rows()) basis.emplace_back(field, std::move(r));
    return Subspace(field, std::move(basis));
}

Subspace Subspace::pol(const FieldPtr& field, std::size_t n) {
    std::vector<Poly> basis;
    for (std::size_t k = 0; k < n; ++k) basis.push_back(Poly::monomial(field, k));
    return Subspace(field, std::move(basis));
}

void Subspace::require_field(const FieldPtr& other) const {
    if (!same_field(field_, other)) throw InputError("operands over different fields");
}

std::optional<std::uint64_t> Subspace::cardinality() const noexcept {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (n > UINT64_MAX / field_->q()) return std::nullopt;
        n *= field_->q();
    }
    return n;
}

std::optional<std::vector<Elem>> Subspace::coordinates(const Poly& x) const {
    require_field(x.field());
    // Reduced form: the coordinate on basis_i is the coefficient of x at deg(basis_i).
    std::vector<Elem> c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = x[static_cast<std::size_t>(basis_[i].degree())];
    if (combine(c) != x) return std::nullopt;
    return c;
}

bool Subspace::contains(const Poly& x) const { return coordinates(x).has_value(); }

Poly Subspace::combine(const std::vector<Elem>& coords) const {
    Poly acc = Poly::zero(field_);
    for (std::size_t i = 0; i < basis_.size() && i < coords.size(); ++i)
        if (coords[i] != 0) acc = acc + basis_[i].scaled(coords[i]);
    return acc;
}

Subspace Subspace::operator+(const Subspace& w) const {
    require_field(w.field_);
    std::vector<Poly> gens = basis_;
    gens.insert(gens.end(), w.basis_.begin(), w.basis_.end());
    return span(field_, gens);
}

Subspace Subspace::intersect(const Subspace& w) const {
    require_field(w.field_);
    if (is_zero() || w.is_zero()) return Subspace(field_);
    // Kernel of the stacked matrix [V; W]: sum a_i v_i + sum b_j w_j = 0 gives sum a_i v_i in V cap W.
    std::vector<Poly> stacked = basis_;
    stacked.insert(stacked.end(), w.basis_.begin(), w.basis_.end());
    const std::size_t width = width_for(stacked);
    std::vector<Row> rows;
    for (const Poly& p : stacked) rows.push_back(p.dense(width));
    std::vector<Poly> gens;
    for (const Row& k : left_kernel(field_, rows, width))
        gens.push_back(combine(std::vector<Elem>(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(dim()))));
    return span(field_, gens);
}

Subspace Subspace::dilate(const Poly& c) const {
    require_field(c.field());
    if (c.is_zero()) throw InputError("dilation by the zero polynomial");
    std::vector<Poly> gens;
    for (const Poly& b : basis_) gens.push_back(b * c);
    return span(field_, gens);
}

Subspace Subspace::shifted(std::size_t k) const {
    std::vector<Poly> gens;
    for (const Poly& b : basis_) gens.push_back(b.shifted(k));
    // t^k preserves monicity, degree order and the reduced pattern.
    return Subspace(field_, std::move(gens));
}

std::vector<Poly> Subspace::elements(std::uint64_t cap) const {
    const auto n = cardinality();
    if (!n || *n > cap) throw ResourceError("subspace has more than " + std::to_string(cap) + " elements");
    const unsigned q = field_->q();
    std::vector<Poly> out;
    out.reserve(*n);
    std::vector<Elem> c(dim(), 0);
    for (std::uint64_t code = 0; code < *n; ++code) {
        std::uint64_t v = code;
        for (std::size_t i = 0; i < dim(); ++i) {
            c[i] = static_cast<Elem>(v % q);
            v /= q;
        }
        out.push_back(combine(c));
    }
    return out;
}

std::size_t weak_dim(const Subspace& v) { return (v + v.shifted(1)).dim() - v.dim(); }

} // namespace fqt
