#include "fqt/progression.hpp"

#include "fqt/errors.hpp"

namespace fqt {

Progression::Progression(Poly x0, std::vector<Term> terms) : x0_(std::move(x0)), terms_(std::move(terms)) {
    if (!x0_.field()) throw InputError("progression translate has no field");
    for (const Term& t : terms_) {
        if (t.n == 0) throw InputError("progression term length must be at least 1");
        if (!same_field(x0_.field(), t.x.field())) throw InputError("progression terms over different fields");
    }
}

std::size_t Progression::total_length() const noexcept {
    std::size_t n = 0;
    for (const Term& t : terms_) n += t.n;
    return n;
}

std::optional<std::uint64_t> Progression::nominal_size() const noexcept {
    std::uint64_t n = 1;
    const unsigned q = field()->q();
    for (std::size_t i = 0; i < total_length(); ++i) {
        if (n > UINT64_MAX / q) return std::nullopt;
        n *= q;
    }
    return n;
}

Subspace Progression::difference_space() const {
    std::vector<Poly> gens;
    for (const Term& t : terms_)
        for (std::size_t j = 0; j < t.n; ++j) gens.push_back(t.x.shifted(j));
    return Subspace::span(field(), gens);
}

PolySet Progression::enumerate(std::uint64_t cap) const {
    const auto n = nominal_size();
    if (!n || *n > cap) throw ResourceError("progression has more than " + std::to_string(cap) + " terms");
    std::vector<Poly> gens;
    for (const Term& t : terms_)
        for (std::size_t j = 0; j < t.n; ++j) gens.push_back(t.x.shifted(j));
    const unsigned q = field()->q();
    std::vector<Poly> out;
    out.reserve(*n);
    for (std::uint64_t code = 0; code < *n; ++code) {
        Poly acc = x0_;
        std::uint64_t c = code;
        for (const Poly& g : gens) {
            if (const Elem a = static_cast<Elem>(c % q); a != 0) acc = acc + g.scaled(a);
            c /= q;
        }
        out.push_back(std::move(acc));
    }
    return PolySet(field(), std::move(out));
}

bool Progression::contains(const Poly& x) const {
    if (!same_field(field(), x.field())) throw InputError("membership query over a different field");
    return difference_space().contains(x - x0_);
}

bool Progression::is_proper() const { return difference_space().dim() == total_length(); }

Progression to_progression(const StrongDecomposition& d, const Poly& x0) {
    if (!same_field(d.field, x0.field())) throw InputError("translate over a different field");
    std::vector<Progression::Term> terms;
    for (const Block& b : d.blocks) terms.push_back({b.d, b.y});
    return Progression(x0, std::move(terms));
}

} // namespace fqt
