#include "fqt/bipoly.hpp"

#include "fqt/errors.hpp"
#include "fqt/rowset.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace fqt {

BiPoly::BiPoly(FieldPtr field, std::vector<BiTerm> terms) : field_(std::move(field)) {
    if (!field_->is_prime()) throw InputError("bivariate model is defined over prime fields only");
    std::sort(terms.begin(), terms.end(), [](const BiTerm& a, const BiTerm& b) {
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    for (const BiTerm& t : terms) {
        if (!field_->contains(t.c)) throw InputError("coefficient out of range");
        if (!terms_.empty() && terms_.back().i == t.i && terms_.back().j == t.j)
            terms_.back().c = field_->add(terms_.back().c, t.c);
        else
            terms_.push_back(t);
        if (terms_.back().c == 0) terms_.pop_back();
    }
}

unsigned BiPoly::t_degree() const noexcept {
    unsigned d = 0;
    for (const BiTerm& t : terms_) d = std::max(d, t.i);
    return d;
}

unsigned BiPoly::u_degree() const noexcept { return terms_.empty() ? 0 : terms_.back().j; }

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const BiTerm& t : terms_) {
        if (!s.empty()) s += ';';
        s += std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.c);
    }
    return s;
}

std::strong_ordering operator<=>(const BiPoly& a, const BiPoly& b) noexcept {
    if (auto c = a.terms_.size() <=> b.terms_.size(); c != 0) return c;
    for (std::size_t k = 0; k < a.terms_.size(); ++k) {
        const BiTerm& x = a.terms_[k];
        const BiTerm& y = b.terms_[k];
        if (auto c = std::tie(x.j, x.i, x.c) <=> std::tie(y.j, y.i, y.c); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

BiPolySet::BiPolySet(FieldPtr field, std::vector<BiPoly> elements) : field_(std::move(field)), elems_(std::move(elements)) {
    for (const BiPoly& e : elems_)
        if (!same_field(field_, e.field())) throw InputError("set element over a different field");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

namespace {

struct Grid {
    unsigned t_span = 1;
    unsigned u_span = 1;
    std::size_t width() const noexcept { return std::size_t{t_span} * u_span; }
};

Grid grid_for(const BiPolySet& a, const BiPolySet& b) {
    Grid g;
    for (const auto* s : {&a, &b})
        for (const BiPoly& x : s->elements()) {
            g.t_span = std::max(g.t_span, x.t_degree() + 1);
            g.u_span = std::max(g.u_span, x.u_degree() + 1);
        }
    return g;
}

RowMatrix flatten(const BiPolySet& s, const Grid& g) {
    RowMatrix m(g.width());
    std::vector<Elem> row(g.width());
    for (const BiPoly& x : s.elements()) {
        std::fill(row.begin(), row.end(), 0);
        for (const BiTerm& t : x.terms()) row[std::size_t{t.j} * g.t_span + t.i] = t.c;
        m.push(row);
    }
    return m;
}

BiPolySet unflatten(const FieldPtr& field, const RowMatrix& m, const Grid& g) {
    std::vector<BiPoly> out;
    out.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::vector<BiTerm> terms;
        const auto row = m.row(r);
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k] != 0)
                terms.push_back({static_cast<unsigned>(k % g.t_span), static_cast<unsigned>(k / g.t_span), row[k]});
        out.emplace_back(field, std::move(terms));
    }
    return BiPolySet(field, std::move(out));
}

} // namespace

BiPolySet bi_sumset(const BiPolySet& a, const BiPolySet& b, std::uint64_t cap) {
    if (!same_field(a.field(), b.field())) throw InputError("sets over different fields");
    const Grid g = grid_for(a, b);
    return unflatten(a.field(), row_sumset(*a.field(), flatten(a, g), flatten(b, g), RowOp::Add, cap), g);
}

BiPolySet bi_dilate(const BiPolySet& a, Var v) {
    std::vector<BiPoly> out;
    out.reserve(a.size());
    for (const BiPoly& x : a.elements()) {
        std::vector<BiTerm> terms = x.terms();
        for (BiTerm& t : terms) (v == Var::T ? t.i : t.j) += 1;
        out.emplace_back(a.field(), std::move(terms));
    }
    return BiPolySet(a.field(), std::move(out));
}

BiPolySet dilate_example(unsigned p, unsigned n, unsigned m, std::uint64_t cap) {
    if (n == 0 || m == 0) throw InputError("dilate example needs n, m >= 1");
    const FieldPtr field = Field::make(p);
    const std::size_t slots = std::size_t{n} * m;
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < slots; ++k) {
        if (total > cap / p) throw ResourceError("dilate example exceeds cap " + std::to_string(cap));
        total *= p;
    }
    std::vector<BiPoly> out;
    out.reserve(total);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<BiTerm> terms;
        std::uint64_t c = code;
        // Slot (i, k): coefficient of t^k in a_i, attached to u^i for i = 1..n.
        for (unsigned i = 1; i <= n; ++i)
            for (unsigned k = 0; k < m; ++k) {
                if (const Elem e = static_cast<Elem>(c % p); e != 0) terms.push_back({k, i, e});
                c /= p;
            }
        out.emplace_back(field, std::move(terms));
    }
    return BiPolySet(field, std::move(out));
}

LogValue log_base(const Rational& x, unsigned p) {
    LogValue v;
    v.approx = std::log(x.value()) / std::log(static_cast<double>(p));
    if (x.den == 1 && x.num >= 1) {
        std::uint64_t n = x.num;
        std::uint64_t k = 0;
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        if (n == 1) v.exact = k;
    }
    return v;
}

GrowthReport growth_report(const BiPolySet& a, std::uint64_t cap) {
    if (a.empty()) throw InputError("growth report of the empty set");
    const unsigned p = a.field()->p();
    GrowthReport r;
    r.size = a.size();
    r.t_sum_size = bi_sumset(a, bi_dilate(a, Var::T), cap).size();
    r.u_sum_size = bi_sumset(a, bi_dilate(a, Var::U), cap).size();
    r.k1 = Rational(r.t_sum_size, r.size);
    r.k2 = Rational(r.u_sum_size, r.size);
    r.log_k1 = log_base(r.k1, p);
    r.log_k2 = log_base(r.k2, p);
    r.log_size = log_base(Rational(r.size, 1), p);
    r.log_product.approx = r.log_k1.approx * r.log_k2.approx;
    if (r.log_k1.exact && r.log_k2.exact) r.log_product.exact = *r.log_k1.exact * *r.log_k2.exact;
    if (r.log_product.exact && r.log_size.exact)
        r.product_matches_size = *r.log_product.exact == *r.log_size.exact;
    else
        r.product_matches_size = std::abs(r.log_product.approx - r.log_size.approx) <= 1e-9;
    return r;
}

} // namespace fqt
