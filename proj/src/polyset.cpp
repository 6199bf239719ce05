#include "fqt/polyset.hpp"

#include "fqt/errors.hpp"
#include "fqt/rowset.hpp"

#include <algorithm>
#include <unordered_set>

namespace fqt {

PolySet::PolySet(FieldPtr field, std::vector<Poly> elements) : field_(std::move(field)), elems_(std::move(elements)) {
    for (const Poly& e : elems_)
        if (!same_field(field_, e.field())) throw InputError("set element over a different field");
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool PolySet::contains(const Poly& x) const { return std::binary_search(elems_.begin(), elems_.end(), x); }

namespace {

void require_same(const PolySet& a, const PolySet& b) {
    if (!same_field(a.field(), b.field())) throw InputError("sets over different fields");
}

std::size_t common_width(const PolySet& a, const PolySet& b) {
    const Degree d = std::max(a.max_degree(), b.max_degree());
    return d == kNegInf ? 0 : static_cast<std::size_t>(d) + 1;
}

RowMatrix pack(const PolySet& s, std::size_t width) {
    RowMatrix m(width);
    for (const Poly& p : s) m.push(p.dense(width));
    return m;
}

PolySet unpack(const FieldPtr& field, const RowMatrix& m) {
    std::vector<Poly> out;
    out.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const auto r = m.row(i);
        out.emplace_back(field, std::vector<Elem>(r.begin(), r.end()));
    }
    return PolySet(field, std::move(out));
}

PolySet combine(const PolySet& a, const PolySet& b, RowOp op, std::uint64_t cap) {
    require_same(a, b);
    const std::size_t w = common_width(a, b);
    return unpack(a.field(), row_sumset(*a.field(), pack(a, w), pack(b, w), op, cap));
}

} // namespace

PolySet sumset(const PolySet& a, const PolySet& b, std::uint64_t cap) { return combine(a, b, RowOp::Add, cap); }

PolySet difference_set(const PolySet& a, const PolySet& b, std::uint64_t cap) {
    return combine(a, b, RowOp::Sub, cap);
}

PolySet dilate(const PolySet& a, const Poly& c) {
    if (!same_field(a.field(), c.field())) throw InputError("dilation by a polynomial over a different field");
    if (c.is_zero()) throw InputError("dilation by the zero polynomial");
    std::vector<Poly> out;
    out.reserve(a.size());
    for (const Poly& x : a) out.push_back(x * c);
    return PolySet(a.field(), std::move(out));
}

PolySet translate(const PolySet& a, const Poly& x) {
    if (!same_field(a.field(), x.field())) throw InputError("translation by a polynomial over a different field");
    std::vector<Poly> out;
    out.reserve(a.size());
    for (const Poly& e : a) out.push_back(e + x);
    return PolySet(a.field(), std::move(out));
}

PolySet iterated_sumset(const PolySet& a, unsigned n, std::uint64_t cap) {
    if (n == 0) throw InputError("iterated sumset needs n >= 1");
    PolySet acc = a;
    for (unsigned i = 1; i < n; ++i) acc = sumset(acc, a, cap);
    return acc;
}

DoublingStats doubling_stats(const PolySet& a, std::uint64_t cap) {
    if (a.empty()) throw InputError("doubling statistics of the empty set");
    DoublingStats s;
    s.size = a.size();
    s.sum_size = sumset(a, a, cap).size();
    s.dilate_sum_size = sumset(a, dilate(a, Poly::monomial(a.field(), 1)), cap).size();
    s.diff_size = difference_set(a, a, cap).size();
    s.k1 = Rational(s.sum_size, s.size);
    s.k2 = Rational(s.dilate_sum_size, s.size);
    return s;
}

PolySet ruzsa_cover(const PolySet& a, const PolySet& b, std::uint64_t cap) {
    require_same(a, b);
    if (a.empty()) throw InputError("covering by the empty set");
    std::unordered_set<Poly, PolyHash> occupied;
    std::vector<Poly> chosen;
    for (const Poly& x : b) {
        const PolySet shifted = translate(a, x);
        const bool disjoint = std::none_of(shifted.begin(), shifted.end(),
                                           [&](const Poly& y) { return occupied.count(y) > 0; });
        if (!disjoint) continue;
        chosen.push_back(x);
        occupied.insert(shifted.begin(), shifted.end());
    }
    PolySet cover(a.field(), std::move(chosen));

    const PolySet reach = sumset(difference_set(a, a, cap), cover, cap);
    for (const Poly& y : b)
        if (!reach.contains(y)) throw InvariantError("covering lemma output misses an element of B");
    if (cover.size() * a.size() > sumset(a, b, cap).size())
        throw InvariantError("covering lemma output exceeds |A+B|/|A|");
    return cover;
}

} // namespace fqt
