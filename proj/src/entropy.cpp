#include "fqt/entropy.hpp"

#include "fqt/errors.hpp"
#include "fqt/rowset.hpp"

#include <algorithm>
#include <cmath>

namespace fqt {

Distribution::Distribution(std::vector<std::pair<Poly, double>> atoms) : atoms_(std::move(atoms)) {
    double total = 0;
    for (const auto& [x, pr] : atoms_) {
        if (!(pr >= 0)) throw InputError("negative probability");
        total += pr;
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) throw InputError("probabilities do not sum to 1");
}

Distribution Distribution::uniform(const PolySet& a) {
    if (a.empty()) throw InputError("uniform distribution on the empty set");
    std::vector<std::pair<Poly, double>> atoms;
    const double w = 1.0 / static_cast<double>(a.size());
    for (const Poly& x : a) atoms.emplace_back(x, w);
    return Distribution(std::move(atoms));
}

double entropy(const Distribution& d, double base) {
    double h = 0;
    for (const auto& [x, pr] : d.atoms())
        if (pr > 0) h -= pr * std::log(pr);
    return h / std::log(base);
}

SumLaw sum_law(const PolySet& a, const PolySet& b, std::uint64_t cap) {
    if (a.empty() || b.empty()) throw InputError("sum law of an empty set");
    if (!same_field(a.field(), b.field())) throw InputError("sets over different fields");
    const Degree d = std::max(a.max_degree(), b.max_degree());
    const std::size_t w = d == kNegInf ? 0 : static_cast<std::size_t>(d) + 1;
    RowMatrix ma(w), mb(w);
    for (const Poly& x : a) ma.push(x.dense(w));
    for (const Poly& x : b) mb.push(x.dense(w));
    const RowHistogram h = row_sum_histogram(*a.field(), ma, mb, cap);

    // Report atoms in canonical order so the law is independent of enumeration order.
    std::vector<std::pair<Poly, std::uint64_t>> atoms;
    for (std::size_t i = 0; i < h.rows.rows(); ++i) {
        const auto r = h.rows.row(i);
        atoms.emplace_back(Poly(a.field(), std::vector<Elem>(r.begin(), r.end())), h.counts[i]);
    }
    std::sort(atoms.begin(), atoms.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SumLaw law;
    for (auto& [x, c] : atoms) {
        law.values.push_back(std::move(x));
        law.counts.push_back(c);
        law.total += c;
    }
    return law;
}

double entropy(const SumLaw& law, double base) {
    if (law.total == 0) throw InputError("entropy of an empty law");
    const double n = static_cast<double>(law.total);
    double acc = 0;
    for (std::uint64_t c : law.counts) {
        const double x = static_cast<double>(c);
        acc += x * std::log(x);
    }
    const double h = std::log(n) - acc / n;
    // Clamp the rounding residue of a point mass.
    return std::max(0.0, h) / std::log(base);
}

EntropicDistance entropic_distance(const PolySet& a, const PolySet& b, std::uint64_t cap) {
    const double q = a.field()->q();
    EntropicDistance e;
    e.h_sum = entropy(sum_law(a, b, cap), q);
    e.h_a = std::log(static_cast<double>(a.size())) / std::log(q);
    e.h_b = std::log(static_cast<double>(b.size())) / std::log(q);
    e.distance = e.h_sum - (e.h_a + e.h_b) / 2;
    return e;
}

} // namespace fqt
