#pragma once

#include "fqt/poly.hpp"
#include "oracles.hpp"

#include <initializer_list>
#include <vector>

namespace testutil {

inline fqt::Poly P(const fqt::FieldPtr& f, std::initializer_list<unsigned> c) {
    std::vector<fqt::Elem> v;
    for (unsigned x : c) v.push_back(static_cast<fqt::Elem>(x));
    return fqt::Poly(f, std::move(v));
}

inline oracle::Vec to_vec(const fqt::Poly& p) { return oracle::Vec(p.coeffs().begin(), p.coeffs().end()); }

inline oracle::NaiveField naive(const fqt::Field& f) {
    return oracle::NaiveField{f.p(), oracle::Vec(f.modulus().begin(), f.modulus().end())};
}

} // namespace testutil
