#pragma once

// Text formats.
//
//   field spec     "p^r" (or a bare prime "p"), e.g. "2^3"
//   modulus        comma-separated F_p coefficients, low degree first: "1,1,0,1" is x^3 + x + 1
//   polynomial     comma-separated elements of [0, q), low degree first, no trailing zero; "0" is zero
//   bipoly         semicolon-separated "i,j,c" terms (t-degree, u-degree, coefficient); "0" is zero
//   space/set file a header line "field p^r" (optionally followed by "modulus c0,c1,..." on the same or
//                  the next line), then one polynomial per line; blank lines and '#' comments ignored

#include "fqt/bipoly.hpp"
#include "fqt/poly.hpp"
#include "fqt/polyset.hpp"
#include "fqt/subspace.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fqt::io {

struct FieldSpec {
    unsigned p = 0;
    unsigned r = 1;
    std::optional<std::vector<unsigned>> modulus;

    FieldPtr make() const { return Field::make(p, r, modulus); }
};

FieldSpec parse_field_spec(std::string_view text);
std::vector<unsigned> parse_modulus(std::string_view text);
Poly parse_poly(const FieldPtr& field, std::string_view text);
BiPoly parse_bipoly(const FieldPtr& field, std::string_view text);

struct PolyFile {
    FieldPtr field;
    std::vector<Poly> polys;
};

/// Reads a space or set file. `fallback` supplies the field when the file has no header; when both are
/// present they must agree. Throws InputError with a line number on malformed input.
PolyFile read_poly_file(std::istream& in, const std::optional<FieldSpec>& fallback = std::nullopt);
PolyFile load_poly_file(const std::string& path, const std::optional<FieldSpec>& fallback = std::nullopt);

struct BiPolyFile {
    FieldPtr field;
    std::vector<BiPoly> polys;
};
BiPolyFile read_bipoly_file(std::istream& in, const std::optional<FieldSpec>& fallback = std::nullopt);

void write_poly_file(std::ostream& out, const Field& field, const std::vector<Poly>& polys);

} // namespace fqt::io
