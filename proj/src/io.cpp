#include "fqt/io.hpp"

#include "fqt/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace fqt::io {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i)
        if (i == s.size() || s[i] == sep) {
            parts.push_back(strip(s.substr(start, i - start)));
            start = i + 1;
        }
    return parts;
}

unsigned parse_uint(std::string_view tok, std::string_view what) {
    tok = strip(tok);
    unsigned v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
        throw InputError("malformed " + std::string(what) + " '" + std::string(tok) + "'");
    return v;
}

} // namespace

FieldSpec parse_field_spec(std::string_view text) {
    text = strip(text);
    FieldSpec spec;
    const auto caret = text.find('^');
    if (caret == std::string_view::npos) {
        spec.p = parse_uint(text, "field characteristic");
    } else {
        spec.p = parse_uint(text.substr(0, caret), "field characteristic");
        spec.r = parse_uint(text.substr(caret + 1), "extension degree");
    }
    return spec;
}

std::vector<unsigned> parse_modulus(std::string_view text) {
    std::vector<unsigned> out;
    for (auto tok : split(strip(text), ',')) out.push_back(parse_uint(tok, "modulus coefficient"));
    return out;
}

Poly parse_poly(const FieldPtr& field, std::string_view text) {
    text = strip(text);
    if (text == "0") return Poly::zero(field);
    std::vector<Elem> coeffs;
    for (auto tok : split(text, ',')) {
        const unsigned v = parse_uint(tok, "coefficient");
        if (!field->contains(v))
            throw InputError("coefficient " + std::to_string(v) + " outside F_" + std::to_string(field->q()));
        coeffs.push_back(static_cast<Elem>(v));
    }
    if (coeffs.back() == 0) throw InputError("non-canonical polynomial '" + std::string(text) + "' (trailing zero)");
    return Poly(field, std::move(coeffs));
}

BiPoly parse_bipoly(const FieldPtr& field, std::string_view text) {
    text = strip(text);
    if (text == "0") return BiPoly(field);
    std::vector<BiTerm> terms;
    for (auto term : split(text, ';')) {
        const auto parts = split(term, ',');
        if (parts.size() != 3) throw InputError("bivariate term must be i,j,c: '" + std::string(term) + "'");
        const unsigned c = parse_uint(parts[2], "coefficient");
        if (c == 0 || !field->contains(c)) throw InputError("bad bivariate coefficient in '" + std::string(term) + "'");
        terms.push_back({parse_uint(parts[0], "t-degree"), parse_uint(parts[1], "u-degree"), static_cast<Elem>(c)});
    }
    return BiPoly(field, std::move(terms));
}

namespace {

// Shared driver: header handling plus one payload line at a time.
template <class Payload>
FieldPtr read_lines(std::istream& in, const std::optional<FieldSpec>& fallback, Payload&& payload) {
    std::optional<FieldSpec> header;
    FieldPtr field;
    std::string line;
    std::size_t lineno = 0;

    auto ensure_field = [&]() {
        if (field) return;
        if (header && fallback) {
            const bool agree = header->p == fallback->p && header->r == fallback->r &&
                               (!fallback->modulus || !header->modulus || header->modulus == fallback->modulus);
            if (!agree) throw InputError("field in file header disagrees with --field");
            if (!header->modulus) header->modulus = fallback->modulus;
        }
        const auto& spec = header ? header : fallback;
        if (!spec) throw InputError("no field given: add a 'field p^r' header or pass --field");
        field = spec->make();
    };

    try {
        while (std::getline(in, line)) {
            ++lineno;
            std::string_view s = line;
            if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
            s = strip(s);
            if (s.empty()) continue;
            if (s.rfind("field", 0) == 0 && !field) {
                if (header) throw InputError("duplicate field header");
                std::istringstream words{std::string(s)};
                std::string kw, spec, mod_kw, mod;
                words >> kw >> spec >> mod_kw >> mod;
                header = parse_field_spec(spec);
                if (!mod_kw.empty()) {
                    if (mod_kw != "modulus" || mod.empty()) throw InputError("expected 'modulus c0,c1,...'");
                    header->modulus = parse_modulus(mod);
                }
                continue;
            }
            if (s.rfind("modulus", 0) == 0 && !field) {
                if (!header || header->modulus) throw InputError("modulus line must follow a field header");
                header->modulus = parse_modulus(s.substr(7));
                continue;
            }
            ensure_field();
            payload(field, s);
        }
        ensure_field();
    } catch (const InputError& e) {
        throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
    return field;
}

} // namespace

PolyFile read_poly_file(std::istream& in, const std::optional<FieldSpec>& fallback) {
    PolyFile out;
    out.field = read_lines(in, fallback, [&](const FieldPtr& f, std::string_view s) { out.polys.push_back(parse_poly(f, s)); });
    return out;
}

PolyFile load_poly_file(const std::string& path, const std::optional<FieldSpec>& fallback) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_poly_file(in, fallback);
}

BiPolyFile read_bipoly_file(std::istream& in, const std::optional<FieldSpec>& fallback) {
    BiPolyFile out;
    out.field = read_lines(in, fallback, [&](const FieldPtr& f, std::string_view s) { out.polys.push_back(parse_bipoly(f, s)); });
    return out;
}

void write_poly_file(std::ostream& out, const Field& field, const std::vector<Poly>& polys) {
    out << "field " << field.spec();
    if (!field.is_prime()) {
        out << " modulus ";
        for (std::size_t i = 0; i < field.modulus().size(); ++i) out << (i ? "," : "") << field.modulus()[i];
    }
    out << '\n';
    for (const Poly& p : polys) out << p.to_string() << '\n';
}

} // namespace fqt::io
