#include "fqt/bipoly.hpp"
#include "fqt/campaign.hpp"
#include "fqt/entropy.hpp"
#include "fqt/errors.hpp"
#include "fqt/io.hpp"
#include "fqt/polyset.hpp"
#include "fqt/structure.hpp"
#include "fqt/subspace.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

using namespace fqt;
using nlohmann::ordered_json;

namespace {

enum Exit : int { kPass = 0, kVerifyFail = 1, kInputError = 2, kResourceLimit = 3 };

struct Common {
    std::string field;
    std::string modulus;
    std::uint64_t seed = 1;
    std::uint64_t cap = kDefaultSetCap;
    bool json = false;

    std::optional<io::FieldSpec> spec() const {
        if (field.empty()) {
            if (!modulus.empty()) throw InputError("--modulus needs --field");
            return std::nullopt;
        }
        io::FieldSpec s = io::parse_field_spec(field);
        if (!modulus.empty()) s.modulus = io::parse_modulus(modulus);
        return s;
    }

    io::FieldSpec spec_or(io::FieldSpec fallback) const { return spec().value_or(std::move(fallback)); }
};

void emit(const Common& c, const ordered_json& j, const std::string& text) {
    if (c.json)
        std::cout << j.dump(2) << '\n';
    else
        std::cout << text;
}

ordered_json log_json(const LogValue& v) {
    if (v.exact) return *v.exact;
    return v.approx;
}

std::string log_text(const LogValue& v) {
    return v.exact ? std::to_string(*v.exact) : std::to_string(v.approx);
}

ordered_json cells_json(const campaign::Summary& s) {
    ordered_json cells = ordered_json::array();
    for (const auto& [key, count] : s.cells)
        cells.push_back({{"dim", key.first}, {"weak_dim", key.second}, {"count", count}});
    return cells;
}

std::string cells_text(const campaign::Summary& s) {
    std::string out = "dim weak_dim count\n";
    for (const auto& [key, count] : s.cells)
        out += std::to_string(key.first) + ' ' + std::to_string(key.second) + ' ' + std::to_string(count) + '\n';
    return out;
}

ordered_json summary_json(const campaign::Summary& s) {
    return {{"instances", s.instances},         {"failures", s.failures},
            {"oracle_checked", s.oracle_checked}, {"oracle_disagreements", s.oracle_disagreements},
            {"oracle_skipped", s.oracle_skipped}, {"cells", cells_json(s)},
            {"failure_notes", s.failure_notes}};
}

std::string summary_text(const campaign::Summary& s) {
    std::string out = "instances " + std::to_string(s.instances) + "\nfailures " + std::to_string(s.failures) +
                      "\noracle checked " + std::to_string(s.oracle_checked) + ", disagreements " +
                      std::to_string(s.oracle_disagreements) + ", skipped " + std::to_string(s.oracle_skipped) +
                      '\n' + cells_text(s);
    for (const auto& note : s.failure_notes) out += "failure: " + note + '\n';
    return out;
}

PolySet load_set(const std::string& path, const Common& c) {
    auto file = io::load_poly_file(path, c.spec());
    return PolySet(file.field, std::move(file.polys));
}

int cmd_decompose(const Common& c, const std::string& path) {
    const auto file = io::load_poly_file(path, c.spec());
    const Subspace v = Subspace::span(file.field, file.polys);
    const auto d = decompose(v);
    const auto rep = verify_decomposition(v, d);
    const bool ok = rep.valid() && rep.minimal();

    ordered_json j;
    j["field"] = file.field->spec();
    j["dim"] = v.dim();
    j["basis"] = ordered_json::array();
    for (const Poly& b : v.basis()) j["basis"].push_back(b.to_string());
    j["weak_dim"] = rep.weak_dim;
    j["rank"] = rep.rank;
    j["blocks"] = ordered_json::array();
    for (const Block& b : d.blocks) j["blocks"].push_back({{"d", b.d}, {"y", b.y.to_string()}});
    j["report"] = {{"ordering_strict", rep.ordering_strict},
                   {"direct", rep.direct},
                   {"spans", rep.spans},
                   {"minimal", rep.minimal()}};
    j["passed"] = ok;

    std::string text = "field " + file.field->spec() + "\nbasis (dim " + std::to_string(v.dim()) + ")\n";
    for (const Poly& b : v.basis()) text += "  " + b.to_string() + '\n';
    text += "weak_dim " + std::to_string(rep.weak_dim) + "\nblocks (rank " + std::to_string(rep.rank) + ")\n";
    for (const Block& b : d.blocks) text += "  d=" + std::to_string(b.d) + " y=" + b.y.to_string() + '\n';
    text += std::string("ordering_strict ") + (rep.ordering_strict ? "yes" : "no") + "\ndirect " +
            (rep.direct ? "yes" : "no") + "\nspans " + (rep.spans ? "yes" : "no") + "\nminimal " +
            (rep.minimal() ? "yes" : "no") + '\n' + (ok ? "PASS\n" : "FAIL\n");
    emit(c, j, text);
    return ok ? kPass : kVerifyFail;
}

int cmd_verify_exhaustive(const Common& c, unsigned n, bool oracle, std::uint64_t cap) {
    const FieldPtr field = c.spec_or({2, 1, std::nullopt}).make();
    const auto rep = campaign::verify_exhaustive(field, n, cap, oracle ? std::optional<OracleLimits>(OracleLimits{})
                                                                       : std::nullopt);
    ordered_json j{{"field", rep.field}, {"n", rep.n}, {"expected_total", rep.expected_total}};
    j.update(summary_json(rep.summary));
    j["passed"] = rep.passed();
    emit(c, j,
         "field " + rep.field + ", Pol(" + std::to_string(n) + "), expected " +
             std::to_string(rep.expected_total) + " subspaces\n" + summary_text(rep.summary) +
             (rep.passed() ? "PASS\n" : "FAIL\n"));
    return rep.passed() ? kPass : kVerifyFail;
}

int cmd_random_verify(const Common& c, campaign::CampaignConfig cfg) {
    cfg.field = c.spec_or({2, 1, std::nullopt});
    cfg.seed = c.seed;
    const auto s = campaign::random_verify(cfg);
    const std::string field = cfg.field.make()->spec();
    ordered_json j{{"field", field},
                   {"samples", cfg.samples},
                   {"max_dim", cfg.max_dim},
                   {"max_degree", cfg.max_degree},
                   {"seed", cfg.seed}};
    j.update(summary_json(s));
    j["passed"] = s.passed();
    emit(c, j,
         "field " + field + ", " + std::to_string(cfg.samples) + " samples, seed " + std::to_string(cfg.seed) +
             '\n' + summary_text(s) + (s.passed() ? "PASS\n" : "FAIL\n"));
    return s.passed() ? kPass : kVerifyFail;
}

int cmd_sumset_stats(const Common& c, const std::string& path) {
    const PolySet a = load_set(path, c);
    const auto s = doubling_stats(a, c.cap);
    ordered_json j{{"size", s.size},       {"sum_size", s.sum_size}, {"dilate_sum_size", s.dilate_sum_size},
                   {"diff_size", s.diff_size}, {"k1_num", s.k1.num},  {"k1_den", s.k1.den},
                   {"k2_num", s.k2.num},   {"k2_den", s.k2.den}};
    emit(c, j,
         "|A| " + std::to_string(s.size) + "\n|A+A| " + std::to_string(s.sum_size) + "\n|A+tA| " +
             std::to_string(s.dilate_sum_size) + "\n|A-A| " + std::to_string(s.diff_size) + "\nK1 " +
             s.k1.to_string() + "\nK2 " + s.k2.to_string() + '\n');
    return kPass;
}

int cmd_dilate_example(const Common& c, unsigned p, unsigned n, unsigned m) {
    const auto g = growth_report(dilate_example(p, n, m, c.cap), c.cap);
    ordered_json j{{"p", p},
                   {"n", n},
                   {"m", m},
                   {"size", g.size},
                   {"t_sum_size", g.t_sum_size},
                   {"u_sum_size", g.u_sum_size},
                   {"k1_num", g.k1.num},
                   {"k1_den", g.k1.den},
                   {"k2_num", g.k2.num},
                   {"k2_den", g.k2.den},
                   {"log_size", log_json(g.log_size)},
                   {"log_k1", log_json(g.log_k1)},
                   {"log_k2", log_json(g.log_k2)},
                   {"log_product", log_json(g.log_product)},
                   {"product_matches_size", g.product_matches_size}};
    emit(c, j,
         "|A| " + std::to_string(g.size) + "\n|A+tA| " + std::to_string(g.t_sum_size) + "\n|A+uA| " +
             std::to_string(g.u_sum_size) + "\nK1 " + g.k1.to_string() + "\nK2 " + g.k2.to_string() +
             "\nlog_p |A| " + log_text(g.log_size) + "\nlog_p K1 " + log_text(g.log_k1) + "\nlog_p K2 " +
             log_text(g.log_k2) + "\nlog_p K1 * log_p K2 " + log_text(g.log_product) + '\n' +
             (g.product_matches_size ? "PASS\n" : "FAIL\n"));
    return g.product_matches_size ? kPass : kVerifyFail;
}

int cmd_entropy(const Common& c, const std::vector<std::string>& paths) {
    const PolySet a = load_set(paths[0], c);
    const PolySet b = paths.size() > 1 ? load_set(paths[1], c) : a;
    if (!same_field(a.field(), b.field())) throw InputError("set files use different fields");
    const auto d = entropic_distance(a, b, c.cap);
    const bool ok = d.distance >= -1e-9;
    ordered_json j{{"h_sum", d.h_sum}, {"h_a", d.h_a}, {"h_b", d.h_b}, {"distance", d.distance}, {"passed", ok}};
    char buf[256];
    std::snprintf(buf, sizeof buf, "H(X+Y) %.12g\nH(X) %.12g\nH(Y) %.12g\nd[X;Y] %.12g\n", d.h_sum, d.h_a, d.h_b,
                  d.distance);
    emit(c, j, std::string(buf) + (ok ? "PASS\n" : "FAIL\n"));
    return ok ? kPass : kVerifyFail;
}

int cmd_cover(const Common& c, const std::string& path_a, const std::string& path_b) {
    const PolySet a = load_set(path_a, c);
    const PolySet b = load_set(path_b, c);
    if (!same_field(a.field(), b.field())) throw InputError("set files use different fields");
    const PolySet x = ruzsa_cover(a, b, c.cap);
    const std::uint64_t ab = sumset(a, b, c.cap).size();
    const Rational bound(ab, a.size());
    ordered_json j{{"size", x.size()}, {"bound_num", bound.num}, {"bound_den", bound.den}};
    j["translates"] = ordered_json::array();
    std::string text = "|X| " + std::to_string(x.size()) + " <= |A+B|/|A| = " + bound.to_string() + "\nX\n";
    for (const Poly& p : x) {
        j["translates"].push_back(p.to_string());
        text += "  " + p.to_string() + '\n';
    }
    emit(c, j, text);
    return kPass;
}

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--field", c.field, "field as p^r");
    sub->add_option("--modulus", c.modulus, "modulus coefficients c0,c1,... low degree first");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--cap", c.cap, "size cap for enumerations and sumsets");
    sub->add_flag("--json", c.json, "structured output");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Subspaces and sumsets in F_q[t]"};
    app.require_subcommand(1);
    Common common;

    std::string path, path_b;
    std::vector<std::string> paths;

    auto* dec = app.add_subcommand("decompose", "strong decomposition of a space file");
    dec->add_option("file", path, "space file")->required();
    add_common(dec, common);

    unsigned n = 0;
    bool oracle = false;
    auto* exh = app.add_subcommand("verify-exhaustive", "decompose every subspace of Pol(n)");
    exh->add_option("--n", n, "ambient degree bound")->required();
    exh->add_flag("--oracle", oracle, "also compare with the structural-dimension search");
    add_common(exh, common);

    campaign::CampaignConfig cfg;
    bool no_oracle = false;
    auto* rnd = app.add_subcommand("random-verify", "seeded random campaign");
    rnd->add_option("--samples", cfg.samples);
    rnd->add_option("--max-dim", cfg.max_dim);
    rnd->add_option("--max-degree", cfg.max_degree);
    rnd->add_option("--oracle-cap", cfg.oracle.max_elements, "skip the oracle above this many elements");
    rnd->add_flag("--no-oracle", no_oracle);
    rnd->add_option("--threads", cfg.threads)->check(CLI::Range(1u, 256u));
    add_common(rnd, common);

    auto* sum = app.add_subcommand("sumset-stats", "doubling constants of a set");
    sum->add_option("file", path, "set file")->required();
    add_common(sum, common);

    unsigned p = 2, dn = 1, dm = 1;
    auto* dil = app.add_subcommand("dilate-example", "growth of the transcendental-dilate example");
    dil->add_option("--p", p)->required();
    dil->add_option("--n", dn)->required();
    dil->add_option("--m", dm)->required();
    add_common(dil, common);

    auto* ent = app.add_subcommand("entropy", "entropic distance of uniform laws on one or two sets");
    ent->add_option("files", paths, "set files")->required()->expected(1, 2);
    add_common(ent, common);

    auto* cov = app.add_subcommand("cover", "covering of B by translates of A - A");
    cov->add_option("a", path, "set file A")->required();
    cov->add_option("b", path_b, "set file B")->required();
    add_common(cov, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kInputError;
    }

    try {
        if (*dec) return cmd_decompose(common, path);
        if (*exh) return cmd_verify_exhaustive(common, n, oracle, common.cap);
        if (*rnd) {
            cfg.use_oracle = !no_oracle;
            return cmd_random_verify(common, cfg);
        }
        if (*sum) return cmd_sumset_stats(common, path);
        if (*dil) return cmd_dilate_example(common, p, dn, dm);
        if (*ent) return cmd_entropy(common, paths);
        if (*cov) return cmd_cover(common, path, path_b);
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResourceLimit;
    } catch (const InvariantError& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return kVerifyFail;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const DivisionByZero& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}
