// aifs: command-line front end.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "aifs/catalog.hpp"
#include "aifs/parallel.hpp"
#include "aifs/pipeline.hpp"
#include "aifs/torus.hpp"

using namespace aifs;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kBudget = 3 };

struct Common {
    std::string system_path;
    std::string out;
    std::string format = "json";
    int precision = 12;
};

void emit(const Common &c, const std::string &text) {
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream f(c.out);
    if (!f)
        throw Error(ErrorKind::parse, "cannot write " + c.out);
    f << text;
    if (!text.empty() && text.back() != '\n')
        f << '\n';
}

void emit(const Common &c, const std::string &command, const std::string &hash, json body) {
    json doc = report_header(command, hash);
    doc.update(body);
    emit(c, doc.dump(2));
}

SystemFile load(const Common &c) {
    if (c.system_path.empty())
        throw Error(ErrorKind::parse, "--system or --triple is required");
    return load_system(c.system_path);
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}}; }

json zeros_json(const ZeroSet &z) {
    json fam = json::array();
    for (const auto &f : z.families)
        fam.push_back(f.description);
    json numeric = json::array();
    for (const auto &p : z.numeric_points)
        numeric.push_back(p);
    return {{"points", to_json(z.points)},
            {"families", fam},
            {"numeric_points", numeric},
            {"exactness", z.exactness == ZeroExactness::certified ? "certified" : "numeric"},
            {"finite_complete", z.finite_complete},
            {"possibly_incomplete", z.possibly_incomplete},
            {"structure", z.structure_tag}};
}

int exit_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::budget:
        return kBudget;
    case ErrorKind::inapplicable:
    case ErrorKind::not_certified:
        return kNegative;
    default:
        return kUsage;
    }
}

} // namespace

int main(int argc, char **argv) {
    configure_threads();

    CLI::App app{"Spectral analysis of affine iterated function systems"};
    app.require_subcommand(1);
    Common c;

    auto add_io = [&](CLI::App *sub, bool needs_system) {
        auto *opt_s = sub->add_option("--system,--triple", c.system_path, "system file (JSON)");
        if (needs_system)
            opt_s->required();
        sub->add_option("--out", c.out, "output path (default stdout)");
        sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    };

    auto *hadamard = app.add_subcommand("check-hadamard", "certify a Hadamard triple");
    add_io(hadamard, true);

    std::size_t depth = 6, points = 10000;
    std::uint64_t seed = 1;
    bool chaos = false;
    auto *attr = app.add_subcommand("attractor", "point cloud of the attractor");
    add_io(attr, true);
    attr->add_option("--depth", depth, "iteration depth");
    attr->add_flag("--chaos", chaos, "chaos game instead of full word expansion");
    attr->add_option("--points", points, "chaos-game point count");
    attr->add_option("--seed", seed, "chaos-game seed");
    attr->add_option("--precision", c.precision, "digits in output");

    std::string point;
    int terms = 0;
    auto *mu = app.add_subcommand("mu-hat", "Fourier transform of the invariant measure");
    add_io(mu, true);
    mu->add_option("--point", point, "rational point \"a/b,c/d\"")->required();
    mu->add_option("--terms", terms, "fixed number of product terms (default: tail test)");

    std::size_t grid = 64;
    auto *zeros = app.add_subcommand("zeros", "zeros of m_B in [0,1)^d");
    add_io(zeros, true);
    zeros->add_option("--grid", grid, "scan cells per axis");

    auto *orb = app.add_subcommand("orbit", "orbit of a point under x -> R^T x mod Z^d");
    add_io(orb, true);
    orb->add_option("--point", point, "rational point")->required();

    auto *bound = app.add_subcommand("bound", "bounds on mutually orthogonal exponentials");
    add_io(bound, true);
    bound->add_option("--grid", grid, "scan cells per axis");

    long dn_p = 3;
    std::size_t dn_d = 1;
    int dn_n = 5;
    auto *dn = app.add_subcommand("dn", "lower bound p^n D_n for the simplex digit set");
    add_io(dn, false);
    dn->add_option("--p", dn_p, "scale")->required();
    dn->add_option("--d", dn_d, "dimension")->required();
    dn->add_option("--n-max", dn_n, "largest n");

    auto *cyc = app.add_subcommand("cycles", "W_B-cycles of the dual system");
    add_io(cyc, true);

    std::size_t level = 8, ortho_level = 3;
    auto *spec = app.add_subcommand("spectrum", "candidate spectrum from W_B-cycles");
    add_io(spec, true);
    spec->add_option("--level", level, "expansion level");

    auto *onb = app.add_subcommand("verify-onb", "orthogonality and completeness evidence");
    add_io(onb, true);
    onb->add_option("--level", level, "spectrum level for the Parseval sum");
    onb->add_option("--ortho-level", ortho_level, "spectrum level for pairwise certificates");

    auto *probe = app.add_subcommand("probe-conjecture", "verify-onb on (R,B,L) and (R^T,L,B)");
    add_io(probe, true);
    probe->add_option("--level", level, "spectrum level for the Parseval sum");

    std::string catalog_override;
    auto *cat = app.add_subcommand("catalog", "built-in reference systems");
    cat->add_option("--catalog-dir", catalog_override, "catalog directory");
    cat->require_subcommand(1);
    auto *cat_list = cat->add_subcommand("list", "list entries");
    std::string entry_name;
    auto *cat_run = cat->add_subcommand("run", "run an entry or all");
    cat_run->add_option("name", entry_name, "entry name or 'all'")->required();
    cat_run->add_option("--out", c.out, "output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*hadamard) {
            auto f = load(c);
            auto t = check_hadamard(f.R, f.B, f.require_L());
            emit(c, "check-hadamard", f.input_hash, to_json(t));
            return t.certified ? kOk : kNegative;
        }
        if (*attr) {
            auto f = load(c);
            auto cloud = attractor(f.system(), depth,
                                   chaos ? AttractorMode::chaos_game : AttractorMode::deterministic,
                                   ChaosGameOptions{points, seed});
            if (c.format == "csv") {
                emit(c, points_csv(cloud.points, c.precision));
            } else {
                emit(c, "attractor", f.input_hash,
                     {{"depth", depth},
                      {"mode", chaos ? "chaos_game" : "deterministic"},
                      {"count", cloud.points.size()},
                      {"points", points_json(cloud.points, c.precision)}});
            }
            return kOk;
        }
        if (*mu) {
            auto f = load(c);
            auto sys = f.system();
            auto x = parse_vector(point);
            if (x.size() != sys.dim())
                throw Error(ErrorKind::shape, "point dimension does not match the system");
            MuHatValue v = terms > 0 ? eval_mu_hat_terms(symbol_data(sys), to_double(x), terms)
                                     : eval_mu_hat_exact(sys, x);
            emit(c, "mu-hat", f.input_hash,
                 {{"point", to_json(x)},
                  {"value", complex_json(v.value)},
                  {"error_radius", v.error_radius},
                  {"terms", v.terms},
                  {"exact_zero", v.exact_zero}});
            return kOk;
        }
        if (*zeros) {
            auto f = load(c);
            ZeroScanOptions o;
            o.n_grid = grid;
            auto z = find_zeros(f.system(), o);
            emit(c, "zeros", f.input_hash, zeros_json(z));
            return kOk;
        }
        if (*orb) {
            auto f = load(c);
            auto x = parse_vector(point);
            if (x.size() != f.R.dim())
                throw Error(ErrorKind::shape, "point dimension does not match the system");
            auto o = orbit(f.R.transpose(), to_torus(x));
            emit(c, "orbit", f.input_hash,
                 {{"trail", to_json(o.trail)}, {"pre_period", o.pre_period}, {"period", o.period}});
            return kOk;
        }
        if (*bound) {
            auto f = load(c);
            auto sys = f.system();
            ZeroScanOptions o;
            o.n_grid = grid;
            auto z = find_zeros(sys, o);
            const IntMatrix S = f.R.transpose();
            json body = {{"zeros", zeros_json(z)}};
            bool any = false;
            if (z.families.empty()) {
                try {
                    auto Zp = invariant_superset(S, z.points);
                    body["finite"] = {{"invariant_superset", to_json(Zp)},
                                      {"bound", orthogonality_bound_finite(Zp)}};
                    any = true;
                } catch (const Error &e) {
                    if (e.kind() != ErrorKind::inapplicable)
                        throw;
                    body["finite"] = {{"inapplicable", e.what()}};
                }
            }
            try {
                auto b = orthogonality_bound_distance(S, z);
                body["distance"] = {{"delta_squared", b.delta_squared.str()},
                                    {"delta", b.delta},
                                    {"bound", b.bound.get_str()},
                                    {"from_families", b.from_families},
                                    {"notes", b.notes}};
                any = true;
            } catch (const Error &e) {
                if (e.kind() != ErrorKind::inapplicable && e.kind() != ErrorKind::not_certified)
                    throw;
                body["distance"] = {{"inapplicable", e.what()}};
            }
            emit(c, "bound", f.input_hash, body);
            return any ? kOk : kNegative;
        }
        if (*dn) {
            auto v = lemconf_verdict(dn_p, dn_d, dn_n);
            json rows = json::array();
            for (const auto &r : v.rows)
                rows.push_back({{"n", r.n},
                                {"modulus", r.modulus},
                                {"D_n", r.value},
                                {"scaled", r.scaled},
                                {"argmin", r.argmin},
                                {"exact_zero", r.exact_zero}});
            emit(c, "dn", "",
                 {{"p", dn_p},
                  {"d", dn_d},
                  {"rows", rows},
                  {"min_scaled", v.min_scaled},
                  {"truncated", v.truncated},
                  {"verdict", v.verdict},
                  {"note", v.note}});
            return kOk;
        }
        if (*cyc) {
            auto f = load(c);
            auto pair = make_dual_pair(check_hadamard(f.R, f.B, f.require_L()));
            auto a = analyze_cycles(pair);
            json all = json::array(), wb = json::array();
            for (const auto &r : a.search.cycles)
                all.push_back(to_json(r));
            for (const auto &r : a.wb_cycles)
                wb.push_back(to_json(r));
            emit(c, "cycles", f.input_hash,
                 {{"route", a.lattice_route ? "lattice" : "words"},
                  {"candidates", to_json(a.candidates)},
                  {"cycles", all},
                  {"W_B_cycles", wb},
                  {"all_cycles_W_B", a.all_cycles_WB},
                  {"max_period", a.lattice_route ? a.search.max_period : a.word_period},
                  {"notes", a.notes}});
            return kOk;
        }
        if (*spec) {
            auto f = load(c);
            auto pair = make_dual_pair(check_hadamard(f.R, f.B, f.require_L()));
            auto a = analyze_cycles(pair);
            auto s = spectrum_from_cycles(pair, a.wb_cycles, level);
            json wb = json::array();
            for (const auto &r : a.wb_cycles)
                wb.push_back(to_json(r));
            emit(c, "spectrum", f.input_hash,
                 {{"level", level},
                  {"W_B_cycles", wb},
                  {"size", s.elements.size()},
                  {"elements", to_json(s.elements)}});
            return kOk;
        }
        if (*onb || *probe) {
            auto f = load(c);
            OnbOptions o;
            o.level = level;
            o.ortho_level = ortho_level;
            if (*onb) {
                auto r = analyze_triple(f.R, f.B, f.require_L(), o);
                emit(c, "verify-onb", f.input_hash, to_json(r));
                return r.verdict == kVerdictSpectral ? kOk : kNegative;
            }
            auto r = conjecture_probe(f.R, f.B, f.require_L(), o);
            emit(c, "probe-conjecture", f.input_hash, to_json(r));
            return r.both_spectral ? kOk : kNegative;
        }
        if (*cat) {
            const std::string dir = catalog_dir(catalog_override);
            if (*cat_list) {
                json out = json::array();
                for (const auto &e : list_catalog(dir))
                    out.push_back({{"name", e.name}, {"anchor", e.anchor}});
                emit(c, "catalog list", "", {{"entries", out}});
                return kOk;
            }
            std::vector<CatalogEntry> entries;
            if (entry_name == "all")
                entries = list_catalog(dir);
            else
                entries.push_back(find_entry(dir, entry_name));
            json runs = json::array();
            bool ok = true;
            for (const auto &e : entries) {
                auto r = run_catalog(e);
                std::cerr << (r.ok ? "ok      " : "MISMATCH") << "  " << r.name << "  ("
                          << r.seconds << " s)\n";
                ok = ok && r.ok;
                runs.push_back(to_json(r));
            }
            emit(c, "catalog run", "", {{"runs", runs}, {"ok", ok}});
            return ok ? kOk : kNegative;
        }
    } catch (const Error &e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return exit_for(e.kind());
    }
    return kUsage;
}
