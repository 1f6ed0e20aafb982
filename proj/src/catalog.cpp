#include "aifs/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <set>

#include "aifs/pipeline.hpp"
#include "aifs/torus.hpp"

#ifndef AIFS_DEFAULT_CATALOG_DIR
#define AIFS_DEFAULT_CATALOG_DIR "catalog"
#endif

namespace fs = std::filesystem;

namespace aifs {

std::string catalog_dir(const std::string &override_dir) {
    if (!override_dir.empty())
        return override_dir;
    if (const char *env = std::getenv("AIFS_CATALOG_DIR"); env && *env)
        return env;
    return AIFS_DEFAULT_CATALOG_DIR;
}

std::vector<CatalogEntry> list_catalog(const std::string &dir) {
    if (!fs::is_directory(dir))
        throw Error(ErrorKind::parse, "catalog directory not found: " + dir);
    std::vector<CatalogEntry> out;
    for (const auto &f : fs::directory_iterator(dir)) {
        if (f.path().extension() != ".json")
            continue;
        CatalogEntry e;
        e.path = f.path().string();
        try {
            e.doc = json::parse(read_file(e.path));
        } catch (const json::parse_error &err) {
            throw Error(ErrorKind::parse, e.path + ": " + err.what());
        }
        e.name = e.doc.value("name", f.path().stem().string());
        e.anchor = e.doc.value("anchor", "");
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(),
              [](const CatalogEntry &a, const CatalogEntry &b) { return a.name < b.name; });
    return out;
}

CatalogEntry find_entry(const std::string &dir, const std::string &name) {
    for (auto &e : list_catalog(dir))
        if (e.name == name)
            return e;
    throw Error(ErrorKind::index, "unknown catalog entry '" + name + "'");
}

namespace {

// Cycles compared as sets of point sets.
json canonical_cycles(const std::vector<CycleRecord> &cycles) {
    std::set<std::vector<RationalVector>> s;
    for (const auto &c : cycles) {
        auto pts = c.points;
        std::sort(pts.begin(), pts.end());
        s.insert(pts);
    }
    json out = json::array();
    for (const auto &c : s)
        out.push_back(to_json(c));
    return out;
}

json canonical_cycles(const json &expected, std::size_t d) {
    std::set<std::vector<RationalVector>> s;
    for (const auto &c : expected) {
        auto pts = vectors_from_json(c, d);
        std::sort(pts.begin(), pts.end());
        s.insert(pts);
    }
    json out = json::array();
    for (const auto &c : s)
        out.push_back(to_json(c));
    return out;
}

std::vector<RationalVector> sorted(std::vector<RationalVector> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

CandidateGrid grid_from_json(const json &g, std::size_t d) {
    return CandidateGrid{vector_from_json(g.at("lo"), d), vector_from_json(g.at("hi"), d),
                         g.at("max_den").get<long>()};
}

class Runner {
  public:
    explicit Runner(const CatalogEntry &e) : entry_(e), file_(parse_system(e.doc.at("system"))) {
        const json &run = e.doc.value("run", json::object());
        opts_.level = run.value("level", opts_.level);
        opts_.ortho_level = run.value("ortho_level", opts_.ortho_level);
        opts_.cycles_complete = run.value("cycles_complete", false);
    }

    CatalogRun run() {
        CatalogRun out;
        out.name = entry_.name;
        const json &exp = entry_.doc.at("expected");
        for (auto it = exp.begin(); it != exp.end(); ++it) {
            CheckResult r;
            r.check = it.key();
            r.expected = it.value();
            try {
                r.actual = compute(it.key(), it.value(), r);
                if (r.note.empty())
                    r.ok = r.actual == r.expected;
            } catch (const Error &err) {
                r.actual = std::string("error: ") + to_string(err.kind());
                r.note = err.what();
                r.ok = r.actual == r.expected;
            }
            out.ok = out.ok && r.ok;
            out.checks.push_back(std::move(r));
        }
        return out;
    }

  private:
    std::size_t d() const { return file_.R.dim(); }
    IntMatrix S() const { return file_.R.transpose(); }

    const AffineSystem &sys() {
        if (!sys_)
            sys_.emplace(file_.system());
        return *sys_;
    }
    const ZeroSet &zeros() {
        if (!zeros_)
            zeros_ = find_zeros(sys());
        return *zeros_;
    }
    const OnbReport &onb() {
        if (!onb_)
            onb_ = analyze_triple(file_.R, file_.B, file_.require_L(), opts_);
        return *onb_;
    }
    DualPair pair() { return make_dual_pair(check_hadamard(file_.R, file_.B, file_.require_L())); }

    // Returns the actual value; sets r.ok directly for checks that are not
    // plain equality (r.note non-empty marks them).
    json compute(const std::string &key, const json &e, CheckResult &r) {
        if (key == "hadamard")
            return check_hadamard(file_.R, file_.B, file_.require_L()).certified;
        if (key == "zeros") {
            if (!zeros().families.empty())
                return "families";
            return to_json(zeros().points);
        }
        if (key == "zero_families")
            return zeros().families.size();
        if (key == "invariant_superset")
            return invariant_superset(S(), zeros().points).size();
        if (key == "bound_finite")
            return orthogonality_bound_finite(invariant_superset(S(), zeros().points));
        if (key == "orbit") {
            auto o = orbit(S(), vector_from_json(e.at("point"), d()));
            std::vector<RationalVector> cyc(o.trail.begin() + o.pre_period,
                                            o.trail.begin() + o.pre_period + o.period);
            return {{"point", e.at("point")}, {"period", o.period}, {"cycle", to_json(cyc)}};
        }
        if (key == "bound_distance") {
            auto b = orthogonality_bound_distance(S(), zeros());
            bool flagged = false;
            for (const auto &n : b.notes)
                flagged = flagged || n.find("disagrees") != std::string::npos;
            return {{"delta_squared", b.delta_squared.str()},
                    {"bound", b.bound.fits_slong_p() ? json(b.bound.get_si()) : json(b.bound.get_str())},
                    {"discrepancy_flagged", flagged}};
        }
        if (key == "dn") {
            auto v = lemconf_verdict(e.at("p").get<long>(), e.at("d").get<std::size_t>(),
                                     e.at("n_max").get<int>());
            json out = {{"p", e.at("p")}, {"d", e.at("d")}, {"n_max", e.at("n_max")},
                        {"verdict", v.verdict}};
            if (e.contains("min_scaled_at_least")) {
                double lo = e.at("min_scaled_at_least").get<double>();
                out["min_scaled_at_least"] = v.min_scaled >= lo - 1e-9 ? e.at("min_scaled_at_least")
                                                                      : json(v.min_scaled);
            }
            if (e.contains("first_exact_zero")) {
                json z = nullptr;
                for (const auto &row : v.rows)
                    if (row.exact_zero) {
                        z = row.n;
                        break;
                    }
                out["first_exact_zero"] = z;
            }
            return out;
        }
        if (key == "wb_cycles") {
            r.expected = canonical_cycles(e, d());
            return canonical_cycles(onb().cycles.wb_cycles);
        }
        if (key == "spectrum" || key == "lambda0" || key == "spectrum_contains" ||
            key == "spectrum_size") {
            const auto p = pair();
            std::size_t level = e.at("level").get<std::size_t>();
            std::vector<CycleRecord> cycles = onb().cycles.wb_cycles;
            if (key == "lambda0") {
                RationalVector zero(d(), Rational(0));
                std::erase_if(cycles, [&](const CycleRecord &c) {
                    return c.points.size() != 1 || c.points[0] != zero;
                });
            }
            auto spec = spectrum_from_cycles(p, cycles, level);
            if (key == "spectrum_size")
                return {{"level", level}, {"size", spec.elements.size()}};
            auto want = sorted(vectors_from_json(e.at("elements"), d()));
            r.expected = {{"level", level}, {"elements", to_json(want)}};
            if (key == "spectrum_contains") {
                r.note = "subset";
                r.ok = std::includes(spec.elements.begin(), spec.elements.end(), want.begin(),
                                     want.end());
                return {{"level", level}, {"size", spec.elements.size()}};
            }
            return {{"level", level}, {"elements", to_json(spec.elements)}};
        }
        if (key == "verdict")
            return onb().verdict;
        if (key == "orthogonality")
            return {{"level", onb().ortho_level}, {"uncertified", onb().census.uncertified}};
        if (key == "completeness") {
            r.note = "Q_min threshold";
            const auto &c = onb().completeness;
            r.ok = c.min_Q >= e.at("Q_min_at_least").get<double>() &&
                   c.max_Q <= 1 + kBesselSlack;
            return {{"level", onb().level}, {"Q_min", c.min_Q}, {"Q_max", c.max_Q}};
        }
        if (key == "max_family") {
            auto fam = max_orthogonal_family(sys(), grid_from_json(e.at("grid"), d()));
            json out = {{"grid", e.at("grid")}, {"candidates", fam.candidates},
                        {"size", fam.family.size()}};
            if (e.contains("at_most")) {
                r.note = "upper bound";
                r.ok = fam.family.size() <= e.at("at_most").get<std::size_t>();
                if (e.contains("size"))
                    r.ok = r.ok && fam.family.size() == e.at("size").get<std::size_t>();
            } else {
                r.expected = {{"grid", e.at("grid")}, {"candidates", fam.candidates},
                              {"size", e.at("size")}};
            }
            return out;
        }
        if (key == "has_zero_weighted")
            return has_zero_weighted(sys()).has_zero;
        if (key == "propdiv") {
            std::vector<Decomposition> dec;
            for (const auto &qd : e.at("decomposition"))
                dec.push_back({qd.at(0).get<long>(), qd.at(1).get<long>()});
            auto fam = propdiv_family(e.at("p").get<long>(), e.at("d").get<std::size_t>(), dec);
            auto members = fam.members(e.at("members").get<std::size_t>());
            auto census = certify_pairs(sys(), members);
            return {{"p", e.at("p")},
                    {"d", e.at("d")},
                    {"decomposition", e.at("decomposition")},
                    {"z0", to_json(fam.z0)},
                    {"certified", fam.certified},
                    {"members", members.size()},
                    {"certified_pairs", census.certified}};
        }
        if (key == "thpmuld") {
            long p = e.at("p").get<long>();
            std::size_t dd = e.at("d").get<std::size_t>();
            std::size_t level = e.at("level").get<std::size_t>();
            auto t = thpmuld_spectrum(p, dd, level);
            json out = {{"p", p}, {"d", dd}, {"level", level},
                        {"cycles", t.cycles.wb_cycles.size()},
                        {"L", to_json(t.triple.L)}};
            if (e.contains("window")) {
                long w = e.at("window").get<long>();
                RationalVector v0;
                for (std::size_t i = 1; i <= dd; ++i)
                    v0.push_back(Rational(static_cast<long>(i)));
                bool inside = true;
                for (long k = -w; k <= w; ++k) {
                    RationalVector x = v0;
                    for (auto &c : x)
                        c *= Rational(k);
                    inside = inside && std::binary_search(t.spectrum.elements.begin(),
                                                          t.spectrum.elements.end(), x);
                }
                bool on_line = std::all_of(
                    t.spectrum.elements.begin(), t.spectrum.elements.end(),
                    [&](const RationalVector &x) {
                        for (std::size_t i = 0; i < dd; ++i)
                            if (x[i] != x[0] * v0[i])
                                return false;
                        return true;
                    });
                out["window"] = w;
                out["window_contained"] = inside;
                out["on_line"] = on_line;
            }
            if (e.contains("elements"))
                out["elements"] = to_json(t.spectrum.elements);
            if (e.contains("elements"))
                r.expected["elements"] = to_json(sorted(vectors_from_json(e.at("elements"), dd)));
            return out;
        }
        throw Error(ErrorKind::parse, "unknown expectation '" + key + "'");
    }

    const CatalogEntry &entry_;
    SystemFile file_;
    OnbOptions opts_;
    std::optional<AffineSystem> sys_;
    std::optional<ZeroSet> zeros_;
    std::optional<OnbReport> onb_;
};

} // namespace

CatalogRun run_catalog(const CatalogEntry &entry) {
    auto t0 = std::chrono::steady_clock::now();
    CatalogRun out = Runner(entry).run();
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

json to_json(const CatalogRun &run) {
    json checks = json::array();
    for (const auto &c : run.checks) {
        json j = {{"check", c.check}, {"ok", c.ok}};
        if (!c.ok) {
            j["expected"] = c.expected;
            j["actual"] = c.actual;
        }
        if (!c.note.empty())
            j["note"] = c.note;
        checks.push_back(std::move(j));
    }
    return {{"name", run.name}, {"ok", run.ok}, {"seconds", run.seconds}, {"checks", checks}};
}

} // namespace aifs
