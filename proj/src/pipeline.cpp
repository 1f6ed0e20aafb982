#include "aifs/pipeline.hpp"

#include <cmath>

namespace aifs {

namespace {

std::size_t fitting_level(std::size_t cycle_points, std::size_t N, std::size_t level,
                          std::size_t cap) {
    while (level > 1) {
        double size = static_cast<double>(cycle_points) * std::pow(static_cast<double>(N), level);
        if (size <= static_cast<double>(cap))
            break;
        --level;
    }
    return level;
}

std::size_t cycle_points(const std::vector<CycleRecord> &cycles) {
    std::size_t n = 0;
    for (const auto &c : cycles)
        n += c.period();
    return n;
}

} // namespace

OnbReport analyze_triple(const IntMatrix &R, const std::vector<RationalVector> &B,
                         const std::vector<RationalVector> &L, const OnbOptions &opts) {
    OnbReport rep;
    rep.triple = check_hadamard(R, B, L);
    DualPair pair = make_dual_pair(rep.triple);
    rep.cycles = analyze_cycles(pair);
    rep.cycles_complete = opts.cycles_complete;
    if (!opts.cycles_complete)
        rep.notes.push_back("cycles_complete: unverified assumption");
    for (const auto &n : rep.cycles.notes)
        rep.notes.push_back(n);
    if (rep.cycles.wb_cycles.empty()) {
        rep.verdict = kVerdictIncomplete;
        rep.notes.push_back("no W_B-cycles found");
        return rep;
    }

    const std::size_t N = B.size();
    const std::size_t points = cycle_points(rep.cycles.wb_cycles);

    rep.ortho_level = std::min(opts.ortho_level, opts.level);
    SpectrumSet small = spectrum_from_cycles(pair, rep.cycles.wb_cycles, rep.ortho_level);
    rep.census = certify_pairs(pair.primal, small.elements, opts.n_max);

    rep.level = fitting_level(points, N, opts.level, kMaxParsevalElements);
    if (rep.level < opts.level)
        rep.notes.push_back("Parseval level lowered from " + std::to_string(opts.level) + " to " +
                            std::to_string(rep.level) + " to fit the element cap");
    SpectrumSet spec = spectrum_from_cycles(pair, rep.cycles.wb_cycles, rep.level);
    rep.spectrum_size = spec.elements.size();
    rep.completeness = completeness_report(pair.primal, spec, opts.samples, opts.policy);

    if (rep.census.uncertified > 0)
        rep.verdict = kVerdictNotOrthogonal;
    else if (rep.completeness.min_Q >= kSpectralEvidenceQ &&
             rep.completeness.max_Q <= 1 + kBesselSlack)
        rep.verdict = kVerdictSpectral;
    else
        rep.verdict = kVerdictIncomplete;
    return rep;
}

ConjectureReport conjecture_probe(const IntMatrix &R, const std::vector<RationalVector> &B,
                                  const std::vector<RationalVector> &L, const OnbOptions &opts) {
    ConjectureReport rep;
    rep.forward = analyze_triple(R, B, L, opts);
    rep.swapped = analyze_triple(R.transpose(), L, B, opts);
    rep.both_spectral =
        rep.forward.verdict == kVerdictSpectral && rep.swapped.verdict == kVerdictSpectral;
    return rep;
}

json to_json(const CycleRecord &c) {
    json w = json::array();
    for (auto i : c.word)
        w.push_back(i);
    return {{"points", to_json(c.points)}, {"word", w}, {"period", c.period()},
            {"W_B_cycle", c.is_WB_cycle}};
}

json to_json(const HadamardTriple &t) {
    return {{"certified", t.certified},
            {"unitarity_defect", t.unitarity_defect},
            {"exact_checked", t.exact_checked},
            {"exact_unitary", t.exact_unitary},
            {"warnings", t.warnings}};
}

json to_json(const OnbReport &r) {
    json cycles = json::array();
    for (const auto &c : r.cycles.wb_cycles)
        cycles.push_back(to_json(c));
    const auto &c = r.completeness;
    return {
        {"hadamard", to_json(r.triple)},
        {"cycles",
         {{"W_B_cycles", cycles},
          {"route", r.cycles.lattice_route ? "lattice" : "words"},
          {"candidates", r.cycles.candidates.size()},
          {"cycles_complete", r.cycles_complete ? json(true) : json("unverified assumption")}}},
        {"orthogonality",
         {{"level", r.ortho_level},
          {"pairs", r.census.pairs},
          {"certified_pairs", r.census.certified},
          {"uncertified_pairs", r.census.uncertified}}},
        {"completeness",
         {{"level", r.level},
          {"spectrum_size", r.spectrum_size},
          {"product_terms", c.product_terms},
          {"samples", c.Q_values.size()},
          {"Q_min", c.min_Q},
          {"Q_max", c.max_Q},
          {"Q_mean", c.mean_Q}}},
        {"verdict", r.verdict},
        {"notes", r.notes},
    };
}

json to_json(const ConjectureReport &r) {
    return {{"label", "experimental: numerical probe, not a proof"},
            {"forward", to_json(r.forward)},
            {"swapped", to_json(r.swapped)},
            {"both_spectral_evidence", r.both_spectral}};
}

} // namespace aifs
