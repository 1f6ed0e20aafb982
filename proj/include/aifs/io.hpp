#pragma once

// JSON system files, report helpers and point-cloud export.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "aifs/ifs.hpp"

namespace aifs {

using json = nlohmann::json;

inline constexpr const char *kToolVersion = "1.0.0";

struct SystemFile {
    IntMatrix R;
    std::vector<RationalVector> B;
    std::optional<std::vector<RationalVector>> L;
    std::vector<Rational> weights;
    json labels;
    std::string input_hash;

    AffineSystem system() const { return AffineSystem(R, B, weights); }
    const std::vector<RationalVector> &require_L() const;
};

Rational rational_from_json(const json &j);
RationalVector vector_from_json(const json &j, std::size_t d);
std::vector<RationalVector> vectors_from_json(const json &j, std::size_t d);
IntMatrix matrix_from_json(const json &j);

json to_json(const Rational &r);
json to_json(const RationalVector &v);
json to_json(const std::vector<RationalVector> &vs);
json to_json(const IntMatrix &m);

SystemFile parse_system(const json &doc, std::string input_hash = {});
SystemFile load_system(const std::string &path);

std::string read_file(const std::string &path);
std::string fnv1a64(std::string_view bytes);

/// {"tool": ..., "version": ..., "input_hash": ...}
json report_header(const std::string &command, const std::string &input_hash);

std::string points_csv(const std::vector<DVector> &points, int precision);
json points_json(const std::vector<DVector> &points, int precision);

} // namespace aifs
