#include "aifs/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace aifs {

namespace {

[[noreturn]] void bad(const std::string &what) { throw Error(ErrorKind::parse, what); }

} // namespace

const std::vector<RationalVector> &SystemFile::require_L() const {
    if (!L)
        bad("system file has no L digits");
    return *L;
}

Rational rational_from_json(const json &j) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    if (j.is_number_float()) {
        double x = j.get<double>();
        if (std::floor(x) == x && std::abs(x) < 1e15)
            return Rational(static_cast<long>(x));
        bad("non-integer numbers must be written as \"p/q\" or decimal strings");
    }
    bad("expected a rational, got " + j.dump());
}

RationalVector vector_from_json(const json &j, std::size_t d) {
    if (!j.is_array()) {
        if (d != 1)
            bad("scalar digit in dimension " + std::to_string(d));
        return {rational_from_json(j)};
    }
    if (j.size() != d)
        bad("vector " + j.dump() + " does not have dimension " + std::to_string(d));
    RationalVector v;
    for (const auto &x : j)
        v.push_back(rational_from_json(x));
    return v;
}

std::vector<RationalVector> vectors_from_json(const json &j, std::size_t d) {
    if (!j.is_array() || j.empty())
        bad("digit list must be a non-empty array");
    std::vector<RationalVector> out;
    for (const auto &x : j)
        out.push_back(vector_from_json(x, d));
    return out;
}

IntMatrix matrix_from_json(const json &j) {
    if (j.is_number_integer())
        return IntMatrix::scalar(1, j.get<long>());
    if (!j.is_array() || j.empty())
        bad("R must be an integer or an array of integer rows");
    std::vector<std::vector<long>> rows;
    for (const auto &row : j) {
        if (row.is_number_integer()) {
            rows.push_back({row.get<long>()});
            continue;
        }
        if (!row.is_array())
            bad("R rows must be arrays");
        std::vector<long> r;
        for (const auto &x : row) {
            if (!x.is_number_integer())
                bad("R entries must be integers");
            r.push_back(x.get<long>());
        }
        rows.push_back(std::move(r));
    }
    if (rows.size() > 1 && rows[0].size() == 1 && j[0].is_number_integer())
        bad("R must be square");
    for (const auto &r : rows)
        if (r.size() != rows.size())
            throw Error(ErrorKind::shape, "R must be square");
    return IntMatrix(rows);
}

json to_json(const Rational &r) {
    if (r.is_integer() && r.num().fits_slong_p())
        return r.num().get_si();
    return r.str();
}

json to_json(const RationalVector &v) {
    json out = json::array();
    for (const auto &x : v)
        out.push_back(to_json(x));
    return out;
}

json to_json(const std::vector<RationalVector> &vs) {
    json out = json::array();
    for (const auto &v : vs)
        out.push_back(to_json(v));
    return out;
}

json to_json(const IntMatrix &m) { return m.rows(); }

SystemFile parse_system(const json &doc, std::string input_hash) {
    if (!doc.is_object())
        bad("system file must be a JSON object");
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (it.key() != "R" && it.key() != "B" && it.key() != "L" && it.key() != "weights" &&
            it.key() != "labels" && it.key() != "name")
            bad("unknown key '" + it.key() + "'");
    if (!doc.contains("R") || !doc.contains("B"))
        bad("system file needs R and B");
    SystemFile f;
    f.R = matrix_from_json(doc["R"]);
    const std::size_t d = f.R.dim();
    f.B = vectors_from_json(doc["B"], d);
    if (doc.contains("L"))
        f.L = vectors_from_json(doc["L"], d);
    if (doc.contains("weights")) {
        if (!doc["weights"].is_array())
            bad("weights must be an array");
        for (const auto &w : doc["weights"])
            f.weights.push_back(rational_from_json(w));
    }
    if (doc.contains("labels"))
        f.labels = doc["labels"];
    f.input_hash = input_hash.empty() ? fnv1a64(doc.dump()) : std::move(input_hash);
    return f;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::parse, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SystemFile load_system(const std::string &path) {
    std::string text = read_file(path);
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        bad(path + ": " + e.what());
    }
    return parse_system(doc, fnv1a64(text));
}

std::string fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json report_header(const std::string &command, const std::string &input_hash) {
    json h{{"tool", "aifs"}, {"version", kToolVersion}, {"command", command}};
    if (!input_hash.empty())
        h["input_hash"] = "fnv1a64:" + input_hash;
    return h;
}

std::string points_csv(const std::vector<DVector> &points, int precision) {
    std::ostringstream os;
    os << std::setprecision(precision);
    for (const auto &p : points) {
        for (std::size_t i = 0; i < p.size(); ++i)
            os << (i ? "," : "") << p[i];
        os << '\n';
    }
    return os.str();
}

json points_json(const std::vector<DVector> &points, int precision) {
    const double scale = std::pow(10.0, precision);
    json out = json::array();
    for (const auto &p : points) {
        json row = json::array();
        for (double x : p)
            row.push_back(std::round(x * scale) / scale);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace aifs
