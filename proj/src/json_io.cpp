#include "quditbraid/json_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace quditbraid {

namespace {

void append_double(std::string& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out += buf;
}

void append_pair_array(std::string& out, const std::vector<cd>& values) {
    out += '[';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += '[';
        append_double(out, values[i].real());
        out += ',';
        append_double(out, values[i].imag());
        out += ']';
    }
    out += ']';
}

std::vector<cd> parse_pair_array(const nlohmann::json& arr, const char* what) {
    if (!arr.is_array()) throw DataError(std::string(what) + ": expected an array of [re,im] pairs");
    std::vector<cd> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number()) {
            throw DataError(std::string(what) + ": malformed [re,im] pair");
        }
        out.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
    return out;
}

nlohmann::json parse_or_throw(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DataError("invalid JSON");
    return j;
}

}  // namespace

std::string to_json(const ComplexMatrix& m) {
    std::string out = "{\"kind\":\"matrix\",\"dim\":" + std::to_string(m.dim()) + ",\"data\":";
    append_pair_array(out, m.entries());
    out += '}';
    return out;
}

std::string to_json(const StateVector& psi) {
    std::string out = "{\"kind\":\"state\",\"d\":" + std::to_string(psi.d) +
                      ",\"sites\":" + std::to_string(psi.sites) + ",\"amplitudes\":";
    append_pair_array(out, psi.amplitudes);
    out += '}';
    return out;
}

std::string to_json(const VerificationReport& report) {
    std::string out = "{\"checks\":[";
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        const auto& c = report.checks[i];
        if (i) out += ',';
        out += "{\"name\":" + nlohmann::json(c.name).dump() + ",\"residual\":";
        append_double(out, c.residual);
        out += ",\"tol\":";
        append_double(out, c.tol);
        out += ",\"pass\":";
        out += c.pass ? "true" : "false";
        out += '}';
    }
    out += "],\"pass\":";
    out += report.pass() ? "true" : "false";
    out += '}';
    return out;
}

ComplexMatrix matrix_from_json(const std::string& text) {
    const nlohmann::json j = parse_or_throw(text);
    if (!j.is_object() || j.value("kind", "") != "matrix") {
        throw DataError("matrix JSON: missing kind \"matrix\"");
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer()) {
        throw DataError("matrix JSON: missing integer dim");
    }
    const std::int64_t dim = j["dim"].get<std::int64_t>();
    if (dim < 1) throw DataError("matrix JSON: dim must be positive");
    std::vector<cd> data = parse_pair_array(j.value("data", nlohmann::json()), "matrix JSON data");
    if (static_cast<std::int64_t>(data.size()) != dim * dim) {
        throw DataError("matrix JSON: data length must equal dim^2");
    }
    ComplexMatrix m(dim, std::move(data));
    if (!m.all_finite()) throw DataError("matrix JSON: non-finite entry");
    return m;
}

StateVector state_from_json(const std::string& text) {
    const nlohmann::json j = parse_or_throw(text);
    if (!j.is_object() || j.value("kind", "") != "state") {
        throw DataError("state JSON: missing kind \"state\"");
    }
    if (!j.contains("d") || !j["d"].is_number_integer() || !j.contains("sites") ||
        !j["sites"].is_number_integer()) {
        throw DataError("state JSON: missing integer d/sites");
    }
    const int d = j["d"].get<int>();
    const int sites = j["sites"].get<int>();
    std::vector<cd> amps =
        parse_pair_array(j.value("amplitudes", nlohmann::json()), "state JSON amplitudes");
    try {
        return StateVector(d, sites, std::move(amps));
    } catch (const std::invalid_argument& e) {
        throw DataError(std::string("state JSON: ") + e.what());
    }
}

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
}  // namespace

ComplexMatrix read_matrix_file(const std::string& path) { return matrix_from_json(slurp(path)); }

StateVector read_state_file(const std::string& path) { return state_from_json(slurp(path)); }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open file for writing: " + path);
    out << text << '\n';
}

}  // namespace quditbraid
