#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "quditbraid/braid.hpp"
#include "quditbraid/entangle.hpp"
#include "quditbraid/json_io.hpp"
#include "quditbraid/qpa.hpp"
#include "quditbraid/tensor.hpp"

namespace {

using namespace quditbraid;

// Exit codes: 0 success/pass, 1 verification failure, 2 argument error,
// 3 budget error, 4 data error.
constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitArgError = 2;
constexpr int kExitBudgetError = 3;
constexpr int kExitDataError = 4;

void emit(const std::string& json, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << json << '\n';
    } else {
        write_text_file(out_path, json);
    }
}

std::vector<int> parse_digits(const std::string& csv) {
    std::vector<int> digits;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        std::size_t used = 0;
        int value;
        try {
            value = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed digit list: " + csv);
        }
        if (used != tok.size()) throw std::invalid_argument("malformed digit list: " + csv);
        digits.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return digits;
}

int run(int argc, char** argv) {
    CLI::App app{"Generalized qudit braid matrices and GHZ entangled bases"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags (--tol, --budget) usable after a subcommand

    double tol = 1e-10;
    std::int64_t budget = kDefaultDenseBudget;
    app.add_option("--tol", tol, "residual tolerance for verification")->capture_default_str();
    app.add_option("--budget", budget, "maximum dense matrix dimension")->capture_default_str();
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json"}));

    // gen
    auto* gen = app.add_subcommand("gen", "generate a matrix (x, z, f, a, b, m, braid)");
    std::string gen_kind;
    int gen_d = 2, gen_n = 2;
    std::string gen_out;
    gen->add_option("kind", gen_kind, "matrix kind")
        ->required()
        ->check(CLI::IsMember({"x", "z", "f", "a", "b", "m", "braid"}));
    gen->add_option("--d", gen_d, "levels per site")->required();
    gen->add_option("--n", gen_n, "number of sites (m and braid kinds)");
    gen->add_option("--out", gen_out, "output file (stdout when omitted)");

    // verify
    auto* verify = app.add_subcommand("verify", "verify algebraic relations");
    std::string verify_target;
    int verify_d = 2, verify_n = 2;
    verify->add_option("target", verify_target, "what to verify")
        ->required()
        ->check(CLI::IsMember({"qpa", "algebra", "braid", "unitary"}));
    verify->add_option("--d", verify_d, "levels per site")->required();
    verify->add_option("--n", verify_n, "number of sites");

    // ghz
    auto* ghz = app.add_subcommand("ghz", "construct a generalized GHZ state");
    int ghz_d = 2, ghz_n = 2;
    std::string ghz_k, ghz_mode = "closed", ghz_out;
    ghz->add_option("--d", ghz_d, "levels per site")->required();
    ghz->add_option("--n", ghz_n, "number of sites")->required();
    ghz->add_option("--k", ghz_k, "comma-separated label digits k1,...,kN")->required();
    ghz->add_option("--mode", ghz_mode, "construction route")
        ->check(CLI::IsMember({"closed", "braid"}));
    ghz->add_option("--out", ghz_out, "output file (stdout when omitted)");

    // measure
    auto* measure = app.add_subcommand("measure", "Q-measure of a state file");
    std::string measure_path;
    int measure_m = 1;
    measure->add_option("state", measure_path, "state JSON file")->required();
    measure->add_option("--m", measure_m, "subset size m")->required();

    // hamiltonian
    auto* ham = app.add_subcommand("hamiltonian", "Hamiltonian H = -i log S of the braid matrix");
    int ham_d = 2, ham_n = 2;
    std::string ham_out;
    ham->add_option("--d", ham_d, "levels per site")->required();
    ham->add_option("--n", ham_n, "number of sites")->required();
    ham->add_option("--out", ham_out, "output file for H (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitArgError;
    }

    if (gen->parsed()) {
        ComplexMatrix m(1);
        if (gen_kind == "x") m = generator_x(gen_d);
        else if (gen_kind == "z") m = generator_z(gen_d);
        else if (gen_kind == "f") m = fourier(gen_d);
        else if (gen_kind == "a") m = matrix_a(gen_d);
        else if (gen_kind == "b") m = matrix_b(gen_d);
        else if (gen_kind == "m") m = m_matrix(QuditShape(gen_d, gen_n, budget));
        else m = braid_matrix(QuditShape(gen_d, gen_n, budget));
        emit(to_json(m), gen_out);
        return kExitPass;
    }

    if (verify->parsed()) {
        VerificationReport report;
        if (verify_target == "qpa") {
            report = verify_qpa(verify_d, tol);
        } else if (verify_target == "algebra") {
            report = verify_m_algebra(QuditShape(verify_d, verify_n, budget), tol);
        } else if (verify_target == "braid") {
            report = verify_braid_relation(QuditShape(verify_d, verify_n, budget), tol);
        } else {
            const ComplexMatrix s = braid_matrix(QuditShape(verify_d, verify_n, budget));
            report.add("S unitarity", unitarity_residual(s), tol);
        }
        std::cout << to_json(report) << '\n';
        return report.pass() ? kExitPass : kExitVerifyFail;
    }

    if (ghz->parsed()) {
        const GhzLabel label(QuditShape(ghz_d, ghz_n, budget), parse_digits(ghz_k));
        const StateVector psi = ghz_mode == "braid" ? ghz_by_braid(label) : ghz_closed_form(label);
        emit(to_json(psi), ghz_out);
        return kExitPass;
    }

    if (measure->parsed()) {
        const StateVector psi = read_state_file(measure_path);
        if (!psi.is_normalized(1e-8)) throw DataError("state file is not normalized");
        const double q = q_measure(psi, measure_m);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "{\"m\":%d,\"Q\":%.17g}", measure_m, q);
        std::cout << buf << '\n';
        return kExitPass;
    }

    if (ham->parsed()) {
        const ComplexMatrix s = braid_matrix(QuditShape(ham_d, ham_n, budget));
        const ComplexMatrix h = hamiltonian_from_braid(s, tol);
        const double residual = matrix_residual(exp_i_hermitian(h), s);
        if (ham_out.empty()) {
            std::cout << to_json(h) << '\n';
            std::fprintf(stderr, "round-trip residual ||exp(iH)-S||_max = %.3e\n", residual);
        } else {
            write_text_file(ham_out, to_json(h));
            char buf[64];
            std::snprintf(buf, sizeof(buf), "{\"residual\":%.17g}", residual);
            std::cout << buf << '\n';
        }
        return kExitPass;
    }

    return kExitArgError;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return kExitBudgetError;
    } catch (const DataError& e) {
        std::cerr << "data error: " << e.what() << '\n';
        return kExitDataError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << '\n';
        return kExitArgError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitArgError;
    }
}
