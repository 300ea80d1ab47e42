// Command-line front end: analyze | gamma | eval | zeros | toric.

#include <eulerprod/errors.hpp>
#include <eulerprod/report.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace eulerprod;

namespace {

void emit(const Json &j, bool compact)
{
    std::cout << (compact ? j.dump() : j.dump(2)) << '\n';
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Euler products of integer polynomials: expansions, faces and boundary zeros"};
    app.set_version_flag("--version", std::string(kVersion));
    app.set_config("--config", "", "TOML or INI file with option defaults");
    app.require_subcommand(1);

    bool compact = false;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    app.add_flag("--json", compact, "Compact single-line JSON (zeros: print the summary instead of CSV)");
    app.add_option("--seed", seed, "Seed for every randomized choice")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));

    std::string input;

    AnalyzeOptions aopt;
    auto *analyze = app.add_subcommand("analyze", "Full pipeline report for one polynomial");
    analyze->add_option("input", input, "Polynomial, e.g. \"1 - X1*X2 - 2*X2^3\"")->required();
    analyze->add_option("--bound", aopt.bound, "Largest |beta| in the gamma table")->capture_default_str();

    long gbound = 12;
    bool gcsv = false;
    auto *gamma = app.add_subcommand("gamma", "Table of the cyclotomic expansion exponents");
    gamma->add_option("input", input, "Polynomial")->required();
    gamma->add_option("--bound", gbound, "Largest |beta|")->capture_default_str();
    gamma->add_flag("--csv", gcsv, "Print CSV instead of JSON");

    EvalOptions eopt;
    std::string point;
    auto *eval = app.add_subcommand("eval", "Evaluate Z(s) by the continued product");
    eval->add_option("input", input, "Polynomial")->required();
    eval->add_option("--point", point, "Point as a JSON array, e.g. [2,2,0] or [[1.5,3],2]")->required();
    eval->add_option("--bound", eopt.bound, "Largest |beta| in the zeta product")->capture_default_str();
    eval->add_option("--delta", eopt.delta, "Lower delta than the one implied by the point")->capture_default_str();
    eval->add_option("--zeros-k", eopt.zero_count, "Zeta zeros used for singularity flags")->capture_default_str();
    eval->add_option("--direct", eopt.direct_cutoff, "Also run the direct product up to this prime")->capture_default_str();
    eval->add_option("--zero-cache", eopt.zero_cache, "JSON cache for the zeta zero table");

    ZerosOptions zopt;
    std::string csv_path;
    auto *zeros = app.add_subcommand("zeros", "Zeros of Z along a line through a boundary face");
    zeros->add_option("input", input, "Polynomial")->required();
    zeros->add_option("--face", zopt.face, "Column index (1-based) of the face; 0 picks the first usable face")
        ->capture_default_str();
    zeros->add_option("--u", zopt.u, "Lower edge of Im t")->capture_default_str();
    zeros->add_option("--eta", zopt.eta, "Height of the box")->capture_default_str();
    zeros->add_option("--eps", zopt.eps, "Lower edge of Re t")->capture_default_str();
    zeros->add_option("--re-max", zopt.re_max, "Upper edge of Re t")->capture_default_str();
    zeros->add_option("--pmax", zopt.pmax, "Largest prime scanned")->capture_default_str();
    zeros->add_option("--bound", zopt.bound, "Gamma table bound for the pole candidates")->capture_default_str();
    zeros->add_option("--zeros-k", zopt.zero_count, "Zeta zeros used for the pole candidates")->capture_default_str();
    zeros->add_option("--tol", zopt.tolerance, "Collision distance")->capture_default_str();
    zeros->add_option("--ladder", zopt.ladder, "eps values for the summary counts")->capture_default_str();
    zeros->add_option("--csv-out", csv_path, "Write the CSV here");
    zeros->add_option("--zero-cache", zopt.zero_cache, "JSON cache for the zeta zero table");

    int tn = 2;
    auto *toric = app.add_subcommand("toric", "Report for the toric family polynomial V_n");
    toric->add_option("--n", tn, "n in x1...xn = x_{n+1}^n")->capture_default_str()->check(CLI::Range(2, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*analyze) {
            aopt.seed = seed;
            aopt.threads = threads;
            emit(cmd_analyze(input, aopt), compact);
        } else if (*gamma) {
            const Json j = cmd_gamma(input, gbound, threads);
            if (gcsv)
                std::cout << gamma_csv(j);
            else
                emit(j, compact);
        } else if (*eval) {
            eopt.threads = threads;
            emit(cmd_eval(input, point, eopt), compact);
        } else if (*zeros) {
            zopt.seed = seed;
            zopt.threads = threads;
            const auto out = cmd_zeros(input, zopt);
            if (!csv_path.empty()) {
                std::ofstream f(csv_path);
                if (!f)
                    throw Error(ErrorKind::InvalidArgument, "cannot write " + csv_path);
                f << out.csv;
            }
            if (compact) {
                emit(out.summary, true);
            } else {
                if (csv_path.empty())
                    std::cout << out.csv;
                std::cerr << out.summary.dump(2) << '\n';
            }
        } else if (*toric) {
            emit(cmd_toric(tn, threads), compact);
        }
    } catch (const SyntaxError &e) {
        std::cerr << "error: " << e.what() << '\n';
        if (!input.empty()) {
            std::cerr << "  " << input << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
        }
        return 2;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_input_error(e.kind()) ? 2 : 3;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
