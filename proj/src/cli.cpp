#include "appell/cli.hpp"

#include <map>
#include <ostream>

#include <CLI11.hpp>

#include "appell/error.hpp"

namespace appell::cli {

namespace {

const std::map<std::string, AlgorithmChoice> kAlgorithms{
    {"recurrence", AlgorithmChoice::recurrence},
    {"determinant", AlgorithmChoice::determinant},
    {"composition", AlgorithmChoice::composition},
    {"all", AlgorithmChoice::all},
};

const std::map<std::string, DeterminantKernel> kKernels{
    {"hessenberg", DeterminantKernel::hessenberg},
    {"bareiss", DeterminantKernel::bareiss},
};

const std::map<std::string, OutputFormat> kFormats{
    {"csv", OutputFormat::csv},
    {"json", OutputFormat::json},
    {"pretty", OutputFormat::pretty},
};

class UsageError : public Error {
public:
    using Error::Error;
};

void add_family_options(CLI::App* sub, RunConfig& config) {
    sub->add_option("--family", config.family, "Generating family")
        ->check(CLI::IsMember({"bernoulli", "euler", "hyper-bernoulli", "hyper-cauchy", "custom"}));
    sub->add_option("--m", config.m, "Hypergeometric parameter M")->check(CLI::PositiveNumber);
    sub->add_option("--nn", config.nn, "Hypergeometric parameter N")->check(CLI::PositiveNumber);
    sub->add_option("--order", config.order, "Order r")->check(CLI::PositiveNumber);
    sub->add_option("--n", config.n_max, "Largest index n")->check(CLI::NonNegativeNumber);
    sub->add_option("--custom-path", config.custom_path, "File with one p/q per line, d_0 first");
}

RelatedNumberTable compute_table(const CoefficientSequence& seq, const RunConfig& config) {
    switch (config.algorithm) {
        case AlgorithmChoice::recurrence: return related_numbers_recurrence(seq, config.order, config.n_max);
        case AlgorithmChoice::determinant:
            return related_numbers_determinant(seq, config.order, config.n_max, config.kernel);
        case AlgorithmChoice::composition:
            return related_numbers_composition(seq, config.order, config.n_max, config.cap);
        case AlgorithmChoice::all: {
            const PowerCoefficientTable D = compute_D(seq, config.order);
            auto table = related_numbers_recurrence(D, config.n_max);
            const auto report = compare_routes({
                {"recurrence", table.a},
                {"determinant:hessenberg", related_numbers_determinant(D, config.n_max, DeterminantKernel::hessenberg).a},
                {"determinant:bareiss", related_numbers_determinant(D, config.n_max, DeterminantKernel::bareiss).a},
                {"composition",
                 related_numbers_composition(D, std::min(config.n_max, config.cap), config.cap).a},
            });
            if (!report.agree) throw VerificationMismatch(report.summary());
            return table;
        }
    }
    throw std::logic_error("unreachable algorithm choice");
}

}  // namespace

FamilySpec resolve_family(const RunConfig& config) {
    if (config.family == "bernoulli") return Bernoulli{};
    if (config.family == "euler") return Euler{};
    if (config.family == "hyper-bernoulli") return HyperBernoulli{config.m, config.nn};
    if (config.family == "hyper-cauchy") return HyperCauchy{config.m, config.nn};
    if (config.family == "custom") {
        if (!config.custom_path) throw UsageError("--family custom requires --custom-path");
        return Custom{load_custom_family(*config.custom_path)};
    }
    throw UsageError("unknown family '" + config.family + "'");
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const CombinatorialBlowUp*>(&e)) return kCapExceeded;
    if (dynamic_cast<const VerificationMismatch*>(&e)) return kMismatch;
    if (dynamic_cast<const Error*>(&e) || dynamic_cast<const std::invalid_argument*>(&e) ||
        dynamic_cast<const std::out_of_range*>(&e)) {
        return kUsage;
    }
    return kFailure;
}

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const FamilySpec spec = resolve_family(config);
        if (config.algorithm == AlgorithmChoice::composition && config.n_max > config.cap) {
            throw CombinatorialBlowUp(config.n_max, config.cap);
        }
        const CoefficientSequence seq = family_coefficients(spec, config.n_max);
        if (config.check) {
            const auto report = cross_verify(seq, config.order, config.n_max, config.cap);
            if (!report.agree) throw VerificationMismatch(report.summary());
        }
        const RelatedNumberTable table = compute_table(seq, config);
        write_table(out, config.format, family_name(spec), table);
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

int cmd_poly(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        const FamilySpec spec = resolve_family(config);
        const CoefficientSequence seq = family_coefficients(spec, config.n_max);
        const RelatedNumberTable table = related_numbers_recurrence(seq, config.order, config.n_max);
        const AppellPolynomial poly = appell_polynomial(table, config.n_max);
        if (config.z) {
            out << polynomial_eval(poly, Rational::parse(*config.z)) << '\n';
            return kOk;
        }
        for (std::size_t j = 0; j < poly.coeffs_in_z.size(); ++j) {
            if (j > 0) out << ", ";
            out << poly.coeffs_in_z[j];
        }
        out << '\n';
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err,
              const std::vector<BenchKernel>& kernels) {
    try {
        const FamilySpec spec = resolve_family(config);
        const CoefficientSequence seq = family_coefficients(spec, config.n_max);
        const auto rows = run_benchmark(seq, config.order, config.n_max, kernels);
        write_bench_csv(out, rows);
        return kOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact related numbers and polynomials of higher-order Appell sequences", "appell"};
    app.require_subcommand(1);

    RunConfig config;
    std::string algorithm = "recurrence";
    std::string kernel = "hessenberg";
    std::string format = "csv";

    auto* compute = app.add_subcommand("compute", "Print a_0..a_n of the chosen family and order");
    add_family_options(compute, config);
    compute->add_option("--algo", algorithm, "Algorithm")->check(CLI::IsMember({"recurrence", "determinant",
                                                                                 "composition", "all"}));
    compute->add_option("--kernel", kernel, "Determinant kernel")->check(CLI::IsMember({"hessenberg", "bareiss"}));
    compute->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json", "pretty"}));
    compute->add_flag("--check", config.check, "Cross-verify every algorithm; exit 4 on disagreement");
    compute->add_option("--cap", config.cap, "Composition enumeration cap");

    auto* poly = app.add_subcommand("poly", "Print A_n(z) coefficients (ascending) or its value at --z");
    add_family_options(poly, config);
    poly->add_option("--z", config.z, "Evaluation point p/q");

    auto* bench = app.add_subcommand("bench", "Time the determinant kernels and the recurrence per n (CSV)");
    add_family_options(bench, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    config.algorithm = kAlgorithms.at(algorithm);
    config.kernel = kKernels.at(kernel);
    config.format = kFormats.at(format);

    if (compute->parsed()) return cmd_compute(config, out, err);
    if (poly->parsed()) return cmd_poly(config, out, err);
    return cmd_bench(config, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"appell"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace appell::cli
