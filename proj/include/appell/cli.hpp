#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "appell/bench.hpp"
#include "appell/determinant.hpp"
#include "appell/families.hpp"
#include "appell/table_io.hpp"

namespace appell::cli {

/// Process exit codes. Stable; documented in the README.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kUsage = 2,
    kCapExceeded = 3,
    kMismatch = 4,
};

enum class AlgorithmChoice { recurrence, determinant, composition, all };

struct RunConfig {
    std::string family = "bernoulli";
    unsigned m = 1;
    unsigned nn = 1;
    unsigned order = 1;
    std::size_t n_max = 10;
    AlgorithmChoice algorithm = AlgorithmChoice::recurrence;
    DeterminantKernel kernel = DeterminantKernel::hessenberg;
    OutputFormat format = OutputFormat::csv;
    bool check = false;
    std::optional<std::string> custom_path;
    std::size_t cap = kDefaultEnumerationCap;
    /// poly only: evaluation point.
    std::optional<std::string> z;
};

/// Builds the FamilySpec, loading the custom file when needed.
FamilySpec resolve_family(const RunConfig& config);

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err);
/// Degree is config.n_max.
int cmd_poly(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err,
              const std::vector<BenchKernel>& kernels = default_bench_kernels());

/// Maps a library exception to an exit code.
int exit_code_for(const std::exception& e);

/// Entry point: `appell <compute|poly|bench> [flags]`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace appell::cli
