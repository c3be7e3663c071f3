#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "appell/engine.hpp"

namespace appell {

struct KernelResult {
    Rational value;  // a_n^(r)
    std::size_t max_numerator_bits = 0;
};

/// Computes a_n^(r) from a precomputed D table.
struct BenchKernel {
    std::string name;
    std::function<KernelResult(const PowerCoefficientTable&, std::size_t)> run;
};

/// hessenberg, bareiss and recurrence.
std::vector<BenchKernel> default_bench_kernels();

struct BenchRow {
    std::size_t n = 0;
    std::string kernel;
    double seconds = 0.0;
    std::size_t max_numerator_bits = 0;
    Rational value;
};

/// Times every kernel for every n in 0..n_max. The D table is built before any
/// timing starts. Throws VerificationMismatch, and reports no timings, if the
/// kernels disagree at any n.
std::vector<BenchRow> run_benchmark(const CoefficientSequence& seq, unsigned r, std::size_t n_max,
                                    const std::vector<BenchKernel>& kernels = default_bench_kernels());

/// "n,kernel,seconds,max_numerator_bits,value"
void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows);

}  // namespace appell
