#include "appell/bench.hpp"

#include <chrono>
#include <ostream>

#include "appell/determinant.hpp"
#include "appell/error.hpp"

namespace appell {

namespace {

Rational signed_factorial(std::size_t n) {
    BigInt f = factorial(n);
    if (n % 2 == 1) f = -f;
    return Rational(f);
}

KernelResult run_hessenberg(const PowerCoefficientTable& D, std::size_t n) {
    DeterminantStats stats;
    const auto minors = hessenberg_leading_minors(appell_hessenberg_matrix(D.D, n), &stats);
    return {minors[n] * signed_factorial(n), stats.max_numerator_bits};
}

KernelResult run_bareiss(const PowerCoefficientTable& D, std::size_t n) {
    DeterminantStats stats;
    const Rational det = bareiss_determinant(appell_hessenberg_matrix(D.D, n), &stats);
    return {det * signed_factorial(n), stats.max_numerator_bits};
}

KernelResult run_recurrence(const PowerCoefficientTable& D, std::size_t n) {
    std::vector<Rational> b(n + 1);
    b[0] = Rational(1);
    std::size_t max_bits = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t m = 0; m < k; ++m) acc += D.D[k - m] * b[m];
        b[k] = -acc;
        max_bits = std::max(max_bits, b[k].numerator_bits());
    }
    return {b[n] * Rational(factorial(n)), max_bits};
}

}  // namespace

std::vector<BenchKernel> default_bench_kernels() {
    return {
        {"hessenberg", run_hessenberg},
        {"bareiss", run_bareiss},
        {"recurrence", run_recurrence},
    };
}

std::vector<BenchRow> run_benchmark(const CoefficientSequence& seq, unsigned r, std::size_t n_max,
                                    const std::vector<BenchKernel>& kernels) {
    const PowerCoefficientTable D = compute_D(seq.prefix(n_max), r);
    std::vector<BenchRow> rows;
    rows.reserve((n_max + 1) * kernels.size());
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (const auto& kernel : kernels) {
            const auto start = std::chrono::steady_clock::now();
            KernelResult result = kernel.run(D, n);
            const auto stop = std::chrono::steady_clock::now();
            rows.push_back({n, kernel.name, std::chrono::duration<double>(stop - start).count(),
                            result.max_numerator_bits, std::move(result.value)});
        }
    }
    for (std::size_t i = 0; i < rows.size(); i += kernels.size()) {
        for (std::size_t k = 1; k < kernels.size(); ++k) {
            if (rows[i + k].value != rows[i].value) {
                throw VerificationMismatch("benchmark kernels disagree at n = " + std::to_string(rows[i].n) + ": " +
                                           rows[i].kernel + " = " + rows[i].value.to_string() + ", " +
                                           rows[i + k].kernel + " = " + rows[i + k].value.to_string());
            }
        }
    }
    return rows;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
    os << "n,kernel,seconds,max_numerator_bits,value\n";
    for (const auto& row : rows) {
        os << row.n << ',' << row.kernel << ',' << row.seconds << ',' << row.max_numerator_bits << ','
           << row.value << '\n';
    }
}

}  // namespace appell
