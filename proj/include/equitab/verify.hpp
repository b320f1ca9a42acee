#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "equitab/engine.hpp"

namespace equitab {

struct Check {
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    double seconds = 0;

    bool passed() const;
    std::size_t failures() const;
    void append(const Report& other);
};

/// Bounds shared by the verification suites.
struct SuiteOptions {
    std::vector<int> a_values{1, 2};
    /// Largest m in Chain (1) and largest n in Chain (2).
    int chain_max = 5;
    int ftom_max_n = 3;
    int ftom_max_m = 8;
    int ftom_max_k = 3;
    /// Largest ribbon size for the exhaustive oracle checks.
    int max_cells = 12;
    /// Largest ribbon size for the transpose symmetry and Jacobi-Trudi checks.
    int max_cells_small = 10;
    std::size_t jt_max_rows = 12;
    int product_pairs = 200;
    std::uint64_t seed = 20240611;
    int jensen_range = 6;
    int jensen_max_v = 6;
    int box_max = 30;
    int box_transpose_max = 15;
};

Report verify_chains(Engine& engine, const SuiteOptions& options);
Report verify_ftom(int a, int n, int m, int k);
Report verify_ftom_suite(const SuiteOptions& options);
Report verify_shortends(Engine& engine, const SuiteOptions& options);
Report verify_smalls(Engine& engine, const SuiteOptions& options);
Report verify_minimal(Engine& engine, int a, int n, int m);
Report verify_minimal_suite(Engine& engine, const SuiteOptions& options);
Report verify_maximal_corollaries(Engine& engine, const SuiteOptions& options);
Report verify_jensen(const SuiteOptions& options);
Report verify_oracles(Engine& engine, const SuiteOptions& options);

/// chains, ftom, shortends, smalls, minimal, maximal, jensen, oracles.
const std::vector<std::string>& suite_names();
/// Throws InvalidArgument for an unknown name.
Report run_suite(Engine& engine, std::string_view name, const SuiteOptions& options);

/// Every composition of n, in lexicographic order.
std::vector<Composition> compositions_of(int n);

}  // namespace equitab
