#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treeaug/instance.hpp"
#include "treeaug/io.hpp"

namespace treeaug {

struct SolveOptions {
    std::string algo;  // half | exact | twdp | ptas | twoarm
    int d = 4;
    int width_cap = 6;
    int exact_limit = 20;
    std::string td_path;  // optional decomposition file for twdp
    bool require_embedding = false;
};

struct SolveReport {
    std::string algorithm;
    Weight value = 0;
    std::vector<std::string> covered;
    Weight upper_bound = 0;
    std::string ratio_vs_bound;  // exact fraction, "n/a" when the bound is 0
    double elapsed_seconds = 0.0;
    bool acyclic_certified = false;
};

// Dispatches to the requested solver and certifies the output; emission is
// refused (ErrorKind::internal) if certification fails.
std::pair<SolveReport, SolutionFile> run_solver(const Instance& inst, const SolveOptions& opt);

// Deterministic except for the elapsed line.
std::string format_report(const SolveReport& rep);

// Recomputes everything the solution file claims; throws Error(invalid_input)
// on a cycle, an unoriented edge, or a value mismatch.
void verify_solution(const Instance& inst, const SolutionFile& sol);

struct BenchRow {
    std::string suite;
    std::string instance;
    std::string algo;
    Weight value = 0;
    std::optional<Weight> oracle;
    std::string ratio;  // value / oracle, exact
    double seconds = 0.0;
    std::string error;
};

// suite: half | twoarm | twdp | ptas | all. Rows are emitted in a fixed
// order; per-row failures land in `error` instead of aborting the run.
std::vector<BenchRow> run_bench(const std::string& suite, int seeds);

// Fixed-width text table; runtimes are the only nondeterministic column.
std::string format_bench_table(const std::vector<BenchRow>& rows);

}  // namespace treeaug
