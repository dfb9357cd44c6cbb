#include "treeaug/solve.hpp"

#include <chrono>
#include <sstream>

#include "treeaug/approx.hpp"
#include "treeaug/gen.hpp"
#include "treeaug/oracle.hpp"
#include "treeaug/ptas.hpp"
#include "treeaug/treewidth.hpp"
#include "treeaug/twoarm.hpp"

namespace treeaug {

std::pair<SolveReport, SolutionFile> run_solver(const Instance& inst, const SolveOptions& opt) {
    {
        auto bad = validate(inst);
        if (!bad.empty())
            throw Error(ErrorKind::invalid_input, "invalid instance: " + bad.front());
    }

    auto start = std::chrono::steady_clock::now();
    std::pair<Orientation, CoverageReport> result;
    if (opt.algo == "half") {
        result = half_approx(inst);
    } else if (opt.algo == "exact") {
        result = solve_exact(inst, opt.exact_limit);
    } else if (opt.algo == "twdp") {
        TreeDecomposition td = opt.td_path.empty() ? heuristic_decomposition(inst)
                                                   : load_decomposition(opt.td_path, inst);
        result = solve_twdp(inst, td, opt.width_cap);
    } else if (opt.algo == "ptas") {
        result = solve_ptas(inst, opt.d, opt.require_embedding);
    } else if (opt.algo == "twoarm") {
        auto ta = recognize_two_arm(inst);
        if (!ta)
            throw Error(ErrorKind::precondition,
                        "instance is not two-arm (tree has more than two root paths)");
        result = solve_two_arm(inst, *ta);
    } else {
        throw Error(ErrorKind::invalid_input, "unknown algorithm: " + opt.algo);
    }
    auto stop = std::chrono::steady_clock::now();

    auto& [o, rep] = result;
    if (!is_acyclic(inst, o))
        throw Error(ErrorKind::internal, "refusing to emit: orientation failed certification");

    SolveReport report;
    report.algorithm = opt.algo;
    report.value = rep.value;
    for (int v : rep.covered) report.covered.push_back(inst.names[v]);
    report.upper_bound = upper_bound(inst);
    report.ratio_vs_bound = report.upper_bound == Weight(0)
                                ? "n/a"
                                : format_weight(rep.value / report.upper_bound);
    report.elapsed_seconds = std::chrono::duration<double>(stop - start).count();
    report.acyclic_certified = true;
    return {report, make_solution(inst, opt.algo, o, rep)};
}

std::string format_report(const SolveReport& rep) {
    std::ostringstream out;
    out << "algorithm: " << rep.algorithm << "\n"
        << "value: " << format_weight(rep.value) << "\n"
        << "covered: " << rep.covered.size() << "\n"
        << "upper_bound: " << format_weight(rep.upper_bound) << "\n"
        << "ratio_vs_bound: " << rep.ratio_vs_bound << "\n"
        << "acyclic_certified: " << (rep.acyclic_certified ? "true" : "false") << "\n"
        << "elapsed_seconds: " << rep.elapsed_seconds << "\n";
    return out.str();
}

void verify_solution(const Instance& inst, const SolutionFile& sol) {
    {
        auto bad = validate(inst);
        if (!bad.empty())
            throw Error(ErrorKind::invalid_input, "invalid instance: " + bad.front());
    }
    Orientation o = orientation_from_solution(inst, sol);  // rejects partial/unknown arcs
    if (!is_acyclic(inst, o))
        throw Error(ErrorKind::invalid_input, "solution contains a directed cycle");
    auto rep = coverage(inst, o);
    if (rep.value != sol.value)
        throw Error(ErrorKind::invalid_input,
                    "claimed value " + format_weight(sol.value) + " but recomputation gives " +
                        format_weight(rep.value));
}

namespace {

struct BenchCase {
    std::string name;
    Instance inst;
    std::string algo;
    SolveOptions opt;
};

void push_case(std::vector<BenchCase>& cases, const std::string& name, Instance inst,
               const std::string& algo, SolveOptions opt = {}) {
    opt.algo = algo;
    cases.push_back({name, std::move(inst), algo, opt});
}

}  // namespace

std::vector<BenchRow> run_bench(const std::string& suite, int seeds) {
    std::vector<BenchCase> cases;
    bool all = suite == "all";
    if (suite == "half" || all) {
        for (int s = 1; s <= seeds; ++s)
            push_case(cases, "random-n8-s" + std::to_string(s), random_instance(8, 0.3, s),
                      "half");
    }
    if (suite == "twoarm" || all) {
        for (int s = 1; s <= seeds; ++s)
            push_case(cases, "twoarm-6x6-s" + std::to_string(s),
                      two_arm_instance(6, 6, 8, 0.1, s), "twoarm");
    }
    if (suite == "twdp" || all) {
        for (int s = 1; s <= seeds; ++s)
            push_case(cases, "random-n9-s" + std::to_string(s), random_instance(9, 0.25, s),
                      "twdp");
    }
    if (suite == "ptas" || all) {
        for (int r = 2; r <= 4; ++r)
            for (int c = r; c <= 4; ++c) {
                SolveOptions opt;
                opt.d = 3;
                push_case(cases, "grid-" + std::to_string(r) + "x" + std::to_string(c),
                          grid_instance(r, c), "ptas", opt);
            }
    }
    if (cases.empty()) throw Error(ErrorKind::invalid_input, "unknown bench suite: " + suite);

    std::vector<BenchRow> rows;
    for (auto& bc : cases) {
        BenchRow row;
        row.suite = suite;
        row.instance = bc.name;
        row.algo = bc.algo;
        auto start = std::chrono::steady_clock::now();
        try {
            auto [rep, sol] = run_solver(bc.inst, bc.opt);
            row.value = rep.value;
            if (bc.inst.edge_count() <= 18) {
                auto [oo, orep] = solve_exact(bc.inst, 18);
                row.oracle = orep.value;
                row.ratio = orep.value == Weight(0) ? "1" : format_weight(row.value / orep.value);
            }
        } catch (const Error& e) {
            row.error = e.what();
        }
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "instance  algo  value  oracle  ratio  seconds  error\n";
    for (const auto& r : rows) {
        out << r.instance << "  " << r.algo << "  " << format_weight(r.value) << "  "
            << (r.oracle ? format_weight(*r.oracle) : std::string("-")) << "  "
            << (r.ratio.empty() ? "-" : r.ratio) << "  " << r.seconds << "  "
            << (r.error.empty() ? "-" : r.error) << "\n";
    }
    return out.str();
}

}  // namespace treeaug
