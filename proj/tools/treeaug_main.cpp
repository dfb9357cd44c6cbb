#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "treeaug/gen.hpp"
#include "treeaug/instance.hpp"
#include "treeaug/io.hpp"
#include "treeaug/oracle.hpp"
#include "treeaug/solve.hpp"

namespace {

using namespace treeaug;

int exit_code(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::invalid_input: return 1;
        case ErrorKind::precondition: return 2;
        case ErrorKind::internal: return 3;
    }
    return 3;
}

InstanceFile load_checked(const std::string& path) {
    auto file = load_instance(path);
    for (const auto& w : file.warnings) std::cerr << "warning: " << w << "\n";
    auto bad = validate(file.instance);
    if (!bad.empty()) {
        for (const auto& v : bad) std::cerr << "violation: " << v << "\n";
        throw Error(ErrorKind::invalid_input, "instance is invalid");
    }
    return file;
}

std::vector<std::vector<int>> parse_sets_arg(const std::string& text) {
    std::vector<std::vector<int>> sets;
    std::vector<int> cur;
    std::string num;
    auto flush_num = [&] {
        if (!num.empty()) {
            cur.push_back(std::stoi(num));
            num.clear();
        }
    };
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            num += ch;
        } else if (ch == ';' || ch == '|') {
            flush_num();
            sets.push_back(cur);
            cur.clear();
        } else {
            flush_num();
        }
    }
    flush_num();
    if (!cur.empty()) sets.push_back(cur);
    return sets;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree augmentation solvers: orient undirected edges over a root-directed "
                 "spanning tree, keeping the result acyclic and maximizing covered nodes"};
    app.require_subcommand(1);

    std::string in_path, out_path, sol_path, td_path;

    auto* c_validate = app.add_subcommand("validate", "check an instance file");
    c_validate->add_option("instance", in_path)->required();

    auto* c_solve = app.add_subcommand("solve", "run a solver and write the solution");
    SolveOptions sopt;
    c_solve->add_option("instance", in_path)->required();
    c_solve->add_option("--algo", sopt.algo, "half|exact|twdp|ptas|twoarm")->required();
    c_solve->add_option("--d", sopt.d, "PTAS layer parameter");
    c_solve->add_option("--width-cap", sopt.width_cap, "treewidth DP cap");
    c_solve->add_option("--limit", sopt.exact_limit, "exact enumeration edge cap");
    c_solve->add_option("--td", sopt.td_path, "decomposition file for --algo twdp");
    c_solve->add_flag("--embedding-required", sopt.require_embedding,
                      "fail instead of falling back when no embedding is usable");
    c_solve->add_option("--out", out_path, "solution file path");

    auto* c_verify = app.add_subcommand("verify", "re-check a solution file from scratch");
    c_verify->add_option("instance", in_path)->required();
    c_verify->add_option("solution", sol_path)->required();

    auto* c_gen = app.add_subcommand("gen", "instance generators");
    c_gen->require_subcommand(1);
    int g_n = 2, g_k = 1, g_rows = 2, g_cols = 2, g_nl = 3, g_nr = 3, g_cross = 3, g_maxn = 9;
    double g_p = 0.3, g_pback = 0.1;
    std::uint64_t g_seed = 1;
    std::string g_sets = "1";

    auto* c_setcover = c_gen->add_subcommand("setcover", "hardness gadget from a set cover instance");
    c_setcover->add_option("--n", g_n, "element count")->required();
    c_setcover->add_option("--sets", g_sets, "e.g. \"1 2;2 3\" (1-based, ';' separates sets)")
        ->required();
    c_setcover->add_option("--k", g_k, "budget")->required();
    c_setcover->add_option("--out", out_path)->required();

    auto* c_random = c_gen->add_subcommand("random", "random arborescence plus random edges");
    c_random->add_option("--n", g_n)->required();
    c_random->add_option("--p", g_p, "edge probability");
    c_random->add_option("--seed", g_seed);
    c_random->add_option("--out", out_path)->required();

    auto* c_grid = c_gen->add_subcommand("grid", "grid with a BFS tree and an embedding");
    c_grid->add_option("--rows", g_rows)->required();
    c_grid->add_option("--cols", g_cols)->required();
    c_grid->add_option("--out", out_path)->required();

    auto* c_twoarm = c_gen->add_subcommand("twoarm", "two root paths with random edges");
    c_twoarm->add_option("--nl", g_nl)->required();
    c_twoarm->add_option("--nr", g_nr)->required();
    c_twoarm->add_option("--cross", g_cross);
    c_twoarm->add_option("--pback", g_pback);
    c_twoarm->add_option("--seed", g_seed);
    c_twoarm->add_option("--out", out_path)->required();

    auto* c_tight = c_gen->add_subcommand("tight", "search for a bad case for the 1/2-approximation");
    c_tight->add_option("--max-n", g_maxn);
    c_tight->add_option("--seed", g_seed);
    c_tight->add_option("--out", out_path)->required();

    auto* c_bench = app.add_subcommand("bench", "algorithm x generator matrix");
    std::string b_suite = "all";
    int b_seeds = 5;
    c_bench->add_option("--suite", b_suite, "half|twoarm|twdp|ptas|all");
    c_bench->add_option("--seeds", b_seeds);
    c_bench->add_option("--out", out_path, "table file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_validate) {
            load_checked(in_path);
            std::cout << "ok\n";
            return 0;
        }
        if (*c_solve) {
            auto file = load_checked(in_path);
            auto [rep, sol] = run_solver(file.instance, sopt);
            std::cout << format_report(rep);
            if (!out_path.empty()) save_solution(out_path, sol);
            return 0;
        }
        if (*c_verify) {
            auto file = load_checked(in_path);
            verify_solution(file.instance, load_solution(sol_path));
            std::cout << "ok\n";
            return 0;
        }
        if (*c_setcover) {
            SetCoverInstance sc;
            sc.elements = g_n;
            sc.sets = parse_sets_arg(g_sets);
            sc.budget = g_k;
            auto bad = validate_set_cover(sc);
            if (!bad.empty()) throw Error(ErrorKind::invalid_input, bad.front());
            auto [inst, threshold] = reduce_set_cover(sc);
            save_instance(out_path, inst, {{"threshold", threshold}});
            std::cout << "threshold: " << threshold << "\n";
            return 0;
        }
        if (*c_random) {
            save_instance(out_path, random_instance(g_n, g_p, g_seed));
            return 0;
        }
        if (*c_grid) {
            save_instance(out_path, grid_instance(g_rows, g_cols));
            return 0;
        }
        if (*c_twoarm) {
            save_instance(out_path, two_arm_instance(g_nl, g_nr, g_cross, g_pback, g_seed));
            return 0;
        }
        if (*c_tight) {
            auto res = search_tightness_family(g_maxn, g_seed);
            save_instance(out_path, res.instance);
            std::cout << "optimum: " << format_weight(res.optimum) << "\n"
                      << "better_of_two: " << format_weight(res.better_of_two) << "\n"
                      << "ratio: " << res.ratio << "\n";
            return 0;
        }
        if (*c_bench) {
            auto rows = run_bench(b_suite, b_seeds);
            auto table = format_bench_table(rows);
            if (out_path.empty())
                std::cout << table;
            else
                write_file(out_path, table);
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
