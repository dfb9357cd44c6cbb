#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treeaug/instance.hpp"

namespace treeaug {

struct TreeDecomposition;  // treewidth.hpp

// Sidecar metadata carried in the instance file (e.g. the set-cover gadget
// threshold). Unknown keys round-trip untouched.
struct InstanceFile {
    Instance instance;
    std::map<std::string, long long> meta;
    std::vector<std::string> warnings;  // e.g. collapsed parallel edges
};

struct SolutionFile {
    std::string algorithm;                                   // optional on load
    std::vector<std::pair<std::string, std::string>> oriented;  // [from, to] pairs
    Weight value = 0;
    std::vector<std::string> covered;
};

InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::string& path);

// Canonical form: alphabetical keys, sorted node/arc/edge lists (embedding
// rotations keep their cyclic order). Byte-deterministic.
std::string serialize_instance(const Instance& inst,
                               const std::map<std::string, long long>& meta = {});
void save_instance(const std::string& path, const Instance& inst,
                   const std::map<std::string, long long>& meta = {});

SolutionFile parse_solution(const std::string& text);
SolutionFile load_solution(const std::string& path);
std::string serialize_solution(const SolutionFile& sol);
void save_solution(const std::string& path, const SolutionFile& sol);

SolutionFile make_solution(const Instance& inst, const std::string& algorithm,
                           const Orientation& o, const CoverageReport& rep);

// Rebuilds the Orientation described by a solution file. Throws
// Error(invalid_input) on unknown nodes, pairs matching no edge, duplicate or
// missing edges (the file must orient all of E).
Orientation orientation_from_solution(const Instance& inst, const SolutionFile& sol);

// Decomposition file: {"bags": [[ids...]...], "parent": [int...]} with -1 at
// the root.
TreeDecomposition load_decomposition(const std::string& path, const Instance& inst);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace treeaug
