#pragma once

// Prouhet-Tarry-Escott solutions: text format and the shipped table.
//
// One solution per line, "m: a1,...,am | b1,...,bm". Blank lines and lines
// starting with '#' are ignored.

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "unitysum/constructions.hpp"

namespace unitysum {

// Throws kInvalidArgument on malformed lines (with the line number) and
// kNotPte if a line is not a solution.
std::vector<PteSolution> parse_pte(std::istream& in);
std::vector<PteSolution> load_pte_file(const std::filesystem::path& path);
std::string format_pte(const PteSolution& s);

// Curated solutions for m in {2, 3, 4}; same content as data/pte_solutions.txt.
const PteSolution& curated_pte(int m);

}  // namespace unitysum
