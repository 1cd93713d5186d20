#ifndef WREG_IO_HPP
#define WREG_IO_HPP

#include <string>

#include "wreg/betti.hpp"
#include "wreg/graph.hpp"
#include "wreg/monomial.hpp"

namespace wreg {

// Ideal interchange: {"n": <vars>, "gens": [[e_1,...,e_n], ...]}.  The reader
// minimalizes; the writer emits the canonical generator order.
MonomialIdeal ideal_from_json(const std::string& text);
std::string ideal_to_json(const MonomialIdeal& ideal);

// Graph interchange: {"shape": "cycle"|"path"|"general", "n": ...,
// "edges": [[u, v, w], ...]} with 1-based vertices, or the shorthand
// {"shape": "cycle"|"path", "weights": [w_1, ...]}.
WeightedGraph graph_from_json(const std::string& text);
std::string graph_to_json(const WeightedGraph& graph);

// Betti table: {"characteristic": p, "subject": "ideal"|"quotient",
// "entries": [[i, j, mult], ...]} sorted by (i, j).
std::string betti_table_to_json(const BettiTable& table);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace wreg

#endif
