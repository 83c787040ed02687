#pragma once

#include "semistrong/constructions.hpp"
#include "semistrong/hypergraph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <variant>

namespace semistrong {

// Malformed input in one of the text formats below. Maps to CLI exit 2.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Either an explicit hypergraph or an implicit complete-uniform family.
using Instance = std::variant<Hypergraph, ImplicitCompleteUniform>;

// Hypergraph text format:
//   n <count>
//   <edge: space-separated 1-based vertex ids, one edge per line>
// Blank lines and lines starting with '#' are ignored. The alternative
// one-line header `complete-uniform n=<n> k=<k>` denotes K(n,k) without
// enumerating it.
Instance parse_instance(std::istream& in);

// As above but requires the explicit form.
Hypergraph parse_hypergraph(std::istream& in);

// Coloring text format: one line of space-separated positive integers,
// color of vertex i at position i. Comments and blank lines are ignored.
Coloring parse_coloring(std::istream& in);

void write_hypergraph(std::ostream& out, const Hypergraph& g);
void write_implicit(std::ostream& out, const ImplicitCompleteUniform& g);
void write_instance(std::ostream& out, const Instance& inst);
void write_coloring(std::ostream& out, const Coloring& col);

}  // namespace semistrong
