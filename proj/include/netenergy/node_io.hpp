#pragma once

#include <iosfwd>
#include <string>

#include "netenergy/network.hpp"

namespace netenergy {

/// Node-system text format: a header line "n m l" followed by n rows of A1
/// (n reals each), n rows of B1 (m reals each) and l rows of C1 (n reals
/// each). Whitespace-separated; everything after '#' on a line is a comment.
/// A12 is always recomputed, never read.
NodeSystem parse_node_file(const std::string& path);
NodeSystem parse_node_stream(std::istream& in, const std::string& name = "<stream>");

/// Serialize in the same format with full (round-trip exact) precision.
void write_node_file(const std::string& path, const NodeSystem& node);
void write_node_stream(std::ostream& out, const NodeSystem& node);

/// Square coupling matrix file: header "n", then n rows of n reals.
RealMatrix parse_coupling_file(const std::string& path);

/// Built-in benchmark nodes used throughout the tables.
NodeSystem example_node_1();  // A1 = -4.5, B1 = 1, C1 = 3
NodeSystem example_node_2();  // A1 = [[0,1],[-4,-2.5]], B1 = (0,1)^T, C1 = (2,2)

}  // namespace netenergy
