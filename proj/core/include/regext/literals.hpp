#pragma once

// Text forms used on the command line and in reports.
//
//   type    [A-G][0-9]+               "B3"
//   root    comma-separated ints      "1,1,0"   (simple-root coefficients)
//   weight  "w:" + comma-separated    "w:1,0,2" (fundamental-weight coordinates)
//   subset  ';'-joined roots          "1,0;-1,0", "" for the empty set,
//           or "@path.json" holding a JSON array of coefficient arrays
//
// Parse errors throw std::invalid_argument.

#include "regext/closed_sets.hpp"
#include "regext/root_system.hpp"

#include <string>
#include <vector>

namespace regext {

LieType parse_type(const std::string& text);
Root parse_root(const std::string& text, int rank);
Weight parse_weight(const std::string& text, int rank);
/// Roots from a subset literal; duplicates are kept.
std::vector<Root> parse_root_list(const std::string& text, int rank);
/// Every listed vector must be a root of sys.
RootSubset parse_subset(const RootSystem& sys, const std::string& text);

std::string format_root(const Root& r);
std::string format_weight(const Weight& w);
/// Roots in the system's order, ';'-joined.
std::string format_subset(const RootSubset& s);

}  // namespace regext
