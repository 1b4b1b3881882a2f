#ifndef MINTS_JSON_IO_HPP
#define MINTS_JSON_IO_HPP

#include <string>
#include <vector>

#include "mints/decoder.hpp"
#include "mints/rational.hpp"
#include "mints/scheme.hpp"
#include "mints/search.hpp"
#include "mints/verify.hpp"

namespace mints::json_io {

// Scheme interchange format, shared by every command:
//   {"mints": 3, "weighings": [[0,1,2],[1,1,0]]}
// Rows are weighings, integers only, at least one row.
std::string scheme_to_json(const Scheme& scheme, int indent = 2);
Scheme scheme_from_json(const std::string& text);

// {"feasible": true} or
// {"feasible": false, "witness": {"first": [1,2], "second": [3]}}
// with witness subsets as 1-based mint lists.
std::string feasibility_to_json(const FeasibilityReport& report, int indent = 2);

// {"status": ..., "best_cost": ..., "scheme": ..., "stats": {...}}
std::string search_result_to_json(const search::SearchResult& result, int indent = 2);

// {"max_mints": ..., "witness": ..., "proven": ..., "stats": {...}}
std::string capacity_result_to_json(const search::CapacityResult& result, int indent = 2);

std::string bounds_to_json(const BoundsResult& bounds, int indent = 2);

// Rationals travel as strings: {"weighings": ["3", "2"]}.
std::string weighings_to_json(const std::vector<Rational>& totals, int indent = 2);

std::string decode_outcome_to_json(const decoder::DecodeOutcome& outcome, int indent = 2);

std::string checkpoint_to_json(const search::Checkpoint& checkpoint);
search::Checkpoint checkpoint_from_json(const std::string& text);

}  // namespace mints::json_io

#endif  // MINTS_JSON_IO_HPP
