#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "sumfree/analysis.hpp"
#include "sumfree/enumerate.hpp"
#include "sumfree/generate.hpp"
#include "sumfree/group.hpp"
#include "sumfree/universe.hpp"

namespace sumfree {

using Json = nlohmann::json;

// {"moduli": [m1, m2, ...]}
Json to_json(const GroupSpec& g);
GroupSpec group_from_json(const Json& j);

// Sorted array of labels.
Json to_json(const ElemSet& s);
// Throws kInvalidElement for labels outside the ground set.
ElemSet set_from_json(const Universe& u, const Json& j);

Json to_json(const KolountzakisTrace& t);
Json to_json(const DensityReport& r);
Json to_json(const CountRecord& r);

// Shortest round-trip decimal form, '.' separator, no locale involvement.
std::string format_double(double x);
// Fixed notation with the given number of fractional digits.
std::string format_fixed(double x, int digits);

// Quotes a CSV field when it holds a comma, quote or newline.
std::string csv_field(const std::string& v);

// CSV contract for count rows.
std::string count_csv_header();
std::string count_csv_row(const CountRecord& r);

}  // namespace sumfree
