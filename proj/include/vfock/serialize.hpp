#pragma once

// JSON and CSV forms of the library's values and reports. Keys are emitted in
// a fixed order so that equal values always serialize to identical bytes.
//
//   half-integer   "p/2"
//   partition      [4,2,1]
//   rational       "p/q" (or "p")
//   polynomial     {"poly": ["c0", "c1", ...]}, constant term first
//   FockVector     {"charge": c, "terms": [{"partition": [...], "coeff": ...}]}

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "json.hpp"

#include "vfock/conversion.hpp"
#include "vfock/repstructure.hpp"

namespace vfock {

using Json = nlohmann::ordered_json;

Json to_json(HalfInt x);
Json to_json(const Partition& lambda);
Json to_json(const Rational& q);
Json to_json(const Poly& p);

template <ScalarRing S>
Json to_json(const FockVector<S>& v);

template <ScalarRing S>
Json to_json(const OperatorSpec<S>& op);

template <ScalarRing S>
Json to_json(const CommutatorReport<S>& r);

// {"kind", "N", "ring", "z_trunc", "weights": [{"partition", "weight", "normalized"}]}.
// Normalized weights are only available over Rational; over Poly they are null.
template <ScalarRing S>
Json to_json(const WeightTable<S>& t, MeasureKind kind);

// Header "partition,weight,normalized_weight"; the partition column holds the
// JSON array in double quotes.
template <ScalarRing S>
std::string to_csv(const WeightTable<S>& t);

Json to_json(const DecompositionReport& r);

// "1=1,2=1/2" -> {1: 1, 2: 1/2}. Keys must be positive and distinct.
std::map<int, Rational> parse_index_map(std::string_view text);

// JSON list of half-integer strings, e.g. ["1/2","-3/2"].
std::set<HalfInt> parse_points(std::string_view json_text);

} // namespace vfock
