#pragma once

#include <json.hpp>

#include <string>

#include "matval/formal_sum.hpp"
#include "matval/geometry.hpp"
#include "matval/matroid.hpp"
#include "matval/polynomial.hpp"
#include "matval/subdivision.hpp"
#include "matval/valuations.hpp"

namespace matval {

using Json = nlohmann::ordered_json;

Json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const Json& j);
Matroid load_matroid(const std::string& path);

Json subdivision_to_json(const Subdivision& s);
Subdivision subdivision_from_json(const Json& j);
Subdivision load_subdivision(const std::string& path);

Json validation_report_to_json(const ValidationReport& r);
Json hpolytope_to_json(const HPolytope& p);
Json vpolytope_to_json(const VPolytope& p);
Json polynomial2_to_json(const Polynomial2& p);
Json unipoly_to_json(const UniPoly& p);

Json key_to_json(const SubsetRankPair& k);
Json key_to_json(const ActivityRecord& k);
Json key_to_json(const FlagKey& k);
Json key_to_json(const JumpSequence& k);
Json key_to_json(const Composition& k);

SubsetRankPair key_from_json(const Json& j, SubsetRankPair*);
ActivityRecord key_from_json(const Json& j, ActivityRecord*);
FlagKey key_from_json(const Json& j, FlagKey*);
JumpSequence key_from_json(const Json& j, JumpSequence*);
Composition key_from_json(const Json& j, Composition*);

Integer integer_from_json(const Json& j);
Json integer_to_json(const Integer& v);

template <class K>
Json formal_sum_to_json(const FormalSum<K>& s) {
    Json arr = Json::array();
    for (const auto& [key, coeff] : s.terms())
        arr.push_back(Json{{"key", key_to_json(key)}, {"coeff", integer_to_json(coeff)}});
    return arr;
}

template <class K>
FormalSum<K> formal_sum_from_json(const Json& j) {
    FormalSum<K> s;
    if (!j.is_array()) throw ParseError("formal sum must be a JSON array");
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("key") || !term.contains("coeff"))
            throw ParseError("formal sum term needs key and coeff");
        s.add_term(key_from_json(term.at("key"), static_cast<K*>(nullptr)),
                   integer_from_json(term.at("coeff")));
    }
    return s;
}

}  // namespace matval
