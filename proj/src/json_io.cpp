#include "matval/json_io.hpp"

#include <fstream>
#include <limits>

namespace matval {

namespace {

Subset subset_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("subset must be a JSON array");
    Subset s;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError("subset elements must be integers");
        s.push_back(e.get<int>());
    }
    std::sort(s.begin(), s.end());
    return s;
}

Json subset_to_json(const Subset& s) {
    Json arr = Json::array();
    for (int e : s) arr.push_back(e);
    return arr;
}

}  // namespace

Json matroid_to_json(const Matroid& m) {
    Json j;
    j["n"] = m.n();
    Json bases = Json::array();
    for (const Subset& b : m.bases()) bases.push_back(subset_to_json(b));
    j["bases"] = bases;
    return j;
}

Matroid matroid_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("bases"))
        throw ParseError("matroid needs fields n and bases");
    if (!j.at("n").is_number_integer()) throw ParseError("field n must be an integer");
    int n = j.at("n").get<int>();
    if (!j.at("bases").is_array()) throw ParseError("field bases must be an array");
    std::vector<Subset> bases;
    for (const auto& b : j.at("bases")) bases.push_back(subset_from_json(b));
    return Matroid::from_bases(n, bases);
}

Matroid load_matroid(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return matroid_from_json(j);
}

Json subdivision_to_json(const Subdivision& s) {
    Json j;
    j["ambient"] = matroid_to_json(s.ambient);
    Json cells = Json::array();
    for (const Matroid& c : s.cells) cells.push_back(matroid_to_json(c));
    j["cells"] = cells;
    return j;
}

Subdivision subdivision_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("ambient") || !j.contains("cells"))
        throw ParseError("subdivision needs fields ambient and cells");
    Subdivision s;
    s.ambient = matroid_from_json(j.at("ambient"));
    if (!j.at("cells").is_array()) throw ParseError("field cells must be an array");
    for (const auto& c : j.at("cells")) s.cells.push_back(matroid_from_json(c));
    return s;
}

Subdivision load_subdivision(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return subdivision_from_json(j);
}

Json validation_report_to_json(const ValidationReport& r) {
    Json j;
    j["valid"] = r.valid();
    j["containment"] = r.containment_ok;
    j["pairwise"] = r.pairwise_ok;
    j["coverage"] = r.coverage_ok;
    j["ambient_volume"] = rational_to_string(r.ambient_volume);
    Json vols = Json::array();
    for (const auto& v : r.cell_volumes) vols.push_back(rational_to_string(v));
    j["cell_volumes"] = vols;
    Json issues = Json::array();
    for (const auto& s : r.issues) issues.push_back(s);
    j["issues"] = issues;
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) {
        Json wj;
        wj["cells"] = Json::array({w.i, w.j});
        wj["common_face"] = w.common;
        Json normal = Json::array();
        for (const auto& x : w.w) normal.push_back(rational_to_string(x));
        wj["w"] = normal;
        wj["c"] = rational_to_string(w.c);
        witnesses.push_back(wj);
    }
    j["witnesses"] = witnesses;
    return j;
}

Json hpolytope_to_json(const HPolytope& p) {
    Json j;
    j["n"] = p.n;
    Json rows = Json::array();
    for (const auto& c : p.constraints) {
        Json row;
        Json normal = Json::array();
        for (const auto& x : c.normal) normal.push_back(rational_to_string(x));
        row["normal"] = normal;
        row["rel"] = c.rel == Rel::LessEq ? "<=" : (c.rel == Rel::Less ? "<" : "=");
        row["bound"] = rational_to_string(c.bound);
        rows.push_back(row);
    }
    j["constraints"] = rows;
    return j;
}

Json vpolytope_to_json(const VPolytope& p) {
    Json j;
    j["n"] = p.n;
    Json verts = Json::array();
    for (const auto& v : p.vertices) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(rational_to_string(x));
        verts.push_back(row);
    }
    j["vertices"] = verts;
    return j;
}

Json polynomial2_to_json(const Polynomial2& p) {
    Json j = Json::object();
    for (const auto& [key, coeff] : p.coefficients()) {
        std::string name = "x^" + std::to_string(key.first) + " y^" + std::to_string(key.second);
        j[name] = integer_to_json(coeff);
    }
    return j;
}

Json unipoly_to_json(const UniPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(rational_to_string(c));
    return arr;
}

Json integer_to_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() &&
        v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();  // fall back to a string for out-of-range coefficients
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) return Integer(j.get<std::string>());
    throw ParseError("expected an integer");
}

Json key_to_json(const SubsetRankPair& k) {
    return Json{{"subset", subset_to_json(k.subset)}, {"rank", k.rank}};
}

Json key_to_json(const ActivityRecord& k) {
    return Json{{"basis", subset_to_json(k.basis)},
                {"external", subset_to_json(k.external)},
                {"internal", subset_to_json(k.internal)}};
}

Json key_to_json(const FlagKey& k) {
    Json arr = Json::array();
    for (const auto& step : k) arr.push_back(key_to_json(step));
    return arr;
}

Json key_to_json(const JumpSequence& k) {
    Json arr = Json::array();
    for (int b : k.bits) arr.push_back(b);
    return arr;
}

Json key_to_json(const Composition& k) {
    Json arr = Json::array();
    for (int p : k.parts) arr.push_back(p);
    return arr;
}

SubsetRankPair key_from_json(const Json& j, SubsetRankPair*) {
    if (!j.is_object() || !j.contains("subset") || !j.contains("rank"))
        throw ParseError("subset-rank key needs subset and rank");
    return {subset_from_json(j.at("subset")), j.at("rank").get<int>()};
}

ActivityRecord key_from_json(const Json& j, ActivityRecord*) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("external") ||
        !j.contains("internal"))
        throw ParseError("activity key needs basis, external, internal");
    return {subset_from_json(j.at("basis")), subset_from_json(j.at("external")),
            subset_from_json(j.at("internal"))};
}

FlagKey key_from_json(const Json& j, FlagKey*) {
    if (!j.is_array()) throw ParseError("flag key must be an array");
    FlagKey k;
    for (const auto& step : j)
        k.push_back(key_from_json(step, static_cast<SubsetRankPair*>(nullptr)));
    return k;
}

JumpSequence key_from_json(const Json& j, JumpSequence*) {
    if (!j.is_array()) throw ParseError("jump sequence must be an array");
    JumpSequence k;
    for (const auto& b : j) k.bits.push_back(b.get<int>());
    return k;
}

Composition key_from_json(const Json& j, Composition*) {
    if (!j.is_array()) throw ParseError("composition must be an array");
    Composition k;
    for (const auto& p : j) k.parts.push_back(p.get<int>());
    return k;
}

}  // namespace matval
