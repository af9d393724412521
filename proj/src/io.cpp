#include "wittbundle/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace witt {

using nlohmann::json;

namespace {

json mat2_json(const Mat2& m) {
    return json::array({json::array({rat_to_string(m.a11()), rat_to_string(m.a12())}),
                        json::array({rat_to_string(m.a21()), rat_to_string(m.a22())})});
}

Rat rat_from_json(const json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    throw ParseError("rational entries must be strings or integers");
}

Mat2 mat2_from(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw ParseError("matrix must be a 2x2 array of rational strings");
    try {
        return Mat2(rat_from_json(j[0][0]), rat_from_json(j[0][1]),
                    rat_from_json(j[1][0]), rat_from_json(j[1][1]));
    } catch (const DomainError& e) {
        throw DomainError(std::string("bad matrix: ") + e.what());
    }
}

std::vector<HandlePair> pairs_from(const json& j) {
    if (!j.is_object()) throw ParseError("representation file must be a JSON object");
    if (!j.contains("genus") || !j.contains("pairs"))
        throw ParseError("representation needs 'genus' and 'pairs'");
    if (!j["genus"].is_number_integer() || j["genus"].get<long>() < 1)
        throw ParseError("'genus' must be a positive integer");
    if (!j["pairs"].is_array()) throw ParseError("'pairs' must be an array");
    auto g = j["genus"].get<std::size_t>();
    if (j["pairs"].size() != g)
        throw ParseError("'pairs' length disagrees with 'genus'");
    std::vector<HandlePair> pairs;
    for (const auto& p : j["pairs"]) {
        if (!p.is_object() || !p.contains("A") || !p.contains("B"))
            throw ParseError("each pair needs 'A' and 'B' matrices");
        pairs.push_back({mat2_from(p["A"]), mat2_from(p["B"])});
    }
    return pairs;
}

json rep_json(const std::vector<HandlePair>& pairs) {
    json out;
    out["genus"] = pairs.size();
    out["pairs"] = json::array();
    for (const auto& [a, b] : pairs)
        out["pairs"].push_back({{"A", mat2_json(a)}, {"B", mat2_json(b)}});
    return out;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

}  // namespace

std::string mat2_to_json(const Mat2& m) { return mat2_json(m).dump(); }

Mat2 mat2_from_json(const std::string& text) { return mat2_from(parse_json(text)); }

std::string closed_rep_to_json(const ClosedSurfaceRep& r) {
    return rep_json(r.pairs()).dump(2);
}

std::string bounded_rep_to_json(const BoundedSurfaceRep& r) {
    json out = rep_json(r.pairs());
    out["boundary"] = mat2_json(r.boundary());
    return out.dump(2);
}

ClosedSurfaceRep closed_rep_from_json(const std::string& text) {
    json j = parse_json(text);
    if (j.is_object() && j.contains("boundary"))
        throw ParseError("closed representation must omit 'boundary'");
    return ClosedSurfaceRep(pairs_from(j));
}

BoundedSurfaceRep bounded_rep_from_json(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("boundary"))
        throw ParseError("bounded representation needs 'boundary'");
    BoundedSurfaceRep rep(pairs_from(j));
    // The boundary is re-derived from the pairs; the stored one must agree.
    if (mat2_from(j["boundary"]) != rep.boundary())
        throw ParseError("stored boundary disagrees with prod [X_i,Y_i]");
    return rep;
}

std::string realize_result_to_json(const RealizeResult& r) {
    json out = rep_json(r.rep.pairs());
    out["certificate"] = {{"target", r.target.str()},
                          {"evaluated", r.evaluated.str()},
                          {"match", r.target == r.evaluated},
                          {"lambda_log", r.lambda_log}};
    return out.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << contents;
}

}  // namespace witt
