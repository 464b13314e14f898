#include "ups/json_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace ups {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << content;
}

std::string graph_to_json(const PlaneGraph& g) {
    json j;
    j["n"] = g.vertex_count();
    json rot = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) rot[std::to_string(v)] = g.rotation[v];
    j["rotation"] = rot;
    j["outer_face"] = g.outer_face;
    return j.dump(2) + "\n";
}

PlaneGraph graph_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("bad graph json: ") + e.what());
    }
    PlaneGraph g;
    int n = j.at("n").get<int>();
    if (n <= 0) throw input_error("graph must have vertices");
    g.rotation.resize(n);
    for (auto& [k, v] : j.at("rotation").items()) {
        int u = std::stoi(k);
        if (u < 0 || u >= n) throw input_error("rotation key out of range");
        g.rotation[u] = v.get<std::vector<int>>();
    }
    g.outer_face = j.at("outer_face").get<std::vector<int>>();
    return g;
}

namespace {

json point_json(const Point2& p) {
    return json::array({rational_to_string(p.x), rational_to_string(p.y)});
}

Point2 point_from(const json& j) {
    return Point2{rational_from_string(j.at(0).get<std::string>()),
                  rational_from_string(j.at(1).get<std::string>())};
}

json seg_json(const std::vector<Point2>& seg) {
    json a = json::array();
    for (auto& p : seg) a.push_back(point_json(p));
    return a;
}

std::vector<Point2> seg_from(const json& j) {
    std::vector<Point2> v;
    for (auto& e : j) v.push_back(point_from(e));
    return v;
}

json petals_json(const std::vector<PetalPair>& ps) {
    json a = json::array();
    for (auto& p : ps) a.push_back(json::array({point_json(p.l), point_json(p.r)}));
    return a;
}

std::vector<PetalPair> petals_from(const json& j) {
    std::vector<PetalPair> v;
    for (auto& e : j) v.push_back(PetalPair{point_from(e.at(0)), point_from(e.at(1))});
    return v;
}

}  // namespace

std::string pointset_to_json(const UniversalPointSet& ps) {
    json j;
    j["n"] = ps.n;
    j["mode"] = to_string(ps.mode);
    j["petals"] = ps.with_petals;
    j["N"] = ps.N;
    j["radius"] = rational_to_string(ps.radius);
    json outer = json::array();
    for (auto& p : ps.outer) outer.push_back(point_json(p));
    j["outer"] = outer;
    json subsets = json::object();
    for (auto& [jj, sub] : ps.subsets) {
        json s;
        s["capacity"] = sub.capacity;
        s["center"] = point_json(sub.center);
        s["segN"] = seg_json(sub.seg_N);
        s["segPlus"] = seg_json(sub.seg_plus);
        s["segMinus"] = seg_json(sub.seg_minus);
        if (ps.with_petals) {
            s["petals"] = {{"segN", petals_json(sub.petals_N)},
                           {"segPlus", petals_json(sub.petals_plus)},
                           {"segMinus", petals_json(sub.petals_minus)}};
        }
        subsets[std::to_string(jj)] = s;
    }
    j["subsets"] = subsets;
    json caps = json::array();
    for (long i = 1; i <= ps.N; ++i) caps.push_back(ps.capacity[i]);
    j["capacities"] = caps;
    json dense = json::array();
    for (long i = 1; i <= ps.N; ++i) dense.push_back((bool)ps.dense_point[i]);
    j["dense"] = dense;
    return j.dump() + "\n";
}

UniversalPointSet pointset_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("bad point set json: ") + e.what());
    }
    UniversalPointSet ps;
    ps.n = j.at("n").get<long>();
    ps.mode = pointset_mode_from_string(j.at("mode").get<std::string>());
    ps.with_petals = j.at("petals").get<bool>();
    ps.N = j.at("N").get<long>();
    ps.radius = rational_from_string(j.at("radius").get<std::string>());
    ps.origin = Point2{0, 0};
    for (auto& e : j.at("outer")) ps.outer.push_back(point_from(e));
    ps.capacity.assign(ps.N + 1, 1);
    ps.dense_point.assign(ps.N + 1, false);
    auto caps = j.at("capacities");
    auto dense = j.at("dense");
    for (long i = 1; i <= ps.N; ++i) {
        ps.capacity[i] = caps.at(i - 1).get<long>();
        ps.dense_point[i] = dense.at(i - 1).get<bool>();
    }
    for (auto& [k, s] : j.at("subsets").items()) {
        SubPointSet sub;
        sub.j = std::stol(k);
        sub.capacity = s.at("capacity").get<long>();
        sub.center = point_from(s.at("center"));
        sub.seg_N = seg_from(s.at("segN"));
        sub.seg_plus = seg_from(s.at("segPlus"));
        sub.seg_minus = seg_from(s.at("segMinus"));
        if (s.contains("petals")) {
            sub.petals_N = petals_from(s.at("petals").at("segN"));
            sub.petals_plus = petals_from(s.at("petals").at("segPlus"));
            sub.petals_minus = petals_from(s.at("petals").at("segMinus"));
        }
        ps.subsets.emplace(sub.j, std::move(sub));
    }
    return ps;
}

std::string drawing_to_json(const Drawing& d) {
    json j;
    j["points_file"] = d.points_file;
    json a = json::object();
    for (auto& [v, ref] : d.assignment) {
        a[std::to_string(v)] = {
            {"j", ref.j}, {"segment", to_string(ref.kind)}, {"slot", ref.slot}};
    }
    j["assignment"] = a;
    return j.dump(2) + "\n";
}

Drawing drawing_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("bad drawing json: ") + e.what());
    }
    Drawing d;
    d.points_file = j.value("points_file", "");
    for (auto& [k, v] : j.at("assignment").items()) {
        PointRef ref;
        ref.j = v.at("j").get<long>();
        ref.kind = segkind_from_string(v.at("segment").get<std::string>());
        ref.slot = v.at("slot").get<long>();
        d.assignment[std::stoi(k)] = ref;
    }
    return d;
}

}  // namespace ups
