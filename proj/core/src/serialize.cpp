#include "girth4/serialize.hpp"

#include <ctime>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "json.hpp"

#include "girth4/construction.hpp"
#include "girth4/graph.hpp"
#include "girth4/planarity.hpp"

namespace girth4 {
namespace {

using json = nlohmann::ordered_json;

constexpr int kMaxOrder = 1'000'000;

int require_int(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    auto wide = j.get<std::int64_t>();
    if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max())
        throw ParseError(std::string(what) + " out of range");
    return static_cast<int>(wide);
}

json edges_to_json(const std::vector<Edge>& edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back(json::array({e.first, e.second}));
    return arr;
}

json decomposition_to_json_value(const Decomposition& d) {
    json j;
    j["n"] = d.n;
    j["girth_claim"] = d.girth_claim;
    j["optimal"] = d.optimal;
    json parts = json::array();
    for (const auto& part : d.parts) parts.push_back(edges_to_json(part));
    j["parts"] = std::move(parts);
    return j;
}

json config_to_json(const SearchConfig& cfg) {
    json j;
    j["n"] = cfg.n;
    j["parts"] = cfg.parts;
    j["girth"] = cfg.girth;
    j["node_budget"] = cfg.node_budget;
    j["time_budget_seconds"] = cfg.time_budget_seconds;
    j["seed"] = cfg.seed;
    j["symmetry_breaking"] = cfg.symmetry_breaking;
    return j;
}

json prunes_to_json(const PruneStats& p) {
    json j;
    j["size"] = p.size;
    j["girth"] = p.girth;
    j["planarity"] = p.planarity;
    j["leaf"] = p.leaf;
    return j;
}

json girth_to_json(const Girth& g) {
    if (g.is_infinite()) return json("inf");
    return json(g.value());
}

struct ViolationWriter {
    json operator()(const MissingEdge& v) const {
        return json{{"kind", "missing_edge"}, {"u", v.u}, {"v", v.v}};
    }
    json operator()(const DuplicateEdge& v) const {
        return json{{"kind", "duplicate_edge"},
                    {"u", v.u},
                    {"v", v.v},
                    {"part_a", v.part_a},
                    {"part_b", v.part_b}};
    }
    json operator()(const ForeignEdge& v) const {
        return json{{"kind", "foreign_edge"}, {"u", v.u}, {"v", v.v}, {"part", v.part}};
    }
    json operator()(const NonPlanar& v) const {
        return json{{"kind", "non_planar"}, {"part", v.part}};
    }
    json operator()(const GirthViolation& v) const {
        return json{{"kind", "girth_violation"}, {"part", v.part}, {"cycle", v.cycle}};
    }
};

// The v/v'/x/y labels exist whenever the order embeds into a construction: 4k and
// 4k-1 use the plain map, 4k+2 and 4k+1 the map with x, y.
std::optional<VertexMap> paper_map(int n) {
    int k = 0;
    bool with_xy = false;
    switch (((n % 4) + 4) % 4) {
    case 0: k = n / 4; break;
    case 1: k = (n - 1) / 4; with_xy = true; break;
    case 2: k = (n - 2) / 4; with_xy = true; break;
    default: k = (n + 1) / 4; break;
    }
    if (k < 1) return std::nullopt;
    return VertexMap(k, with_xy);
}

} // namespace

std::string decomposition_to_json(const Decomposition& d) {
    return decomposition_to_json_value(d).dump() + "\n";
}

Decomposition decomposition_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("document must be an object");
    if (!j.contains("n") || !j.contains("parts"))
        throw ParseError("document needs fields n and parts");

    Decomposition d;
    d.n = require_int(j["n"], "n");
    if (d.n < 0) throw ParseError("n must be nonnegative");
    if (d.n > kMaxOrder) throw ParseError("n too large");
    d.girth_claim = j.contains("girth_claim") ? require_int(j["girth_claim"], "girth_claim") : 4;
    if (j.contains("optimal")) {
        if (!j["optimal"].is_boolean()) throw ParseError("optimal must be a boolean");
        d.optimal = j["optimal"].get<bool>();
    }
    const json& parts = j["parts"];
    if (!parts.is_array()) throw ParseError("parts must be an array");
    for (const json& part : parts) {
        if (!part.is_array()) throw ParseError("each part must be an array of edges");
        std::vector<Edge> edges;
        edges.reserve(part.size());
        for (const json& e : part) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("each edge must be a pair of vertex ids");
            edges.emplace_back(require_int(e[0], "vertex id"), require_int(e[1], "vertex id"));
        }
        d.parts.push_back(std::move(edges));
    }
    return d;
}

Decomposition load_decomposition(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return decomposition_from_json(buf.str());
}

void save_decomposition(const Decomposition& d, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << decomposition_to_json(d);
}

std::string report_to_json(const VerificationReport& r) {
    json j;
    j["ok"] = r.ok;
    j["n"] = r.n;
    j["girth_claim"] = r.girth_claim;
    json parts = json::array();
    for (const PartResult& pr : r.part_results) {
        json p;
        p["size"] = pr.size;
        p["planar"] = pr.planar;
        p["girth"] = girth_to_json(pr.girth);
        parts.push_back(std::move(p));
    }
    j["part_results"] = std::move(parts);
    json violations = json::array();
    for (const Violation& v : r.violations) violations.push_back(std::visit(ViolationWriter{}, v));
    j["violations"] = std::move(violations);
    j["truncated"] = r.truncated;
    return j.dump() + "\n";
}

std::string theta_to_json(const ThetaValue& t) {
    json j;
    j["n"] = t.n;
    if (t.is_exact()) {
        j["kind"] = "exact";
        j["value"] = t.upper();
    } else {
        j["kind"] = "range";
        j["lo"] = t.lower();
        j["hi"] = t.upper();
    }
    return j.dump() + "\n";
}

std::string to_string(SearchStatus status) {
    switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ExhaustedNoSolution: return "exhausted_no_solution";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "unknown";
}

std::string outcome_to_json(const SearchOutcome& outcome) {
    json j;
    j["status"] = to_string(outcome.status);
    j["config"] = config_to_json(outcome.config);
    j["nodes"] = outcome.stats.nodes;
    j["max_depth"] = outcome.stats.max_depth;
    j["prunes"] = prunes_to_json(outcome.stats.prunes);
    if (outcome.decomposition)
        j["decomposition"] = decomposition_to_json_value(*outcome.decomposition);
    return j.dump() + "\n";
}

std::string search_log_line(const SearchOutcome& outcome, const std::string& timestamp) {
    json j;
    j["config"] = config_to_json(outcome.config);
    j["status"] = to_string(outcome.status);
    j["nodes"] = outcome.stats.nodes;
    j["depth"] = outcome.stats.max_depth;
    j["prunes"] = prunes_to_json(outcome.stats.prunes);
    j["wall_ms"] = outcome.stats.wall_ms;
    j["timestamp"] = timestamp;
    return j.dump() + "\n";
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", &tm);
    return buf;
}

std::string to_dot(const Decomposition& d, LabelMode mode) {
    std::optional<VertexMap> vm;
    if (mode == LabelMode::Paper) vm = paper_map(d.n);
    auto name = [&](int v) {
        return vm && v >= 0 && v < d.n ? vm->label(v) : std::to_string(v);
    };
    std::ostringstream out;
    for (std::size_t p = 0; p < d.parts.size(); ++p) {
        const Graph g = part_graph(d, p);
        const Girth girth_value = girth(g);
        const bool planar = is_planar(g).planar;
        out << "graph part_" << p << " {\n";
        out << "  label=\"part " << p << ": " << d.parts[p].size() << " edges, girth "
            << girth_value.to_string() << ", " << (planar ? "planar" : "non-planar") << "\";\n";
        for (int v = 0; v < d.n; ++v) out << "  \"" << name(v) << "\";\n";
        for (const Edge& e : d.parts[p])
            out << "  \"" << name(e.first) << "\" -- \"" << name(e.second) << "\";\n";
        out << "}\n";
    }
    return out.str();
}

} // namespace girth4
