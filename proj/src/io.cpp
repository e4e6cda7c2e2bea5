#include "lap/io.hpp"

#include <fstream>
#include <sstream>

namespace lap {

json to_json(HalfInt h) { return json{{"twice", h.twice}}; }

HalfInt halfint_from_json(const json& j) {
    if (!j.is_object() || !j.contains("twice") || !j["twice"].is_number_integer())
        throw ParseError("half-integer must be {\"twice\": int}");
    return HalfInt::from_twice(j["twice"].get<int64_t>());
}

static std::string kind_name(GroupKind k) { return k == GroupKind::Sp ? "Sp" : "O"; }

json to_json(const ArthurParameter& p) {
    json j;
    j["group"] = {{"kind", kind_name(p.group.kind)}, {"dual_dim", p.group.dual_dim}};
    if (p.group.kind == GroupKind::O) j["group"]["epsilon"] = p.group.epsilon;
    j["labels"] = json::array();
    for (const auto& l : p.labels) {
        json lj = {{"name", l.name}, {"dim", l.dim}, {"duality", duality_name(l.duality)}};
        if (!l.dual_name.empty()) lj["dual_name"] = l.dual_name;
        j["labels"].push_back(lj);
    }
    j["summands"] = json::array();
    for (const auto& s : p.summands) j["summands"].push_back({{"rho", s.rho}, {"x", s.x.str()}, {"a", s.a}, {"b", s.b}});
    return j;
}

template <class T>
static T field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw ParseError(where + "." + key + ": wrong type");
    }
}

static int exact_int(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    if (!j.at(key).is_number_integer()) throw ParseError(where + "." + key + ": must be an integer");
    return j.at(key).get<int>();
}

ArthurParameter parameter_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("parameter must be a JSON object");
    ArthurParameter p;
    const json& g = j.contains("group") ? j["group"] : throw ParseError("missing field 'group'");
    std::string kind = field<std::string>(g, "kind", "group");
    p.group.dual_dim = exact_int(g, "dual_dim", "group");
    if (kind == "Sp") {
        p.group.kind = GroupKind::Sp;
        p.group.epsilon = 1;
    } else if (kind == "O") {
        p.group.kind = GroupKind::O;
        p.group.epsilon = exact_int(g, "epsilon", "group");
    } else {
        throw ParseError("group.kind: expected \"Sp\" or \"O\"");
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_array()) throw ParseError("labels: must be an array");
        for (size_t i = 0; i < j["labels"].size(); ++i) {
            const json& lj = j["labels"][i];
            std::string where = "labels[" + std::to_string(i) + "]";
            Label l;
            l.name = field<std::string>(lj, "name", where);
            l.dim = exact_int(lj, "dim", where);
            try {
                l.duality = parse_duality(field<std::string>(lj, "duality", where));
            } catch (const std::invalid_argument& e) {
                throw ParseError(where + ".duality: " + e.what());
            }
            if (lj.contains("dual_name")) l.dual_name = field<std::string>(lj, "dual_name", where);
            p.labels.push_back(l);
        }
    }
    if (j.contains("alpha")) {
        // Lifted parameters may record the added chi_W (x) S_1 (x) S_alpha block; alpha must be odd.
        int alpha = exact_int(j, "alpha", "parameter");
        if (alpha < 1 || alpha % 2 == 0) throw ParseError("alpha: added block needs odd alpha >= 1, got " + std::to_string(alpha));
    }
    if (!j.contains("summands") || !j["summands"].is_array()) throw ParseError("summands: missing or not an array");
    for (size_t i = 0; i < j["summands"].size(); ++i) {
        const json& sj = j["summands"][i];
        std::string where = "summands[" + std::to_string(i) + "]";
        Summand s;
        s.rho = field<std::string>(sj, "rho", where);
        if (sj.contains("x")) {
            try {
                s.x = sj["x"].is_number_integer() ? Rational(sj["x"].get<int64_t>()) : Rational::parse(sj["x"].get<std::string>());
            } catch (const std::exception&) {
                throw ParseError(where + ".x: expected an exact rational \"p/q\"");
            }
        }
        s.a = exact_int(sj, "a", where);
        s.b = exact_int(sj, "b", where);
        p.summands.push_back(s);
    }
    for (const std::string& pre : {kChiV, kChiW}) {
        bool used = std::any_of(p.summands.begin(), p.summands.end(), [&](const Summand& s) { return s.rho == pre; });
        if (used && !p.has_label(pre)) p.labels.push_back(chi_label(pre));
    }
    validate(p);
    return p;
}

json to_json(const MoeglinDatum& d) {
    json j = to_json(d.param);
    j["order"] = json::object();
    j["blocks"] = json::object();
    for (const auto& [rho, bl] : d.blocks) {
        j["order"][rho] = json::array();
        j["blocks"][rho] = json::array();
        for (const auto& b : bl) {
            j["order"][rho].push_back(b.id);
            j["blocks"][rho].push_back({{"l", b.l}, {"eta", b.eta}});
        }
    }
    return j;
}

MoeglinDatum datum_from_json(const json& j) {
    MoeglinDatum d = base_datum(parameter_from_json(j));
    if (!j.contains("blocks")) throw ParseError("datum: missing field 'blocks'");
    const json& bj = j["blocks"];
    for (auto& [rho, bl] : d.blocks) {
        if (j.contains("order") && j["order"].contains(rho)) {
            const json& oj = j["order"][rho];
            if (!oj.is_array()) throw ParseError("order." + rho + ": must be an array");
            BlockList ordered;
            for (const auto& idx : oj) {
                if (!idx.is_number_integer()) throw ParseError("order." + rho + ": indices must be integers");
                int id = idx.get<int>();
                auto it = std::find_if(bl.begin(), bl.end(), [&](const Block& b) { return b.id == id; });
                if (it == bl.end()) throw ParseError("order." + rho + ": " + std::to_string(id) + " is not a good-parity summand of " + rho);
                ordered.push_back(*it);
            }
            if (ordered.size() != bl.size()) throw ParseError("order." + rho + ": must list every block once");
            bl = ordered;
        }
        const json* list = nullptr;
        if (bj.is_object() && bj.contains(rho))
            list = &bj[rho];
        else if (bj.is_array() && d.blocks.size() == 1)
            list = &bj;
        if (!list || !list->is_array() || list->size() != bl.size())
            throw ParseError("blocks." + rho + ": need one {l, eta} per block");
        for (size_t i = 0; i < bl.size(); ++i) {
            std::string where = "blocks." + rho + "[" + std::to_string(i) + "]";
            bl[i].l = exact_int((*list)[i], "l", where);
            bl[i].eta = exact_int((*list)[i], "eta", where);
        }
    }
    try {
        validate_datum(d);
    } catch (const DatumError& e) {
        throw ValidationError("datum", e.what());
    }
    return d;
}

json to_json(const Block& b) {
    return json{{"id", b.id}, {"A", to_json(b.A)}, {"B", to_json(b.B)}, {"zeta", b.zeta}, {"l", b.l}, {"eta", b.eta}};
}

json to_json(const Verdict& v, bool with_trace) {
    json j{{"verdict", v.nonzero ? "Nonzero" : "Zero"}};
    if (with_trace) {
        j["trace"] = json::array();
        for (const auto& e : v.trace) {
            json ej{{"step", step_name(e.step)}, {"rule", step_rule(e.step)}, {"rho", e.rho}, {"depth", e.depth},
                    {"blocks", e.blocks}, {"detail", e.detail}};
            if (e.result) ej["result"] = *e.result;
            j["trace"].push_back(ej);
        }
        j["replay"] = replay(v.trace) ? "Nonzero" : "Zero";
    }
    return j;
}

json to_json(const AdamsReport& r) {
    json j{{"epsilon", r.epsilon}, {"start_alpha", r.start}, {"d", r.d}};
    j["rows"] = json::array();
    for (const auto& row : r.rows) {
        json rj{{"alpha", row.alpha}, {"verdict", row.nonzero ? "Nonzero" : "Zero"}, {"blocks", json::array()},
                {"obstruction_hits", row.obstruction_hits}};
        for (const auto& b : row.blocks) rj["blocks"].push_back(to_json(b));
        j["rows"].push_back(rj);
    }
    j["closure_violations"] = r.closure_violations;
    return j;
}

json to_json(const PsiGraph& g) {
    json j{{"nodes", json::array()}, {"edges", json::array()}};
    for (const auto& n : g.nodes) j["nodes"].push_back(n.summary());
    for (const auto& e : g.edges) j["edges"].push_back({{"source", e.src}, {"target", e.dst}, {"op", e.op.str()}});
    if (!g.warnings.empty()) j["warnings"] = g.warnings;
    return j;
}

json to_json(const Decomposition& d) {
    auto list = [](const std::vector<Summand>& v) {
        json a = json::array();
        for (const auto& s : v) a.push_back({{"rho", s.rho}, {"x", s.x.str()}, {"a", s.a}, {"b", s.b}});
        return a;
    };
    return json{{"nu_pos", list(d.nu_pos)}, {"np", list(d.np)}, {"gp", list(d.gp)}};
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json packet_data_json(const ArthurParameter& p, bool nonzero_only) {
    XuOptions quiet;
    quiet.record = false;
    json arr = json::array();
    for (const auto& d : enumerate_data(p)) {
        bool v = nonvanishing(d, quiet).nonzero;
        if (nonzero_only && !v) continue;
        json dj = to_json(d);
        arr.push_back({{"summary", d.summary()}, {"verdict", v ? "Nonzero" : "Zero"}, {"order", dj["order"]}, {"blocks", dj["blocks"]}});
    }
    return json{{"parameter", p.summary()}, {"data", arr}};
}

json raising_json(const ArthurParameter& p) {
    json arr = json::array();
    for (const auto& m : raising_neighbors(p))
        arr.push_back({{"op", m.op.label()}, {"descriptor", m.op.str()}, {"target", m.target.summary()}, {"parameter", to_json(m.target)}});
    return json{{"source", p.summary()}, {"raising", arr}};
}

json obstructions_json(const ArthurParameter& p) {
    json arr = json::array();
    for (const auto& o : obstruction_scan(p)) {
        json blocks = json::array();
        for (const auto& s : o.blocks) blocks.push_back({{"rho", s.rho}, {"a", s.a}, {"b", s.b}});
        arr.push_back({{"rule", o.rule}, {"op", o.op.label()}, {"descriptor", o.op.str()}, {"blocks", blocks},
                       {"predicted_zero_alpha", o.predicted_zero_alpha}});
    }
    return json{{"parameter", p.summary()}, {"obstructions", arr}};
}

json to_json(const MonotonicityReport& r) {
    json arr = json::array();
    for (const auto& c : r.counterexamples)
        arr.push_back({{"source", c.source}, {"target", c.target}, {"op", c.op}, {"epsilon", c.epsilon},
                       {"d_source", c.d_source}, {"d_target", c.d_target}, {"failing_alpha", c.failing_alpha},
                       {"d_increased", c.d_increased}});
    return json{{"pairs", r.pairs}, {"counterexamples", arr}};
}

json conservation_json(int known, int n) {
    int other = conservation(known, n);
    return json{{"n", n}, {"known", known}, {"other", other}, {"known_alpha", m_alpha(known, n)}, {"other_alpha", m_alpha(other, n)}};
}

json read_json_file(const std::string& path) {
    try {
        return json::parse(read_text(path));
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string name_of(const json& j) { return j.is_object() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : ""; }

std::vector<std::pair<MoeglinDatum, MoeglinDatum>> pairs_from_json(const json& j) {
    if (!j.is_object() || !j.contains("pairs") || !j["pairs"].is_array()) throw ParseError("pairs file needs a 'pairs' array");
    std::vector<std::pair<MoeglinDatum, MoeglinDatum>> out;
    for (const auto& pj : j["pairs"]) {
        if (!pj.contains("source") || !pj.contains("target")) throw ParseError("each pair needs 'source' and 'target'");
        out.emplace_back(datum_from_json(pj["source"]), datum_from_json(pj["target"]));
    }
    return out;
}

}  // namespace lap
