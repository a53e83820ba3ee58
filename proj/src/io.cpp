#include "cmg/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cmg {

namespace {

std::string numeric_text(const nlohmann::json& j, const char* field) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number()) return j.dump();
    throw game_error(std::string(field) + " must be a number or a rational string");
}

}  // namespace

Configuration configuration_from_json(int n, int m, const nlohmann::json& actions) {
    if (!actions.is_array()) throw game_error("actions must be an array");
    std::vector<std::vector<int>> acts;
    for (const auto& row : actions) {
        if (!row.is_array()) throw game_error("each action must be an array of targets");
        std::vector<int> a;
        for (const auto& t : row) {
            if (!t.is_number_integer()) throw game_error("targets must be integers");
            a.push_back(t.get<int>() - 1);  // 1-based in files
        }
        acts.push_back(std::move(a));
    }
    return Configuration(n, m, std::move(acts));
}

nlohmann::json configuration_to_json(const Configuration& config) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < config.n(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int t : config.action(i)) row.push_back(t + 1);
        rows.push_back(row);
    }
    return rows;
}

GameDocument parse_game_document(const nlohmann::json& j) {
    GameDocument doc;
    if (!j.is_object()) throw game_error("configuration document must be a JSON object");
    if (!j.contains("n") || !j.contains("m")) throw game_error("document needs n and m");
    doc.n = j.at("n").get<int>();
    doc.m = j.at("m").get<int>();
    if (j.contains("beta")) doc.beta = numeric_text(j.at("beta"), "beta");
    if (j.contains("eta")) {
        const auto& eta = j.at("eta");
        if (eta.is_string() && eta.get<std::string>() == "uniform") {
            doc.eta_uniform = true;
        } else if (eta.is_array()) {
            doc.eta_uniform = false;
            for (const auto& e : eta) doc.eta.push_back(numeric_text(e, "eta entry"));
        } else {
            throw game_error("eta must be \"uniform\" or an array");
        }
    }
    if (j.contains("actions") && !j.at("actions").is_null())
        doc.actions = configuration_from_json(doc.n, doc.m, j.at("actions"));
    return doc;
}

GameDocument load_game_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw game_error("cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw game_error(path + ": " + e.what());
    }
    return parse_game_document(j);
}

nlohmann::json game_document_to_json(const GameDocument& doc) {
    nlohmann::json j;
    j["n"] = doc.n;
    j["m"] = doc.m;
    j["beta"] = doc.beta;
    if (doc.eta_uniform) j["eta"] = "uniform";
    else j["eta"] = doc.eta;
    if (doc.actions) j["actions"] = configuration_to_json(*doc.actions);
    return j;
}

std::string dot_export(const Configuration& config) {
    std::ostringstream os;
    os << "digraph G {\n";
    for (int i = 0; i < config.n(); ++i) os << "  " << (i + 1) << ";\n";
    for (int i = 0; i < config.n(); ++i)
        for (int j : config.action(i)) {
            if (config.has_edge(j, i)) {
                if (i < j) os << "  " << (i + 1) << " -> " << (j + 1) << " [dir=none];\n";
            } else {
                os << "  " << (i + 1) << " -> " << (j + 1) << ";\n";
            }
        }
    os << "}\n";
    return os.str();
}

std::string trajectory_csv(const Trajectory& traj) {
    std::ostringstream os;
    os << "t,player,action,class\n";
    for (const StepRecord& rec : traj.steps) {
        os << rec.t << ',' << (rec.player + 1) << ',';
        for (std::size_t i = 0; i < rec.action.size(); ++i)
            os << (i ? "+" : "") << (rec.action[i] + 1);
        os << ',' << rec.tag.str() << '\n';
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw game_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw game_error("cannot write " + path);
    out << content;
}

}  // namespace cmg
