#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cmg/dynamics.hpp"
#include "cmg/game.hpp"

namespace cmg {

// The JSON configuration document. Numeric fields are kept textual so the
// rational backend sees exact values ("1/2" or decimal literals); node
// indices are 1-based in the file and shifted to 0-based on load.
struct GameDocument {
    int n = 0;
    int m = 0;
    std::string beta = "0.85";
    bool eta_uniform = true;
    std::vector<std::string> eta;
    std::optional<Configuration> actions;
};

GameDocument parse_game_document(const nlohmann::json& j);
GameDocument load_game_document(const std::string& path);
nlohmann::json game_document_to_json(const GameDocument& doc);

template <class T>
GameParams<T> document_params(const GameDocument& doc) {
    std::optional<std::vector<T>> eta;
    if (!doc.eta_uniform) {
        std::vector<T> parsed;
        for (const std::string& e : doc.eta) parsed.push_back(Backend<T>::parse(e));
        eta = std::move(parsed);
    }
    return new_game<T>(doc.n, doc.m, Backend<T>::parse(doc.beta), std::move(eta));
}

// DOT rendering of G(x); mutual link pairs collapse to one undirected edge.
std::string dot_export(const Configuration& config);

// Trajectory CSV with fixed columns t,player,action,class; players and
// targets are 1-based, actions join sorted targets with '+'.
std::string trajectory_csv(const Trajectory& traj);

nlohmann::json configuration_to_json(const Configuration& config);  // 1-based actions
Configuration configuration_from_json(int n, int m, const nlohmann::json& actions);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cmg
