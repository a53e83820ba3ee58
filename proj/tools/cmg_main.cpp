// cmg — centrality maximization game toolkit.
//
// Subcommands: centrality, best-response, classify, simulate,
// enumerate-ne, verify-theorems.
// Exit codes: 0 ok, 1 usage error, 2 internal error, 3 semantic negative
// (e.g. classify on a non-equilibrium), 4 verification mismatch.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "cmg/centrality.hpp"
#include "cmg/io.hpp"
#include "cmg/oracle.hpp"

using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct CommonOpts {
    std::string backend = "rational";
    std::string input;
    std::string out;
};

json make_manifest(const std::string& subcommand, const CommonOpts& opts, json params_echo,
                   double wall_seconds) {
    json m;
    m["tool"] = "cmg";
    m["version"] = kVersion;
    m["subcommand"] = subcommand;
    m["backend"] = opts.backend;
    m["params"] = std::move(params_echo);
    if (!opts.input.empty()) m["input"] = opts.input;
    if (!opts.out.empty()) m["output"] = opts.out;
    m["wall_clock_s"] = wall_seconds;
    return m;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) std::cout << content;
    else cmg::write_file(out_path, content);
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

cmg::GameDocument document_from_flags(int n, int m, const std::string& beta,
                                      const std::string& eta) {
    cmg::GameDocument doc;
    doc.n = n;
    doc.m = m;
    doc.beta = beta;
    if (eta != "uniform") {
        doc.eta_uniform = false;
        std::size_t pos = 0;
        while (pos <= eta.size()) {
            auto comma = eta.find(',', pos);
            if (comma == std::string::npos) comma = eta.size();
            doc.eta.push_back(eta.substr(pos, comma - pos));
            pos = comma + 1;
        }
    }
    return doc;
}

template <class T>
int cmd_centrality(const cmg::GameDocument& doc, const CommonOpts& opts, int target_1based,
                   const std::string& format) {
    Timer timer;
    auto params = cmg::document_params<T>(doc);
    if (!doc.actions) throw cmg::game_error("centrality requires actions in the input document");
    const cmg::Configuration& config = *doc.actions;
    auto pi = cmg::bonacich_direct(params, config);

    std::optional<cmg::HittingTimes<T>> tau;
    if (target_1based > 0) tau = cmg::hitting_times(params, config, target_1based - 1);

    if (format == "csv") {
        std::ostringstream os;
        os << (tau ? "node,pi,tau\n" : "node,pi\n");
        for (int i = 0; i < params.n; ++i) {
            os << (i + 1) << ',' << cmg::Backend<T>::str(pi[i]);
            if (tau) os << ',' << cmg::Backend<T>::str(tau->tau[i]);
            os << '\n';
        }
        emit(opts.out, os.str());
        return 0;
    }
    json j;
    j["pi"] = json::array();
    for (const T& v : pi) j["pi"].push_back(cmg::Backend<T>::str(v));
    if (tau) {
        j["target"] = target_1based;
        j["tau"] = json::array();
        for (const T& v : tau->tau) j["tau"].push_back(cmg::Backend<T>::str(v));
    }
    j["manifest"] = make_manifest("centrality", opts, cmg::game_document_to_json(doc),
                                  timer.seconds());
    emit(opts.out, j.dump(2) + "\n");
    return 0;
}

template <class T>
int cmd_best_response(const cmg::GameDocument& doc, const CommonOpts& opts, int player_1based) {
    Timer timer;
    auto params = cmg::document_params<T>(doc);
    if (!doc.actions) throw cmg::game_error("best-response requires actions in the input document");
    auto brs = cmg::best_response_set(params, *doc.actions, player_1based - 1);

    json j;
    j["player"] = player_1based;
    j["objective"] = cmg::Backend<T>::str(brs.min_value);
    j["actions"] = json::array();
    for (const auto& a : brs.actions) {
        json row = json::array();
        for (int t : a) row.push_back(t + 1);
        j["actions"].push_back(row);
    }
    j["manifest"] = make_manifest("best-response", opts, cmg::game_document_to_json(doc),
                                  timer.seconds());
    emit(opts.out, j.dump(2) + "\n");
    return 0;
}

template <class T>
int cmd_classify(const cmg::GameDocument& doc, const CommonOpts& opts, const std::string& dot) {
    Timer timer;
    auto params = cmg::document_params<T>(doc);
    if (!doc.actions) throw cmg::game_error("classify requires actions in the input document");
    auto report = cmg::equilibrium_report(params, *doc.actions);

    json j;
    j["nash"] = report.nash;
    j["strict"] = report.strict;
    j["class"] = report.tag.str();
    j["condensation_ok"] = report.condensation_ok;
    if (report.witness) {
        json w;
        w["player"] = report.witness->player + 1;
        json a = json::array();
        for (int t : report.witness->better_action) a.push_back(t + 1);
        w["better_action"] = a;
        j["witness"] = w;
    }
    j["manifest"] = make_manifest("classify", opts, cmg::game_document_to_json(doc),
                                  timer.seconds());
    emit(opts.out, j.dump(2) + "\n");
    if (!dot.empty()) cmg::write_file(dot, cmg::dot_export(*doc.actions));
    return report.nash ? 0 : 3;
}

template <class T>
int cmd_simulate(const cmg::GameDocument& doc, const CommonOpts& opts, std::uint64_t seed,
                 int seeds_count, long max_steps, const std::string& init, long dot_every,
                 const std::string& prefix) {
    Timer timer;
    auto params = cmg::document_params<T>(doc);

    json summary = json::array();
    for (int k = 0; k < seeds_count; ++k) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(k);
        cmg::Configuration start = [&] {
            if (init == "random") {
                cmg::DynamicsRng init_rng(~s);
                return cmg::random_configuration(params.n, params.m, init_rng);
            }
            auto init_doc = cmg::load_game_document(init);
            if (!init_doc.actions) throw cmg::game_error("init document has no actions");
            return *init_doc.actions;
        }();

        cmg::Trajectory traj = cmg::run(params, start, s, max_steps);
        const std::string csv_path = prefix + "seed" + std::to_string(s) + ".csv";
        cmg::write_file(csv_path, cmg::trajectory_csv(traj));

        if (dot_every > 0) {
            cmg::Configuration snap = traj.initial;
            cmg::write_file(prefix + "seed" + std::to_string(s) + "_t0.dot", cmg::dot_export(snap));
            for (const cmg::StepRecord& rec : traj.steps) {
                snap = snap.with_action(rec.player, rec.action);
                if (rec.t % dot_every == 0)
                    cmg::write_file(prefix + "seed" + std::to_string(s) + "_t" +
                                        std::to_string(rec.t) + ".dot",
                                    cmg::dot_export(snap));
            }
        }

        json row;
        row["seed"] = s;
        row["steps"] = traj.steps.size();
        row["verdict"] = cmg::verdict_name(traj.verdict);
        row["final_class"] = cmg::classify(traj.final_config).str();
        row["final_config"] = cmg::configuration_to_json(traj.final_config);
        row["trajectory_csv"] = csv_path;
        summary.push_back(std::move(row));
    }

    json j;
    j["runs"] = std::move(summary);
    json echo = cmg::game_document_to_json(doc);
    echo["seed"] = seed;
    echo["seeds_count"] = seeds_count;
    echo["max_steps"] = max_steps;
    echo["init"] = init;
    j["manifest"] = make_manifest("simulate", opts, std::move(echo), timer.seconds());
    const std::string summary_path = opts.out.empty() ? prefix + "summary.json" : opts.out;
    cmg::write_file(summary_path, j.dump(2) + "\n");
    std::cout << "wrote " << summary_path << "\n";
    return 0;
}

template <class T>
int cmd_enumerate(const cmg::GameDocument& doc, const CommonOpts& opts, int jobs, bool large) {
    Timer timer;
    auto params = cmg::document_params<T>(doc);
    const std::uint64_t total = cmg::configuration_count(params.n, params.m);
    if (total > 1000000 && !large)
        throw cmg::game_error("configuration space has " + std::to_string(total) +
                              " members; pass --large to proceed");
    auto res = cmg::enumerate_nash(params, jobs);

    json j;
    j["total_configs"] = res.total_configs;
    j["nash_count"] = res.nash.size();
    j["strict_count"] = res.strict.size();
    j["class_histogram"] = res.class_histogram;
    j["nash"] = json::array();
    for (const auto& c : res.nash) j["nash"].push_back(cmg::configuration_to_json(c));
    j["strict"] = json::array();
    for (const auto& c : res.strict) j["strict"].push_back(cmg::configuration_to_json(c));
    j["mismatches"] = res.mismatches;
    j["manifest"] = make_manifest("enumerate-ne", opts, cmg::game_document_to_json(doc),
                                  timer.seconds());
    emit(opts.out, j.dump(2) + "\n");
    return res.mismatches.empty() ? 0 : 4;
}

template <class T>
int cmd_verify(const cmg::GameDocument& doc, const CommonOpts& opts, int jobs, bool large) {
    Timer timer;
    auto params = cmg::document_params<T>(doc);
    const std::uint64_t total = cmg::configuration_count(params.n, params.m);
    if (total > 1000000 && !large)
        throw cmg::game_error("configuration space has " + std::to_string(total) +
                              " members; pass --large to proceed");
    auto report = cmg::verify_theorems(params, jobs);

    std::cout << (report.pass ? "PASS" : "FAIL") << "  n=" << params.n << " m=" << params.m
              << " beta=" << doc.beta << "\n";
    std::cout << "  configurations: " << report.total_configs << "\n";
    std::cout << "  nash: " << report.nash_count << "  strict: " << report.strict_count << "\n";
    for (const auto& [tag, count] : report.class_histogram)
        std::cout << "  class " << tag << ": " << count << "\n";
    for (const auto& f : report.failures) std::cout << "  failure: " << f << "\n";

    if (!opts.out.empty()) {
        json j;
        j["pass"] = report.pass;
        j["total_configs"] = report.total_configs;
        j["nash_count"] = report.nash_count;
        j["strict_count"] = report.strict_count;
        j["class_histogram"] = report.class_histogram;
        j["failures"] = report.failures;
        j["manifest"] = make_manifest("verify-theorems", opts, cmg::game_document_to_json(doc),
                                      timer.seconds());
        cmg::write_file(opts.out, j.dump(2) + "\n");
    }
    return report.pass ? 0 : 4;
}

template <class F>
int with_backend(const std::string& backend, F&& f) {
    if (backend == "rational") return f(cmg::Rational{});
    if (backend == "float") return f(0.0);
    throw cmg::game_error("unknown backend: " + backend);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"centrality maximization game toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    int flag_n = 0, flag_m = 1;
    std::string flag_beta = "0.85", flag_eta = "uniform";
    int target = 0, player = 1, seeds_count = 1, jobs = 1;
    std::uint64_t seed = 0;
    long max_steps = 100000, dot_every = 0;
    std::string format = "json", init = "random", prefix = "trajectory_", dot_path;
    bool large = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--backend", opts.backend, "rational|float")->capture_default_str();
        sub->add_option("--out", opts.out, "output file (stdout when omitted)");
    };
    auto add_params = [&](CLI::App* sub) {
        sub->add_option("--n", flag_n, "node count")->required();
        sub->add_option("--m", flag_m, "out-degree")->required();
        sub->add_option("--beta", flag_beta, "discount, decimal or p/q")->capture_default_str();
        sub->add_option("--eta", flag_eta, "\"uniform\" or comma-separated values")
            ->capture_default_str();
    };

    auto* centrality = app.add_subcommand("centrality", "Bonacich centrality and hitting times");
    centrality->add_option("--input", opts.input, "configuration JSON")->required();
    centrality->add_option("--target", target, "1-based target for hitting times");
    centrality->add_option("--format", format, "json|csv")->capture_default_str();
    add_common(centrality);

    auto* best = app.add_subcommand("best-response", "all optimal actions for one player");
    best->add_option("--input", opts.input, "configuration JSON")->required();
    best->add_option("--player", player, "1-based player")->required();
    add_common(best);

    auto* classify = app.add_subcommand("classify", "equilibrium report for a configuration");
    classify->add_option("--input", opts.input, "configuration JSON")->required();
    classify->add_option("--dot", dot_path, "write DOT export of G(x)");
    add_common(classify);

    auto* simulate = app.add_subcommand("simulate", "asynchronous best response dynamics");
    add_params(simulate);
    simulate->add_option("--seed", seed, "base seed")->capture_default_str();
    simulate->add_option("--seeds-count", seeds_count, "number of consecutive seeds")
        ->capture_default_str();
    simulate->add_option("--max-steps", max_steps, "step budget per run")->capture_default_str();
    simulate->add_option("--init", init, "random|file.json")->capture_default_str();
    simulate->add_option("--dot-every", dot_every, "DOT snapshot period (0 = off)");
    simulate->add_option("--prefix", prefix, "output file prefix")->capture_default_str();
    add_common(simulate);

    auto* enumerate = app.add_subcommand("enumerate-ne", "brute-force equilibrium enumeration");
    add_params(enumerate);
    enumerate->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    enumerate->add_flag("--large", large, "allow spaces beyond 10^6 configurations");
    add_common(enumerate);

    auto* verify = app.add_subcommand("verify-theorems", "diff enumeration against the theorems");
    add_params(verify);
    verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    verify->add_flag("--large", large, "allow spaces beyond 10^6 configurations");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        cmg::GameDocument doc;
        if (!opts.input.empty()) doc = cmg::load_game_document(opts.input);
        else doc = document_from_flags(flag_n, flag_m, flag_beta, flag_eta);

        if (centrality->parsed())
            return with_backend(opts.backend, [&](auto tag) {
                return cmd_centrality<decltype(tag)>(doc, opts, target, format);
            });
        if (best->parsed())
            return with_backend(opts.backend, [&](auto tag) {
                return cmd_best_response<decltype(tag)>(doc, opts, player);
            });
        if (classify->parsed())
            return with_backend(opts.backend, [&](auto tag) {
                return cmd_classify<decltype(tag)>(doc, opts, dot_path);
            });
        if (simulate->parsed())
            return with_backend(opts.backend, [&](auto tag) {
                return cmd_simulate<decltype(tag)>(doc, opts, seed, seeds_count, max_steps, init,
                                                   dot_every, prefix);
            });
        if (enumerate->parsed() || verify->parsed()) {
            // float ties would corrupt the equilibrium/strict distinction
            if (opts.backend != "rational")
                throw cmg::game_error("enumeration requires the rational backend");
            if (enumerate->parsed()) return cmd_enumerate<cmg::Rational>(doc, opts, jobs, large);
            return cmd_verify<cmg::Rational>(doc, opts, jobs, large);
        }
    } catch (const cmg::internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const cmg::game_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 1;
}
