#include "albu/model_io.hpp"

#include <cstdio>
#include <fstream>

#include "albu/errors.hpp"

namespace albu {

std::string file_content_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open for hashing: " + path);
    std::uint64_t hash = 1469598103934665603ull;
    char buf[1 << 16];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            hash ^= static_cast<unsigned char>(buf[i]);
            hash *= 1099511628211ull;
        }
        if (!in) break;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
    return hex;
}

nlohmann::json config_json(const AlbuConfig& c) {
    return {{"k", c.topics},       {"alpha", c.alpha}, {"beta", c.beta},
            {"max_epochs", c.max_epochs}, {"tol", c.tol},     {"seed", c.seed}};
}

nlohmann::json config_json(const GibbsConfig& c) {
    return {{"k", c.topics},        {"alpha", c.alpha},     {"beta", c.beta},
            {"burn_in", c.burn_in}, {"samples", c.samples}, {"seed", c.seed},
            {"final_sample", c.final_sample}};
}

void save_model(const PosteriorState& state, const nlohmann::json& config,
                const std::string& path, const std::string& corpus_path) {
    nlohmann::json j;
    j["algorithm"] = state.algorithm;
    j["config"] = config;
    j["seed"] = state.seed;
    j["epochs_run"] = state.epochs_run;
    j["converged"] = state.converged;
    j["runtime_ms"] = state.runtime_ms;
    j["m"] = state.num_documents();
    j["k"] = state.topics();
    j["v"] = state.vocab_size();
    j["prior_alpha"] = state.prior_alpha;
    j["prior_beta"] = state.prior_beta;
    j["alpha_post"] = state.alpha_post.data;
    j["beta_post"] = state.beta_post.data;
    if (!corpus_path.empty())
        j["corpus"] = {{"path", corpus_path}, {"hash", file_content_hash(corpus_path)}};

    std::ofstream out(path);
    if (!out) throw FileError("cannot write model file: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw FileError("write failed: " + path);
}

LoadedModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open model file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid model JSON: ") + e.what(), 0);
    }
    try {
        LoadedModel model;
        model.state.algorithm = j.at("algorithm").get<std::string>();
        model.config = j.at("config");
        model.state.seed = j.at("seed").get<std::uint64_t>();
        model.state.epochs_run = j.at("epochs_run").get<int>();
        model.state.converged = j.at("converged").get<bool>();
        model.state.runtime_ms = j.value("runtime_ms", 0.0);
        const int m = j.at("m").get<int>();
        const int k = j.at("k").get<int>();
        const int v = j.at("v").get<int>();
        model.state.prior_alpha = j.at("prior_alpha").get<double>();
        model.state.prior_beta = j.at("prior_beta").get<double>();
        model.state.alpha_post = Matrix(m, k);
        model.state.alpha_post.data = j.at("alpha_post").get<std::vector<double>>();
        model.state.beta_post = Matrix(k, v);
        model.state.beta_post.data = j.at("beta_post").get<std::vector<double>>();
        if (model.state.alpha_post.data.size() != static_cast<std::size_t>(m) * k ||
            model.state.beta_post.data.size() != static_cast<std::size_t>(k) * v)
            throw ParseError("model matrix sizes do not match header", 0);
        if (j.contains("corpus")) {
            model.corpus_path = j["corpus"].value("path", "");
            model.corpus_hash = j["corpus"].value("hash", "");
        }
        return model;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid model JSON: ") + e.what(), 0);
    }
}

}  // namespace albu
