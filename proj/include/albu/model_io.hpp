#pragma once

#include <string>

#include <json.hpp>

#include "albu/albu.hpp"
#include "albu/gibbs.hpp"
#include "albu/posterior.hpp"

namespace albu {

// FNV-1a 64-bit hash of a file's bytes, as 16 hex digits. Used to pin a model
// to the corpus it was trained on.
std::string file_content_hash(const std::string& path);

nlohmann::json config_json(const AlbuConfig& config);
nlohmann::json config_json(const GibbsConfig& config);

// Model JSON: {algorithm, config, seed, epochs_run, converged, runtime_ms,
// m, k, v, prior_alpha, prior_beta, alpha_post (row-major), beta_post
// (row-major), corpus {path, hash}}.
void save_model(const PosteriorState& state, const nlohmann::json& config,
                const std::string& path, const std::string& corpus_path = "");

struct LoadedModel {
    PosteriorState state;
    nlohmann::json config;
    std::string corpus_path;
    std::string corpus_hash;
};

LoadedModel load_model(const std::string& path);

}  // namespace albu
