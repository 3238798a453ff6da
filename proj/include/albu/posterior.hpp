#pragma once

#include <cstdint>
#include <string>

#include "albu/matrix.hpp"

namespace albu {

// The learned model: Dirichlet parameters of the per-document topic mixtures
// and the per-topic word distributions, plus run metadata. Both inference
// algorithms emit this shape.
struct PosteriorState {
    Matrix alpha_post;   // M x K
    Matrix beta_post;    // K x V
    double prior_alpha = 0.0;
    double prior_beta = 0.0;
    int epochs_run = 0;
    bool converged = false;
    std::string algorithm;  // "albu" or "gibbs"
    std::uint64_t seed = 0;
    double runtime_ms = 0.0;

    int num_documents() const { return alpha_post.rows; }
    int topics() const { return beta_post.rows; }
    int vocab_size() const { return beta_post.cols; }
};

// Row-normalized posterior means: the distributions the model is judged on.
Matrix topic_means(const PosteriorState& state);  // K x V
Matrix doc_means(const PosteriorState& state);    // M x K

}  // namespace albu
