#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "albu/corpus.hpp"
#include "albu/matrix.hpp"
#include "albu/posterior.hpp"

namespace albu {

inline constexpr double kNpmiEpsilon = 1e-12;

struct EvalResult {
    std::vector<int> permutation;       // true topic k -> matched learnt topic
    std::vector<double> per_topic_kld;  // kld(true_k || learnt_perm[k])
    double avg_kld = 0.0;
    std::optional<double> coherence;

    std::string run_id;
    std::string algorithm;
    std::string dataset;
    int num_documents = 0;
    int topics = 0;
    std::uint64_t seed = 0;
    int epochs = 0;
    double runtime_ms = 0.0;
};

// Bijection minimizing total forward KLD(true_k || learnt_{perm[k]}), found
// by optimal assignment on the K x K cost matrix.
std::vector<int> match_topics(const Matrix& true_means, const Matrix& learnt_means);

// Mean over topics of kld(true_k || learnt_{perm[k]}).
double average_kld(const Matrix& true_means, const Matrix& learnt_means,
                   const std::vector<int>& permutation);

// Ids of the n largest entries, ties broken by ascending id.
std::vector<int> top_word_ids(std::span<const double> row, int n);

// Per-topic NPMI over the ordered pairs of each top-word list, averaged over
// topics. Word and pair probabilities are Boolean sliding-window frequencies;
// documents shorter than the window contribute one window.
double npmi_coherence(const Corpus& corpus, const std::vector<std::vector<int>>& topics,
                      int window, double epsilon = kNpmiEpsilon);

// Match, score per topic, and average; fills the metric fields of EvalResult.
EvalResult evaluate_kld(const PosteriorState& state, const Matrix& phi_true);

// Fixed CSV schema shared by evaluate and sweep outputs.
extern const char* const kCsvHeader;
std::string csv_row(const EvalResult& result);

// Minimum-cost assignment on a square cost matrix; returns row -> column.
std::vector<int> hungarian(const Matrix& cost);

}  // namespace albu
