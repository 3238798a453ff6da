#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "albu/corpus.hpp"
#include "albu/matrix.hpp"

namespace albu {

// Corpus generation settings. Total topic count is regular_topics + 1: the
// extra topic holds function words that occur in every document but share no
// vocabulary with the regular topics.
struct SimSettings {
    int vocab_size = 0;       // V
    int regular_topics = 0;   // topics with document-specific content
    int topics_per_doc = 0;   // regular topics mixed into one document
    int doc_len = 0;          // tokens per document, fixed
    int num_documents = 0;    // M
    double alpha_gen = 0.5;   // topic-mixture concentration
    double beta_gen = 0.5;    // word-distribution concentration
    std::uint64_t seed = 0;

    int total_topics() const { return regular_topics + 1; }
    int stop_topic() const { return regular_topics; }
};

// Named presets; num_documents and seed are left for the caller.
// "smaller": V=100, 7 total topics, 3 topics/doc, 100 tokens/doc.
// "bigger":  V=500, 10 total topics, 6 topics/doc, 120 tokens/doc.
SimSettings preset_settings(const std::string& name);

struct GroundTruth {
    Matrix phi_true;    // total_topics x V, rows on the simplex
    Matrix theta_true;  // M x total_topics, rows on the simplex
    SimSettings settings;
};

// Word-topic rows only. Vocabulary ids are split into contiguous blocks, one
// per topic; each regular topic draws a Dirichlet concentrated on its block
// with a little mass on the ids just outside it, so neighbouring topics share
// boundary words. The last block belongs to the stop-word topic, whose
// support stays disjoint from every regular topic.
Matrix generate_ground_truth(const SimSettings& settings, std::mt19937_64& rng);

// Picks topics_per_doc distinct regular topics, draws the mixture over those
// plus the stop-word topic, then samples doc_len tokens topic-then-word.
// phi_cumulative holds per-topic cumulative sums of phi rows.
std::pair<Document, std::vector<double>> generate_document(const Matrix& phi_cumulative,
                                                           const SimSettings& settings,
                                                           std::mt19937_64& rng);

std::pair<Corpus, GroundTruth> generate_corpus(const SimSettings& settings);

// Ground truth serialization (JSON: settings + phi_true + theta_true).
void save_ground_truth(const GroundTruth& truth, const std::string& path);
GroundTruth load_ground_truth(const std::string& path);

}  // namespace albu
