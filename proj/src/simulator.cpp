#include "albu/simulator.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "albu/errors.hpp"

namespace albu {

namespace {

// Contiguous balanced partition of [0, V) into `parts` blocks.
std::pair<int, int> block_range(int v, int parts, int block) {
    const int lo = static_cast<int>(static_cast<long long>(block) * v / parts);
    const int hi = static_cast<int>(static_cast<long long>(block + 1) * v / parts);
    return {lo, hi};
}

void validate(const SimSettings& s) {
    if (s.vocab_size < 2 * s.total_topics())
        throw std::invalid_argument("simulator: vocabulary too small to partition into " +
                                    std::to_string(s.total_topics()) + " topic blocks");
    if (s.regular_topics < 1 || s.topics_per_doc < 1 || s.topics_per_doc > s.regular_topics)
        throw std::invalid_argument("simulator: need 1 <= topics_per_doc <= regular_topics");
    if (s.doc_len < 1) throw std::invalid_argument("simulator: doc_len must be >= 1");
    if (s.num_documents < 1) throw std::invalid_argument("simulator: need at least one document");
    if (s.alpha_gen <= 0.0 || s.beta_gen <= 0.0)
        throw std::invalid_argument("simulator: concentrations must be positive");
}

// Dirichlet draw via independent gammas; zero parameters give exact zeros,
// which keeps topic supports disjoint where the parameters say so.
std::vector<double> dirichlet_draw(const std::vector<double>& params, std::mt19937_64& rng) {
    std::vector<double> out(params.size(), 0.0);
    double total = 0.0;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i] <= 0.0) continue;
        std::gamma_distribution<double> gamma(params[i], 1.0);
        out[i] = gamma(rng);
        total += out[i];
    }
    for (double& x : out) x /= total;
    return out;
}

int draw_index(const double* cumulative, int n, double total, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, total);
    const double u = unif(rng);
    const double* end = cumulative + n;
    const double* it = std::upper_bound(cumulative, end, u);
    int idx = static_cast<int>(it - cumulative);
    if (idx >= n) idx = n - 1;
    return idx;
}

}  // namespace

SimSettings preset_settings(const std::string& name) {
    SimSettings s;
    if (name == "smaller") {
        s.vocab_size = 100;
        s.regular_topics = 6;
        s.topics_per_doc = 3;
        s.doc_len = 100;
        s.alpha_gen = 0.5;
        s.beta_gen = 0.5;
    } else if (name == "bigger") {
        s.vocab_size = 500;
        s.regular_topics = 9;
        s.topics_per_doc = 6;
        s.doc_len = 120;
        // Mixture concentration 1.0 so documents genuinely blend their six
        // topics; at the 0.1 used for inference a document collapses to ~2
        // effective topics and the preset loses its intended difficulty.
        s.alpha_gen = 1.0;
        s.beta_gen = 0.1;
    } else {
        throw std::invalid_argument("unknown preset \"" + name + "\" (want smaller|bigger)");
    }
    return s;
}

Matrix generate_ground_truth(const SimSettings& settings, std::mt19937_64& rng) {
    validate(settings);
    const int v = settings.vocab_size;
    const int k_total = settings.total_topics();
    const auto [stop_lo, stop_hi] = block_range(v, k_total, settings.stop_topic());

    Matrix phi(k_total, v, 0.0);
    std::vector<double> params(v);
    for (int k = 0; k < k_total; ++k) {
        std::fill(params.begin(), params.end(), 0.0);
        const auto [lo, hi] = block_range(v, k_total, k);
        for (int w = lo; w < hi; ++w) params[w] = settings.beta_gen * 10.0;
        if (k != settings.stop_topic()) {
            // One neighbouring id on each side, never inside the stop block.
            for (int w : {lo - 1, hi}) {
                if (w < 0 || w >= v) continue;
                if (w >= stop_lo && w < stop_hi) continue;
                params[w] = settings.beta_gen / 10.0;
            }
        }
        auto row = dirichlet_draw(params, rng);
        std::copy(row.begin(), row.end(), phi.row(k).begin());
    }
    return phi;
}

std::pair<Document, std::vector<double>> generate_document(const Matrix& phi_cumulative,
                                                           const SimSettings& settings,
                                                           std::mt19937_64& rng) {
    const int k_total = settings.total_topics();

    // Pick the document's regular topics: partial Fisher-Yates over the ids.
    std::vector<int> pool(settings.regular_topics);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < settings.topics_per_doc; ++i) {
        std::uniform_int_distribution<int> pick(i, settings.regular_topics - 1);
        std::swap(pool[i], pool[pick(rng)]);
    }

    std::vector<double> theta_params(k_total, 0.0);
    for (int i = 0; i < settings.topics_per_doc; ++i) theta_params[pool[i]] = settings.alpha_gen;
    theta_params[settings.stop_topic()] = settings.alpha_gen;
    std::vector<double> theta = dirichlet_draw(theta_params, rng);

    std::vector<double> theta_cum(k_total);
    std::partial_sum(theta.begin(), theta.end(), theta_cum.begin());

    Document doc;
    doc.tokens.reserve(settings.doc_len);
    for (int i = 0; i < settings.doc_len; ++i) {
        const int k = draw_index(theta_cum.data(), k_total, theta_cum.back(), rng);
        const auto row = phi_cumulative.row(k);
        doc.tokens.push_back(draw_index(row.data(), settings.vocab_size, row.back(), rng));
    }
    return {std::move(doc), std::move(theta)};
}

std::pair<Corpus, GroundTruth> generate_corpus(const SimSettings& settings) {
    validate(settings);
    std::mt19937_64 rng(settings.seed);

    GroundTruth truth;
    truth.settings = settings;
    truth.phi_true = generate_ground_truth(settings, rng);
    truth.theta_true = Matrix(settings.num_documents, settings.total_topics());

    Matrix phi_cum = truth.phi_true;
    for (int k = 0; k < phi_cum.rows; ++k) {
        auto row = phi_cum.row(k);
        std::partial_sum(row.begin(), row.end(), row.begin());
    }

    Corpus corpus;
    std::string digits = std::to_string(settings.vocab_size - 1);
    for (int w = 0; w < settings.vocab_size; ++w) {
        std::string id = std::to_string(w);
        corpus.vocabulary.add("w" + std::string(digits.size() - id.size(), '0') + id);
    }

    corpus.documents.reserve(settings.num_documents);
    for (int m = 0; m < settings.num_documents; ++m) {
        auto [doc, theta] = generate_document(phi_cum, settings, rng);
        corpus.documents.push_back(std::move(doc));
        std::copy(theta.begin(), theta.end(), truth.theta_true.row(m).begin());
    }
    return {std::move(corpus), std::move(truth)};
}

void save_ground_truth(const GroundTruth& truth, const std::string& path) {
    nlohmann::json j;
    j["settings"] = {{"vocab_size", truth.settings.vocab_size},
                     {"regular_topics", truth.settings.regular_topics},
                     {"topics_per_doc", truth.settings.topics_per_doc},
                     {"doc_len", truth.settings.doc_len},
                     {"num_documents", truth.settings.num_documents},
                     {"alpha_gen", truth.settings.alpha_gen},
                     {"beta_gen", truth.settings.beta_gen},
                     {"seed", truth.settings.seed}};
    j["phi_true"] = truth.phi_true.data;
    j["theta_true"] = truth.theta_true.data;

    std::ofstream out(path);
    if (!out) throw FileError("cannot write ground truth file: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw FileError("write failed: " + path);
}

GroundTruth load_ground_truth(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open ground truth file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid ground truth JSON: ") + e.what(), 0);
    }
    try {
        GroundTruth truth;
        const auto& s = j.at("settings");
        truth.settings.vocab_size = s.at("vocab_size").get<int>();
        truth.settings.regular_topics = s.at("regular_topics").get<int>();
        truth.settings.topics_per_doc = s.at("topics_per_doc").get<int>();
        truth.settings.doc_len = s.at("doc_len").get<int>();
        truth.settings.num_documents = s.at("num_documents").get<int>();
        truth.settings.alpha_gen = s.at("alpha_gen").get<double>();
        truth.settings.beta_gen = s.at("beta_gen").get<double>();
        truth.settings.seed = s.at("seed").get<std::uint64_t>();

        const int k = truth.settings.total_topics();
        truth.phi_true = Matrix(k, truth.settings.vocab_size);
        truth.phi_true.data = j.at("phi_true").get<std::vector<double>>();
        truth.theta_true = Matrix(truth.settings.num_documents, k);
        truth.theta_true.data = j.at("theta_true").get<std::vector<double>>();
        if (truth.phi_true.data.size() !=
                static_cast<std::size_t>(k) * truth.settings.vocab_size ||
            truth.theta_true.data.size() !=
                static_cast<std::size_t>(truth.settings.num_documents) * k)
            throw ParseError("ground truth matrix sizes do not match settings", 0);
        return truth;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid ground truth JSON: ") + e.what(), 0);
    }
}

}  // namespace albu
