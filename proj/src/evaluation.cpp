#include "albu/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "albu/dirichlet.hpp"

namespace albu {

const char* const kCsvHeader =
    "run_id,algorithm,dataset,M,K,seed,epochs,avg_kld,coherence,runtime_ms";

std::vector<int> hungarian(const Matrix& cost) {
    // Kuhn-Munkres with potentials, O(n^3); 1-based internal indexing.
    const int n = cost.rows;
    if (cost.cols != n) throw std::invalid_argument("hungarian: cost matrix must be square");
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> match(n + 1, 0), way(n + 1, 0);

    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = match[j0];
            int j1 = -1;
            double delta = inf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0);
    }

    std::vector<int> assignment(n, -1);
    for (int j = 1; j <= n; ++j)
        if (match[j] > 0) assignment[match[j] - 1] = j - 1;
    return assignment;
}

std::vector<int> match_topics(const Matrix& true_means, const Matrix& learnt_means) {
    if (!true_means.same_shape(learnt_means))
        throw std::invalid_argument("match_topics: dimension mismatch");
    const int k = true_means.rows;
    Matrix cost(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) cost(i, j) = kld(true_means.row(i), learnt_means.row(j));
    return hungarian(cost);
}

double average_kld(const Matrix& true_means, const Matrix& learnt_means,
                   const std::vector<int>& permutation) {
    if (static_cast<int>(permutation.size()) != true_means.rows)
        throw std::invalid_argument("average_kld: permutation size mismatch");
    double total = 0.0;
    for (int k = 0; k < true_means.rows; ++k)
        total += kld(true_means.row(k), learnt_means.row(permutation[k]));
    return total / true_means.rows;
}

std::vector<int> top_word_ids(std::span<const double> row, int n) {
    if (n < 0 || n > static_cast<int>(row.size()))
        throw std::invalid_argument("top_word_ids: n out of range");
    std::vector<int> ids(row.size());
    std::iota(ids.begin(), ids.end(), 0);
    std::stable_sort(ids.begin(), ids.end(), [&](int a, int b) { return row[a] > row[b]; });
    ids.resize(n);
    return ids;
}

double npmi_coherence(const Corpus& corpus, const std::vector<std::vector<int>>& topics,
                      int window, double epsilon) {
    if (window < 2) throw std::invalid_argument("npmi_coherence: window must be >= 2");
    if (topics.empty()) throw std::invalid_argument("npmi_coherence: no topics");
    int max_len = 0;
    for (const auto& doc : corpus.documents) max_len = std::max(max_len, doc.length());
    if (window > max_len)
        throw std::invalid_argument("npmi_coherence: window larger than every document");

    // Track only the words that appear in some top list.
    std::vector<int> word_to_tracked(corpus.vocab_size(), -1);
    std::vector<int> tracked;
    for (const auto& topic : topics) {
        if (topic.empty()) throw std::invalid_argument("npmi_coherence: empty top-word list");
        for (int w : topic) {
            if (w < 0 || w >= corpus.vocab_size())
                throw std::invalid_argument("npmi_coherence: word id out of range");
            if (word_to_tracked[w] == -1) {
                word_to_tracked[w] = static_cast<int>(tracked.size());
                tracked.push_back(w);
            }
        }
    }

    const int nt = static_cast<int>(tracked.size());
    std::vector<long long> occurrences(nt, 0);
    std::vector<long long> joint(static_cast<std::size_t>(nt) * nt, 0);
    long long total_windows = 0;

    std::vector<char> seen(nt, 0);
    std::vector<int> present;
    for (const auto& doc : corpus.documents) {
        const int len = doc.length();
        const int positions = len <= window ? 1 : len - window + 1;
        const int span = std::min(len, window);
        for (int start = 0; start < positions; ++start) {
            present.clear();
            for (int i = start; i < start + span; ++i) {
                const int t = word_to_tracked[doc.tokens[i]];
                if (t != -1 && !seen[t]) {
                    seen[t] = 1;
                    present.push_back(t);
                }
            }
            for (std::size_t a = 0; a < present.size(); ++a) {
                occurrences[present[a]] += 1;
                for (std::size_t b = a + 1; b < present.size(); ++b) {
                    const int lo = std::min(present[a], present[b]);
                    const int hi = std::max(present[a], present[b]);
                    joint[static_cast<std::size_t>(lo) * nt + hi] += 1;
                }
            }
            for (int t : present) seen[t] = 0;
        }
        total_windows += positions;
    }

    auto pairwise = [&](int w1, int w2) {
        const int t1 = word_to_tracked[w1];
        const int t2 = word_to_tracked[w2];
        const int lo = std::min(t1, t2), hi = std::max(t1, t2);
        const long long joint_count = joint[static_cast<std::size_t>(lo) * nt + hi];
        if (joint_count == total_windows) return 1.0;  // limit of the defining ratio
        const double p1 = std::max(static_cast<double>(occurrences[t1]) / total_windows, epsilon);
        const double p2 = std::max(static_cast<double>(occurrences[t2]) / total_windows, epsilon);
        const double pj = static_cast<double>(joint_count) / total_windows + epsilon;
        const double value = std::log(pj / (p1 * p2)) / -std::log(pj);
        return std::clamp(value, -1.0, 1.0);
    };

    double topic_total = 0.0;
    for (const auto& topic : topics) {
        double pair_total = 0.0;
        long long pairs = 0;
        for (std::size_t i = 0; i < topic.size(); ++i) {
            for (std::size_t j = i + 1; j < topic.size(); ++j) {
                pair_total += pairwise(topic[i], topic[j]);
                ++pairs;
            }
        }
        topic_total += pairs > 0 ? pair_total / pairs : 0.0;
    }
    return topic_total / topics.size();
}

EvalResult evaluate_kld(const PosteriorState& state, const Matrix& phi_true) {
    const Matrix learnt = topic_means(state);
    if (!learnt.same_shape(phi_true))
        throw std::invalid_argument(
            "evaluate_kld: model topics " + std::to_string(learnt.rows) + "x" +
            std::to_string(learnt.cols) + " do not match ground truth " +
            std::to_string(phi_true.rows) + "x" + std::to_string(phi_true.cols));

    EvalResult result;
    result.permutation = match_topics(phi_true, learnt);
    result.per_topic_kld.resize(phi_true.rows);
    for (int k = 0; k < phi_true.rows; ++k)
        result.per_topic_kld[k] = kld(phi_true.row(k), learnt.row(result.permutation[k]));
    result.avg_kld = average_kld(phi_true, learnt, result.permutation);

    result.algorithm = state.algorithm;
    result.num_documents = state.num_documents();
    result.topics = state.topics();
    result.seed = state.seed;
    result.epochs = state.epochs_run;
    result.runtime_ms = state.runtime_ms;
    return result;
}

std::string csv_row(const EvalResult& r) {
    char buf[512];
    std::string kld_field, coh_field;
    if (!r.per_topic_kld.empty() || r.avg_kld != 0.0) {
        std::snprintf(buf, sizeof buf, "%.6f", r.avg_kld);
        kld_field = buf;
    }
    if (r.coherence) {
        std::snprintf(buf, sizeof buf, "%.6f", *r.coherence);
        coh_field = buf;
    }
    std::snprintf(buf, sizeof buf, "%s,%s,%s,%d,%d,%llu,%d,%s,%s,%.3f", r.run_id.c_str(),
                  r.algorithm.c_str(), r.dataset.c_str(), r.num_documents, r.topics,
                  static_cast<unsigned long long>(r.seed), r.epochs, kld_field.c_str(),
                  coh_field.c_str(), r.runtime_ms);
    return buf;
}

}  // namespace albu
