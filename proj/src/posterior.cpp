#include "albu/posterior.hpp"

namespace albu {

namespace {

Matrix row_normalized(const Matrix& params) {
    Matrix out(params.rows, params.cols);
    for (int i = 0; i < params.rows; ++i) {
        double total = 0.0;
        for (int j = 0; j < params.cols; ++j) total += params(i, j);
        for (int j = 0; j < params.cols; ++j) out(i, j) = params(i, j) / total;
    }
    return out;
}

}  // namespace

Matrix topic_means(const PosteriorState& state) { return row_normalized(state.beta_post); }

Matrix doc_means(const PosteriorState& state) { return row_normalized(state.alpha_post); }

}  // namespace albu
