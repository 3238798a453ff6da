#include "albu/dirichlet.hpp"

#include <cmath>
#include <stdexcept>

namespace albu {

std::vector<double> mean(std::span<const double> params) {
    double total = 0.0;
    for (double v : params) total += v;
    std::vector<double> out(params.begin(), params.end());
    for (double& v : out) v /= total;
    return out;
}

double kld(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size())
        throw std::invalid_argument("kld: dimension mismatch (" + std::to_string(p.size()) +
                                    " vs " + std::to_string(q.size()) + ")");
    double sum = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) continue;
        const double qi = q[i] < kKldFloor ? kKldFloor : q[i];
        sum += p[i] * std::log(p[i] / qi);
    }
    return sum;
}

std::vector<double> add_counts(std::span<const double> params,
                               std::span<const double> increment) {
    if (params.size() != increment.size())
        throw std::invalid_argument("add_counts: dimension mismatch");
    std::vector<double> out(params.begin(), params.end());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += increment[i];
    return out;
}

void normalize_in_place(std::span<double> v) {
    double total = 0.0;
    for (double x : v) total += x;
    for (double& x : v) x /= total;
}

}  // namespace albu
