#include "fsem/multi_index.hpp"

#include "fsem/number.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fsem {

namespace {

void require_same_dim(const MultiIndex& a, const MultiIndex& b, const char* where)
{
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch (" + std::to_string(a.dim()) +
                                    " vs " + std::to_string(b.dim()) + ")");
    }
}

}  // namespace

unsigned MultiIndex::order() const
{
    return std::accumulate(e_.begin(), e_.end(), 0U);
}

std::string MultiIndex::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (i > 0) {
            s += ",";
        }
        s += std::to_string(e_[i]);
    }
    return s + ")";
}

bool mi_leq(const MultiIndex& alpha, const MultiIndex& beta)
{
    require_same_dim(alpha, beta, "mi_leq");
    for (std::size_t i = 0; i < alpha.dim(); ++i) {
        if (alpha[i] > beta[i]) {
            return false;
        }
    }
    return true;
}

MultiIndex mi_join(const MultiIndex& alpha, const MultiIndex& beta)
{
    require_same_dim(alpha, beta, "mi_join");
    MultiIndex r(alpha.dim());
    for (std::size_t i = 0; i < alpha.dim(); ++i) {
        r[i] = std::max(alpha[i], beta[i]);
    }
    return r;
}

MultiIndex mi_meet(const MultiIndex& alpha, const MultiIndex& beta)
{
    require_same_dim(alpha, beta, "mi_meet");
    MultiIndex r(alpha.dim());
    for (std::size_t i = 0; i < alpha.dim(); ++i) {
        r[i] = std::min(alpha[i], beta[i]);
    }
    return r;
}

MultiIndex mi_add(const MultiIndex& alpha, const MultiIndex& beta)
{
    require_same_dim(alpha, beta, "mi_add");
    MultiIndex r(alpha.dim());
    for (std::size_t i = 0; i < alpha.dim(); ++i) {
        r[i] = alpha[i] + beta[i];
    }
    return r;
}

MultiIndex mi_sub(const MultiIndex& alpha, const MultiIndex& beta)
{
    if (!mi_leq(beta, alpha)) {
        throw std::invalid_argument("mi_sub: subtrahend " + beta.to_string() + " exceeds " + alpha.to_string());
    }
    MultiIndex r(alpha.dim());
    for (std::size_t i = 0; i < alpha.dim(); ++i) {
        r[i] = alpha[i] - beta[i];
    }
    return r;
}

mpz_class mi_binomial(const MultiIndex& beta, const MultiIndex& k)
{
    if (!mi_leq(k, beta)) {
        throw std::invalid_argument("mi_binomial: " + k.to_string() + " is not below " + beta.to_string());
    }
    mpz_class r = 1;
    for (std::size_t i = 0; i < beta.dim(); ++i) {
        r *= binomial(beta[i], k[i]);
    }
    return r;
}

mpz_class mi_falling(const MultiIndex& lambda, const MultiIndex& d)
{
    require_same_dim(lambda, d, "mi_falling");
    mpz_class r = 1;
    for (std::size_t i = 0; i < lambda.dim(); ++i) {
        if (d[i] > lambda[i]) {
            return 0;
        }
        for (unsigned j = 0; j < d[i]; ++j) {
            r *= lambda[i] - j;
        }
    }
    return r;
}

std::vector<MultiIndex> mi_below(const MultiIndex& beta)
{
    std::vector<MultiIndex> out;
    MultiIndex k(beta.dim());
    if (beta.dim() == 0) {
        out.push_back(k);
        return out;
    }
    while (true) {
        out.push_back(k);
        // Odometer increment, last coordinate fastest.
        std::size_t i = beta.dim();
        while (i > 0) {
            --i;
            if (k[i] < beta[i]) {
                ++k[i];
                break;
            }
            k[i] = 0;
            if (i == 0) {
                return out;
            }
        }
    }
}

std::vector<MultiIndex> mi_all_up_to(std::size_t n, unsigned max_order)
{
    MultiIndex cap(std::vector<unsigned>(n, max_order));
    std::vector<MultiIndex> all;
    for (auto& k : mi_below(cap)) {
        if (k.order() <= max_order) {
            all.push_back(std::move(k));
        }
    }
    std::stable_sort(all.begin(), all.end(), [](const MultiIndex& a, const MultiIndex& b) {
        if (a.order() != b.order()) {
            return a.order() < b.order();
        }
        return a < b;
    });
    return all;
}

MultiIndex mi_unit(std::size_t n, std::size_t i)
{
    MultiIndex r(n);
    r[i] = 1;
    return r;
}

}  // namespace fsem
