#include "hurwitz/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "hurwitz/error.hpp"

namespace hurwitz {

namespace {

using Memo = std::map<std::pair<Partition, Partition>, std::int64_t>;

std::vector<int> beta_set(const Partition& lambda) {
    int l = lambda.length();
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<>());
    int l = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < l; ++i) {
        int p = beta[i] - (l - 1 - i);
        if (p > 0) parts.push_back(p);
    }
    return Partition(std::move(parts));
}

// mu_rest holds the parts of mu not yet consumed, largest first.
std::int64_t mn(const Partition& lambda, const Partition& mu_rest, Memo& memo) {
    if (mu_rest.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, mu_rest);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int r = mu_rest[0];
    std::vector<int> tail(mu_rest.parts().begin() + 1, mu_rest.parts().end());
    Partition next_mu(std::move(tail));

    auto beta = beta_set(lambda);
    std::int64_t total = 0;
    for (std::size_t k = 0; k < beta.size(); ++k) {
        int from = beta[k], to = beta[k] - r;
        if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > to && b < from) ++between;
        auto moved = beta;
        moved[k] = to;
        std::int64_t sub = mn(from_beta(std::move(moved)), next_mu, memo);
        total += (between % 2 ? -sub : sub);
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

std::int64_t character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw ArgumentError("character: |lambda| != |mu| (" + lambda.str() + " vs " + mu.str() + ")");
    Memo memo;
    return mn(lambda, mu, memo);
}

CharacterTable::CharacterTable(int n) : n_(n), order_(partitions_of(n)) {
    std::size_t d = order_.size();
    chi_.resize(d * d);
    Memo memo;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) chi_[i * d + j] = mn(order_[i], order_[j], memo);
    for (const auto& p : order_) {
        z_.push_back(z_of(p));
        hook_.push_back(hook_product(p));
    }
}

std::size_t CharacterTable::index(const Partition& p) const {
    auto it = std::lower_bound(order_.begin(), order_.end(), p);
    if (it == order_.end() || *it != p)
        throw ArgumentError("partition (" + p.str() + ") is not a partition of " + std::to_string(n_));
    return static_cast<std::size_t>(it - order_.begin());
}

std::int64_t CharacterTable::at(const Partition& lambda, const Partition& mu) const {
    return (*this)(index(lambda), index(mu));
}

std::shared_ptr<const CharacterTable> character_table(int n, int cap) {
    if (n < 0) throw ArgumentError("character_table: negative n");
    if (n > cap)
        throw SizeLimitError("character_table: n=" + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const CharacterTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_shared<const CharacterTable>(n);
    return slot;
}

} // namespace hurwitz
