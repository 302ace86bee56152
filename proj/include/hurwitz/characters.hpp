#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

inline constexpr int kDefaultCharacterCap = 10;

/// chi_lambda(mu) by recursive border-strip removal (Murnaghan-Nakayama).
/// Strips are removed for the largest remaining part of mu first.
std::int64_t character(const Partition& lambda, const Partition& mu);

/// Irreducible character table of S_n. Rows are irreps lambda and columns
/// classes mu, both in canonical partition order.
class CharacterTable {
public:
    explicit CharacterTable(int n);

    int n() const { return n_; }
    const std::vector<Partition>& order() const { return order_; }
    std::size_t dim() const { return order_.size(); }

    std::int64_t operator()(std::size_t lambda, std::size_t mu) const { return chi_[lambda * dim() + mu]; }
    std::int64_t at(const Partition& lambda, const Partition& mu) const;
    std::size_t index(const Partition& p) const;

    /// Cached centralizer orders Z_mu and hook products h_lambda, by index.
    const Rational& z(std::size_t mu) const { return z_[mu]; }
    const Rational& hook(std::size_t lambda) const { return hook_[lambda]; }

private:
    int n_;
    std::vector<Partition> order_;
    std::vector<std::int64_t> chi_;
    std::vector<Rational> z_;
    std::vector<Rational> hook_;
};

/// Shared, immutable table for S_n. Computed once per n under a lock; throws
/// SizeLimitError when n exceeds cap.
std::shared_ptr<const CharacterTable> character_table(int n, int cap = kDefaultCharacterCap);

} // namespace hurwitz
