#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Integer partition: weakly decreasing positive parts, no trailing zeros.
///
/// operator< is the graded canonical order used everywhere for indexing:
/// smaller size first; within one size, descending lexicographic on parts,
/// so (n) comes first and (1^n) last.
class Partition {
public:
    Partition() = default;
    /// Throws ArgumentError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Comma-separated parts ("3,1,1"); the empty string is the empty partition.
    static Partition parse(std::string_view text);
    /// Sorts and drops zeros; for building partitions from cycle lengths etc.
    static Partition from_unsorted(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    /// Part i (0-based), or 0 past the end.
    int part_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// m[i] = number of parts equal to i, for i in 0..largest part.
    std::vector<int> multiplicities() const;
    Partition conjugate() const;
    /// Union of parts (the product p_a * p_b in the power-sum basis).
    Partition merged_with(const Partition& other) const;
    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// True when a precedes b lexicographically on parts (plain ascending lex).
bool lex_less(const Partition& a, const Partition& b);

inline constexpr int kDefaultPartitionCap = 12;

/// All partitions of n in canonical order. Throws SizeLimitError above cap.
std::vector<Partition> partitions_of(int n, int cap = kDefaultPartitionCap);
/// Number of partitions of n via the same enumerator (for sizing).
std::size_t partition_count(int n);
/// Index of lambda inside partitions_of(|lambda|).
std::size_t partition_index(const Partition& lambda);

/// Centralizer order prod_i m_i! i^{m_i}.
Rational z_of(const Partition& mu);
/// Product of hook lengths over all cells.
Rational hook_product(const Partition& lambda);

/// Contents j - i of every cell (1-based rows i, columns j), row by row.
std::vector<int> contents(const Partition& lambda);
/// Sum of contents, computed by cell enumeration and by the closed form
/// (1/2) sum_i lambda_i (lambda_i - 2i + 1); throws ConsistencyError on mismatch.
long content_sum(const Partition& lambda);
long content_sum_closed_form(const Partition& lambda);

/// (a)_lambda = prod_i (a - i + 1)_{lambda_i}. With verify set, the cell
/// product prod_{(i,j)} (a + j - i) is also evaluated and must agree.
Rational pochhammer_partition(const Rational& a, const Partition& lambda, bool verify = false);
/// prod over cells of (a + j - i).
Rational pochhammer_cells(const Rational& a, const Partition& lambda);

} // namespace hurwitz
