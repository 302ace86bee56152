#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"

namespace hurwitz {

/// Bijection of {1..n}, n <= kMaxDegree. Stored 0-based.
///
/// Composition applies the right factor first: (g * h)(x) = g(h(x)).
class Permutation {
public:
    static constexpr int kMaxDegree = 8;

    /// Identity of degree n.
    explicit Permutation(int n = 0);
    /// From 1-based images; throws ArgumentError unless a bijection.
    static Permutation from_images(std::span<const int> images);
    /// The transposition (a b), 1-based.
    static Permutation transposition(int n, int a, int b);
    /// Cycles are the parts of mu laid out consecutively on 1..n, largest first.
    static Permutation canonical_representative(const Partition& mu);
    /// Parses "2,3,1" (1-based images).
    static Permutation parse(std::string_view text);

    int degree() const { return n_; }
    /// 0-based image of a 0-based point.
    int operator()(int x) const { return img_[x]; }
    std::vector<int> images() const; ///< 1-based

    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    bool is_identity() const;

    Partition cycle_type() const;
    /// 0-based cycles, each starting at its smallest point.
    std::vector<std::vector<int>> cycles() const;

    /// Injective packing (4 bits per image) for hashing.
    std::uint64_t code() const;
    std::string str() const; ///< 1-based images, comma-separated

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.n_ == b.n_ && a.img_ == b.img_;
    }
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.img_ <=> b.img_;
    }

private:
    int n_;
    std::array<std::uint8_t, kMaxDegree> img_{};
};

/// All n! permutations in lexicographic order of images.
std::vector<Permutation> all_permutations(int n);

} // namespace hurwitz
