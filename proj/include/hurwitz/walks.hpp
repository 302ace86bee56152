#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

enum class SegmentKind { Plain, WeaklyMonotone, StrictlyMonotone };

struct WalkSegment {
    SegmentKind kind;
    int length;
    friend bool operator==(const WalkSegment&, const WalkSegment&) = default;
};

/// Constraint on the b-sequence of a walk (a_1 b_1), ..., (a_k b_k), a_t < b_t,
/// in written step order. The walk is a run of consecutive segments; monotone
/// segments constrain b only inside themselves.
class WalkConstraint {
public:
    static WalkConstraint plain(int k);
    static WalkConstraint weakly_monotone(int k);
    static WalkConstraint strictly_monotone(int k);
    /// First p steps weakly monotone, remaining k - p unrestricted.
    static WalkConstraint mixed(int p, int k);
    /// Consecutive strictly monotone segments of the given lengths.
    static WalkConstraint multi_monotone(const std::vector<int>& lengths);
    /// k weakly monotone steps followed by l strictly monotone ones.
    static WalkConstraint weak_then_strict(int k, int l);
    static WalkConstraint from_segments(std::vector<WalkSegment> segments);

    const std::vector<WalkSegment>& segments() const { return segments_; }
    int steps() const;

private:
    std::vector<WalkSegment> segments_;
};

struct WalkQuery {
    int n = 0;
    Partition from_type;
    Partition to_type;
    WalkConstraint constraint = WalkConstraint::plain(0);
    bool transitive = false;
};

inline constexpr int kDefaultWalkCap = 7;

/// Walk size cap: 7 unless HURWITZ_MAX_N raises or lowers it (never above 8).
int walk_size_cap();

/// D(q) = #{(g, tau_1..tau_k) : cyc(g) = from_type, tau_k ... tau_1 g = h0},
/// h0 the canonical representative of to_type. With transitive set, the
/// group generated by g and the tau's must act transitively on {1..n}.
Rational count_walks(const WalkQuery& q);
/// Same count with an explicit end permutation h (of type q.to_type).
Rational count_walks_to(const WalkQuery& q, const Permutation& h);

/// Counts ending at h, one entry per source cycle type, indexed like partitions_of(n).
std::vector<std::uint64_t> walk_counts_by_source(const Permutation& h, const WalkConstraint& c, bool transitive);
/// D[lambda][mu] for all pairs (canonical order), from one engine run per mu.
std::vector<std::vector<std::uint64_t>> walk_count_matrix(int n, const WalkConstraint& c, bool transitive);

} // namespace hurwitz
