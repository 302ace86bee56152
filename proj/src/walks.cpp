#include "hurwitz/walks.hpp"

#include <cstdlib>
#include <unordered_map>

#include "hurwitz/error.hpp"

namespace hurwitz {

WalkConstraint WalkConstraint::from_segments(std::vector<WalkSegment> segments) {
    WalkConstraint c;
    for (const auto& s : segments) {
        if (s.length < 0) throw ArgumentError("walk segment length must be nonnegative");
        if (s.length > 0) c.segments_.push_back(s);
    }
    return c;
}

WalkConstraint WalkConstraint::plain(int k) { return from_segments({{SegmentKind::Plain, k}}); }
WalkConstraint WalkConstraint::weakly_monotone(int k) { return from_segments({{SegmentKind::WeaklyMonotone, k}}); }
WalkConstraint WalkConstraint::strictly_monotone(int k) { return from_segments({{SegmentKind::StrictlyMonotone, k}}); }

WalkConstraint WalkConstraint::mixed(int p, int k) {
    if (p < 0 || p > k) throw ArgumentError("mixed walk: need 0 <= p <= k");
    return from_segments({{SegmentKind::WeaklyMonotone, p}, {SegmentKind::Plain, k - p}});
}

WalkConstraint WalkConstraint::multi_monotone(const std::vector<int>& lengths) {
    std::vector<WalkSegment> segs;
    for (int d : lengths) segs.push_back({SegmentKind::StrictlyMonotone, d});
    return from_segments(std::move(segs));
}

WalkConstraint WalkConstraint::weak_then_strict(int k, int l) {
    return from_segments({{SegmentKind::WeaklyMonotone, k}, {SegmentKind::StrictlyMonotone, l}});
}

int WalkConstraint::steps() const {
    int k = 0;
    for (const auto& s : segments_) k += s.length;
    return k;
}

int walk_size_cap() {
    if (const char* env = std::getenv("HURWITZ_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) return static_cast<int>(std::min<long>(v, Permutation::kMaxDegree));
    }
    return kDefaultWalkCap;
}

namespace {

struct StepInfo {
    int segment;
    SegmentKind kind;
};

struct Key {
    std::uint64_t perm;
    std::uint64_t rest;
    bool operator==(const Key&) const = default;
};

struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
        return std::hash<std::uint64_t>{}(k.perm * 0x9E3779B97F4A7C15ULL ^ k.rest);
    }
};

using Counts = std::vector<std::uint64_t>;

// Walks are generated backwards from the end vertex: g = tau_1 ... tau_k h,
// so step k is chosen first. Transpositions are involutions, and the group
// generated by {g, tau} equals the one generated by {h, tau}.
class Engine {
public:
    Engine(int n, const WalkConstraint& c, bool transitive) : n_(n), transitive_(transitive) {
        int seg = 0;
        for (const auto& s : c.segments()) {
            for (int i = 0; i < s.length; ++i) steps_.push_back({seg, s.kind});
            ++seg;
        }
        for (int b = 2; b <= n; ++b)
            for (int a = 1; a < b; ++a) trans_.push_back({a, b, Permutation::transposition(n, a, b)});
        auto all = partitions_of(n);
        types_ = all;
    }

    Counts run(const Permutation& h) {
        std::array<std::uint8_t, Permutation::kMaxDegree> blocks{};
        for (int i = 0; i < n_; ++i) blocks[i] = static_cast<std::uint8_t>(i);
        if (transitive_)
            for (const auto& cyc : h.cycles())
                for (int x : cyc) relabel(blocks, blocks[x], blocks[cyc.front()]);
        return solve(h, static_cast<int>(steps_.size()) - 1, kNoBound, blocks);
    }

private:
    static constexpr int kNoBound = 15;

    struct Trans {
        int a, b;
        Permutation perm;
    };

    static void relabel(std::array<std::uint8_t, Permutation::kMaxDegree>& blocks, std::uint8_t from,
                        std::uint8_t to) {
        if (from == to) return;
        std::uint8_t lo = std::min(from, to), hi = std::max(from, to);
        for (auto& v : blocks)
            if (v == hi) v = lo;
    }

    std::uint64_t encode_blocks(const std::array<std::uint8_t, Permutation::kMaxDegree>& blocks) const {
        std::uint64_t code = 0;
        for (int i = 0; i < n_; ++i) code |= static_cast<std::uint64_t>(blocks[i]) << (3 * i);
        return code;
    }

    Counts solve(const Permutation& cur, int i, int bound,
                 const std::array<std::uint8_t, Permutation::kMaxDegree>& blocks) {
        if (i < 0) {
            Counts out(types_.size(), 0);
            bool connected = true;
            if (transitive_)
                for (int x = 0; x < n_; ++x) connected = connected && blocks[x] == 0;
            if (connected) out[partition_index(cur.cycle_type())] = 1;
            return out;
        }
        Key key{cur.code(), static_cast<std::uint64_t>(i) | (static_cast<std::uint64_t>(bound) << 8) |
                                (transitive_ ? encode_blocks(blocks) << 16 : 0)};
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        Counts total(types_.size(), 0);
        const StepInfo& step = steps_[i];
        for (const auto& t : trans_) {
            if (bound != kNoBound) {
                if (step.kind == SegmentKind::WeaklyMonotone && t.b > bound) continue;
                if (step.kind == SegmentKind::StrictlyMonotone && t.b >= bound) continue;
            }
            int next_bound = kNoBound;
            if (i > 0 && steps_[i - 1].segment == step.segment && step.kind != SegmentKind::Plain)
                next_bound = t.b;
            auto nb = blocks;
            if (transitive_) relabel(nb, nb[t.a - 1], nb[t.b - 1]);
            Counts sub = solve(t.perm * cur, i - 1, next_bound, nb);
            for (std::size_t j = 0; j < total.size(); ++j)
                if (__builtin_add_overflow(total[j], sub[j], &total[j]))
                    throw SizeLimitError("walk count overflowed 64 bits");
        }
        memo_.emplace(key, total);
        return total;
    }

    int n_;
    bool transitive_;
    std::vector<StepInfo> steps_;
    std::vector<Trans> trans_;
    std::vector<Partition> types_;
    std::unordered_map<Key, Counts, KeyHash> memo_;
};

void check_size(int n) {
    if (n < 1) throw ArgumentError("walks need n >= 1");
    if (n > walk_size_cap())
        throw SizeLimitError("walk enumeration: n=" + std::to_string(n) + " exceeds cap " +
                             std::to_string(walk_size_cap()));
}

} // namespace

std::vector<std::uint64_t> walk_counts_by_source(const Permutation& h, const WalkConstraint& c, bool transitive) {
    check_size(h.degree());
    Engine engine(h.degree(), c, transitive);
    return engine.run(h);
}

Rational count_walks_to(const WalkQuery& q, const Permutation& h) {
    if (q.from_type.size() != q.n || q.to_type.size() != q.n)
        throw ArgumentError("walk query: types must be partitions of n=" + std::to_string(q.n));
    if (h.degree() != q.n || h.cycle_type() != q.to_type)
        throw ArgumentError("walk query: end permutation is not of type (" + q.to_type.str() + ")");
    auto counts = walk_counts_by_source(h, q.constraint, q.transitive);
    return Rational(static_cast<unsigned long>(counts[partition_index(q.from_type)]));
}

Rational count_walks(const WalkQuery& q) {
    if (q.from_type.size() != q.n || q.to_type.size() != q.n)
        throw ArgumentError("walk query: types must be partitions of n=" + std::to_string(q.n));
    check_size(q.n);
    return count_walks_to(q, Permutation::canonical_representative(q.to_type));
}

std::vector<std::vector<std::uint64_t>> walk_count_matrix(int n, const WalkConstraint& c, bool transitive) {
    check_size(n);
    auto types = partitions_of(n);
    std::vector<std::vector<std::uint64_t>> d(types.size(), std::vector<std::uint64_t>(types.size(), 0));
    for (std::size_t mu = 0; mu < types.size(); ++mu) {
        Engine engine(n, c, transitive);
        auto by_source = engine.run(Permutation::canonical_representative(types[mu]));
        for (std::size_t lambda = 0; lambda < types.size(); ++lambda) d[lambda][mu] = by_source[lambda];
    }
    return d;
}

} // namespace hurwitz
