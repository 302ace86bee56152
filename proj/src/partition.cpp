#include "hurwitz/partition.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>

#include "hurwitz/error.hpp"

namespace hurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw ArgumentError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw ArgumentError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) return Partition();
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(pos, end - pos);
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty()) throw ParseError("empty part in partition '" + std::string(text) + "'");
        int v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9')
                throw ParseError("bad part in partition '" + std::string(text) + "'");
            v = v * 10 + (c - '0');
            if (v > 1000) throw ParseError("part too large in '" + std::string(text) + "'");
        }
        parts.push_back(v);
        pos = end + 1;
    }
    try {
        return Partition(std::move(parts));
    } catch (const ArgumentError& e) {
        throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
    }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(parts_.empty() ? 1 : parts_.front() + 1, 0);
    for (int p : parts_) ++m[p];
    return m;
}

Partition Partition::conjugate() const {
    std::vector<int> c;
    if (!parts_.empty()) {
        c.resize(parts_.front(), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[j];
    }
    return Partition(std::move(c));
}

Partition Partition::merged_with(const Partition& other) const {
    std::vector<int> out;
    out.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(out), std::greater<>());
    return Partition(std::move(out));
}

std::string Partition::str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    // Descending lexicographic: the lexicographically larger one comes first.
    if (std::lexicographical_compare(b.parts_.begin(), b.parts_.end(),
                                     a.parts_.begin(), a.parts_.end()))
        return std::strong_ordering::less;
    if (a.parts_ == b.parts_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
}

bool lex_less(const Partition& a, const Partition& b) {
    auto pa = a.parts(), pb = b.parts();
    return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
}

namespace {

void enumerate(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        enumerate(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n, int cap) {
    if (n < 0) throw ArgumentError("partitions_of: n must be nonnegative");
    if (n > cap)
        throw SizeLimitError("partitions_of: n=" + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
    std::vector<Partition> out;
    std::vector<int> cur;
    enumerate(n, n, cur, out);
    return out;
}

namespace {

const std::vector<Partition>& cached_partitions(int n) {
    static std::mutex mu;
    static std::vector<std::unique_ptr<const std::vector<Partition>>> cache;
    if (n < 0 || n > 40) throw SizeLimitError("partition cache: n out of range");
    std::lock_guard lock(mu);
    if (static_cast<int>(cache.size()) <= n) cache.resize(n + 1);
    if (!cache[n]) cache[n] = std::make_unique<const std::vector<Partition>>(partitions_of(n, 40));
    return *cache[n];
}

} // namespace

std::size_t partition_count(int n) { return cached_partitions(n).size(); }

std::size_t partition_index(const Partition& lambda) {
    const auto& all = cached_partitions(lambda.size());
    auto it = std::lower_bound(all.begin(), all.end(), lambda);
    if (it == all.end() || *it != lambda) throw ArgumentError("partition_index: not found");
    return static_cast<std::size_t>(it - all.begin());
}

Rational z_of(const Partition& mu) {
    auto m = mu.multiplicities();
    mpz_class z = 1;
    for (std::size_t i = 1; i < m.size(); ++i) {
        for (int k = 2; k <= m[i]; ++k) z *= k;
        for (int k = 0; k < m[i]; ++k) z *= static_cast<unsigned long>(i);
    }
    return Rational(z);
}

Rational hook_product(const Partition& lambda) {
    auto conj = lambda.conjugate();
    mpz_class h = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1;
            int leg = conj[j] - i - 1;
            h *= arm + leg + 1;
        }
    return Rational(h);
}

std::vector<int> contents(const Partition& lambda) {
    std::vector<int> c;
    c.reserve(lambda.size());
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[i - 1]; ++j) c.push_back(j - i);
    return c;
}

long content_sum_closed_form(const Partition& lambda) {
    long twice = 0;
    for (int i = 1; i <= lambda.length(); ++i) {
        long li = lambda[i - 1];
        twice += li * (li - 2L * i + 1);
    }
    return twice / 2;
}

long content_sum(const Partition& lambda) {
    long direct = 0;
    for (int c : contents(lambda)) direct += c;
    if (direct != content_sum_closed_form(lambda))
        throw ConsistencyError("content sum formulas disagree for (" + lambda.str() + ")");
    return direct;
}

Rational pochhammer_cells(const Rational& a, const Partition& lambda) {
    Rational r(1);
    for (int c : contents(lambda)) r *= a + Rational(c);
    return r;
}

Rational pochhammer_partition(const Rational& a, const Partition& lambda, bool verify) {
    Rational r(1);
    for (int i = 1; i <= lambda.length(); ++i) r *= rising(a - Rational(i - 1), lambda[i - 1]);
    if (verify && r != pochhammer_cells(a, lambda))
        throw ConsistencyError("Pochhammer row and cell products disagree for (" + lambda.str() + ")");
    return r;
}

} // namespace hurwitz
