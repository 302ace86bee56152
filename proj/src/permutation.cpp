#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/error.hpp"

namespace hurwitz {

Permutation::Permutation(int n) : n_(n) {
    if (n < 0 || n > kMaxDegree)
        throw SizeLimitError("permutation degree " + std::to_string(n) + " outside 0.." +
                             std::to_string(kMaxDegree));
    for (int i = 0; i < n; ++i) img_[i] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::span<const int> images) {
    Permutation p(static_cast<int>(images.size()));
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < p.n_; ++i) {
        int v = images[i] - 1;
        if (v < 0 || v >= p.n_ || seen[v]) throw ArgumentError("images do not form a permutation");
        seen[v] = true;
        p.img_[i] = static_cast<std::uint8_t>(v);
    }
    return p;
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw ArgumentError("bad transposition (" + std::to_string(a) + " " + std::to_string(b) + ")");
    Permutation p(n);
    std::swap(p.img_[a - 1], p.img_[b - 1]);
    return p;
}

Permutation Permutation::canonical_representative(const Partition& mu) {
    Permutation p(mu.size());
    int start = 0;
    for (int len : mu.parts()) {
        for (int k = 0; k < len; ++k)
            p.img_[start + k] = static_cast<std::uint8_t>(start + (k + 1) % len);
        start += len;
    }
    return p;
}

Permutation Permutation::parse(std::string_view text) {
    std::vector<int> images;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        auto tok = text.substr(pos, end - pos);
        int v = 0;
        if (tok.empty()) throw ParseError("empty image in permutation");
        for (char c : tok) {
            if (c < '0' || c > '9') throw ParseError("bad permutation '" + std::string(text) + "'");
            v = v * 10 + (c - '0');
        }
        images.push_back(v);
        pos = end + 1;
    }
    return from_images(images);
}

std::vector<int> Permutation::images() const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = img_[i] + 1;
    return out;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (n_ != rhs.n_) throw ArgumentError("permutation degree mismatch");
    Permutation out(n_);
    for (int i = 0; i < n_; ++i) out.img_[i] = img_[rhs.img_[i]];
    return out;
}

Permutation Permutation::inverse() const {
    Permutation out(n_);
    for (int i = 0; i < n_; ++i) out.img_[img_[i]] = static_cast<std::uint8_t>(i);
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n_; ++i)
        if (img_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < n_; ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        for (int x = i; !seen[x]; x = img_[x]) {
            seen[x] = true;
            cyc.push_back(x);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lens;
    std::array<bool, kMaxDegree> seen{};
    for (int i = 0; i < n_; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int x = i; !seen[x]; x = img_[x]) {
            seen[x] = true;
            ++len;
        }
        lens.push_back(len);
    }
    return Partition::from_unsorted(std::move(lens));
}

std::uint64_t Permutation::code() const {
    std::uint64_t c = static_cast<std::uint64_t>(n_);
    for (int i = 0; i < n_; ++i) c |= static_cast<std::uint64_t>(img_[i]) << (4 * (i + 1));
    return c;
}

std::string Permutation::str() const {
    std::string s;
    for (int i = 0; i < n_; ++i) {
        if (i) s += ',';
        s += std::to_string(img_[i] + 1);
    }
    return s;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

} // namespace hurwitz
