#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzv {

// A finite sequence of positive integers, possibly empty.  Values are
// immutable after construction.
class Index {
public:
    // Components above this bound are rejected at construction; truncation
    // orders cap the weights that are actually useful.
    static constexpr int kMaxComponent = 1'000'000;

    Index() = default;

    explicit Index(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_) {
            if (p < 1) throw std::invalid_argument("index component must be positive");
            if (p > kMaxComponent) throw std::invalid_argument("index component out of range");
        }
    }

    Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

    // Accepts "k1,k2,...,kr" with optional spaces; empty text is the empty index.
    static Index parse(std::string_view text) {
        std::vector<int> parts;
        size_t pos = 0;
        bool any_token = false;
        while (pos <= text.size()) {
            size_t comma = text.find(',', pos);
            std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
            size_t b = token.find_first_not_of(" \t");
            if (b == std::string_view::npos) {
                token = {};
            } else {
                size_t e = token.find_last_not_of(" \t");
                token = token.substr(b, e - b + 1);
            }
            if (token.empty()) {
                if (any_token || comma != std::string_view::npos)
                    throw std::invalid_argument("empty index component");
            } else {
                any_token = true;
                long long value = 0;
                for (char c : token) {
                    if (c < '0' || c > '9') throw std::invalid_argument("non-numeric index component");
                    value = value * 10 + (c - '0');
                    if (value > kMaxComponent) throw std::invalid_argument("index component out of range");
                }
                if (value < 1) throw std::invalid_argument("nonpositive index component");
                parts.push_back(static_cast<int>(value));
            }
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
        }
        return Index(std::move(parts));
    }

    static Index ones(int n) {
        if (n < 0) throw std::invalid_argument("ones(n) needs n >= 0");
        return Index(std::vector<int>(static_cast<size_t>(n), 1));
    }

    const std::vector<int>& parts() const { return parts_; }
    int depth() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int weight() const {
        int w = 0;
        for (int p : parts_) w += p;
        return w;
    }

    // Empty, or last component at least 2.
    bool admissible() const { return parts_.empty() || parts_.back() >= 2; }

    int last() const {
        if (parts_.empty()) throw std::out_of_range("last() of empty index");
        return parts_.back();
    }

    // Components i+1..j (1-based in the usual notation), so slice(0, depth()) is
    // the whole index and slice(i, i) is empty.
    Index slice(int i, int j) const {
        if (i < 0 || i > j || j > depth()) throw std::out_of_range("index slice bounds");
        return Index(std::vector<int>(parts_.begin() + i, parts_.begin() + j));
    }

    Index prefix(int i) const { return slice(0, i); }
    Index suffix(int i) const { return slice(i, depth()); }

    Index reversed() const {
        std::vector<int> p(parts_.rbegin(), parts_.rend());
        return Index(std::move(p));
    }

    Index concat(const Index& other) const {
        std::vector<int> p = parts_;
        p.insert(p.end(), other.parts_.begin(), other.parts_.end());
        return Index(std::move(p));
    }

    Index append(int a) const {
        std::vector<int> p = parts_;
        p.push_back(a);
        return Index(std::move(p));
    }

    std::string str() const {
        std::string s;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    auto operator<=>(const Index&) const = default;

private:
    std::vector<int> parts_;
};

inline Index concat3(const Index& k, int a, const Index& l) {
    return k.append(a).concat(l);
}

// All indices of weight exactly w, in lexicographic order of the part
// sequences; {empty} for w = 0 and 2^(w-1) members for w >= 1.
inline std::vector<Index> enumerate_indices(int w) {
    if (w < 0) throw std::invalid_argument("enumerate_indices needs w >= 0");
    std::vector<Index> result;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            result.emplace_back(current);
            return;
        }
        for (int p = 1; p <= remaining; ++p) {
            current.push_back(p);
            self(self, remaining - p);
            current.pop_back();
        }
    };
    rec(rec, w);
    return result;
}

// All (k, l, a) with |k| + a + |l| = w and a >= corner_min, in a fixed order:
// ascending corner, then ascending |k|, then lexicographic k, then l.
struct IndexTriple {
    Index k;
    Index l;
    int corner;
};

inline std::vector<IndexTriple> enumerate_triples(int w, int corner_min = 2) {
    std::vector<IndexTriple> result;
    for (int a = corner_min; a <= w; ++a) {
        for (int wk = 0; wk + a <= w; ++wk) {
            for (const Index& k : enumerate_indices(wk))
                for (const Index& l : enumerate_indices(w - a - wk))
                    result.push_back({k, l, a});
        }
    }
    return result;
}

}  // namespace mzv
