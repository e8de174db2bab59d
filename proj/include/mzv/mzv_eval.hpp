#pragma once

#include "mzv/index.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace mzv {

using Real = long double;

struct MZVResult {
    Real value = 0;
    Real error_bound = 0;
};

namespace detail {

// Word in the letters {0, 1} encoding the iterated-integral representation:
// k = (k_1,...,k_r) becomes 1 0^(k_1-1) 1 0^(k_2-1) ... 1 0^(k_r-1).
inline std::vector<int> integral_word(const Index& k) {
    std::vector<int> w;
    for (int part : k.parts()) {
        w.push_back(1);
        for (int i = 1; i < part; ++i) w.push_back(0);
    }
    return w;
}

// Exponent blocks of a word that starts with the letter 1.
inline std::vector<int> word_exponents(const std::vector<int>& word) {
    std::vector<int> exps;
    for (int letter : word) {
        if (letter == 1)
            exps.push_back(1);
        else
            ++exps.back();
    }
    return exps;
}

// Partial sum of the multiple polylogarithm
//   sum_{m_1 < ... < m_s <= M} z^(m_s) / (m_1^(a_1) ... m_s^(a_s))
// at z = 1/2.  The truncation tail is below 2^(-M) times a slowly growing
// factor; with M around 128 it is negligible at long double precision.
inline Real polylog_half(const std::vector<int>& exps, int M) {
    if (exps.empty()) return 1.0L;
    size_t s = exps.size();
    // cum[m] = sum over chains m_1 < ... < m_level <= m of the inner factors;
    // the all-ones start is the empty chain.
    std::vector<Real> cum(static_cast<size_t>(M) + 1, 1.0L);
    for (size_t level = 0; level + 1 < s; ++level) {
        std::vector<Real> next(static_cast<size_t>(M) + 1, 0.0L);
        Real running = 0.0L;
        for (int m = 1; m <= M; ++m) {
            running += cum[m - 1] * std::pow(static_cast<Real>(m), -static_cast<Real>(exps[level]));
            next[m] = running;
        }
        cum = std::move(next);
        cum[0] = 0.0L;
    }
    Real result = 0.0L;
    Real z_power = 1.0L;
    for (int m = 1; m <= M; ++m) {
        z_power *= 0.5L;
        Real inner = (s == 1) ? 1.0L : cum[m - 1];
        result += inner * std::pow(static_cast<Real>(m), -static_cast<Real>(exps[s - 1])) * z_power;
    }
    return result;
}

// Closed form of the integral bound
//   sum_{m > M} (1 + ln m)^p m^(-a)  <=  int_M^inf (1 + ln t)^p t^(-a) dt
//     = M^(1-a) sum_{j=0}^{p} p!/(p-j)! (1 + ln M)^(p-j) / (a-1)^(j+1),
// valid for a >= 2 and M large enough that the integrand decreases (M >= 30
// covers every depth in scope).
inline Real log_power_tail(int p, int a, int M) {
    Real q = static_cast<Real>(a - 1);
    Real L = std::log(static_cast<Real>(M));
    Real sum = 0.0L;
    Real falling = 1.0L;
    Real qpow = q;
    for (int j = 0; j <= p; ++j) {
        sum += falling * std::pow(1.0L + L, static_cast<Real>(p - j)) / qpow;
        falling *= static_cast<Real>(p - j);
        qpow *= q;
    }
    return std::pow(static_cast<Real>(M), -q) * sum;
}

}  // namespace detail

// Direct nested summation over m_r <= M together with a rigorous tail bound.
// The chains below the outer variable are bounded by H_(m-1)^(r-1)/(r-1)!,
// so the remainder is at most the log_power_tail integral bound over (r-1)!
// (a >= 2 is the last exponent).
inline MZVResult brute_force_mzv(const Index& k, int M) {
    if (!k.admissible()) throw std::invalid_argument("brute_force_mzv needs an admissible index");
    if (M < 30) throw std::invalid_argument("brute_force_mzv needs M >= 30");
    if (k.empty()) return {1.0L, 0.0L};

    const auto& parts = k.parts();
    size_t r = parts.size();
    std::vector<Real> cum(static_cast<size_t>(M) + 1, 1.0L);
    for (size_t level = 0; level + 1 < r; ++level) {
        std::vector<Real> next(static_cast<size_t>(M) + 1, 0.0L);
        Real running = 0.0L;
        for (int m = 1; m <= M; ++m) {
            running += cum[m - 1] * std::pow(static_cast<Real>(m), -static_cast<Real>(parts[level]));
            next[m] = running;
        }
        cum = std::move(next);
        cum[0] = 0.0L;
    }
    Real value = 0.0L;
    for (int m = 1; m <= M; ++m) {
        Real inner = (r == 1) ? 1.0L : cum[m - 1];
        value += inner * std::pow(static_cast<Real>(m), -static_cast<Real>(parts[r - 1]));
    }

    int a = parts[r - 1];
    int p = static_cast<int>(r) - 1;
    Real factorial = 1.0L;
    for (int j = 2; j <= p; ++j) factorial *= j;
    Real tail = detail::log_power_tail(p, a, M) / factorial;
    // The bound must also cover the rounding of the nested summation itself.
    Real rounding = static_cast<Real>(r + 1) * static_cast<Real>(M) * std::numeric_limits<Real>::epsilon() *
                    (std::fabs(value) + 1.0L);
    return {value, tail + rounding};
}

// Evaluation by splitting the iterated-integral representation at 1/2:
//   zeta(k) = sum_{j=0}^{w} Li(e_1..e_j)(1/2) * Li(dual reversed e_{j+1}..e_w)(1/2).
inline MZVResult holder_eval(const Index& k) {
    if (!k.admissible()) throw std::invalid_argument("holder_eval needs an admissible index");
    if (k.empty()) return {1.0L, 0.0L};

    constexpr int M = 144;
    std::vector<int> word = detail::integral_word(k);
    int w = static_cast<int>(word.size());
    Real value = 0.0L;
    for (int j = 0; j <= w; ++j) {
        std::vector<int> prefix(word.begin(), word.begin() + j);
        std::vector<int> dual_rev;
        for (int i = w - 1; i >= j; --i) dual_rev.push_back(1 - word[i]);
        Real left = prefix.empty() ? 1.0L : detail::polylog_half(detail::word_exponents(prefix), M);
        Real right = dual_rev.empty() ? 1.0L : detail::polylog_half(detail::word_exponents(dual_rev), M);
        value += left * right;
    }

    // Truncation is ~2^(-M); long double rounding dominates the bound.
    Real rounding = static_cast<Real>(w + 1) * static_cast<Real>(M) *
                    std::numeric_limits<Real>::epsilon() * 8.0L;
    Real truncation = static_cast<Real>(w + 1) * std::pow(1.0L + std::log(static_cast<Real>(M)), static_cast<Real>(w)) *
                      std::ldexp(1.0L, -M);
    return {value, rounding + truncation};
}

// Process-wide value cache; safe for concurrent use.
class MZVCache {
public:
    static MZVCache& instance() {
        static MZVCache cache;
        return cache;
    }

    std::optional<MZVResult> lookup(const Index& k, Real tol) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = values_.find(k);
        if (it == values_.end() || it->second.error_bound > tol) return std::nullopt;
        return it->second;
    }

    void store(const Index& k, const MZVResult& r) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = values_.find(k);
        if (it == values_.end() || it->second.error_bound > r.error_bound) values_[k] = r;
    }

    std::map<Index, MZVResult> snapshot() {
        std::lock_guard<std::mutex> lock(mutex_);
        return values_;
    }

    void clear() {
        std::lock_guard<std::mutex> lock(mutex_);
        values_.clear();
    }

private:
    std::mutex mutex_;
    std::map<Index, MZVResult> values_;
};

// Cached evaluation with |result - zeta(k)| <= tol; throws when the requested
// tolerance is below what the working precision can certify.
inline Real eval_admissible(const Index& k, Real tol = 1e-10L) {
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    if (auto hit = MZVCache::instance().lookup(k, tol)) return hit->value;
    MZVResult r = holder_eval(k);
    if (r.error_bound > tol)
        throw std::runtime_error("tolerance " + std::to_string(static_cast<double>(tol)) +
                                 " not reachable for zeta(" + k.str() + ")");
    MZVCache::instance().store(k, r);
    return r.value;
}

}  // namespace mzv
