#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "conway/rational.hpp"

namespace conway {

/// Memoized values of one k-nacci sequence: F_k(0..k-2) = 0, F_k(k-1) = 1,
/// then each term is the sum of the k preceding terms.
class SequenceTable {
public:
    explicit SequenceTable(int k) : k_(k) {
        if (k < 2) throw std::invalid_argument("SequenceTable: k must be >= 2");
        values_.assign(static_cast<size_t>(k), Int(0));
        values_[static_cast<size_t>(k - 1)] = 1;
    }

    int order() const { return k_; }

    Int at(long n) {
        if (n < 0) throw std::invalid_argument("SequenceTable: n must be >= 0");
        std::lock_guard<std::mutex> lock(mu_);
        while (static_cast<long>(values_.size()) <= n) {
            Int next(0);
            for (int j = 1; j <= k_; ++j) next += values_[values_.size() - static_cast<size_t>(j)];
            values_.push_back(next);
        }
        return values_[static_cast<size_t>(n)];
    }

private:
    int k_;
    std::vector<Int> values_;
    std::mutex mu_;
};

namespace detail {
inline SequenceTable& table_for(int k) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<SequenceTable>> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto it = tables.find(k);
    if (it == tables.end()) it = tables.emplace(k, std::make_unique<SequenceTable>(k)).first;
    return *it->second;
}
}  // namespace detail

/// F_k(n).
inline Int knacci(int k, long n) {
    if (k < 2) throw std::invalid_argument("knacci: k must be >= 2");
    if (n < 0) throw std::invalid_argument("knacci: n must be >= 0");
    return detail::table_for(k).at(n);
}

/// a_i = sum_{j=0..i} F_k(k-1+j); solves a_{n+k} = a_n + ... + a_{n+k-1} + 1
/// with initial conditions (1, 2, 4, ..., 2^{k-1}).
inline Int cumulative_a(int k, long i) {
    if (k < 2) throw std::invalid_argument("cumulative_a: k must be >= 2");
    if (i < 0) throw std::invalid_argument("cumulative_a: i must be >= 0");
    Int acc(0);
    for (long j = 0; j <= i; ++j) acc += knacci(k, k - 1 + j);
    return acc;
}

/// S_i(n) = sum_{j=0..i} F_k(n+k-2-j), for i in [0, k-1].
inline Int S(int k, int i, long n) {
    if (k < 2) throw std::invalid_argument("S: k must be >= 2");
    if (i < 0 || i > k - 1) throw std::out_of_range("S: i must be in [0, k-1]");
    if (n + k - 2 - i < 0) throw std::out_of_range("S: index n+k-2-i is negative");
    Int acc(0);
    for (int j = 0; j <= i; ++j) acc += knacci(k, n + k - 2 - j);
    return acc;
}

/// Checks sum_{j=1..k} S_{k-j}(n) F_k(k-j+i) == F_k(n+i+k-1) as exact integers.
inline bool verify_S_identity(int k, long n, long i) {
    if (k < 2) throw std::invalid_argument("verify_S_identity: k must be >= 2");
    if (n + k - 2 - (k - 1) < 0 || i < 0) throw std::out_of_range("verify_S_identity: index out of range");
    Int lhs(0);
    for (int j = 1; j <= k; ++j) lhs += S(k, k - j, n) * knacci(k, k - j + i);
    return lhs == knacci(k, n + i + k - 1);
}

///// Lucas numbers: L(0) = 2, L(1) = 1, L(n) = L(n-1) + L(n-2).
inline Int lucas(long n) {
    if (n < 0) throw std::invalid_argument("lucas: n must be >= 0");
    Int a(2), b(1);
    if (n == 0) return a;
    for (long j = 1; j < n; ++j) {
        Int next = a + b;
        a = b;
        b = next;
    }
    return b;
}

}  // namespace conway
