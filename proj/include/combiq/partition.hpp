#pragma once

#include "combiq/bigint.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace combiq {

/// Integer partition in canonical form: parts sorted weakly decreasing, no
/// zeros. The empty partition (of 0) is allowed. Constructors normalize
/// unsorted input and reject negative parts, so each mathematical object has
/// exactly one representation.
class Partition {
public:
    Partition() = default;

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("Partition: negative part");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    const std::vector<int>& parts() const { return parts_; }

    /// |λ|, the number being partitioned.
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// i-th part, 0-based; 0 beyond the last part.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[i] : 0;
    }

    /// λ' with λ'_j = #{i : λ_i ≥ j}.
    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> conj(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[j];
        return Partition(std::move(conj));
    }

    /// True iff inner_i ≤ λ_i for all rows.
    bool contains(const Partition& inner) const {
        for (int i = 0; i < inner.length(); ++i)
            if (inner.part(i) > part(i)) return false;
        return true;
    }

    bool operator==(const Partition& other) const = default;
    auto operator<=>(const Partition& other) const { return parts_ <=> other.parts_; }

private:
    std::vector<int> parts_;
};

/// a ⊴ a': every prefix sum of a is ≤ the matching prefix sum of a'
/// (shorter list padded with zeros). Requires |a| = |a'|.
inline bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominance_leq: incomparable sizes");
    int len = std::max(a.length(), b.length());
    long sa = 0, sb = 0;
    for (int i = 0; i < len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

/// (μ∨ν, μ∧ν): cellwise max and min of the two diagrams.
inline std::pair<Partition, Partition> diagram_union_intersection(const Partition& mu,
                                                                  const Partition& nu) {
    int len = std::max(mu.length(), nu.length());
    std::vector<int> top(len), bot(len);
    for (int i = 0; i < len; ++i) {
        top[i] = std::max(mu.part(i), nu.part(i));
        bot[i] = std::min(mu.part(i), nu.part(i));
    }
    return {Partition(std::move(top)), Partition(std::move(bot))};
}

/// Centralizer order z_ρ = ∏_i i^{m_i}·m_i! where m_i is the multiplicity of
/// part value i. The conjugacy class of cycle type ρ in S_n has size n!/z_ρ.
inline BigInt class_size_z(const Partition& rho) {
    BigInt z = 1;
    int i = 0;
    while (i < rho.length()) {
        int value = rho.part(i);
        int mult = 0;
        while (i < rho.length() && rho.part(i) == value) {
            ++mult;
            ++i;
        }
        for (int j = 0; j < mult; ++j) z *= value;
        z *= factorial(mult);
    }
    return z;
}

/// All partitions of n with at most max_parts parts, each at most max_part,
/// in descending lexicographic order ((n) first when it qualifies).
inline std::vector<Partition> partitions_of(int n, int max_parts, int max_part) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> gen = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) >= max_parts) return;
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            gen(remaining - p, p);
            cur.pop_back();
        }
    };
    gen(n, std::min(n, max_part));
    return out;
}

inline std::vector<Partition> partitions_of(int n) {
    return partitions_of(n, n, n);
}

/// Text form: comma-separated parts, "-" for the empty partition.
inline std::string encode(const Partition& p) {
    if (p.empty()) return "-";
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.part(i));
    }
    return s;
}

inline Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "-") return {};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("parse_partition: bad token '" + tok + "'");
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

}  // namespace combiq
