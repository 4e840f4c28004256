#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace combiq {

/// Permutation of [n] in one-line notation: images_[i-1] = w(i).
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
                throw std::invalid_argument("Permutation: not a bijection on [n]");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(images_.size()); }

    /// w(i), 1-based.
    int operator()(int i) const {
        if (i < 1 || i > size()) throw std::invalid_argument("Permutation: index out of range");
        return images_[i - 1];
    }

    const std::vector<int>& images() const { return images_; }

    bool operator==(const Permutation& other) const = default;

private:
    std::vector<int> images_;
};

inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// Parse one-line notation "3,1,2".
inline Permutation parse_permutation(const std::string& text) {
    std::vector<int> images;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) images.push_back(std::stoi(tok));
    return Permutation(std::move(images));
}

inline std::string encode(const Permutation& w) {
    std::string s;
    for (int i = 1; i <= w.size(); ++i) {
        if (i > 1) s += ',';
        s += std::to_string(w(i));
    }
    return s;
}

}  // namespace combiq
