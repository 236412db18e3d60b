#pragma once

#include "pursuit/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pursuit {

// The gambler's fixed strategy: an exact probability distribution over the
// vertices of the ambient graph. Entries are nonnegative rationals summing
// to exactly 1; no tolerance anywhere.
class Gamble {
public:
    explicit Gamble(std::vector<Rational> probs);

    int size() const { return static_cast<int>(p_.size()); }
    const Rational& prob(int v) const { return p_[v]; }
    const std::vector<Rational>& probs() const { return p_; }

    bool operator==(const Gamble& other) const { return p_ == other.p_; }

private:
    std::vector<Rational> p_;
};

Gamble uniform_gamble(int n);
Gamble delta_gamble(int n, int v);
Gamble uniform_on_subset(int n, const std::vector<int>& subset);

// A one-time randomized choice of gamble: positive weights summing to 1,
// all component gambles over the same vertex set. The game semantics keep
// the mixture un-collapsed; collapse() is for sanity checks only.
class MetaGamble {
public:
    explicit MetaGamble(std::vector<std::pair<Rational, Gamble>> components);

    int size() const { return components_[0].second.size(); }
    const std::vector<std::pair<Rational, Gamble>>& components() const { return components_; }

private:
    std::vector<std::pair<Rational, Gamble>> components_;
};

// Equal-weight mixture of delta gambles at each given vertex.
MetaGamble random_sitter_meta(int n, const std::vector<int>& vertices);

// n components of weight 1/n; component i is uniform on the cyclic
// interval {i, ..., i+k-1 mod n}.
MetaGamble interval_meta(int n, int k);

// Weighted concatenation of two meta-gambles.
MetaGamble mix_meta(const Rational& weight_a, const MetaGamble& a, const MetaGamble& b);

Gamble collapse(const MetaGamble& m);

// Lines "v p" with p an exact rational "a/b" or a decimal literal; omitted
// vertices get probability 0. '#' begins a comment line. Entries must sum
// to exactly 1.
Gamble parse_gamble(const std::string& text, int n);
Gamble load_gamble(const std::string& path, int n);

}  // namespace pursuit
