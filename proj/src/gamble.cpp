#include "pursuit/gamble.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pursuit {

Gamble::Gamble(std::vector<Rational> probs) : p_(std::move(probs)) {
    if (p_.empty()) throw std::invalid_argument("gamble: empty distribution");
    Rational sum = 0;
    for (const auto& x : p_) {
        if (x < 0) throw std::invalid_argument("gamble: negative probability");
        sum += x;
    }
    if (sum != 1) {
        throw std::invalid_argument("gamble: probabilities sum to " + fraction_string(sum) +
                                    ", expected 1");
    }
}

Gamble uniform_gamble(int n) {
    if (n < 1) throw std::invalid_argument("uniform_gamble: n must be positive");
    return Gamble(std::vector<Rational>(n, Rational(1, n)));
}

Gamble delta_gamble(int n, int v) {
    if (v < 0 || v >= n) throw std::invalid_argument("delta_gamble: vertex out of range");
    std::vector<Rational> p(n, 0);
    p[v] = 1;
    return Gamble(std::move(p));
}

Gamble uniform_on_subset(int n, const std::vector<int>& subset) {
    if (subset.empty()) throw std::invalid_argument("uniform_on_subset: empty subset");
    std::vector<Rational> p(n, 0);
    for (int v : subset) {
        if (v < 0 || v >= n) throw std::invalid_argument("uniform_on_subset: vertex out of range");
        if (p[v] != 0) throw std::invalid_argument("uniform_on_subset: repeated vertex");
        p[v] = Rational(1, static_cast<int>(subset.size()));
    }
    return Gamble(std::move(p));
}

MetaGamble::MetaGamble(std::vector<std::pair<Rational, Gamble>> components)
    : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("meta-gamble: no components");
    Rational sum = 0;
    int n = components_[0].second.size();
    for (const auto& [w, g] : components_) {
        if (w <= 0) throw std::invalid_argument("meta-gamble: nonpositive weight");
        if (g.size() != n) throw std::invalid_argument("meta-gamble: mismatched vertex counts");
        sum += w;
    }
    if (sum != 1) {
        throw std::invalid_argument("meta-gamble: weights sum to " + fraction_string(sum) +
                                    ", expected 1");
    }
}

MetaGamble random_sitter_meta(int n, const std::vector<int>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("random_sitter_meta: empty vertex set");
    std::vector<std::pair<Rational, Gamble>> parts;
    parts.reserve(vertices.size());
    Rational w(1, static_cast<int>(vertices.size()));
    for (int v : vertices) parts.emplace_back(w, delta_gamble(n, v));
    return MetaGamble(std::move(parts));
}

MetaGamble interval_meta(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("interval_meta: width out of range");
    std::vector<std::pair<Rational, Gamble>> parts;
    parts.reserve(n);
    for (int i = 0; i < n; ++i) {
        std::vector<int> interval(k);
        for (int j = 0; j < k; ++j) interval[j] = (i + j) % n;
        parts.emplace_back(Rational(1, n), uniform_on_subset(n, interval));
    }
    return MetaGamble(std::move(parts));
}

MetaGamble mix_meta(const Rational& weight_a, const MetaGamble& a, const MetaGamble& b) {
    if (weight_a < 0 || weight_a > 1) throw std::invalid_argument("mix_meta: weight out of [0,1]");
    std::vector<std::pair<Rational, Gamble>> parts;
    if (weight_a > 0) {
        for (const auto& [w, g] : a.components()) parts.emplace_back(weight_a * w, g);
    }
    if (weight_a < 1) {
        for (const auto& [w, g] : b.components()) parts.emplace_back((1 - weight_a) * w, g);
    }
    return MetaGamble(std::move(parts));
}

Gamble collapse(const MetaGamble& m) {
    std::vector<Rational> p(m.size(), 0);
    for (const auto& [w, g] : m.components()) {
        for (int v = 0; v < g.size(); ++v) p[v] += w * g.prob(v);
    }
    return Gamble(std::move(p));
}

Gamble parse_gamble(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("gamble: vertex count must be positive");
    std::vector<Rational> p(n, 0);
    std::set<int> assigned;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first[0] == '#') continue;
        std::istringstream es(line);
        int v;
        std::string prob_text, extra;
        if (!(es >> v >> prob_text) || (es >> extra)) {
            throw std::invalid_argument("gamble: malformed line " + std::to_string(line_no) +
                                        ": '" + line + "'");
        }
        if (v < 0 || v >= n) {
            throw std::invalid_argument("gamble: vertex " + std::to_string(v) + " out of range");
        }
        if (!assigned.insert(v).second) {
            throw std::invalid_argument("gamble: vertex " + std::to_string(v) +
                                        " assigned twice");
        }
        p[v] = parse_rational(prob_text);
    }
    return Gamble(std::move(p));
}

Gamble load_gamble(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open gamble file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_gamble(buf.str(), n);
}

}  // namespace pursuit
