#pragma once

// Root data for the classical simple Lie algebras (Bourbaki labelling),
// Weyl group orbits with minimal-length coset representatives, and the
// classical character oracles (Weyl dimension formula, Freudenthal).

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qchar {

enum class Kind { A, B, C, D };

inline char kind_char(Kind k) {
    switch (k) {
    case Kind::A: return 'A';
    case Kind::B: return 'B';
    case Kind::C: return 'C';
    case Kind::D: return 'D';
    }
    return '?';
}

inline Kind kind_from_char(char c) {
    switch (c) {
    case 'A': case 'a': return Kind::A;
    case 'B': case 'b': return Kind::B;
    case 'C': case 'c': return Kind::C;
    case 'D': case 'd': return Kind::D;
    default: break;
    }
    throw std::invalid_argument(std::string("unknown classical type '") + c + "'");
}

/// An integral weight, stored by its coordinates in the fundamental weight
/// basis. The zero vector plays the role of omega_0.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}

    int rank() const { return static_cast<int>(coords.size()); }
    /// 1-based coordinate access.
    int operator[](int node) const { return coords.at(node - 1); }
    int& operator[](int node) { return coords.at(node - 1); }

    bool is_dominant() const {
        return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
    }
    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
    }

    Weight& operator+=(const Weight& o) {
        for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += o.coords.at(k);
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t k = 0; k < coords.size(); ++k) coords[k] -= o.coords.at(k);
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int s, Weight a) {
        for (auto& c : a.coords) c *= s;
        return a;
    }

    auto operator<=>(const Weight&) const = default;
};

/// Sequence of simple-reflection indices s_{i_1} ... s_{i_k}; the rightmost
/// letter acts first.
using ReducedWord = std::vector<int>;

class RootSystem {
public:
    RootSystem(Kind kind, int rank) : kind_(kind), n_(rank) {
        const int min_rank = kind == Kind::A ? 1 : kind == Kind::D ? 3 : 2;
        if (rank < min_rank) {
            throw std::invalid_argument(std::string("rank of type ") + kind_char(kind) +
                                        " must be at least " + std::to_string(min_rank));
        }
        build_cartan();
        build_symmetrizer();
        build_simple_roots();
        build_positive_roots();
        hstar_ = tabulated_hstar();
        if (hstar_ != derived_hstar()) {
            throw std::logic_error("dual Coxeter constant disagrees with Cartan data for " + name());
        }
    }

    Kind kind() const { return kind_; }
    int rank() const { return n_; }
    std::string name() const { return kind_char(kind_) + std::to_string(n_); }

    /// a_{ij} = <alpha_i^vee, alpha_j>, nodes 1-based.
    int cartan(int i, int j) const { return cartan_.at(i - 1).at(j - 1); }
    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

    /// d_i with d_i a_{ij} = d_j a_{ji}, minimal; d_i = (alpha_i, alpha_i)/2.
    int d(int i) const { return d_.at(i - 1); }
    const std::vector<int>& symmetrizer() const { return d_; }

    /// The constant h entering the spectral exponents of the partition
    /// monomials: the dual Coxeter number, doubled for C_n.
    int hstar() const { return hstar_; }

    void check_node(int i) const {
        if (i < 1 || i > n_) {
            throw std::out_of_range("node " + std::to_string(i) + " out of range 1.." +
                                    std::to_string(n_) + " for " + name());
        }
    }

    const Weight& simple_root(int i) const {
        check_node(i);
        return simple_roots_[i - 1];
    }

    /// Positive roots in simple-root coordinates, sorted by height then lexicographically.
    const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }

    /// A root given in simple-root coordinates, converted to fundamental coordinates.
    Weight root_to_weight(const std::vector<int>& c) const {
        Weight w(std::vector<int>(n_, 0));
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) w.coords[k] += c[j] * cartan_[k][j];
        return w;
    }

    /// (mu, beta) for mu in fundamental coordinates and beta in root coordinates.
    long long pair_with_root(const Weight& mu, const std::vector<int>& beta) const {
        long long s = 0;
        for (int j = 0; j < n_; ++j) s += static_cast<long long>(beta[j]) * d_[j] * mu.coords[j];
        return s;
    }

    /// (beta, gamma) for two elements of the root lattice in root coordinates.
    long long root_form(const std::vector<int>& b, const std::vector<int>& g) const {
        long long s = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                s += static_cast<long long>(b[i]) * g[j] * d_[i] * cartan_[i][j];
        return s;
    }

    Weight fundamental(int i) const {
        Weight w(std::vector<int>(n_, 0));
        if (i == 0) return w;
        check_node(i);
        w.coords[i - 1] = 1;
        return w;
    }
    Weight zero() const { return Weight(std::vector<int>(n_, 0)); }

private:
    void build_cartan() {
        cartan_.assign(n_, std::vector<int>(n_, 0));
        for (int i = 0; i < n_; ++i) cartan_[i][i] = 2;
        const int chain = kind_ == Kind::D ? n_ - 1 : n_;
        for (int i = 0; i + 1 < chain; ++i) cartan_[i][i + 1] = cartan_[i + 1][i] = -1;
        switch (kind_) {
        case Kind::A: break;
        case Kind::B: cartan_[n_ - 1][n_ - 2] = -2; break;
        case Kind::C: cartan_[n_ - 2][n_ - 1] = -2; break;
        case Kind::D: cartan_[n_ - 3][n_ - 1] = cartan_[n_ - 1][n_ - 3] = -1; break;
        }
    }

    void build_symmetrizer() {
        // propagate d_j = d_i a_ij / a_ji over the (connected) diagram
        std::vector<long long> d(n_, 0);
        d[0] = 1;
        std::vector<int> queue{0};
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const int i = queue[h];
            for (int j = 0; j < n_; ++j) {
                if (i == j || cartan_[i][j] == 0 || d[j] != 0) continue;
                long long num = d[i] * cartan_[i][j];
                long long den = cartan_[j][i];
                if (num % den != 0) {
                    const long long scale = std::abs(den) / std::gcd(std::abs(num), std::abs(den));
                    for (auto& x : d) x *= scale;
                    num *= scale;
                }
                d[j] = num / den;
                queue.push_back(j);
            }
        }
        long long g = 0;
        for (auto x : d) g = std::gcd(g, x);
        d_.resize(n_);
        for (int i = 0; i < n_; ++i) d_[i] = static_cast<int>(d[i] / g);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (d_[i] * cartan_[i][j] != d_[j] * cartan_[j][i])
                    throw std::logic_error("Cartan matrix is not symmetrizable");
    }

    void build_simple_roots() {
        simple_roots_.clear();
        for (int j = 0; j < n_; ++j) {
            std::vector<int> e(n_, 0);
            e[j] = 1;
            simple_roots_.push_back(root_to_weight(e));
        }
    }

    void build_positive_roots() {
        std::set<std::vector<int>> roots;
        std::vector<std::vector<int>> frontier;
        for (int j = 0; j < n_; ++j) {
            std::vector<int> e(n_, 0);
            e[j] = 1;
            roots.insert(e);
            frontier.push_back(e);
        }
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& c : frontier) {
                for (int i = 0; i < n_; ++i) {
                    int pairing = 0;
                    for (int j = 0; j < n_; ++j) pairing += c[j] * cartan_[i][j];
                    auto b = c;
                    b[i] -= pairing;
                    if (roots.insert(b).second) next.push_back(b);
                }
            }
            frontier = std::move(next);
        }
        positive_roots_.clear();
        for (const auto& c : roots)
            if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; }))
                positive_roots_.push_back(c);
        std::stable_sort(positive_roots_.begin(), positive_roots_.end(),
                         [](const auto& a, const auto& b) {
                             return std::accumulate(a.begin(), a.end(), 0) <
                                    std::accumulate(b.begin(), b.end(), 0);
                         });
    }

    int tabulated_hstar() const {
        switch (kind_) {
        case Kind::A: return n_ + 1;
        case Kind::B: return 2 * n_ - 1;
        case Kind::C: return 2 * n_ + 2;
        case Kind::D: return 2 * n_ - 2;
        }
        return 0;
    }

    // 1 + height of the coroot of the highest root.
    int derived_hstar() const {
        const auto& theta = positive_roots_.back();
        const long long len = root_form(theta, theta) / 2;
        long long coheight = 0;
        for (int i = 0; i < n_; ++i) {
            const long long c = static_cast<long long>(theta[i]) * d_[i];
            if (c % len != 0) throw std::logic_error("non-integral coroot");
            coheight += c / len;
        }
        const int dual_coxeter = static_cast<int>(1 + coheight);
        return kind_ == Kind::C ? 2 * dual_coxeter : dual_coxeter;
    }

    Kind kind_;
    int n_;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> d_;
    std::vector<Weight> simple_roots_;
    std::vector<std::vector<int>> positive_roots_;
    int hstar_ = 0;
};

inline RootSystem root_system(Kind kind, int n) { return RootSystem(kind, n); }

/// s_i(lambda) = lambda - lambda_i alpha_i.
inline Weight reflect(const RootSystem& rs, int i, const Weight& lambda) {
    rs.check_node(i);
    if (lambda.rank() != rs.rank()) throw std::invalid_argument("weight rank mismatch");
    const int c = lambda[i];
    if (c == 0) return lambda;
    return lambda - c * rs.simple_root(i);
}

/// w(lambda) for w = s_{i_1} ... s_{i_k}.
inline Weight apply_word(const RootSystem& rs, const ReducedWord& word, Weight lambda) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) lambda = reflect(rs, *it, lambda);
    return lambda;
}

inline Weight dominant_conjugate(const RootSystem& rs, Weight lambda) {
    for (;;) {
        int neg = 0;
        for (int i = 1; i <= rs.rank(); ++i)
            if (lambda[i] < 0) { neg = i; break; }
        if (neg == 0) return lambda;
        lambda = reflect(rs, neg, lambda);
    }
}

struct OrbitPoint {
    Weight weight;
    ReducedWord word;
};

/// The orbit W.lambda of a dominant weight, one entry per coset of the
/// stabiliser, each paired with a reduced word for the minimal-length coset
/// representative. Breadth-first by length; each layer is visited in
/// lexicographic order and a new point takes the first (smallest) letter
/// that reaches it.
inline std::vector<OrbitPoint> weyl_orbit_minlength(const RootSystem& rs, const Weight& lambda) {
    if (lambda.rank() != rs.rank()) throw std::invalid_argument("weight rank mismatch");
    if (!lambda.is_dominant()) throw std::invalid_argument("weyl_orbit_minlength: weight is not dominant");
    std::vector<OrbitPoint> out{{lambda, {}}};
    std::map<Weight, std::size_t> seen{{lambda, 0}};
    std::vector<std::size_t> layer{0};
    while (!layer.empty()) {
        std::sort(layer.begin(), layer.end(),
                  [&](std::size_t a, std::size_t b) { return out[a].weight < out[b].weight; });
        std::map<Weight, ReducedWord> next;
        for (auto idx : layer) {
            const Weight mu = out[idx].weight;
            const ReducedWord word = out[idx].word;
            for (int i = 1; i <= rs.rank(); ++i) {
                if (mu[i] <= 0) continue;
                Weight nu = reflect(rs, i, mu);
                if (seen.count(nu) || next.count(nu)) continue;
                ReducedWord w{i};
                w.insert(w.end(), word.begin(), word.end());
                next.emplace(std::move(nu), std::move(w));
            }
        }
        layer.clear();
        for (auto& [nu, w] : next) {
            seen.emplace(nu, out.size());
            layer.push_back(out.size());
            out.push_back({nu, std::move(w)});
        }
    }
    return out;
}

/// |W| from the closed formulas.
inline std::uint64_t weyl_group_order(Kind kind, int n) {
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    switch (kind) {
    case Kind::A: return f * static_cast<std::uint64_t>(n + 1);
    case Kind::B:
    case Kind::C: return f << n;
    case Kind::D: return f << (n - 1);
    }
    return 0;
}

/// Weyl dimension formula.
inline long long weyl_dim(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dim: weight is not dominant");
    Weight shifted = lambda;
    for (auto& c : shifted.coords) c += 1;
    const Weight rho(std::vector<int>(rs.rank(), 1));
    long long num = 1, den = 1;
    for (const auto& alpha : rs.positive_roots()) {
        num *= rs.pair_with_root(shifted, alpha);
        den *= rs.pair_with_root(rho, alpha);
        const long long g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    if (den != 1) throw std::logic_error("weyl_dim: non-integral result");
    return num;
}

/// Multiplicities of the dominant weights of V(lambda), by Freudenthal's recursion.
inline std::map<Weight, long long> dominant_char(const RootSystem& rs, const Weight& lambda) {
    if (!lambda.is_dominant()) throw std::invalid_argument("dominant_char: weight is not dominant");
    const int n = rs.rank();
    const auto& pos = rs.positive_roots();
    std::vector<Weight> pos_w;
    for (const auto& a : pos) pos_w.push_back(rs.root_to_weight(a));

    // dominant weights below lambda, with lambda - mu in root coordinates
    std::map<Weight, std::vector<int>> depth{{lambda, std::vector<int>(n, 0)}};
    std::vector<Weight> stack{lambda};
    while (!stack.empty()) {
        Weight mu = stack.back();
        stack.pop_back();
        const auto beta = depth.at(mu);
        for (std::size_t a = 0; a < pos.size(); ++a) {
            Weight nu = mu - pos_w[a];
            if (!nu.is_dominant() || depth.count(nu)) continue;
            auto b = beta;
            for (int j = 0; j < n; ++j) b[j] += pos[a][j];
            depth.emplace(nu, b);
            stack.push_back(nu);
        }
    }
    std::vector<Weight> order;
    for (const auto& [mu, b] : depth) order.push_back(mu);
    auto height = [&](const Weight& mu) {
        const auto& b = depth.at(mu);
        return std::accumulate(b.begin(), b.end(), 0);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](const Weight& a, const Weight& b) { return height(a) < height(b); });

    Weight lr = lambda;
    for (auto& c : lr.coords) c += 1;
    std::map<Weight, long long> mult;
    for (const auto& mu : order) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        const auto& beta = depth.at(mu);
        const long long lhs = 2 * rs.pair_with_root(lr, beta) - rs.root_form(beta, beta);
        long long rhs = 0;
        for (std::size_t a = 0; a < pos.size(); ++a) {
            for (int k = 1;; ++k) {
                Weight nu = mu + k * pos_w[a];
                auto it = mult.find(dominant_conjugate(rs, nu));
                if (it == mult.end()) break;
                rhs += it->second * rs.pair_with_root(nu, pos[a]);
            }
        }
        rhs *= 2;
        if (lhs <= 0 || rhs % lhs != 0) throw std::logic_error("Freudenthal recursion not integral");
        mult[mu] = rhs / lhs;
    }
    return mult;
}

/// All weights of V(lambda) with multiplicity, expanding dominant ones over their orbits.
inline std::map<Weight, long long> weight_char(const RootSystem& rs, const Weight& lambda) {
    std::map<Weight, long long> out;
    for (const auto& [mu, m] : dominant_char(rs, lambda))
        for (const auto& p : weyl_orbit_minlength(rs, mu)) out[p.weight] += m;
    return out;
}

/// Nodes whose fundamental representation has a single Weyl orbit of weights.
inline bool is_minuscule_node(const RootSystem& rs, int i) {
    rs.check_node(i);
    const int n = rs.rank();
    switch (rs.kind()) {
    case Kind::A: return true;
    case Kind::B: return i == n;
    case Kind::C: return i == 1;
    case Kind::D: return i == 1 || i == n - 1 || i == n;
    }
    return false;
}

/// Highest weights of the classical decomposition of the fundamental
/// quantum loop module at node i, as node indices (0 stands for the zero weight).
inline std::vector<int> classical_decomposition_nodes(const RootSystem& rs, int i) {
    rs.check_node(i);
    std::vector<int> nodes{i};
    const bool orthogonal = rs.kind() == Kind::B || rs.kind() == Kind::D;
    if (orthogonal && !is_minuscule_node(rs, i))
        for (int j = i - 2; j >= 0; j -= 2) nodes.push_back(j);
    return nodes;
}

inline std::vector<Weight> classical_decomposition(const RootSystem& rs, int i) {
    std::vector<Weight> out;
    for (int j : classical_decomposition_nodes(rs, i)) out.push_back(rs.fundamental(j));
    return out;
}

} // namespace qchar
