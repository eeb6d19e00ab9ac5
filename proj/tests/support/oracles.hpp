// Brute-force reference implementations used only by the tests. They work
// from raw edge lists and tables and share no code with the library's
// algorithms.
#ifndef MGD_TESTS_ORACLES_HPP
#define MGD_TESTS_ORACLES_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline std::vector<bool> descendants(int n, const EdgeList& edges, int v) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{v};
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        if (seen[static_cast<std::size_t>(u)]) continue;
        seen[static_cast<std::size_t>(u)] = true;
        for (const auto& [p, c] : edges)
            if (p == u) stack.push_back(c);
    }
    return seen;
}

inline bool has_edge(const EdgeList& edges, int a, int b) {
    for (const auto& e : edges)
        if (e.first == a && e.second == b) return true;
    return false;
}

// Literal d-separation: enumerate every simple path of the skeleton between
// a member of x and a member of y and apply the chain/fork/collider rules.
inline bool d_separated(int n, const EdgeList& edges, const std::vector<int>& x, const std::vector<int>& y,
                        const std::vector<int>& z) {
    std::vector<bool> in_z(static_cast<std::size_t>(n), false);
    for (int v : z) in_z[static_cast<std::size_t>(v)] = true;
    std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
    for (const auto& [p, c] : edges) {
        nbr[static_cast<std::size_t>(p)].push_back(c);
        nbr[static_cast<std::size_t>(c)].push_back(p);
    }
    auto blocked = [&](const std::vector<int>& path) {
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            const int a = path[i - 1], m = path[i], b = path[i + 1];
            const bool collider = has_edge(edges, a, m) && has_edge(edges, b, m);
            if (collider) {
                bool opened = false;
                const auto desc = descendants(n, edges, m);
                for (int v = 0; v < n; ++v) opened = opened || (desc[static_cast<std::size_t>(v)] && in_z[static_cast<std::size_t>(v)]);
                if (!opened) return true;
            } else if (in_z[static_cast<std::size_t>(m)]) {
                return true;
            }
        }
        return false;
    };
    bool active = false;
    std::vector<int> path;
    std::vector<bool> on_path(static_cast<std::size_t>(n), false);
    std::function<void(int, int)> walk = [&](int u, int target) {
        if (active) return;
        if (u == target) {
            if (!blocked(path)) active = true;
            return;
        }
        for (int w : nbr[static_cast<std::size_t>(u)]) {
            if (on_path[static_cast<std::size_t>(w)]) continue;
            on_path[static_cast<std::size_t>(w)] = true;
            path.push_back(w);
            walk(w, target);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = false;
        }
    };
    for (int a : x)
        for (int b : y) {
            path = {a};
            std::fill(on_path.begin(), on_path.end(), false);
            on_path[static_cast<std::size_t>(a)] = true;
            walk(a, b);
            if (active) return false;
        }
    return true;
}

inline bool acyclic(int n, const EdgeList& edges) {
    for (const auto& [p, c] : edges)
        if (descendants(n, edges, c)[static_cast<std::size_t>(p)]) return false;
    return true;
}

// Every DAG on n labelled vertices (n <= 4): each unordered pair is absent,
// forward or backward.
inline std::vector<EdgeList> all_dags(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    std::vector<EdgeList> out;
    std::size_t total = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        EdgeList edges;
        std::size_t c = code;
        for (const auto& [i, j] : pairs) {
            const std::size_t t = c % 3;
            c /= 3;
            if (t == 1) edges.push_back({i, j});
            if (t == 2) edges.push_back({j, i});
        }
        if (acyclic(n, edges)) out.push_back(edges);
    }
    return out;
}

inline EdgeList random_dag(int n, double density, std::mt19937_64& rng) {
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution coin(density);
    EdgeList edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.push_back({order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]});
    return edges;
}

// A discrete Bayesian network as plain tables. parents[v] ascending; table[v]
// is row-major over parent configurations (first parent slowest) x states.
struct Network {
    std::vector<int> cards;
    std::vector<std::vector<int>> parents;
    std::vector<std::vector<double>> table;

    double joint(const std::vector<int>& s) const {
        double p = 1.0;
        for (std::size_t v = 0; v < cards.size(); ++v) {
            std::size_t config = 0;
            for (int q : parents[v]) config = config * static_cast<std::size_t>(cards[static_cast<std::size_t>(q)]) + static_cast<std::size_t>(s[static_cast<std::size_t>(q)]);
            p *= table[v][config * static_cast<std::size_t>(cards[v]) + static_cast<std::size_t>(s[v])];
        }
        return p;
    }

    // Calls f(assignment) for every joint state.
    void for_each_state(const std::function<void(const std::vector<int>&)>& f) const {
        std::vector<int> s(cards.size(), 0);
        for (;;) {
            f(s);
            std::size_t k = 0;
            while (k < s.size() && ++s[k] == cards[k]) s[k++] = 0;
            if (k == s.size()) return;
        }
    }

    // log P(observed cells of `row`), missing cells marked -1, by summing the
    // full joint over every consistent assignment.
    double row_log_likelihood(const std::vector<int>& row) const {
        double total = 0.0;
        for_each_state([&](const std::vector<int>& s) {
            for (std::size_t v = 0; v < s.size(); ++v)
                if (row[v] >= 0 && row[v] != s[v]) return;
            total += joint(s);
        });
        return std::log(total);
    }

    double marginal(int v, int state) const {
        double total = 0.0;
        for_each_state([&](const std::vector<int>& s) {
            if (s[static_cast<std::size_t>(v)] == state) total += joint(s);
        });
        return total;
    }
};

inline std::vector<double> random_distribution(int card, std::mt19937_64& rng, double floor = 0.02) {
    std::gamma_distribution<double> g(1.0, 1.0);
    std::vector<double> p(static_cast<std::size_t>(card));
    double sum = 0.0;
    for (auto& x : p) sum += (x = g(rng) + floor);
    for (auto& x : p) x /= sum;
    return p;
}

inline double total_variation(const double* a, const double* b, int card) {
    double tv = 0.0;
    for (int k = 0; k < card; ++k) tv += std::abs(a[k] - b[k]);
    return tv / 2.0;
}

// Random CPTs for the given structure. With min_tv > 0 every pair of
// conditional rows of a variable differs by at least that total variation.
inline Network random_network(const std::vector<int>& cards, const EdgeList& edges, std::mt19937_64& rng,
                              double min_tv = 0.0) {
    Network net;
    net.cards = cards;
    net.parents.resize(cards.size());
    for (const auto& [p, c] : edges) net.parents[static_cast<std::size_t>(c)].push_back(p);
    for (auto& ps : net.parents) std::sort(ps.begin(), ps.end());
    for (std::size_t v = 0; v < cards.size(); ++v) {
        std::size_t configs = 1;
        for (int q : net.parents[v]) configs *= static_cast<std::size_t>(cards[static_cast<std::size_t>(q)]);
        const int card = cards[v];
        // Rows are drawn one at a time, each redrawn until it is far enough
        // from every earlier row; a row that keeps failing restarts the table.
        std::vector<double> t;
        for (int restart = 0; t.size() < configs * static_cast<std::size_t>(card); ++restart) {
            if (restart == 10000) throw std::runtime_error("random_network: min_tv is not attainable");
            t.clear();
            for (std::size_t c = 0; c < configs; ++c) {
                bool placed = false;
                for (int attempt = 0; attempt < 1000 && !placed; ++attempt) {
                    const auto row = random_distribution(card, rng);
                    placed = true;
                    for (std::size_t a = 0; a < c && placed; ++a)
                        placed = total_variation(&t[a * static_cast<std::size_t>(card)], row.data(), card) >= min_tv;
                    if (placed) t.insert(t.end(), row.begin(), row.end());
                }
                if (!placed) {
                    t.clear();
                    break;
                }
            }
        }
        net.table.push_back(std::move(t));
    }
    return net;
}

// BIC of a whole DAG straight from complete rows:
// sum over families of N log(N / N_pa) - log(n)/2 (|X|-1) q.
inline double bic(const std::vector<std::vector<int>>& rows, const std::vector<int>& cards, const EdgeList& edges) {
    const double n = static_cast<double>(rows.size());
    double total = 0;
    for (int child = 0; child < static_cast<int>(cards.size()); ++child) {
        std::vector<int> ps;
        for (const auto& [p, c] : edges)
            if (c == child) ps.push_back(p);
        std::map<std::vector<int>, std::map<int, double>> counts;
        for (const auto& r : rows) {
            std::vector<int> cfg;
            for (int p : ps) cfg.push_back(r[static_cast<std::size_t>(p)]);
            counts[cfg][r[static_cast<std::size_t>(child)]] += 1;
        }
        for (const auto& [cfg, row] : counts) {
            double t = 0;
            for (const auto& [s, c] : row) t += c;
            for (const auto& [s, c] : row) total += c * std::log(c / t);
        }
        double q = 1;
        for (int p : ps) q *= cards[static_cast<std::size_t>(p)];
        total -= std::log(n) / 2 * (cards[static_cast<std::size_t>(child)] - 1) * q;
    }
    return total;
}

}  // namespace oracle

#endif  // MGD_TESTS_ORACLES_HPP
