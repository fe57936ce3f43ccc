#include "bdg/singularity.hpp"

#include "bdg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace bdg {

Cycle fundamental_cycle(const WeightedDualGraph& g, std::size_t* steps, TieBreak tie_break) {
    if (g.empty()) {
        throw InputError("fundamental cycle of an empty graph");
    }
    if (!is_connected(g)) {
        throw InputError("fundamental cycle requires a connected graph");
    }
    if (!is_negative_definite(g)) {
        throw InputError("fundamental cycle requires a negative definite graph");
    }
    const std::vector<std::string> ids = g.vertex_ids();
    const std::size_t n = ids.size();
    std::vector<std::vector<std::size_t>> adj(n);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
        for (const auto& nb : g.neighbors(ids[i])) {
            adj[i].push_back(static_cast<std::size_t>(
                std::lower_bound(ids.begin(), ids.end(), nb) - ids.begin()));
        }
    }
    if (tie_break == TieBreak::highest_id) {
        std::reverse(order.begin(), order.end());
    }

    std::vector<Int> z(n, 1);
    // pair_with[i] = (Z . D_i), maintained incrementally.
    std::vector<Int> pair_with(n);
    for (std::size_t i = 0; i < n; ++i) {
        pair_with[i] = Int(g.weight(ids[i])) + Int(adj[i].size());
    }
    std::size_t additions = 0;
    for (;;) {
        bool found = false;
        for (const std::size_t i : order) {
            if (pair_with[i] > 0) {
                z[i] += 1;
                pair_with[i] += g.weight(ids[i]);
                for (const std::size_t nb : adj[i]) {
                    pair_with[nb] += 1;
                }
                ++additions;
                found = true;
                break;
            }
        }
        if (!found) {
            break;
        }
    }
    if (steps) {
        *steps = additions;
    }
    std::map<std::string, Rat> coeffs;
    for (std::size_t i = 0; i < n; ++i) {
        coeffs[ids[i]] = Rat(z[i]);
    }
    return Cycle(g, std::move(coeffs));
}

SingularityReport is_rational(const WeightedDualGraph& g) {
    for (const auto& id : g.vertex_ids()) {
        if (g.weight(id) > -2) {
            throw InputError("rationality test requires every weight <= -2");
        }
    }
    Cycle z = fundamental_cycle(g);
    const Int pa = to_integer(pa_genus(z));
    SingularityReport report{std::move(z), pa, pa == 0,
                             is_path_graph(g) ? SingularityKind::chain
                                              : SingularityKind::branched};
    return report;
}

namespace {

// Shared genus bookkeeping: p_a(Z) = q(Z)/2 + 1 where
// q(Z) = sum_i (w_i z_i^2 + (-2 - w_i) z_i) + 2 * sum_edges z_u z_v.
// q is even for integer cycles, so all work happens in integers.

long long vertex_term(long long w, long long k) {
    return w * k * k + (-2 - w) * k;
}

struct TreeDp {
    const std::vector<std::string>& ids;
    const std::vector<long long>& weights;
    const std::vector<std::vector<std::size_t>>& adj;
    long long bound;

    // Maximum q over the tree given per-vertex coefficient domains
    // [lo[i], hi[i]]; returns the unreachable marker when a domain is empty.
    long long solve(const std::vector<long long>& lo, const std::vector<long long>& hi) const {
        const std::size_t n = ids.size();
        std::vector<std::vector<long long>> f(n);
        std::vector<std::size_t> parent(n, SIZE_MAX), dfs_order;
        std::vector<bool> seen(n, false);
        dfs_order.reserve(n);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            stack.pop_back();
            dfs_order.push_back(v);
            for (const std::size_t nb : adj[v]) {
                if (!seen[nb]) {
                    seen[nb] = true;
                    parent[nb] = v;
                    stack.push_back(nb);
                }
            }
        }
        constexpr long long kUnreachable = std::numeric_limits<long long>::min() / 4;
        for (auto it = dfs_order.rbegin(); it != dfs_order.rend(); ++it) {
            const std::size_t v = *it;
            f[v].assign(static_cast<std::size_t>(bound) + 1, kUnreachable);
            for (long long k = lo[v]; k <= hi[v]; ++k) {
                long long value = vertex_term(weights[v], k);
                for (const std::size_t c : adj[v]) {
                    if (c == parent[v]) {
                        continue;
                    }
                    long long best = kUnreachable;
                    for (long long j = 1; j <= bound; ++j) {
                        if (f[c][static_cast<std::size_t>(j)] == kUnreachable) {
                            continue;
                        }
                        best = std::max(best, f[c][static_cast<std::size_t>(j)] + 2 * k * j);
                    }
                    if (best == kUnreachable) {
                        value = kUnreachable;
                        break;
                    }
                    value += best;
                }
                f[v][static_cast<std::size_t>(k)] = value;
            }
        }
        long long best = kUnreachable;
        for (long long k = 1; k <= bound; ++k) {
            best = std::max(best, f[0][static_cast<std::size_t>(k)]);
        }
        return best;
    }
};

} // namespace

MaxPaResult max_pa_bounded(const WeightedDualGraph& g, long long bound,
                           const MaxPaLimits& limits) {
    if (g.empty()) {
        throw InputError("bounded genus maximum of an empty graph");
    }
    if (!is_connected(g)) {
        throw InputError("bounded genus maximum requires a connected graph");
    }
    if (bound < 1) {
        throw InputError("bound must be at least 1");
    }
    const std::vector<std::string> ids = g.vertex_ids();
    const std::size_t n = ids.size();
    std::vector<long long> weights(n);
    std::vector<std::vector<std::size_t>> adj(n);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        weights[i] = g.weight(ids[i]);
        if (weights[i] > 1000000 || weights[i] < -1000000) {
            throw InputError("weights too large for the bounded search");
        }
        for (const auto& nb : g.neighbors(ids[i])) {
            const auto j = static_cast<std::size_t>(
                std::lower_bound(ids.begin(), ids.end(), nb) - ids.begin());
            adj[i].push_back(j);
            if (i < j) {
                edges.emplace_back(i, j);
            }
        }
    }

    std::vector<long long> coeffs(n, 1);
    long long best_q;
    if (is_tree(g)) {
        const double work = static_cast<double>(n) * static_cast<double>(bound) *
                            static_cast<double>(bound);
        if (work > limits.tree_work) {
            throw InputError("bounded enumeration is infeasible at this size");
        }
        const TreeDp dp{ids, weights, adj, bound};
        std::vector<long long> lo(n, 1), hi(n, bound);
        best_q = dp.solve(lo, hi);
        // Fix coefficients in id order, always keeping the smallest value
        // that still attains the maximum: the result is the
        // lexicographically least witness.
        for (std::size_t v = 0; v < n; ++v) {
            bool fixed = false;
            for (long long k = 1; k <= bound; ++k) {
                lo[v] = k;
                hi[v] = k;
                if (dp.solve(lo, hi) == best_q) {
                    coeffs[v] = k;
                    fixed = true;
                    break;
                }
            }
            if (!fixed) {
                throw InvariantViolation("witness extraction lost the maximum");
            }
        }
    } else {
        if (static_cast<double>(n) * std::log2(static_cast<double>(bound) + 1) >
            limits.enumeration_log2) {
            throw InputError("bounded enumeration is infeasible at this size");
        }
        std::vector<long long> z(n, 1);
        auto q_of = [&]() {
            long long q = 0;
            for (std::size_t i = 0; i < n; ++i) {
                q += vertex_term(weights[i], z[i]);
            }
            for (const auto& [a, b] : edges) {
                q += 2 * z[a] * z[b];
            }
            return q;
        };
        best_q = q_of();
        // Ascending odometer over [1, bound]^n in lexicographic order; only
        // strictly better values replace the incumbent, so the first
        // maximizer seen is the lexicographically least.
        for (;;) {
            std::size_t pos = n;
            while (pos > 0 && z[pos - 1] == bound) {
                z[pos - 1] = 1;
                --pos;
            }
            if (pos == 0) {
                break;
            }
            z[pos - 1] += 1;
            const long long q = q_of();
            if (q > best_q) {
                best_q = q;
                coeffs = z;
            }
        }
    }

    std::map<std::string, Rat> witness;
    for (std::size_t i = 0; i < n; ++i) {
        witness[ids[i]] = Rat(coeffs[i]);
    }
    MaxPaResult result{Int(best_q) / 2 + 1, Cycle(g, std::move(witness))};
    return result;
}

} // namespace bdg
