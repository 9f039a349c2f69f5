#include "cognet/null_models.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include <Eigen/Dense>

#include "cognet/error.hpp"
#include "cognet/parallel.hpp"
#include "cognet/rng.hpp"

namespace cognet {

void NullEnsembleSpec::validate() const {
    if (n_samples < 1) throw InputError("null ensemble: n_samples must be >= 1");
    if (rewire_multiplier < 1) throw InputError("null ensemble: rewire_multiplier must be >= 1");
}

// ---------------------------------------------------------------- rewiring

namespace {

struct DisjointSets {
    std::vector<NodeId> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    NodeId find(NodeId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    bool unite(NodeId a, NodeId b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[std::max(a, b)] = std::min(a, b);
        return true;
    }
};

std::uint64_t edge_key(NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::size_t component_count(std::size_t n, const std::vector<Edge>& edges) {
    DisjointSets ds(n);
    std::size_t comps = n;
    for (const Edge& e : edges) comps -= ds.unite(e.u, e.v);
    return comps;
}

}  // namespace

Graph degree_rewire_sample(const Graph& g, const NullEnsembleSpec& spec, std::size_t index) {
    spec.validate();
    if (g.edge_count() < 2) throw InputError("degree_rewire: need at least 2 edges");
    const std::size_t n = g.node_count();
    const std::size_t m = g.edge_count();

    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::unordered_set<std::uint64_t> present;
    present.reserve(m * 2);
    for (const Edge& e : edges) present.insert(edge_key(e.u, e.v));
    const Components comps = connected_components(g);
    const std::size_t target_components = comps.count();

    struct Swap {
        std::size_t i, j;
        Edge old_i, old_j;
    };
    std::vector<Swap> batch;
    Rng rng = Rng::stream(spec.seed, kRewireStream, index);

    const std::size_t attempts = spec.rewire_multiplier * m;
    std::size_t done = 0;
    std::size_t window = 1;
    // Connectivity is verified after each window of attempts; a window that
    // disconnects a component is undone and the window shrinks.
    while (done < attempts) {
        const std::size_t len = std::min(window, attempts - done);
        batch.clear();
        for (std::size_t t = 0; t < len; ++t) {
            const std::size_t i = rng.below(m);
            const std::size_t j = rng.below(m);
            if (i == j) continue;
            NodeId a = edges[i].u, b = edges[i].v;
            NodeId c = edges[j].u, d = edges[j].v;
            if (rng.next() & 1) std::swap(c, d);
            // (a,b),(c,d) -> (a,d),(c,b)
            if (a == d || c == b) continue;
            if (comps.label[a] != comps.label[c]) continue;
            const auto k1 = edge_key(a, d), k2 = edge_key(c, b);
            if (present.contains(k1) || present.contains(k2)) continue;
            batch.push_back({i, j, edges[i], edges[j]});
            present.erase(edge_key(a, b));
            present.erase(edge_key(c, d));
            present.insert(k1);
            present.insert(k2);
            edges[i] = {std::min(a, d), std::max(a, d)};
            edges[j] = {std::min(c, b), std::max(c, b)};
        }
        done += len;
        if (batch.empty()) continue;
        if (component_count(n, edges) == target_components) {
            ++window;
            continue;
        }
        for (auto it = batch.rbegin(); it != batch.rend(); ++it) {
            present.erase(edge_key(edges[it->i].u, edges[it->i].v));
            present.erase(edge_key(edges[it->j].u, edges[it->j].v));
            edges[it->i] = it->old_i;
            edges[it->j] = it->old_j;
            present.insert(edge_key(it->old_i.u, it->old_i.v));
            present.insert(edge_key(it->old_j.u, it->old_j.v));
        }
        window = std::max<std::size_t>(1, window / 2);
    }
    return Graph(n, std::move(edges));
}

std::vector<Graph> degree_rewire(const Graph& g, const NullEnsembleSpec& spec) {
    spec.validate();
    std::vector<Graph> out(spec.n_samples);
    parallel_for(spec.n_samples, [&](std::size_t i) { out[i] = degree_rewire_sample(g, spec, i); });
    return out;
}

// ---------------------------------------------------------- label shuffle

SignedNetwork label_shuffle_sample(const SignedNetwork& snet, const NullEnsembleSpec& spec, std::size_t index) {
    spec.validate();
    std::vector<Valence> val(snet.valences().begin(), snet.valences().end());
    Rng rng = Rng::stream(spec.seed, kShuffleStream, index);
    rng.shuffle(std::span<Valence>(val));
    return SignedNetwork(snet.graph(), std::move(val));
}

std::vector<SignedNetwork> label_shuffle(const SignedNetwork& snet, const NullEnsembleSpec& spec) {
    spec.validate();
    std::vector<SignedNetwork> out(spec.n_samples);
    parallel_for(spec.n_samples, [&](std::size_t i) { out[i] = label_shuffle_sample(snet, spec, i); });
    return out;
}

// ---------------------------------------------------------------- soft CM

double FittedSoftCM::expected_weight(NodeId i, NodeId j) const {
    const double p = x[i] * x[j];
    return p / (1.0 - p);
}

std::vector<double> FittedSoftCM::expected_strengths() const {
    std::vector<double> s(x.size(), 0.0);
    for (NodeId i = 0; i < x.size(); ++i) {
        for (NodeId j = i + 1; j < x.size(); ++j) {
            const double w = expected_weight(i, j);
            s[i] += w;
            s[j] += w;
        }
    }
    return s;
}

double FittedSoftCM::expected_edge_count() const {
    double total = 0;
    for (NodeId i = 0; i < x.size(); ++i) {
        for (NodeId j = i + 1; j < x.size(); ++j) total += edge_probability(i, j);
    }
    return total;
}

namespace {

// In terms of t = theta_i + theta_j with x = exp(-theta):
//   expected weight  w(t) = 1 / (e^t - 1)
//   dw/dt            = -(w + w^2)
//   log-normalizer   log(1 - e^-t)
double mean_weight(double t) { return 1.0 / std::expm1(t); }
double log_partition(double t) { return std::log(-std::expm1(-t)); }

struct GroupedProblem {
    std::vector<double> strength;      // per group
    std::vector<double> multiplicity;  // per group

    std::size_t size() const { return strength.size(); }

    bool feasible(const Eigen::VectorXd& theta) const {
        for (std::size_t g = 0; g < size(); ++g) {
            if (multiplicity[g] >= 2 && !(2 * theta[g] > 0)) return false;
            for (std::size_t h = g + 1; h < size(); ++h) {
                if (!(theta[g] + theta[h] > 0)) return false;
            }
        }
        return true;
    }

    // Log-likelihood of the observed strengths (up to a constant).
    double loglik(const Eigen::VectorXd& theta) const {
        double l = 0;
        for (std::size_t g = 0; g < size(); ++g) {
            const double m = multiplicity[g];
            l -= m * theta[g] * strength[g];
            if (m >= 2) l += m * (m - 1) / 2 * log_partition(2 * theta[g]);
            for (std::size_t h = g + 1; h < size(); ++h) {
                l += m * multiplicity[h] * log_partition(theta[g] + theta[h]);
            }
        }
        return l;
    }

    Eigen::VectorXd expected(const Eigen::VectorXd& theta) const {
        Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(size()));
        for (std::size_t g = 0; g < size(); ++g) {
            if (multiplicity[g] >= 2) e[g] += (multiplicity[g] - 1) * mean_weight(2 * theta[g]);
            for (std::size_t h = g + 1; h < size(); ++h) {
                const double w = mean_weight(theta[g] + theta[h]);
                e[g] += multiplicity[h] * w;
                e[h] += multiplicity[g] * w;
            }
        }
        return e;
    }

    // Negated Hessian of loglik (positive definite).
    Eigen::MatrixXd curvature(const Eigen::VectorXd& theta) const {
        const auto k = static_cast<Eigen::Index>(size());
        Eigen::MatrixXd c = Eigen::MatrixXd::Zero(k, k);
        for (Eigen::Index g = 0; g < k; ++g) {
            const double mg = multiplicity[g];
            if (mg >= 2) {
                const double w = mean_weight(2 * theta[g]);
                c(g, g) += mg * (mg - 1) * 2 * (w + w * w);
            }
            for (Eigen::Index h = g + 1; h < k; ++h) {
                const double w = mean_weight(theta[g] + theta[h]);
                const double d = (w + w * w) * mg * multiplicity[h];
                c(g, h) += d;
                c(h, g) += d;
                c(g, g) += d;
                c(h, h) += d;
            }
        }
        return c;
    }
};

}  // namespace

FittedSoftCM fit_soft_weighted_cm(std::span<const double> strengths, const SoftCMOptions& options) {
    if (strengths.size() < 2) throw InputError("soft CM: need at least 2 nodes");
    for (double s : strengths) {
        if (!(s > 0) || !std::isfinite(s)) throw InputError("soft CM: all strengths must be positive");
    }

    FittedSoftCM fit;
    fit.target.assign(strengths.begin(), strengths.end());

    // Nodes with equal strength share a multiplier at the solution.
    std::map<double, std::size_t> group_of_strength;
    GroupedProblem prob;
    std::vector<std::size_t> group_of(strengths.size());
    for (NodeId v = 0; v < strengths.size(); ++v) {
        auto [it, inserted] = group_of_strength.emplace(strengths[v], fit.groups.size());
        if (inserted) {
            fit.groups.emplace_back();
            prob.strength.push_back(strengths[v]);
            prob.multiplicity.push_back(0);
        }
        fit.groups[it->second].push_back(v);
        prob.multiplicity[it->second] += 1;
        group_of[v] = it->second;
    }

    const auto k = static_cast<Eigen::Index>(prob.size());
    const double total = std::accumulate(strengths.begin(), strengths.end(), 0.0);
    Eigen::VectorXd theta(k);
    for (Eigen::Index g = 0; g < k; ++g) theta[g] = -std::log(prob.strength[g] / std::sqrt(total));
    double min_pair = 1e300;
    for (Eigen::Index g = 0; g < k; ++g) {
        if (prob.multiplicity[g] >= 2) min_pair = std::min(min_pair, 2 * theta[g]);
        for (Eigen::Index h = g + 1; h < k; ++h) min_pair = std::min(min_pair, theta[g] + theta[h]);
    }
    if (min_pair < 0.5) theta.array() += (0.5 - min_pair) / 2;

    const Eigen::Map<const Eigen::VectorXd> target(prob.strength.data(), k);
    double residual = (prob.expected(theta) - target).cwiseAbs().maxCoeff();
    std::size_t iter = 0;
    while (residual >= options.tolerance && iter < options.max_iters) {
        ++iter;
        const Eigen::VectorXd expected = prob.expected(theta);
        Eigen::VectorXd grad(k);
        for (Eigen::Index g = 0; g < k; ++g) grad[g] = prob.multiplicity[g] * (expected[g] - target[g]);
        const Eigen::MatrixXd curv = prob.curvature(theta);
        const Eigen::LDLT<Eigen::MatrixXd> ldlt(curv);
        Eigen::VectorXd step = ldlt.solve(grad);
        if (ldlt.info() != Eigen::Success || !step.allFinite()) step = grad / std::max(1.0, curv.diagonal().maxCoeff());

        // Damped Newton: halve until the step stays feasible and improves
        // the likelihood.
        const double l0 = prob.loglik(theta);
        const double slope = grad.dot(step);
        double alpha = 1.0;
        bool moved = false;
        for (int tries = 0; tries < 60; ++tries, alpha *= 0.5) {
            const Eigen::VectorXd cand = theta + alpha * step;
            if (!prob.feasible(cand)) continue;
            const double l1 = prob.loglik(cand);
            if (std::isfinite(l1) && l1 >= l0 + 1e-4 * alpha * slope) {
                theta = cand;
                moved = true;
                break;
            }
        }
        if (!moved) {
            // Likelihood is flat to machine precision; accept the smallest
            // feasible step if it still reduces the residual.
            const Eigen::VectorXd cand = theta + alpha * step;
            if (!prob.feasible(cand)) break;
            const double r = (prob.expected(cand) - target).cwiseAbs().maxCoeff();
            if (!(r < residual)) break;
            theta = cand;
        }
        residual = (prob.expected(theta) - target).cwiseAbs().maxCoeff();
    }

    fit.iterations = iter;
    fit.residual = residual;
    fit.x.resize(strengths.size());
    for (NodeId v = 0; v < strengths.size(); ++v) fit.x[v] = std::exp(-theta[static_cast<Eigen::Index>(group_of[v])]);
    if (!(residual < options.tolerance)) {
        std::ostringstream msg;
        msg << "soft CM fit did not converge after " << iter << " iterations (residual " << residual << ")";
        throw AnalysisError(msg.str());
    }
    return fit;
}

FittedSoftCM fit_soft_weighted_cm(const LexicalNetwork& net, const SoftCMOptions& options) {
    return fit_soft_weighted_cm(net.strengths(), options);
}

std::vector<double> WeightedGraph::strengths() const {
    std::vector<double> s(graph.node_count(), 0.0);
    for (EdgeId e = 0; e < graph.edge_count(); ++e) {
        s[graph.edge(e).u] += static_cast<double>(weights[e]);
        s[graph.edge(e).v] += static_cast<double>(weights[e]);
    }
    return s;
}

WeightedGraph sample_soft_cm_one(const FittedSoftCM& fit, const NullEnsembleSpec& spec, std::size_t index) {
    spec.validate();
    Rng rng = Rng::stream(spec.seed, kSoftCmStream, index);
    std::vector<Edge> edges;
    std::vector<std::uint64_t> weights;

    auto emit = [&](NodeId a, NodeId b, double p) {
        edges.push_back({a, b});
        weights.push_back(1 + rng.geometric(1.0 - p));
    };

    // Pairs within a block share one probability, so present pairs are
    // reached by geometric jumps instead of one draw per pair.
    const std::size_t k = fit.groups.size();
    for (std::size_t g = 0; g < k; ++g) {
        const auto& mg = fit.groups[g];
        for (std::size_t h = g; h < k; ++h) {
            const auto& mh = fit.groups[h];
            const double p = fit.x[mg.front()] * fit.x[mh.front()];
            if (!(p > 0)) continue;
            if (g == h) {
                const std::uint64_t size = mg.size();
                if (size < 2) continue;
                const std::uint64_t pairs = size * (size - 1) / 2;
                std::uint64_t row = 0, row_start = 0;
                for (std::uint64_t pos = rng.geometric(p); pos < pairs;) {
                    while (pos >= row_start + (size - 1 - row)) {
                        row_start += size - 1 - row;
                        ++row;
                    }
                    emit(mg[row], mg[row + 1 + (pos - row_start)], p);
                    const std::uint64_t skip = rng.geometric(p);
                    if (skip >= pairs) break;
                    pos += 1 + skip;
                }
            } else {
                const std::uint64_t pairs = static_cast<std::uint64_t>(mg.size()) * mh.size();
                for (std::uint64_t pos = rng.geometric(p); pos < pairs;) {
                    emit(mg[pos / mh.size()], mh[pos % mh.size()], p);
                    const std::uint64_t skip = rng.geometric(p);
                    if (skip >= pairs) break;
                    pos += 1 + skip;
                }
            }
        }
    }
    return {Graph(fit.node_count(), std::move(edges)), std::move(weights)};
}

std::vector<WeightedGraph> sample_soft_cm(const FittedSoftCM& fit, const NullEnsembleSpec& spec) {
    spec.validate();
    std::vector<WeightedGraph> out(spec.n_samples);
    parallel_for(spec.n_samples, [&](std::size_t i) { out[i] = sample_soft_cm_one(fit, spec, i); });
    return out;
}

}  // namespace cognet
