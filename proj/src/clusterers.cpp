#include "aucc/clusterers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>

#include "aucc/error.hpp"
#include "aucc/rng.hpp"

namespace aucc {

LinkageKind linkage_from_string(std::string_view s) {
    if (s == "single") return LinkageKind::single;
    if (s == "average") return LinkageKind::average;
    if (s == "complete") return LinkageKind::complete;
    if (s == "ward") return LinkageKind::ward;
    throw input_error("unknown linkage: " + std::string(s));
}

const char* to_string(LinkageKind k) {
    switch (k) {
        case LinkageKind::single: return "single";
        case LinkageKind::average: return "average";
        case LinkageKind::complete: return "complete";
        case LinkageKind::ward: return "ward";
    }
    return "?";
}

Dendrogram::Dendrogram(std::size_t n_leaves, std::vector<MergeRecord> merges)
    : n_(n_leaves), merges_(std::move(merges)) {
    if (n_ < 2) throw input_error("dendrogram needs at least 2 leaves");
    if (merges_.size() != n_ - 1)
        throw input_error("dendrogram needs exactly n-1 merges");
    for (std::size_t t = 0; t < merges_.size(); ++t) {
        const auto& mr = merges_[t];
        if (mr.left >= mr.right || mr.right >= n_ + t)
            throw input_error("merge " + std::to_string(t) + " has invalid node ids");
    }
}

namespace {

struct Dsu {
    std::vector<std::size_t> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(b)] = find(a); }
};

} // namespace

Partition Dendrogram::cut(std::size_t k) const {
    if (k < 2 || k > n_ - 1)
        throw degenerate_partition_error("cut needs 2 <= k <= n-1");
    Dsu dsu(n_);
    // rep[node] = one leaf inside the cluster that node denotes
    std::vector<std::size_t> rep(n_ + merges_.size());
    std::iota(rep.begin(), rep.begin() + static_cast<std::ptrdiff_t>(n_), 0);
    for (std::size_t t = 0; t < n_ - k; ++t) {
        const auto& mr = merges_[t];
        dsu.unite(rep[mr.left], rep[mr.right]);
        rep[n_ + t] = rep[mr.left];
    }
    std::vector<int> labels(n_);
    for (std::size_t i = 0; i < n_; ++i)
        labels[i] = static_cast<int>(dsu.find(i));
    return Partition(labels);
}

void write_dendrogram_csv(std::ostream& out, const Dendrogram& dg) {
    out << "step,left,right,height\n";
    char buf[128];
    const auto& merges = dg.merges();
    for (std::size_t t = 0; t < merges.size(); ++t) {
        std::snprintf(buf, sizeof buf, "%zu,%zu,%zu,%.15g", t, merges[t].left,
                      merges[t].right, merges[t].height);
        out << buf << '\n';
    }
}

Dendrogram agglomerate(const DissimilarityMatrix& d, LinkageKind kind) {
    if (d.orientation() != ScoreOrientation::dissimilarity)
        throw input_error("agglomeration needs distance values, not a "
                          "similarity-oriented matrix");
    const std::size_t n = d.size();
    const bool squared = kind == LinkageKind::ward;

    // working copy of the condensed matrix, updated in place; slot = original
    // object index, alive while that slot still denotes a cluster
    std::vector<double> work(d.condensed().begin(), d.condensed().end());
    if (squared)
        for (double& v : work) v *= v;
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> sizes(n, 1);
    std::vector<std::size_t> node(n);
    std::iota(node.begin(), node.end(), 0);

    auto slot_pair = [n](std::size_t a, std::size_t b) {
        return a < b ? pair_index(a, b, n) : pair_index(b, a, n);
    };

    std::vector<MergeRecord> merges;
    merges.reserve(n - 1);
    for (std::size_t step = 0; step + 1 < n; ++step) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t bi = 0, bj = 0;
        std::size_t best_l = 0, best_r = 0;
        bool found = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!alive[j]) continue;
                const double v = work[pair_index(i, j, n)];
                const std::size_t l = std::min(node[i], node[j]);
                const std::size_t r = std::max(node[i], node[j]);
                if (!found || v < best ||
                    (v == best && (l < best_l || (l == best_l && r < best_r)))) {
                    found = true;
                    best = v;
                    bi = i;
                    bj = j;
                    best_l = l;
                    best_r = r;
                }
            }
        }
        merges.push_back({best_l, best_r, squared ? std::sqrt(best) : best});

        const double ni = static_cast<double>(sizes[bi]);
        const double nj = static_cast<double>(sizes[bj]);
        for (std::size_t t = 0; t < n; ++t) {
            if (!alive[t] || t == bi || t == bj) continue;
            const double dit = work[slot_pair(bi, t)];
            const double djt = work[slot_pair(bj, t)];
            double merged;
            switch (kind) {
                case LinkageKind::single:
                    merged = std::min(dit, djt);
                    break;
                case LinkageKind::complete:
                    merged = std::max(dit, djt);
                    break;
                case LinkageKind::average:
                    merged = (ni * dit + nj * djt) / (ni + nj);
                    break;
                case LinkageKind::ward: {
                    const double nt = static_cast<double>(sizes[t]);
                    merged = ((ni + nt) * dit + (nj + nt) * djt - nt * best) /
                             (ni + nj + nt);
                    break;
                }
                default:
                    throw std::logic_error("unreachable linkage kind");
            }
            work[slot_pair(bi, t)] = merged;
        }
        sizes[bi] += sizes[bj];
        alive[bj] = false;
        node[bi] = n + step;
    }
    return Dendrogram(n, std::move(merges));
}

namespace {

bool rows_equal(const Dataset& data, std::size_t a, std::size_t b) {
    for (std::size_t f = 0; f < data.dim(); ++f)
        if (data(a, f) != data(b, f)) return false;
    return true;
}

std::size_t distinct_rows(const Dataset& data) {
    std::vector<std::size_t> idx(data.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        for (std::size_t f = 0; f < data.dim(); ++f)
            if (data(a, f) != data(b, f)) return data(a, f) < data(b, f);
        return false;
    });
    std::size_t distinct = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (!rows_equal(data, idx[i - 1], idx[i])) ++distinct;
    return distinct;
}

double sq_dist(const Dataset& data, std::size_t i, const double* c) {
    double acc = 0.0;
    for (std::size_t f = 0; f < data.dim(); ++f) {
        const double dv = data(i, f) - c[f];
        acc += dv * dv;
    }
    return acc;
}

struct LloydRun {
    std::vector<int> labels;
    std::vector<double> centroids;
    double sse = 0.0;
    std::size_t iterations = 0;
    std::vector<double> mse_history;
};

LloydRun lloyd(const Dataset& data, std::size_t k, std::uint64_t seed,
               std::size_t max_iter) {
    const std::size_t n = data.size();
    const std::size_t dim = data.dim();

    // Forgy start: first k pairwise-distinct points of a seeded shuffle
    Rng rng(seed);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    std::vector<double> centroids;
    centroids.reserve(k * dim);
    std::vector<std::size_t> chosen;
    for (std::size_t cand : perm) {
        bool dup = false;
        for (std::size_t c : chosen)
            if (rows_equal(data, c, cand)) {
                dup = true;
                break;
            }
        if (dup) continue;
        chosen.push_back(cand);
        const auto row = data.row(cand);
        centroids.insert(centroids.end(), row.begin(), row.end());
        if (chosen.size() == k) break;
    }

    LloydRun run;
    run.labels.assign(n, -1);
    std::vector<int> prev(n, -1);
    std::vector<std::size_t> counts(k);

    for (std::size_t it = 0; it < max_iter; ++it) {
        // assign, ties to the lowest centroid index
        for (std::size_t i = 0; i < n; ++i) {
            double best = std::numeric_limits<double>::infinity();
            int best_l = 0;
            for (std::size_t l = 0; l < k; ++l) {
                const double v = sq_dist(data, i, centroids.data() + l * dim);
                if (v < best) {
                    best = v;
                    best_l = static_cast<int>(l);
                }
            }
            run.labels[i] = best_l;
        }

        // repair empty clusters: pull the farthest point out of the largest
        // cluster (fresh mean), lowest indices on every tie
        std::fill(counts.begin(), counts.end(), 0);
        for (int l : run.labels) ++counts[static_cast<std::size_t>(l)];
        for (std::size_t empty = 0; empty < k; ++empty) {
            if (counts[empty] != 0) continue;
            std::size_t largest = 0;
            for (std::size_t l = 1; l < k; ++l)
                if (counts[l] > counts[largest]) largest = l;
            std::vector<double> mean(dim, 0.0);
            for (std::size_t i = 0; i < n; ++i)
                if (run.labels[i] == static_cast<int>(largest))
                    for (std::size_t f = 0; f < dim; ++f) mean[f] += data(i, f);
            for (double& v : mean) v /= static_cast<double>(counts[largest]);
            double far = -1.0;
            std::size_t far_i = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (run.labels[i] != static_cast<int>(largest)) continue;
                const double v = sq_dist(data, i, mean.data());
                if (v > far) {
                    far = v;
                    far_i = i;
                }
            }
            run.labels[far_i] = static_cast<int>(empty);
            --counts[largest];
            ++counts[empty];
        }

        // update means
        std::fill(centroids.begin(), centroids.end(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double* c = centroids.data() +
                        static_cast<std::size_t>(run.labels[i]) * dim;
            for (std::size_t f = 0; f < dim; ++f) c[f] += data(i, f);
        }
        for (std::size_t l = 0; l < k; ++l)
            for (std::size_t f = 0; f < dim; ++f)
                centroids[l * dim + f] /= static_cast<double>(counts[l]);

        double sse = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            sse += sq_dist(data, i,
                           centroids.data() +
                               static_cast<std::size_t>(run.labels[i]) * dim);
        run.mse_history.push_back(sse / static_cast<double>(n));
        run.sse = sse;
        run.iterations = it + 1;
        if (run.labels == prev) break;
        prev = run.labels;
    }
    run.centroids = std::move(centroids);
    return run;
}

} // namespace

KMeansResult kmeans(const Dataset& data, std::size_t k, std::size_t n_init,
                    std::uint64_t seed, std::size_t max_iter) {
    const std::size_t n = data.size();
    if (k < 2 || k > n - 1)
        throw degenerate_partition_error("kmeans needs 2 <= k <= n-1");
    if (n_init < 1) throw input_error("kmeans needs n_init >= 1");
    if (distinct_rows(data) < k)
        throw input_error("kmeans needs at least k distinct points");

    LloydRun best;
    std::size_t best_init = 0;
    for (std::size_t init = 0; init < n_init; ++init) {
        LloydRun run = lloyd(data, k, mix_seed(seed, 0x6b6d65616e73ULL, init),
                             max_iter);
        if (init == 0 || run.sse < best.sse) {
            best = std::move(run);
            best_init = init;
        }
    }

    // compact labels by first appearance and keep centroid rows aligned
    const std::size_t dim = data.dim();
    std::vector<int> remap(k, -1);
    int next = 0;
    for (int l : best.labels)
        if (remap[static_cast<std::size_t>(l)] < 0)
            remap[static_cast<std::size_t>(l)] = next++;
    std::vector<double> centroids(k * dim);
    for (std::size_t l = 0; l < k; ++l) {
        const auto dst = static_cast<std::size_t>(remap[l]);
        for (std::size_t f = 0; f < dim; ++f)
            centroids[dst * dim + f] = best.centroids[l * dim + f];
    }
    std::vector<int> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = remap[static_cast<std::size_t>(best.labels[i])];

    return {Partition(labels), std::move(centroids),
            best.sse / static_cast<double>(n), best.iterations, best_init,
            std::move(best.mse_history)};
}

} // namespace aucc
