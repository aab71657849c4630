#include "idealgraph/invariants.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace idealgraph {

namespace {

// descending degree, ties ascending divisor value
std::vector<std::size_t> search_order(const IdealGraph& g) {
    std::vector<std::size_t> order(g.vertex_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<std::size_t> degree(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) degree[i] = g.adj[i].count();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (degree[a] != degree[b]) return degree[a] > degree[b];
        return g.values[a] < g.values[b];
    });
    return order;
}

// adjacency rows permuted into search order
std::vector<Bitset> reorder_adjacency(const IdealGraph& g,
                                      const std::vector<std::size_t>& order) {
    const std::size_t v = order.size();
    std::vector<std::size_t> pos(v);
    for (std::size_t i = 0; i < v; ++i) pos[order[i]] = i;
    std::vector<Bitset> rows(v, Bitset(v));
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (g.adj[order[i]].test(order[j])) {
                rows[i].set(j);
                rows[j].set(i);
            }
    return rows;
}

class MaxCliqueSearch {
  public:
    explicit MaxCliqueSearch(const std::vector<Bitset>& adj) : adj_(adj), n_(adj.size()) {}

    std::vector<std::size_t> run() {
        best_.clear();
        current_.clear();
        if (n_ == 0) return best_;
        Bitset cand(n_);
        cand.set_all();
        expand(cand);
        return best_;
    }

  private:
    // Tomita-style: greedy-color the candidate set, then branch in reverse
    // color order; a branch is cut when |current| + color <= |best|.
    void expand(const Bitset& cand) {
        std::vector<std::size_t> verts;
        std::vector<int> color;
        greedy_color(cand, verts, color);

        Bitset rest = cand;
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current_.size() + static_cast<std::size_t>(color[i]) <= best_.size()) return;
            std::size_t v = verts[i];
            current_.push_back(v);
            Bitset next = rest & adj_[v];
            if (next.any())
                expand(next);
            else if (current_.size() > best_.size())
                best_ = current_;
            current_.pop_back();
            rest.reset(v);
        }
    }

    // sequential greedy coloring; verts come out sorted by color ascending
    void greedy_color(const Bitset& cand, std::vector<std::size_t>& verts,
                      std::vector<int>& color) const {
        Bitset uncolored = cand;
        int c = 0;
        while (uncolored.any()) {
            ++c;
            Bitset cls = uncolored;
            for (std::size_t v = cls.find_first(); v != Bitset::npos; v = cls.find_next(v)) {
                verts.push_back(v);
                color.push_back(c);
                uncolored.reset(v);
                cls.and_not(adj_[v]);
            }
        }
    }

    const std::vector<Bitset>& adj_;
    std::size_t n_;
    std::vector<std::size_t> current_;
    std::vector<std::size_t> best_;
};

class ColoringSearch {
  public:
    ColoringSearch(const std::vector<Bitset>& adj, int k)
        : adj_(adj), n_(adj.size()), k_(k), classes_(static_cast<std::size_t>(k), Bitset(n_)),
          assigned_(n_, -1) {}

    bool run() { return place(0, 0); }

    const std::vector<int>& assignment() const { return assigned_; }

  private:
    bool place(std::size_t v, int used) {
        if (v == n_) return true;
        int limit = std::min(k_, used + 1);  // at most one brand-new color
        for (int c = 0; c < limit; ++c) {
            if (classes_[c].intersects(adj_[v])) continue;
            classes_[c].set(v);
            assigned_[v] = c;
            if (place(v + 1, std::max(used, c + 1))) return true;
            classes_[c].reset(v);
            assigned_[v] = -1;
        }
        return false;
    }

    const std::vector<Bitset>& adj_;
    std::size_t n_;
    int k_;
    std::vector<Bitset> classes_;
    std::vector<int> assigned_;
};

}  // namespace

CliqueResult clique_number(const IdealGraph& g, int cap) {
    const std::size_t v = g.vertex_count();
    if (static_cast<int>(v) > cap) throw SearchInfeasibleError(v, cap);

    CliqueResult r;
    if (v == 0) return r;

    auto order = search_order(g);
    auto rows = reorder_adjacency(g, order);
    auto clique = MaxCliqueSearch(rows).run();

    r.omega = static_cast<int>(clique.size());
    r.witness.reserve(clique.size());
    for (std::size_t i : clique) r.witness.push_back(order[i]);
    std::sort(r.witness.begin(), r.witness.end());

    for (std::size_t i = 0; i < r.witness.size(); ++i)
        for (std::size_t j = i + 1; j < r.witness.size(); ++j)
            if (!g.has_edge(r.witness[i], r.witness[j]))
                throw std::logic_error("clique search produced a non-clique witness");
    return r;
}

std::optional<std::vector<int>> try_color(const IdealGraph& g, int k) {
    const std::size_t v = g.vertex_count();
    if (v == 0) return std::vector<int>{};
    if (k <= 0) return std::nullopt;

    auto order = search_order(g);
    auto rows = reorder_adjacency(g, order);
    ColoringSearch search(rows, k);
    if (!search.run()) return std::nullopt;

    std::vector<int> colors(v, -1);
    for (std::size_t i = 0; i < v; ++i) colors[order[i]] = search.assignment()[i];
    return colors;
}

ColoringResult chromatic_number(const IdealGraph& g, int cap, int omega_hint) {
    const std::size_t v = g.vertex_count();
    if (static_cast<int>(v) > cap) throw SearchInfeasibleError(v, cap);

    ColoringResult r;
    if (v == 0) return r;

    int lower = omega_hint >= 1 ? omega_hint : clique_number(g, cap).omega;
    for (int k = lower;; ++k) {
        auto colors = try_color(g, k);
        if (!colors) continue;
        r.chi = k;
        r.colors = std::move(*colors);
        break;
    }

    // the coloring must be proper and use exactly chi colors
    int max_color = -1;
    for (int c : r.colors) max_color = std::max(max_color, c);
    if (max_color + 1 != r.chi)
        throw std::logic_error("coloring search used an unexpected color count");
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j)
            if (g.has_edge(i, j) && r.colors[i] == r.colors[j])
                throw std::logic_error("coloring search produced an improper coloring");
    return r;
}

bool check_weakly_perfect(const Factorization& f, int cap) {
    IdealGraph g = build_graph(f);
    CliqueResult cl = clique_number(g, cap);
    ColoringResult co = chromatic_number(g, cap, cl.omega);
    return cl.omega == co.chi;
}

InvariantReport invariant_report(const Factorization& f, int cap) {
    IdealGraph g = build_graph(f);
    CliqueResult cl = clique_number(g, cap);
    ColoringResult co = chromatic_number(g, cap, cl.omega);

    InvariantReport rep;
    rep.n = f.n;
    rep.omega = cl.omega;
    rep.chi = co.chi;
    for (std::size_t idx : cl.witness) rep.max_clique_witness.push_back(g.values[idx]);
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        rep.coloring_witness.emplace_back(g.values[i], co.colors[i]);
    return rep;
}

}  // namespace idealgraph
