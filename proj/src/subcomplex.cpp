#include "rsc/subcomplex.hpp"

#include <algorithm>

#include "rsc/errors.hpp"

namespace rsc {

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const SimplicialComplex& pattern, const SimplicialComplex& host, bool first_only)
        : host_(host), first_only_(first_only) {
        if (pattern.empty())
            throw InputError("pattern complex is empty");
        plan(pattern);
        host_adj_.resize(host.n_vertices());
        for (const auto& e : host.simplices(1)) {
            host_adj_[e[0]].push_back(e[1]);
            host_adj_[e[1]].push_back(e[0]);
        }
        host_vertices_ = host.vertices();
        used_.assign(host.n_vertices(), false);
        image_.assign(pattern.n_vertices(), 0);
    }

    std::uint64_t run() {
        if (order_.size() > host_vertices_.size())
            return 0;
        extend(0);
        return found_;
    }

private:
    /// Orders pattern vertices so each one (after the first of its component) has a placed
    /// neighbour, preferring high degree; records which simplices close at each step.
    void plan(const SimplicialComplex& pattern) {
        const auto verts = pattern.vertices();
        std::vector<std::vector<Vertex>> adj(pattern.n_vertices());
        for (const auto& e : pattern.simplices(1)) {
            adj[e[0]].push_back(e[1]);
            adj[e[1]].push_back(e[0]);
        }
        std::vector<int> placed_nbrs(pattern.n_vertices(), 0);
        std::vector<bool> placed(pattern.n_vertices(), false);
        for (std::size_t step = 0; step < verts.size(); ++step) {
            Vertex best = 0;
            bool have = false;
            for (Vertex v : verts) {
                if (placed[v])
                    continue;
                if (!have || placed_nbrs[v] > placed_nbrs[best] ||
                    (placed_nbrs[v] == placed_nbrs[best] && adj[v].size() > adj[best].size())) {
                    best = v;
                    have = true;
                }
            }
            placed[best] = true;
            order_.push_back(best);
            for (Vertex u : adj[best])
                ++placed_nbrs[u];
        }

        std::vector<std::size_t> position(pattern.n_vertices(), 0);
        for (std::size_t i = 0; i < order_.size(); ++i)
            position[order_[i]] = i;
        closing_.resize(order_.size());
        anchor_.assign(order_.size(), -1);
        for (int d = 1; d <= pattern.dim(); ++d) {
            for (const auto& s : pattern.simplices(d)) {
                std::size_t last = 0;
                for (Vertex v : s)
                    last = std::max(last, position[v]);
                closing_[last].push_back(s);
            }
        }
        for (std::size_t i = 1; i < order_.size(); ++i) {
            for (Vertex u : adj[order_[i]]) {
                if (position[u] < i) {
                    anchor_[i] = static_cast<int>(position[u]);
                    break;
                }
            }
        }
    }

    bool consistent(std::size_t step) const {
        for (const auto& s : closing_[step]) {
            std::vector<Vertex> img;
            img.reserve(s.size());
            for (Vertex v : s)
                img.push_back(image_[v]);
            std::sort(img.begin(), img.end());
            if (!host_.contains(Simplex(std::move(img))))
                return false;
        }
        return true;
    }

    void extend(std::size_t step) {
        if (step == order_.size()) {
            ++found_;
            return;
        }
        const auto& candidates = anchor_[step] >= 0 ? host_adj_[image_[order_[anchor_[step]]]] : host_vertices_;
        for (Vertex h : candidates) {
            if (used_[h])
                continue;
            image_[order_[step]] = h;
            if (!consistent(step))
                continue;
            used_[h] = true;
            extend(step + 1);
            used_[h] = false;
            if (first_only_ && found_ > 0)
                return;
        }
    }

    const SimplicialComplex& host_;
    bool first_only_;
    std::vector<Vertex> order_;
    std::vector<std::vector<Simplex>> closing_;
    std::vector<int> anchor_;
    std::vector<std::vector<Vertex>> host_adj_;
    std::vector<Vertex> host_vertices_;
    std::vector<bool> used_;
    std::vector<Vertex> image_;
    std::uint64_t found_ = 0;
};

} // namespace

std::uint64_t count_embeddings(const SimplicialComplex& pattern, const SimplicialComplex& host) {
    return EmbeddingSearch(pattern, host, false).run();
}

CopyCount count_subcomplex_copies(const SimplicialComplex& pattern, const SimplicialComplex& host) {
    CopyCount c;
    c.embeddings = count_embeddings(pattern, host);
    c.automorphisms = count_embeddings(pattern, pattern);
    c.copies = c.embeddings / c.automorphisms;
    return c;
}

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.f_vector() != b.f_vector())
        return false;
    if (a.empty())
        return true;
    return EmbeddingSearch(a, b, true).run() > 0;
}

} // namespace rsc
