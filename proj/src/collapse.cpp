#include "rsc/collapse.hpp"

#include <random>

#include "rsc/errors.hpp"

namespace rsc {

namespace {

/// Face/coface incidence of a complex over global ids (dimension-major order).
struct Incidence {
    std::vector<const Simplex*> simplex;
    std::vector<int> dim;
    std::vector<std::vector<std::size_t>> faces;
    std::vector<std::vector<std::size_t>> cofaces;

    explicit Incidence(const SimplicialComplex& k) {
        std::vector<std::size_t> offset;
        for (int d = 0; d <= k.dim(); ++d) {
            offset.push_back(simplex.size());
            for (const auto& s : k.simplices(d)) {
                simplex.push_back(&s);
                dim.push_back(d);
            }
        }
        faces.resize(simplex.size());
        cofaces.resize(simplex.size());
        for (std::size_t id = 0; id < simplex.size(); ++id) {
            const auto& s = *simplex[id];
            if (s.dim() == 0)
                continue;
            for (std::size_t j = 0; j < s.size(); ++j) {
                const auto f = offset[s.dim() - 1] + *k.index_of(s.face_without(j));
                faces[id].push_back(f);
                cofaces[f].push_back(id);
            }
        }
    }
};

struct RunResult {
    std::vector<bool> alive;
    std::vector<FreePair> steps;
    int top_dim = -1;
};

RunResult run_once(const Incidence& inc, int d, std::mt19937_64& rng) {
    const auto n = inc.simplex.size();
    RunResult r;
    r.alive.assign(n, true);
    std::vector<std::size_t> live_cofaces(n);
    std::vector<std::size_t> per_dim;
    for (std::size_t id = 0; id < n; ++id) {
        live_cofaces[id] = inc.cofaces[id].size();
        if (static_cast<std::size_t>(inc.dim[id]) >= per_dim.size())
            per_dim.resize(inc.dim[id] + 1, 0);
        ++per_dim[inc.dim[id]];
    }

    std::vector<std::size_t> pool;
    std::vector<bool> in_pool(n, false);
    auto offer = [&](std::size_t id) {
        if (r.alive[id] && live_cofaces[id] == 1 && !in_pool[id]) {
            in_pool[id] = true;
            pool.push_back(id);
        }
    };
    for (std::size_t id = 0; id < n; ++id)
        offer(id);

    auto top = [&] {
        int t = static_cast<int>(per_dim.size()) - 1;
        while (t >= 0 && per_dim[t] == 0)
            --t;
        return t;
    };

    while (!pool.empty() && top() > d) {
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        const auto slot = pick(rng);
        const auto sigma = pool[slot];
        pool[slot] = pool.back();
        pool.pop_back();
        in_pool[sigma] = false;
        if (!r.alive[sigma] || live_cofaces[sigma] != 1)
            continue;
        std::size_t tau = n;
        for (auto c : inc.cofaces[sigma]) {
            if (r.alive[c]) {
                tau = c;
                break;
            }
        }
        if (inc.dim[tau] <= d)
            continue;

        r.alive[sigma] = false;
        r.alive[tau] = false;
        --per_dim[inc.dim[sigma]];
        --per_dim[inc.dim[tau]];
        r.steps.emplace_back(*inc.simplex[sigma], *inc.simplex[tau]);
        for (auto f : inc.faces[tau]) {
            if (f == sigma)
                continue;
            --live_cofaces[f];
            offer(f);
        }
        for (auto f : inc.faces[sigma]) {
            --live_cofaces[f];
            offer(f);
        }
    }
    r.top_dim = top();
    return r;
}

} // namespace

std::vector<FreePair> free_faces(const SimplicialComplex& k) {
    const Incidence inc(k);
    std::vector<FreePair> out;
    for (std::size_t id = 0; id < inc.simplex.size(); ++id) {
        if (inc.cofaces[id].size() == 1 && inc.cofaces[inc.cofaces[id][0]].empty())
            out.emplace_back(*inc.simplex[id], *inc.simplex[inc.cofaces[id][0]]);
    }
    return out;
}

CollapseResult collapse_to_dim(const SimplicialComplex& k, int d, std::uint64_t seed, int restarts) {
    if (d < 0)
        throw InputError("collapse target dimension must be non-negative");
    if (restarts < 1)
        throw InputError("collapse needs at least one restart");

    CollapseResult best{k, k.dim() <= d, 0, {}};
    if (best.success)
        return best;

    const Incidence inc(k);
    int best_top = k.dim();
    for (int attempt = 0; attempt < restarts; ++attempt) {
        std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                           static_cast<std::uint32_t>(attempt)};
        std::mt19937_64 rng(sseq);
        auto run = run_once(inc, d, rng);
        best.restarts_used = attempt + 1;
        if (run.top_dim < best_top || attempt == 0) {
            best_top = run.top_dim;
            std::vector<Simplex> kept;
            for (std::size_t id = 0; id < run.alive.size(); ++id) {
                if (run.alive[id])
                    kept.push_back(*inc.simplex[id]);
            }
            best.complex = SimplicialComplex::from_closed(std::move(kept), k.n_vertices());
            best.steps = std::move(run.steps);
        }
        if (best_top <= d) {
            best.success = true;
            break;
        }
    }
    return best;
}

} // namespace rsc
