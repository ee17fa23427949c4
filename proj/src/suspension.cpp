#include "rsc/suspension.hpp"

#include "rsc/errors.hpp"

namespace rsc {

SimplicialComplex prime_suspension(const SimplicialComplex& k) {
    if (k.empty())
        throw InputError("prime suspension of an empty complex");
    const int d = k.dim();
    if (d < 1)
        throw InputError("prime suspension needs dimension >= 1");

    const auto apex = static_cast<Vertex>(k.n_vertices());
    const auto verts = k.vertices();
    const auto top = static_cast<std::size_t>(d + 2); // vertex count of a (d+1)-simplex

    std::vector<Simplex> out;
    // Every subset of the old vertex set with at most d+2 elements.
    std::vector<std::size_t> pick;
    for (std::size_t size = 1; size <= std::min(top, verts.size()); ++size) {
        pick.resize(size);
        for (std::size_t i = 0; i < size; ++i)
            pick[i] = i;
        while (true) {
            std::vector<Vertex> s;
            for (auto p : pick)
                s.push_back(verts[p]);
            out.emplace_back(std::move(s));
            std::size_t pos = size;
            while (pos > 0 && pick[pos - 1] == verts.size() - size + pos - 1)
                --pos;
            if (pos == 0)
                break;
            ++pick[pos - 1];
            for (auto q = pos; q < size; ++q)
                pick[q] = pick[q - 1] + 1;
        }
    }
    // The cone: apex joined to every simplex of K (dimensions stay <= d+1).
    out.push_back(Simplex{apex});
    for (int e = 0; e <= d; ++e) {
        for (const auto& s : k.simplices(e)) {
            std::vector<Vertex> v(s.begin(), s.end());
            v.push_back(apex);
            out.emplace_back(std::move(v));
        }
    }
    return SimplicialComplex::from_closed(std::move(out), k.n_vertices() + 1);
}

SimplicialComplex prime_suspension(const SimplicialComplex& k, int r) {
    if (r < 0)
        throw InputError("suspension count must be non-negative");
    SimplicialComplex out = k;
    for (int i = 0; i < r; ++i)
        out = prime_suspension(out);
    return out;
}

} // namespace rsc
