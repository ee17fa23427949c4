#include "rsc/cohomology.hpp"

namespace rsc {

template class Cohomology<Rational>;
template class Cohomology<F2>;
template class Cohomology<F3>;
template class Cohomology<F5>;
template class Cohomology<F7>;

std::vector<int> betti(const SimplicialComplex& k, Field field) {
    return visit_field(field, [&](auto tag) { return betti<typename decltype(tag)::type>(k); });
}

int cup_length(const SimplicialComplex& k, Field field) {
    return visit_field(field, [&](auto tag) { return cup_length<typename decltype(tag)::type>(k); });
}

} // namespace rsc
