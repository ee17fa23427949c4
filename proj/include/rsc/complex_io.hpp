#ifndef RSC_COMPLEX_IO_HPP
#define RSC_COMPLEX_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>

#include "rsc/complex.hpp"

namespace rsc {

// Complex text format:
//
//   # comment
//   n 7
//   0 1 3
//   1 2 4
//
// The first non-comment line is `n <vertex count>`; each further line is one facet given as
// strictly ascending vertex labels. `#` starts a comment anywhere on a line. Only facets are
// stored; the closure is recomputed on load.

SimplicialComplex read_complex(std::istream& in);
SimplicialComplex load_complex(const std::filesystem::path& path);

void write_complex(std::ostream& out, const SimplicialComplex& k, const std::string& comment = {});
void save_complex(const std::filesystem::path& path, const SimplicialComplex& k, const std::string& comment = {});

} // namespace rsc

#endif // RSC_COMPLEX_IO_HPP
