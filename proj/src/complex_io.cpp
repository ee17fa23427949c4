#include "rsc/complex_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rsc/errors.hpp"

namespace rsc {

namespace {

std::vector<std::uint64_t> parse_integers(const std::string& text, std::size_t line_no) {
    std::vector<std::uint64_t> out;
    std::istringstream tokens(text);
    std::string tok;
    while (tokens >> tok) {
        std::uint64_t value = 0;
        const auto* first = tok.data();
        const auto* last = tok.data() + tok.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last)
            throw ParseError(line_no, "expected a non-negative integer, got '" + tok + "'");
        out.push_back(value);
    }
    return out;
}

} // namespace

SimplicialComplex read_complex(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::size_t> n;
    std::vector<Simplex> facets;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        if (!n) {
            std::istringstream head(line);
            std::string key;
            head >> key;
            if (key != "n")
                throw ParseError(line_no, "expected header 'n <vertex count>'");
            std::string rest;
            std::getline(head, rest);
            auto values = parse_integers(rest, line_no);
            if (values.size() != 1)
                throw ParseError(line_no, "header needs exactly one vertex count");
            n = values[0];
            continue;
        }
        auto values = parse_integers(line, line_no);
        std::vector<Vertex> v;
        for (auto x : values) {
            if (x >= *n)
                throw ParseError(line_no, "vertex " + std::to_string(x) + " out of range for n = " + std::to_string(*n));
            if (!v.empty() && x <= v.back())
                throw ParseError(line_no, "facet vertices must be strictly ascending");
            v.push_back(static_cast<Vertex>(x));
        }
        facets.emplace_back(std::move(v));
    }
    if (!n)
        throw ParseError(line_no, "missing header 'n <vertex count>'");
    return SimplicialComplex::from_facets(facets, *n);
}

SimplicialComplex load_complex(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open complex file " + path.string());
    return read_complex(in);
}

void write_complex(std::ostream& out, const SimplicialComplex& k, const std::string& comment) {
    if (!comment.empty()) {
        std::istringstream lines(comment);
        std::string line;
        while (std::getline(lines, line))
            out << "# " << line << '\n';
    }
    out << "n " << k.n_vertices() << '\n';
    for (const auto& f : k.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i)
            out << (i ? " " : "") << f[i];
        out << '\n';
    }
}

void save_complex(const std::filesystem::path& path, const SimplicialComplex& k, const std::string& comment) {
    std::ofstream out(path);
    if (!out)
        throw InputError("cannot write complex file " + path.string());
    write_complex(out, k, comment);
}

} // namespace rsc
