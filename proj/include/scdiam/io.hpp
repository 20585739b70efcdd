/**
 * Text formats.
 *
 * Complex:   `dim <d> vertices <n>` followed by one facet per line, d
 *            ascending vertex ids separated by single spaces.
 * Coloring:  `colors <c>` followed by `<vertex> <color>` lines with
 *            vertices 1..n in ascending order.
 *
 * Lines starting with `#` and blank lines are ignored on input. Writers emit
 * the canonical form, so write(read(write(x))) == write(x) byte for byte.
 */
#ifndef SCDIAM_IO_HPP
#define SCDIAM_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "scdiam/coloring.hpp"
#include "scdiam/complex.hpp"
#include "scdiam/constructions.hpp"
#include "scdiam/error.hpp"

namespace scdiam {

namespace detail {

inline bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no)
{
    while (std::getline(in, line))
    {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        return true;
    }
    return false;
}

[[noreturn]] inline void parse_fail(std::size_t line_no, const std::string& why)
{
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + why);
}

}   // namespace detail

inline void write_complex(std::ostream& out, const Complex& c)
{
    out << "dim " << c.facet_size() << " vertices " << c.n_vertices() << '\n';
    for (std::size_t i = 0; i < c.facet_count(); ++i)
    {
        auto f = c.facet(i);
        for (std::size_t k = 0; k < f.size(); ++k)
            out << (k ? " " : "") << f[k];
        out << '\n';
    }
}

inline Complex read_complex(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    if (!detail::next_content_line(in, line, line_no))
        detail::parse_fail(line_no, "missing header");
    std::istringstream header(line);
    std::string kw_dim, kw_vertices, rest;
    long long d = 0, n = 0;
    if (!(header >> kw_dim >> d >> kw_vertices >> n) || kw_dim != "dim" || kw_vertices != "vertices"
        || (header >> rest))
        detail::parse_fail(line_no, "expected `dim <d> vertices <n>`");
    if (d < 1 || n < 0 || n > static_cast<long long>(UINT32_MAX))
        detail::parse_fail(line_no, "header values out of range");

    FaceList facets(static_cast<int>(d));
    std::vector<Vertex> facet;
    while (detail::next_content_line(in, line, line_no))
    {
        std::istringstream row(line);
        facet.clear();
        long long v;
        while (row >> v)
        {
            if (v < 0 || v > static_cast<long long>(UINT32_MAX))
                detail::parse_fail(line_no, "vertex id out of range");
            facet.push_back(static_cast<Vertex>(v));
        }
        if (!row.eof())
            detail::parse_fail(line_no, "non-numeric token");
        if (facet.size() != static_cast<std::size_t>(d))
            detail::parse_fail(line_no, "facet has " + std::to_string(facet.size()) + " vertices, expected "
                                            + std::to_string(d));
        facets.push_back(facet);
    }
    return Complex(static_cast<int>(d), static_cast<Vertex>(n), std::move(facets));
}

inline void write_coloring(std::ostream& out, const Coloring& f)
{
    out << "colors " << f.color_count() << '\n';
    for (Vertex v = 1; v <= f.vertex_count(); ++v)
        out << v << ' ' << f(v) << '\n';
}

inline Coloring read_coloring(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    if (!detail::next_content_line(in, line, line_no))
        detail::parse_fail(line_no, "missing header");
    std::istringstream header(line);
    std::string kw, rest;
    long long c = 0;
    if (!(header >> kw >> c) || kw != "colors" || (header >> rest) || c < 1
        || c > static_cast<long long>(UINT32_MAX))
        detail::parse_fail(line_no, "expected `colors <c>`");

    std::vector<Color> colors;
    while (detail::next_content_line(in, line, line_no))
    {
        std::istringstream row(line);
        long long v, col;
        if (!(row >> v >> col) || (row >> rest))
            detail::parse_fail(line_no, "expected `<vertex> <color>`");
        if (v != static_cast<long long>(colors.size()) + 1)
            detail::parse_fail(line_no, "vertices must be listed as 1, 2, 3, ...");
        if (col < 1 || col > c)
            detail::parse_fail(line_no, "color out of range");
        colors.push_back(static_cast<Color>(col));
    }
    return Coloring(std::move(colors), static_cast<Color>(c));
}

inline void write_labels(std::ostream& out, const Complex& boundary)
{
    for (std::size_t i = 0; i < boundary.facet_count(); ++i)
        out << to_string(facet_label(boundary.n_vertices(), boundary.facet_size(), boundary.facet(i)))
            << '\n';
}

inline std::string to_text(const Complex& c)
{
    std::ostringstream out;
    write_complex(out, c);
    return out.str();
}

inline std::string to_text(const Coloring& f)
{
    std::ostringstream out;
    write_coloring(out, f);
    return out.str();
}

inline Complex complex_from_text(const std::string& text)
{
    std::istringstream in(text);
    return read_complex(in);
}

inline Coloring coloring_from_text(const std::string& text)
{
    std::istringstream in(text);
    return read_coloring(in);
}

inline Complex load_complex(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::ParseError, "cannot open " + path);
    return read_complex(in);
}

inline Coloring load_coloring(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::ParseError, "cannot open " + path);
    return read_coloring(in);
}

}   // namespace scdiam

#endif
