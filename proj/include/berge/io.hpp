#pragma once

#include <berge/hypergraph.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace berge {

/// Reads the .hg text format:
///
///     # comment
///     n m
///     a b [c]      (m lines, 0-based indices)
///
/// Blank lines and lines starting with '#' are ignored. If any vertex token is not
/// a plain non-negative integer, all tokens are treated as labels and numbered in
/// order of first appearance. Throws ParseError, or the validate() errors.
LinearHypergraph parse_hg(std::istream & in);
LinearHypergraph parse_hg(const std::string & text);

/// "-" reads standard input. Throws IoError when the file cannot be opened.
LinearHypergraph read_hg_file(const std::filesystem::path & path);

void write_hg(std::ostream & out, const LinearHypergraph & h);
std::string to_hg(const LinearHypergraph & h);

} // namespace berge
