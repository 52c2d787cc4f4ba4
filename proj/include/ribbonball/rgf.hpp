#pragma once

#include <string>
#include <string_view>

#include "ribbonball/ribbon_graph.hpp"

namespace ribbonball {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/*
 * RGF text format, version 1:
 *
 *   rgf 1 <role> <orientable|signed>
 *   v <id> <black|white|none> : <dart ids in cyclic order>
 *   e <dartA> <dartB> [twist]
 *   fc <face-index> <black|white>
 *
 * Faces are numbered in trace order. Blank lines and lines starting with '#'
 * are ignored. parse_rgf(write_rgf(g)) == g dart for dart.
 */
std::string write_rgf(const RibbonGraph& g);
RibbonGraph parse_rgf(std::string_view text);

RibbonGraph read_rgf_file(const std::string& path);
void write_rgf_file(const RibbonGraph& g, const std::string& path);

// Graphviz description with colors as node attributes. The cyclic order is
// lost in the drawing, so the full RGF is embedded in a leading comment.
std::string write_dot(const RibbonGraph& g);

}  // namespace ribbonball
