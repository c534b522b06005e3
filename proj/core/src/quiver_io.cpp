#include "valquiv/quiver_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "valquiv/errors.hpp"

namespace valquiv {

namespace {

// Whole-token integer parse; anything trailing is an error.
long parse_int(const std::string& tok, int line_no, const char* what) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(tok, &pos);
  } catch (const std::exception&) {
    fail(Errc::ParseError, std::string("expected integer for ") + what + ", got '" + tok + "'",
         line_no);
  }
  if (pos != tok.size())
    fail(Errc::ParseError, std::string("trailing characters in ") + what + " '" + tok + "'",
         line_no);
  return v;
}

}  // namespace

QuiverFile parse_quiver(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_n = false;
  int n = 0;
  std::vector<EdgeSpec> edges;
  std::vector<std::pair<int, int>> arrows;

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (!have_n) {
      if (tok[0] != "n")
        fail(Errc::ParseError, "first line must be 'n <count>', got '" + tok[0] + "'", line_no);
      if (tok.size() != 2) fail(Errc::ParseError, "'n' takes exactly one argument", line_no);
      long v = parse_int(tok[1], line_no, "vertex count");
      if (v < 1 || v > 1'000'000) fail(Errc::ParseError, "vertex count out of range", line_no);
      n = static_cast<int>(v);
      have_n = true;
    } else if (tok[0] == "n") {
      fail(Errc::ParseError, "duplicate 'n' line", line_no);
    } else if (tok[0] == "edge") {
      if (tok.size() != 5)
        fail(Errc::ParseError, "'edge' takes <i> <j> <b_ij> <b_ji>", line_no);
      EdgeSpec e;
      e.i = static_cast<int>(parse_int(tok[1], line_no, "edge endpoint"));
      e.j = static_cast<int>(parse_int(tok[2], line_no, "edge endpoint"));
      e.bij = parse_int(tok[3], line_no, "edge value");
      e.bji = parse_int(tok[4], line_no, "edge value");
      edges.push_back(e);
    } else if (tok[0] == "arrow") {
      if (tok.size() != 3) fail(Errc::ParseError, "'arrow' takes <i> <j>", line_no);
      int i = static_cast<int>(parse_int(tok[1], line_no, "arrow endpoint"));
      int j = static_cast<int>(parse_int(tok[2], line_no, "arrow endpoint"));
      arrows.emplace_back(i, j);
    } else {
      fail(Errc::ParseError, "unknown directive '" + tok[0] + "'", line_no);
    }
  }
  if (!have_n) fail(Errc::ParseError, "empty quiver file");

  QuiverFile q{ValuedGraph::validate(n, edges), std::nullopt};
  if (!arrows.empty()) q.orientation = Orientation::from_arrows(q.graph, arrows);
  return q;
}

QuiverFile load_quiver(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(Errc::ParseError, "cannot open quiver file '" + path + "'");
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_quiver(buf.str());
}

const Orientation& require_orientation(const QuiverFile& q) {
  if (!q.orientation)
    fail(Errc::UnorientedEdge, "this command needs 'arrow' lines in the quiver file");
  return *q.orientation;
}

}  // namespace valquiv
