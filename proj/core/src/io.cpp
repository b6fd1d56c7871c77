#include "g5/io.hpp"

#include <fstream>
#include <sstream>

namespace g5 {

namespace {

int to_int(const std::string& s, int line) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected integer, got '" + s + "'");
  }
}

std::pair<int, int> parse_assignment(const std::string& tok, int line) {
  auto eq = tok.find('=');
  if (eq == std::string::npos) throw ParseError(line, "expected v=c, got '" + tok + "'");
  int v = to_int(tok.substr(0, eq), line);
  int c = to_int(tok.substr(eq + 1), line);
  if (c < 1 || c > 3) throw ParseError(line, "colour out of range in '" + tok + "'");
  return {v, c};
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool header = false;
  int n = -1;
  std::vector<std::vector<VertexId>> rot;
  std::vector<char> seen;
  std::vector<Ring> rings;
  Precoloring pre;
  int last_line = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string kw;
    if (!(ls >> kw)) continue;
    last_line = lineno;
    if (!header) {
      std::string ver;
      if (kw != "g5" || !(ls >> ver) || ver != "1") throw ParseError(lineno, "expected header 'g5 1'");
      header = true;
      continue;
    }
    if (kw == "n") {
      std::string cnt;
      if (n >= 0 || !(ls >> cnt)) throw ParseError(lineno, "bad vertex count line");
      n = to_int(cnt, lineno);
      if (n < 0) throw ParseError(lineno, "negative vertex count");
      rot.assign(n, {});
      seen.assign(n, 0);
      continue;
    }
    if (n < 0) throw ParseError(lineno, "vertex count must precede '" + kw + "'");
    if (kw == "rot") {
      std::string vtok;
      ls >> vtok;
      if (vtok.empty() || vtok.back() != ':') throw ParseError(lineno, "expected 'rot <v>:'");
      int v = to_int(vtok.substr(0, vtok.size() - 1), lineno);
      if (v < 0 || v >= n) throw ParseError(lineno, "vertex out of range");
      if (seen[v]) throw ParseError(lineno, "duplicate rotation for vertex " + std::to_string(v));
      seen[v] = 1;
      std::string t;
      while (ls >> t) {
        int u = to_int(t, lineno);
        if (u < 0 || u >= n) throw ParseError(lineno, "neighbour out of range");
        rot[v].push_back(u);
      }
    } else if (kw == "ring") {
      std::string kind;
      ls >> kind;
      Ring r;
      std::string t;
      if (kind == "facial") {
        r.kind = RingKind::Facial;
        while (ls >> t) r.vertices.push_back(to_int(t, lineno));
        if (r.vertices.size() < 3) throw ParseError(lineno, "facial ring needs at least 3 vertices");
      } else if (kind == "vertex") {
        r.kind = RingKind::Vertex;
        if (!(ls >> t)) throw ParseError(lineno, "vertex ring needs a vertex");
        r.vertices.push_back(to_int(t, lineno));
        if (ls >> t) {
          if (t != "weak") throw ParseError(lineno, "unexpected token '" + t + "'");
          r.kind = RingKind::WeakVertex;
        }
      } else {
        throw ParseError(lineno, "unknown ring kind '" + kind + "'");
      }
      for (VertexId v : r.vertices)
        if (v < 0 || v >= n) throw ParseError(lineno, "ring vertex out of range");
      rings.push_back(r);
    } else if (kw == "precolor") {
      std::string t;
      while (ls >> t) {
        auto [v, c] = parse_assignment(t, lineno);
        if (v < 0 || v >= n) throw ParseError(lineno, "precoloured vertex out of range");
        pre[v] = c;
      }
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!header) throw ParseError(lineno, "missing header");
  if (n < 0) throw ParseError(lineno, "missing vertex count");
  GraphFile out;
  try {
    out.graph = build(rot, rings);
  } catch (const GraphError& e) {
    throw ParseError(last_line, e.what());
  }
  out.precolor = pre;
  return out;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string serialize(const EmbeddedGraph& g, const Precoloring& precolor) {
  std::ostringstream out;
  out << "g5 1\n";
  out << "n " << g.n() << "\n";
  for (VertexId v = 0; v < g.n(); ++v) {
    out << "rot " << v << ":";
    for (VertexId u : g.neighbors(v)) out << " " << u;
    out << "\n";
  }
  for (const auto& r : g.rings()) {
    if (r.kind == RingKind::Facial) {
      out << "ring facial";
      for (VertexId v : r.vertices) out << " " << v;
    } else {
      out << "ring vertex " << r.vertices[0];
      if (r.kind == RingKind::WeakVertex) out << " weak";
    }
    out << "\n";
  }
  if (!precolor.empty()) {
    out << "precolor";
    for (auto [v, c] : precolor) out << " " << v << "=" << c;
    out << "\n";
  }
  return out.str();
}

Precoloring parse_precolor_spec(const std::string& spec) {
  Precoloring out;
  std::string tok;
  std::istringstream in(spec);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    auto [v, c] = parse_assignment(tok, 0);
    out[v] = c;
  }
  return out;
}

}  // namespace g5
