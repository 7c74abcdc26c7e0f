#include "reglat/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace reglat {

Relation parse_relation_text(std::istream& in) {
  std::string line;
  bool header = false;
  int n = -1;
  std::vector<std::pair<int, int>> prs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!header) {
      if (tok != "relation") fail(Errc::parse_error, "expected 'relation' header");
      header = true;
      continue;
    }
    if (tok == "elements") {
      if (n >= 0) fail(Errc::parse_error, "duplicate elements line");
      if (!(ls >> n) || n < 1 || n > kMaxGround)
        fail(Errc::parse_error, "elements must be between 1 and 64");
    } else if (tok == "pair") {
      int i = 0, j = 0;
      if (n < 0) fail(Errc::parse_error, "pair before elements line");
      if (!(ls >> i >> j)) fail(Errc::parse_error, "pair needs two indices (line " + std::to_string(lineno) + ")");
      if (i < 1 || j < 1 || i > n || j > n)
        fail(Errc::parse_error, "pair index out of range (line " + std::to_string(lineno) + ")");
      prs.emplace_back(i - 1, j - 1);
    } else {
      fail(Errc::parse_error, "unknown directive '" + tok + "' (line " + std::to_string(lineno) + ")");
    }
  }
  if (!header) fail(Errc::parse_error, "missing 'relation' header");
  if (n < 0) fail(Errc::parse_error, "missing elements line");
  Relation r(n);
  for (auto [i, j] : prs) r.add(i, j);
  return r;
}

Relation parse_relation_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    fail(Errc::parse_error, std::string("bad json: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("elements") || !doc.contains("pairs"))
    fail(Errc::parse_error, "json relation needs 'elements' and 'pairs'");
  int n = 0;
  try {
    n = doc["elements"].get<int>();
  } catch (const nlohmann::json::exception&) {
    fail(Errc::parse_error, "'elements' must be an integer");
  }
  if (n < 1 || n > kMaxGround) fail(Errc::parse_error, "elements must be between 1 and 64");
  Relation r(n);
  if (!doc["pairs"].is_array()) fail(Errc::parse_error, "'pairs' must be an array");
  for (const auto& p : doc["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      fail(Errc::parse_error, "each pair must be a 2-element integer array");
    int i = p[0].get<int>(), j = p[1].get<int>();
    if (i < 1 || j < 1 || i > n || j > n) fail(Errc::parse_error, "pair index out of range");
    r.add(i - 1, j - 1);
  }
  return r;
}

Relation parse_relation(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_relation_json(text);
    break;
  }
  std::istringstream in(text);
  return parse_relation_text(in);
}

Relation load_relation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_relation(buf.str());
}

std::string format_relation_text(const Relation& r) {
  std::ostringstream out;
  out << "relation\n";
  out << "elements " << r.n << "\n";
  for (auto [i, j] : r.pairs()) out << "pair " << i + 1 << " " << j + 1 << "\n";
  return out.str();
}

std::string format_relation_json(const Relation& r) {
  nlohmann::ordered_json doc;
  doc["elements"] = r.n;
  auto pairs = nlohmann::ordered_json::array();
  for (auto [i, j] : r.pairs()) pairs.push_back({i + 1, j + 1});
  doc["pairs"] = pairs;
  return doc.dump(2) + "\n";
}

std::string format_pairs(const TransRel& e, BitsView bits) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  bits_for_each(bits, [&](int idx) {
    auto [i, j] = e.pair_at(idx);
    if (!first) out << ",";
    first = false;
    out << "(" << i + 1 << "," << j + 1 << ")";
  });
  out << "}";
  return out.str();
}

std::string dot_hasse(const TransRel& e, const SetLattice& lat, const DotOptions& opt) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  std::vector<char> clop;
  if (opt.mark_nonclopen) clop = clopen_flags(e, lat);
  for (std::uint32_t i = 0; i < lat.size(); ++i) {
    out << "  n" << i << " [label=\"";
    if (opt.index_labels)
      out << i;
    else
      out << format_pairs(e, lat.elem(i));
    out << "\"";
    if (opt.mark_nonclopen && !clop[i]) out << ", peripheries=2";
    out << "];\n";
  }
  const CoverDag& d = lat.dag();
  for (std::uint32_t i = 0; i < lat.size(); ++i)
    for (auto j : d.up_covers(i)) out << "  n" << i << " -> n" << j << ";\n";
  out << "}\n";
  return out.str();
}

std::string dot_drel(const TransRel& e, const std::vector<JirrElement>& jirr, const DepGraph& dg) {
  std::ostringstream out;
  out << "digraph drel {\n  node [shape=box];\n";
  for (int p = 0; p < dg.nj; ++p) {
    out << "  j" << p << " [label=\"" << format_pairs(e, jirr[p].p);
    if (jirr[p].clepsydra) out << " (clepsydra)";
    out << "\"];\n";
  }
  for (int p = 0; p < dg.nj; ++p)
    bits_for_each(dg.d_row(p), [&](int q) { out << "  j" << p << " -> j" << q << ";\n"; });
  out << "}\n";
  return out.str();
}

std::string dot_class_poset(const DepGraph& dg) {
  std::ostringstream out;
  out << "digraph conclasses {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  CoverDag poset = dg.class_poset();
  for (int c = 0; c < dg.nc; ++c)
    out << "  c" << c << " [label=\"class " << c << " (" << dg.class_members[c].size() << " ji)\"];\n";
  for (std::uint32_t c = 0; c < poset.size(); ++c)
    for (auto c2 : poset.up_covers(c)) out << "  c" << c << " -> c" << c2 << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace reglat
