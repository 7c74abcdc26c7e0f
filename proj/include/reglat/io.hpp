#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "reglat/depend.hpp"
#include "reglat/lattice.hpp"

namespace reglat {

// Line-based relation format:
//   relation
//   elements <n>
//   pair <i> <j>        (1-based; '#' starts a comment)
// The structured twin is a JSON document {"elements": n, "pairs": [[i,j],...]}.
Relation parse_relation_text(std::istream& in);
Relation parse_relation_json(const std::string& text);
Relation parse_relation(const std::string& text);  // sniffs the format
Relation load_relation_file(const std::string& path);

std::string format_relation_text(const Relation& r);
std::string format_relation_json(const Relation& r);

// 1-based pair-set rendering: {(1,2),(2,3)}
std::string format_pairs(const TransRel& e, BitsView bits);

struct DotOptions {
  bool mark_nonclopen = false;  // doubled borders on Reg ∖ Clop
  bool index_labels = false;    // node labels as element indices instead of pair sets
};

std::string dot_hasse(const TransRel& e, const SetLattice& lat, const DotOptions& opt = {});
std::string dot_drel(const TransRel& e, const std::vector<JirrElement>& jirr, const DepGraph& dg);
std::string dot_class_poset(const DepGraph& dg);

}  // namespace reglat
