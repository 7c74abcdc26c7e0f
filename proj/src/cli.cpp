#include "reglat/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reglat/bip.hpp"
#include "reglat/io.hpp"
#include "reglat/props.hpp"

namespace reglat {

namespace {

using nlohmann::ordered_json;

struct GlobalOpts {
  bool close = false;
  std::size_t cap = 2'000'000;
  std::uint64_t seed = 1;
  std::string format = "text";

  bool structured() const { return format == "structured"; }
};

TransRel load_env(const std::string& path, const GlobalOpts& g) {
  Relation r = load_relation_file(path);
  return TransRel(std::move(r), g.close ? TransRel::Close::apply : TransRel::Close::require);
}

void emit(std::ostream& out, const GlobalOpts& g, const ordered_json& doc,
          const std::vector<std::pair<std::string, std::string>>& text_lines) {
  if (g.structured()) {
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& [k, v] : text_lines) out << k << ": " << v << "\n";
  }
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

int cmd_info(const std::string& file, const GlobalOpts& g, std::ostream& out) {
  TransRel e = load_env(file, g);
  auto jirr = enumerate_jirr(e, g.cap);
  SetLattice reg = build_reg(e, jirr, g.cap);
  ClopView clop = build_clop(e, reg);
  const bool sqfree = is_square_free(e);
  int clep = 0;
  for (const auto& j : jirr) clep += j.clepsydra ? 1 : 0;

  ordered_json doc;
  std::vector<std::pair<std::string, std::string>> lines;
  auto put = [&](const std::string& k, const ordered_json& v, const std::string& s) {
    doc[k] = v;
    lines.emplace_back(k, s);
  };
  put("elements", e.ground_size(), std::to_string(e.ground_size()));
  put("pairs", e.pair_count(), std::to_string(e.pair_count()));
  put("square_free", sqfree, bool_str(sqfree));
  put("reg_size", reg.size(), std::to_string(reg.size()));
  put("clop_size", clop.poset.size(), std::to_string(clop.poset.size()));
  put("clop_is_lattice", clop.lattice, bool_str(clop.lattice));
  put("join_irreducibles", jirr.size(), std::to_string(jirr.size()));
  put("clepsydra_count", clep, std::to_string(clep));

  const std::size_t scan_cap = 2'000;
  if (reg.size() <= scan_cap) {
    const CoverDag& d = reg.dag();
    bool sd = is_semidistributive(d, scan_cap);
    bool pc = is_pseudocomplemented(d, scan_cap);
    bool bh = is_bounded_himage(d, scan_cap);
    put("semidistributive", sd, bool_str(sd));
    put("pseudocomplemented", pc, bool_str(pc));
    put("bounded_himage", bh, bool_str(bh));
  } else {
    put("semidistributive", "skipped(cap)", "skipped(cap)");
    put("pseudocomplemented", "skipped(cap)", "skipped(cap)");
    put("bounded_himage", "skipped(cap)", "skipped(cap)");
  }
  bool siv = structural_condition_iv(e);
  put("structural_iv", siv, bool_str(siv));

  CongruenceSummary cs = congruence_summary(e, reg, jirr, 24, g.cap);
  if (cs.count_exact) {
    put("congruence_count", cs.congruence_count, std::to_string(cs.congruence_count));
  } else {
    put("congruence_count", ">= 16777216", ">= 16777216");
  }
  ordered_json sizes = ordered_json::array();
  std::string sizes_s;
  for (auto s : cs.factor_sizes) {
    sizes.push_back(s);
    if (!sizes_s.empty()) sizes_s += ",";
    sizes_s += std::to_string(s);
  }
  put("factor_sizes", sizes, "[" + sizes_s + "]");
  emit(out, g, doc, lines);
  return 0;
}

int cmd_enumerate(const std::string& file, const std::string& what, const GlobalOpts& g,
                  std::ostream& out) {
  TransRel e = load_env(file, g);
  auto jirr = enumerate_jirr(e, g.cap);
  if (what == "jirr") {
    if (g.structured()) {
      ordered_json arr = ordered_json::array();
      for (const auto& j : jirr) {
        ordered_json item;
        item["a"] = j.triple.a + 1;
        item["b"] = j.triple.b + 1;
        ordered_json u = ordered_json::array();
        for (Mask t = j.triple.u; t; t &= t - 1) u.push_back(lowest_bit(t) + 1);
        item["u"] = u;
        item["clepsydra"] = j.clepsydra;
        item["p"] = format_pairs(e, j.p);
        item["p_star"] = format_pairs(e, j.p_star);
        arr.push_back(item);
      }
      out << arr.dump(2) << "\n";
    } else {
      for (const auto& j : jirr) {
        out << "p<" << j.triple.a + 1 << "," << j.triple.b + 1 << ",{";
        bool first = true;
        for (Mask t = j.triple.u; t; t &= t - 1) {
          if (!first) out << ",";
          first = false;
          out << lowest_bit(t) + 1;
        }
        out << "}> " << (j.clepsydra ? "clepsydra " : "bipartite ") << format_pairs(e, j.p)
            << " lower_cover=" << format_pairs(e, j.p_star) << "\n";
      }
    }
    return 0;
  }
  SetLattice reg = build_reg(e, jirr, g.cap);
  const SetLattice* table = &reg;
  std::optional<ClopView> clop;
  if (what == "clop") {
    clop.emplace(build_clop(e, reg));
    table = &clop->poset;
  } else if (what != "reg") {
    fail(Errc::bad_spec, "enumerate --what must be reg, clop or jirr");
  }
  if (g.structured()) {
    ordered_json arr = ordered_json::array();
    for (std::uint32_t i = 0; i < table->size(); ++i) arr.push_back(format_pairs(e, table->elem(i)));
    out << arr.dump(2) << "\n";
  } else {
    for (std::uint32_t i = 0; i < table->size(); ++i) out << format_pairs(e, table->elem(i)) << "\n";
  }
  return 0;
}

int cmd_check(const std::string& file, const std::string& theorem, const GlobalOpts& g,
              std::ostream& out) {
  TransRel e = load_env(file, g);
  TheoremReport rep = theorem == "sqfree" ? check_theorem_sqfree(e, g.cap)
                     : theorem == "regesd" ? check_theorem_regesd(e, g.cap)
                                           : (fail(Errc::bad_spec, "--theorem must be sqfree or regesd"), TheoremReport{});
  ordered_json doc;
  doc["theorem"] = rep.theorem;
  std::vector<std::pair<std::string, std::string>> lines;
  lines.emplace_back("theorem", rep.theorem);
  for (auto& [name, v] : rep.conditions) {
    doc[name] = v;
    lines.emplace_back(name, bool_str(v));
  }
  doc["verdict"] = rep.verdict;
  lines.emplace_back("verdict", rep.verdict ? "pass" : "FAIL");
  if (!rep.verdict) {
    doc["witness"] = rep.witness;
    lines.emplace_back("witness", rep.witness);
  }
  emit(out, g, doc, lines);
  return rep.verdict ? 0 : 3;
}

int cmd_drel(const std::string& file, const GlobalOpts& g, std::ostream& out) {
  TransRel e = load_env(file, g);
  auto jirr = enumerate_jirr(e, g.cap);
  DepGraph dg = dep_graph(e, jirr);
  if (g.structured()) {
    ordered_json doc;
    doc["join_irreducibles"] = dg.nj;
    ordered_json edges = ordered_json::array();
    for (int p = 0; p < dg.nj; ++p)
      bits_for_each(dg.d_row(p), [&](int q) { edges.push_back({p, q}); });
    doc["d_edges"] = edges;
    doc["cycle_free"] = dg.cycle_free();
    doc["classes"] = dg.nc;
    out << doc.dump(2) << "\n";
  } else {
    out << "join_irreducibles: " << dg.nj << "\n";
    for (int p = 0; p < dg.nj; ++p)
      bits_for_each(dg.d_row(p), [&](int q) {
        out << format_pairs(e, jirr[p].p) << " D " << format_pairs(e, jirr[q].p) << "\n";
      });
    out << "cycle_free: " << bool_str(dg.cycle_free()) << "\n";
    out << "classes: " << dg.nc << "\n";
  }
  return 0;
}

int cmd_congruences(const std::string& file, const std::string& dot_path, const GlobalOpts& g,
                    std::ostream& out) {
  TransRel e = load_env(file, g);
  auto jirr = enumerate_jirr(e, g.cap);
  SetLattice reg = build_reg(e, jirr, g.cap);
  CongruenceSummary cs = congruence_summary(e, reg, jirr, 24, g.cap);
  ordered_json doc;
  std::vector<std::pair<std::string, std::string>> lines;
  doc["join_irreducibles"] = cs.dep.nj;
  lines.emplace_back("join_irreducibles", std::to_string(cs.dep.nj));
  ordered_json csz = ordered_json::array();
  std::string csz_s;
  for (const auto& m : cs.dep.class_members) {
    csz.push_back(m.size());
    if (!csz_s.empty()) csz_s += ",";
    csz_s += std::to_string(m.size());
  }
  doc["class_sizes"] = csz;
  lines.emplace_back("class_sizes", "[" + csz_s + "]");
  if (cs.count_exact) {
    doc["congruence_count"] = cs.congruence_count;
    lines.emplace_back("congruence_count", std::to_string(cs.congruence_count));
  } else {
    doc["congruence_count"] = ">= 16777216";
    lines.emplace_back("congruence_count", ">= 16777216");
  }
  emit(out, g, doc, lines);
  if (!dot_path.empty()) {
    std::ofstream f(dot_path);
    if (!f) fail(Errc::bad_spec, "cannot write " + dot_path);
    f << dot_class_poset(cs.dep);
  }
  return 0;
}

int cmd_subdirect(const std::string& file, const GlobalOpts& g, std::ostream& out) {
  TransRel e = load_env(file, g);
  auto jirr = enumerate_jirr(e, g.cap);
  SetLattice reg = build_reg(e, jirr, g.cap);
  CongruenceSummary cs = congruence_summary(e, reg, jirr, 24, g.cap);
  ordered_json doc;
  std::vector<std::pair<std::string, std::string>> lines;
  doc["join_irreducibles"] = cs.dep.nj;
  lines.emplace_back("join_irreducibles", std::to_string(cs.dep.nj));
  ordered_json delta = ordered_json::array();
  std::string delta_s;
  for (int c : cs.delta_classes) {
    for (int p : cs.dep.class_members[c]) {
      delta.push_back(format_pairs(e, jirr[p].p));
      if (!delta_s.empty()) delta_s += " ";
      delta_s += format_pairs(e, jirr[p].p);
    }
  }
  doc["delta"] = delta;
  lines.emplace_back("delta", delta_s);
  ordered_json sizes = ordered_json::array();
  std::string sizes_s;
  for (auto s : cs.factor_sizes) {
    sizes.push_back(s);
    if (!sizes_s.empty()) sizes_s += ",";
    sizes_s += std::to_string(s);
  }
  doc["factor_sizes"] = sizes;
  lines.emplace_back("factor_sizes", "[" + sizes_s + "]");
  doc["subdirect_injective"] = cs.subdirect_injective;
  lines.emplace_back("subdirect_injective", bool_str(cs.subdirect_injective));
  emit(out, g, doc, lines);
  return cs.subdirect_injective ? 0 : 3;
}

int cmd_bip(int n, bool factors, bool con_shape, bool wagner_flag, bool cap_explicit,
            const GlobalOpts& g, std::ostream& out) {
  Bip b = build_bip(n, cap_explicit ? g.cap : 0);
  ordered_json doc;
  std::vector<std::pair<std::string, std::string>> lines;
  doc["n"] = n;
  lines.emplace_back("n", std::to_string(n));
  doc["size"] = b.lat.size();
  lines.emplace_back("size", std::to_string(b.lat.size()));
  doc["join_irreducibles"] = b.jirr.size();
  lines.emplace_back("join_irreducibles", std::to_string(b.jirr.size()));
  if (wagner_flag) {
    BigUint m = wagner(n);
    doc["wagner"] = m.str();
    lines.emplace_back("wagner", m.str());
    bool agree = m == BigUint(b.lat.size());
    doc["wagner_matches_enumeration"] = agree;
    lines.emplace_back("wagner_matches_enumeration", bool_str(agree));
    if (!agree) fail(Errc::internal, "counting recurrence disagrees with enumeration");
  }
  if (con_shape) {
    ConShape cs = con_bip_shape(b);
    if (!cs.applicable) {
      doc["con_shape"] = cs.note;
      lines.emplace_back("con_shape", cs.note);
    } else {
      doc["con_shape_ok"] = cs.shape_ok;
      lines.emplace_back("con_shape_ok", bool_str(cs.shape_ok));
      doc["con_atoms"] = cs.atom_count;
      lines.emplace_back("con_atoms", std::to_string(cs.atom_count));
      doc["congruence_count"] = cs.congruence_count.str();
      lines.emplace_back("congruence_count", cs.congruence_count.str());
      if (!cs.shape_ok) fail(Errc::internal, "congruence shape verification failed");
    }
  }
  if (factors) {
    FactorCensus fc = factor_census(b);
    ordered_json arr = ordered_json::array();
    for (const auto& c : fc.classes) {
      ordered_json item;
      item["k"] = c.k;
      item["cardinality"] = c.cardinality;
      item["instances"] = c.instances;
      item["self_dual"] = c.iso_checked ? ordered_json(c.self_dual) : ordered_json("skipped(cap)");
      arr.push_back(item);
      lines.emplace_back("factor_k" + std::to_string(c.k),
                         "size=" + std::to_string(c.cardinality) +
                             " instances=" + std::to_string(c.instances) +
                             " self_dual=" + (c.iso_checked ? bool_str(c.self_dual) : "skipped(cap)"));
    }
    doc["factors"] = arr;
    doc["sizes_depend_only_on_card"] = fc.sizes_depend_only_on_card;
    lines.emplace_back("sizes_depend_only_on_card", bool_str(fc.sizes_depend_only_on_card));
    doc["opposite_map_ok"] = fc.opposite_map_ok;
    lines.emplace_back("opposite_map_ok", bool_str(fc.opposite_map_ok));
    if (!fc.sizes_depend_only_on_card || !fc.opposite_map_ok)
      fail(Errc::internal, "factor census consistency checks failed");
  }
  emit(out, g, doc, lines);
  return 0;
}

int cmd_gen(const std::string& spec, const std::string& out_path, const GlobalOpts& g,
            std::ostream& out) {
  TransRel e = generate(spec);
  std::string text = g.structured() ? format_relation_json(e.rel()) : format_relation_text(e.rel());
  if (out_path.empty() || out_path == "-") {
    out << text;
  } else {
    std::ofstream f(out_path);
    if (!f) fail(Errc::bad_spec, "cannot write " + out_path);
    f << text;
  }
  return 0;
}

int cmd_export_dot(const std::string& file, const std::string& what, bool mark_nonclopen,
                   const GlobalOpts& g, std::ostream& out) {
  TransRel e = load_env(file, g);
  auto jirr = enumerate_jirr(e, g.cap);
  if (what == "hasse") {
    SetLattice reg = build_reg(e, jirr, g.cap);
    DotOptions opt;
    opt.mark_nonclopen = mark_nonclopen;
    out << dot_hasse(e, reg, opt);
    return 0;
  }
  if (what == "drel") {
    DepGraph dg = dep_graph(e, jirr);
    out << dot_drel(e, jirr, dg);
    return 0;
  }
  fail(Errc::bad_spec, "--what must be hasse or drel");
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::cap_exceeded:
      return 2;
    case Errc::construction_mismatch:
    case Errc::internal:
      return 3;
    default:
      return 1;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite transitive relations: extended permutohedra, clopen posets, "
               "join-irreducibles, congruences and bipartition lattices"};
  app.name("reglat");
  GlobalOpts g;
  app.add_flag("--close", g.close, "apply transitive closure to the input relation");
  app.add_option("--cap", g.cap, "element budget for lattice construction");
  app.add_option("--seed", g.seed, "seed recorded for randomized reports");
  app.add_option("--format", g.format, "output format: text | structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string file, what_enum = "reg", what_dot = "hasse", theorem = "sqfree", spec, out_path,
                    dot_path;
  int bip_n = 3;
  bool factors = false, con_shape = false, wagner_flag = false, mark_nonclopen = false;

  auto* info = app.add_subcommand("info", "invariant report for a relation");
  info->add_option("file", file)->required();

  auto* en = app.add_subcommand("enumerate", "list Reg, Clop or the join-irreducibles");
  en->add_option("file", file)->required();
  en->add_option("--what", what_enum)->check(CLI::IsMember({"reg", "clop", "jirr"}));

  auto* ck = app.add_subcommand("check", "replay a structure theorem on one relation");
  ck->add_option("file", file)->required();
  ck->add_option("--theorem", theorem)->check(CLI::IsMember({"sqfree", "regesd"}));

  auto* dr = app.add_subcommand("drel", "join-dependency relation on the join-irreducibles");
  dr->add_option("file", file)->required();

  auto* cg = app.add_subcommand("congruences", "congruence lattice summary");
  cg->add_option("file", file)->required();
  cg->add_option("--dot", dot_path, "write the congruence class poset as DOT");

  auto* sd = app.add_subcommand("subdirect", "minimal subdirect decomposition");
  sd->add_option("file", file)->required();

  auto* bp = app.add_subcommand("bip", "bipartition lattice Bip(n)");
  bp->add_option("n", bip_n)->required()->check(CLI::Range(1, 64));
  bp->add_flag("--factors", factors);
  bp->add_flag("--con-shape", con_shape);
  bp->add_flag("--wagner", wagner_flag);

  auto* gn = app.add_subcommand("gen", "generate a standard relation");
  gn->add_option("spec", spec)->required();
  gn->add_option("-o,--output", out_path);

  auto* xd = app.add_subcommand("export-dot", "DOT export of the Hasse diagram or D graph");
  xd->add_option("file", file)->required();
  xd->add_option("--what", what_dot)->check(CLI::IsMember({"hasse", "drel"}));
  xd->add_flag("--mark-nonclopen", mark_nonclopen);

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("reglat");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (info->parsed()) return cmd_info(file, g, out);
    if (en->parsed()) return cmd_enumerate(file, what_enum, g, out);
    if (ck->parsed()) return cmd_check(file, theorem, g, out);
    if (dr->parsed()) return cmd_drel(file, g, out);
    if (cg->parsed()) return cmd_congruences(file, dot_path, g, out);
    if (sd->parsed()) return cmd_subdirect(file, g, out);
    if (bp->parsed()) return cmd_bip(bip_n, factors, con_shape, wagner_flag, app.count("--cap") > 0, g, out);
    if (gn->parsed()) return cmd_gen(spec, out_path, g, out);
    if (xd->parsed()) return cmd_export_dot(file, what_dot, mark_nonclopen, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "unexpected error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace reglat
