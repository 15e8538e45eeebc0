#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "homrat/cli.hpp"

namespace homrat::cli {

namespace {

struct Options {
  std::string group;
  std::string subgroup;
  int characteristic = 0;
  int radical = 0;
  int depth = 0;
  std::string format = "text";
  bool json = false;
  bool expand_trace = false;
  bool reverse_order = false;
  std::string table_kind;
  std::string certificate_file;
};

// Errors that carry a flag name so diagnostics say which input was wrong.
struct InputError : std::invalid_argument {
  InputError(const std::string& flag, const std::string& text, const std::string& msg)
      : std::invalid_argument(flag + " \"" + text + "\" " + msg) {}
};

SemisimpleType group_of(const Options& o) {
  try {
    return parse_type_or_trivial(o.group);
  } catch (const ParseError& e) {
    throw InputError("--group", o.group, e.what());
  }
}

GroupSpec group_spec(const Options& o) {
  if (!is_valid_characteristic(o.characteristic))
    throw InputError("--char", std::to_string(o.characteristic), "is neither 0 nor a prime");
  if (o.radical < 0) throw InputError("--radical", std::to_string(o.radical), "must be >= 0");
  return GroupSpec{group_of(o), o.radical, o.characteristic};
}

SubgroupSpec subgroup_spec(const Options& o, const SemisimpleType& g) {
  try {
    return parse_subgroup(o.subgroup, g);
  } catch (const ParseError& e) {
    throw InputError("--subgroup", o.subgroup, e.what());
  }
}

bool as_json(const Options& o) { return o.json || o.format == "json"; }

Json input_block(const std::string& sub, const Options& o) {
  Json in = {{"subcommand", sub}};
  if (!o.group.empty()) in["group"] = o.group;
  if (!o.subgroup.empty()) in["subgroup"] = o.subgroup;
  in["char"] = o.characteristic;
  if (o.radical) in["radical"] = o.radical;
  if (o.depth) in["depth"] = o.depth;
  return in;
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

std::string premise_str(const Premise& p) {
  if (const auto* i = std::get_if<std::int64_t>(&p.value)) return p.name + "=" + std::to_string(*i);
  return p.name + "=" + std::get<std::string>(p.value);
}

void print_node(std::ostream& out, const CertificateNode& n, int indent) {
  out << std::string(2 * indent, ' ') << n.rule_id << "  [" << n.paper_ref << "]";
  for (const auto& p : n.premises) out << ' ' << premise_str(p);
  out << '\n';
  for (const auto& c : n.children) print_node(out, c, indent + 1);
}

void print_invariants_line(std::ostream& out, const QuotientInvariants& q) {
  out << "invariants: tG=" << q.t_G << " tH=" << opt_str(q.t_H) << " uG=" << q.u_G << " uH=" << opt_str(q.u_H)
      << " uH_rad=" << opt_str(q.uH_rad) << " dim=" << q.dim_quotient << " dim_BGU=" << opt_str(q.dim_BGU)
      << " dim_UGB=" << opt_str(q.dim_UGB) << '\n';
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const GroupSpec g = group_spec(o);
  const GroupInvariants gi = group_invariants(g.semisimple_type, g.radical_dim);
  Json comps = Json::array();
  for (const auto& c : g.semisimple_type.components()) {
    const RootSystem rs = generate_roots(c);
    std::vector<std::string> lengths;
    for (const auto& r : rs.root_lengths) lengths.push_back(r.str());
    comps.push_back({{"type", c.str()},
                     {"rank", rs.rank()},
                     {"num_pos_roots", rs.num_positive_roots()},
                     {"dim", rs.dim()},
                     {"coxeter_number", rs.coxeter_number()},
                     {"marks", rs.marks},
                     {"comarks", rs.comarks},
                     {"root_lengths", lengths}});
  }
  if (as_json(o)) {
    Json j = {{"input", input_block("invariants", o)},
              {"group", g.semisimple_type.str()},
              {"rank", gi.rank},
              {"num_pos_roots", gi.num_pos_roots},
              {"central_torus", gi.central_torus},
              {"dim", gi.dim},
              {"components", comps}};
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "group: " << g.semisimple_type.str() << '\n'
      << "rank: " << gi.rank << '\n'
      << "positive roots: " << gi.num_pos_roots << '\n';
  if (gi.central_torus) out << "central torus: " << gi.central_torus << '\n';
  out << "dim: " << gi.dim << '\n';
  for (const auto& c : comps) {
    out << "  " << c["type"].get<std::string>() << ": dim " << c["dim"] << ", coxeter number "
        << c["coxeter_number"] << ", marks " << c["marks"].dump() << ", comarks " << c["comarks"].dump()
        << ", squared lengths " << c["root_lengths"].dump() << '\n';
  }
  return 0;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const SemisimpleType g = group_of(o);
  if (o.depth < 0) throw InputError("--depth", std::to_string(o.depth), "must be >= 1");
  const int depth = o.depth ? o.depth : std::max(1, g.rank());
  for (const auto& h : enumerate_maximal_rank(g, depth)) {
    if (as_json(o)) {
      out << to_json(h).dump() << '\n';
      continue;
    }
    out << h.semisimple_part().str() << "  T" << h.central_torus() << "  chain:";
    for (const auto& m : h.chain()) {
      out << ' ' << to_string(m.kind) << ':' << m.node;
      if (m.component) out << '@' << m.component;
      if (m.comark_at_node) out << "(c" << *m.comark_at_node << ')';
    }
    out << (h.simply_connected_cover_splits() ? "" : "  [comark > 1]") << '\n';
  }
  return 0;
}

int cmd_certify(const Options& o, std::ostream& out) {
  const GroupSpec g = group_spec(o);
  if (o.subgroup.empty()) throw InputError("--subgroup", "", "is required");
  const SubgroupSpec h = subgroup_spec(o, g.semisimple_type);
  CertifyOptions opts;
  opts.expand_trace = o.expand_trace;
  if (o.reverse_order) std::reverse(opts.terminal_order.begin(), opts.terminal_order.end());
  const Verdict v = certify(g, h, opts);

  if (as_json(o)) {
    Json j = {{"input", input_block("certify", o)}};
    const Json body = to_json(v);
    for (const auto& [k, val] : body.items()) j[k] = val;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "status: " << to_string(v.status) << '\n';
  if (v.frontier) out << "frontier: " << *v.frontier << '\n';
  if (!v.note.empty()) out << "note: " << v.note << '\n';
  print_invariants_line(out, v.invariants);
  if (v.certificate) {
    out << "rule: " << v.certificate->rule_id << '\n' << "certificate:\n";
    print_node(out, *v.certificate, 1);
  }
  if (!v.alternatives.empty()) {
    out << "also closed by:";
    for (const auto& a : v.alternatives) out << ' ' << a;
    out << '\n';
  }
  return 0;
}

int cmd_table(const Options& o, std::ostream& out) {
  std::vector<TableColumn> cols;
  try {
    cols = table(o.table_kind);
  } catch (const std::invalid_argument& e) {
    throw InputError("table", o.table_kind, e.what());
  }
  if (as_json(o)) {
    Json arr = Json::array();
    for (const auto& c : cols)
      arr.push_back({{"group", c.group},
                     {"n", c.n},
                     {"dim_G", c.dim_G},
                     {"crude_dim_H_lower", c.crude_dim_H},
                     {"dim_quotient_upper", c.dim_quotient_upper},
                     {"rank_bound", c.rank_bound},
                     {"bound_holds", c.bound_holds()}});
    out << Json{{"input", input_block("table", o)}, {"kind", o.table_kind}, {"columns", arr}}.dump(2) << '\n';
    return 0;
  }
  auto row = [&](const std::string& label, auto field) {
    out << std::left << std::setw(18) << label;
    for (const auto& c : cols) out << std::right << std::setw(6) << field(c);
    out << '\n';
  };
  row("", [](const TableColumn& c) { return c.group; });
  row("dim G", [](const TableColumn& c) { return std::to_string(c.dim_G); });
  row("dim H >=", [](const TableColumn& c) { return std::to_string(c.crude_dim_H); });
  row("dim(G/H) <=", [](const TableColumn& c) { return std::to_string(c.dim_quotient_upper); });
  row("n + n + 8", [](const TableColumn& c) { return std::to_string(c.rank_bound); });
  for (const auto& c : cols)
    out << c.group << ": " << c.dim_quotient_upper << (c.bound_holds() ? " < " : " >= ") << c.rank_bound
        << (c.bound_holds() ? "  (R-THBRANK applies)" : "") << '\n';
  return 0;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const GroupSpec g = group_spec(o);
  if (o.subgroup.empty()) throw InputError("--subgroup", "", "is required");
  const SubgroupSpec h = subgroup_spec(o, g.semisimple_type);
  std::stringstream buf;
  if (o.certificate_file.empty() || o.certificate_file == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(o.certificate_file);
    if (!in) throw InputError("--certificate", o.certificate_file, "cannot be opened");
    buf << in.rdbuf();
  }
  Verdict v;
  try {
    v = verdict_from_json(Json::parse(buf.str()));
  } catch (const nlohmann::json::exception& e) {
    throw InputError("--certificate", o.certificate_file, std::string("is not JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError("--certificate", o.certificate_file, e.what());
  }
  const ValidationResult r = validate_certificate(g, h, v);
  if (as_json(o)) {
    Json j = {{"input", input_block("validate", o)}, {"valid", r.valid}};
    if (!r.valid) {
      j["path"] = r.path;
      j["reason"] = r.reason;
    }
    out << j.dump(2) << '\n';
  } else if (r.valid) {
    out << "valid\n";
  } else {
    out << "invalid at " << r.path << ": " << r.reason << '\n';
  }
  if (!r.valid) err << "error: certificate rejected at " << r.path << '\n';
  return r.valid ? 0 : 2;
}

}  // namespace

std::vector<TableColumn> table(const std::string& kind) {
  if (kind != "b23c3g2") throw std::invalid_argument("unknown table kind, expected b23c3g2");
  std::vector<TableColumn> cols;
  for (const SimpleType t : {SimpleType{Family::B, 3}, SimpleType{Family::G, 2}}) {
    TableColumn c;
    c.group = t.str();
    c.n = t.rank;
    c.dim_G = group_invariants(SemisimpleType{t}).dim;
    // H of maximal rank contains a maximal torus and, being non-solvable, at
    // least one pair of opposite roots for each of the n simple directions.
    c.crude_dim_H = 3 * c.n;
    c.dim_quotient_upper = c.dim_G - c.crude_dim_H;
    c.rank_bound = c.n + c.n + 8;
    cols.push_back(c);
  }
  return cols;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Rationality certificates for homogeneous spaces G/H", "homrat"};
  app.require_subcommand(1, 1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--json", o.json, "Same as --format json");
  };
  auto add_group = [&](CLI::App* sub, bool with_subgroup) {
    sub->add_option("--group,-g", o.group, "Semisimple type of G, e.g. B3 or A2+2A1")->required();
    sub->add_option("--char,-p", o.characteristic, "Characteristic of the base field (0 or prime)");
    sub->add_option("--radical", o.radical, "Dimension of the radical of G");
    if (with_subgroup) sub->add_option("--subgroup,-s", o.subgroup, "Subgroup description")->required();
  };

  auto* inv = app.add_subcommand("invariants", "Rank, root counts and dimension of G");
  add_group(inv, false);
  add_common(inv);

  auto* en = app.add_subcommand("enumerate", "Maximal-rank subgroups reachable by diagram moves");
  en->add_option("--group,-g", o.group, "Semisimple type of G")->required();
  en->add_option("--depth,-d", o.depth, "Number of moves (default: rank of G)")->check(CLI::PositiveNumber);
  add_common(en);

  auto* cert = app.add_subcommand("certify", "Decide rationality of G/H with a certificate");
  add_group(cert, true);
  cert->add_flag("--expand-trace", o.expand_trace, "Expand R-THA into its induction");
  cert->add_flag("--reverse-order", o.reverse_order, "Try terminal rules in reverse order");
  add_common(cert);

  auto* tab = app.add_subcommand("table", "Recompute a table of bounds");
  tab->add_option("kind", o.table_kind, "Table kind (b23c3g2)")->required();
  add_common(tab);

  auto* val = app.add_subcommand("validate", "Re-check a certificate produced by certify --json");
  add_group(val, true);
  val->add_option("--certificate,-c", o.certificate_file, "Certificate file, '-' for stdin");
  add_common(val);

  if (!args.empty() && !args.front().starts_with('-') && !app.get_subcommand_no_throw(args.front())) {
    err << "error: unknown subcommand \"" << args.front()
        << "\" at argument 1; expected invariants, enumerate, certify, table or validate\n";
    return 2;
  }

  std::vector<const char*> argv{"homrat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (inv->parsed()) return cmd_invariants(o, out);
    if (en->parsed()) return cmd_enumerate(o, out);
    if (cert->parsed()) return cmd_certify(o, out);
    if (tab->parsed()) return cmd_table(o, out);
    if (val->parsed()) return cmd_validate(o, out, err);
  } catch (const std::invalid_argument& e) {  // ParseError, SpecError, InputError, bad moves
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }
  err << "internal error: no subcommand dispatched\n";
  return 1;
}

}  // namespace homrat::cli
