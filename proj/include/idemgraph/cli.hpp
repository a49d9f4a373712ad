#pragma once

// Command-line front end. Exit codes: 0 all claims pass, 1 a claim failed,
// 2 usage or field-parameter error, 3 output could not be written.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idemgraph/io.hpp"

namespace idemgraph::cli {

enum ExitCode : int { kOk = 0, kClaimFailed = 1, kUsage = 2, kIo = 3 };

enum class Format { Dot, EdgeList, Json };

struct RunConfig {
  std::string subcommand;
  std::uint64_t p = 0;
  std::int64_t k = 1;
  std::optional<std::string> modulus;
  GraphKind kind = GraphKind::GID;
  std::optional<Format> format;
  std::optional<std::string> out;
  std::optional<std::uint64_t> cap;
  bool sweep = false;
};

/// Field orders covered by `verify --sweep`: every prime power up to 13.
inline const std::vector<std::pair<std::uint64_t, std::int64_t>>& sweep_fields() {
  static const std::vector<std::pair<std::uint64_t, std::int64_t>> fields = {
      {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {11, 1}, {13, 1}};
  return fields;
}

/// --cap, else IDEMGRAPH_CAP, else the library default.
inline std::uint64_t resolve_cap(const RunConfig& cfg) {
  if (cfg.cap) return *cfg.cap;
  if (const char* env = std::getenv("IDEMGRAPH_CAP"); env && *env) {
    std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
      throw CLI::ValidationError("IDEMGRAPH_CAP", "not a non-negative integer: " + s);
    return std::stoull(s);
  }
  return kDefaultBruteForceCap;
}

inline Field field_from(const RunConfig& cfg) {
  std::optional<std::vector<Rep>> modulus;
  if (cfg.modulus) modulus = parse_coefficients(*cfg.modulus);
  return make_field(cfg.p, cfg.k, std::move(modulus));
}

namespace detail {

inline std::string field_line(const FieldSpec& f) {
  return describe(f) + " q=" + std::to_string(f.order()) + " modulus=" + format_coefficients(f.modulus());
}

inline void print_claims(std::ostream& out, const FieldSpec& f, const GraphReport& r) {
  out << field_line(f) << '\n';
  std::size_t wname = 5, wcomp = 8, wexp = 8;
  for (const auto& c : r.claims) {
    wname = std::max(wname, c.name.size());
    wcomp = std::max(wcomp, c.computed.size());
    wexp = std::max(wexp, c.expected.size());
  }
  out << std::left << std::setw(static_cast<int>(wname)) << "claim" << "  " << std::setw(11) << "status"
      << "  " << std::setw(static_cast<int>(wcomp)) << "computed" << "  " << std::setw(static_cast<int>(wexp))
      << "expected" << "  statement\n";
  for (const auto& c : r.claims) {
    out << std::setw(static_cast<int>(wname)) << c.name << "  " << std::setw(11) << to_string(c.status) << "  "
        << std::setw(static_cast<int>(wcomp)) << c.computed << "  " << std::setw(static_cast<int>(wexp))
        << c.expected << "  " << c.statement;
    if (!c.note.empty() && c.status != ClaimStatus::Pass) out << " [" << c.note << "]";
    out << '\n';
  }
  std::size_t failed = 0;
  for (const auto& c : r.claims) failed += c.status == ClaimStatus::Fail;
  if (failed == 0)
    out << "all claims pass";
  else
    out << failed << " claim(s) FAILED";
  out << " (girth " << (r.girth ? std::to_string(*r.girth) : "inf") << ")\n" << std::right;
}

/// Writes `text` to `path`, or to `out` when no path is given.
inline int emit(const std::optional<std::string>& path, const std::string& text, std::ostream& out,
                std::ostream& err) {
  if (!path) {
    out << text;
    return kOk;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << *path << " for writing\n";
    return kIo;
  }
  file << text;
  file.close();
  if (!file) {
    err << "error: write to " << *path << " failed\n";
    return kIo;
  }
  return kOk;
}

}  // namespace detail

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const VerifyOptions options{resolve_cap(cfg)};
  std::vector<Field> fields;
  if (cfg.sweep) {
    for (auto [p, k] : sweep_fields()) fields.push_back(make_field(p, k));
  } else {
    fields.push_back(field_from(cfg));
  }
  bool ok = true;
  json docs = json::array();
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const GraphReport report = verify_all(fields[i], options);
    if (i) out << '\n';
    detail::print_claims(out, *fields[i], report);
    ok = ok && report.all_passed();
    docs.push_back(to_json(report));
  }
  if (cfg.out) {
    const json doc = cfg.sweep ? docs : docs.at(0);
    if (int rc = detail::emit(cfg.out, doc.dump(2) + "\n", out, err); rc != kOk) return rc;
  }
  return ok ? kOk : kClaimFailed;
}

inline int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Field field = field_from(cfg);
  const GraphReport r = verify_all(field, VerifyOptions{resolve_cap(cfg)});
  std::ostringstream s;
  auto row = [&s](const std::string& name, const std::string& got, const std::string& want) {
    s << std::left << std::setw(20) << name << std::setw(16) << got << want << '\n';
  };
  auto inf = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string("inf"); };
  s << detail::field_line(*field) << '\n';
  row("quantity", "computed", "closed form");
  row("idempotents", std::to_string(r.idempotent_count), std::to_string(r.expected_idempotent_count));
  for (auto c : kAllClasses) {
    const auto i = static_cast<std::size_t>(c);
    row("class " + std::string(to_string(c)), std::to_string(r.class_sizes[i]),
        std::to_string(expected_class_size(c, r.q)));
  }
  row("vertices", std::to_string(r.vertex_count), std::to_string(r.expected_vertex_count));
  row("edges", std::to_string(r.edge_count), std::to_string(r.expected_edge_count));
  row("degree",
      r.is_regular ? std::to_string(r.degree_min)
                   : std::to_string(r.degree_min) + ".." + std::to_string(r.degree_max),
      std::to_string(r.expected_degree));
  row("components", std::to_string(r.component_count), "1");
  row("diameter", inf(r.diameter), std::to_string(r.expected_diameter));
  row("girth", inf(r.girth), std::to_string(r.expected_girth));
  row("wiener", std::to_string(r.wiener), std::to_string(r.expected_wiener));
  row("harary", r.harary.str(), r.expected_harary.str());
  row("ir components", std::to_string(r.ir_component_count), std::to_string(r.expected_ir_components));
  s << std::right;
  return detail::emit(cfg.out, s.str(), out, err);
}

inline int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Field field = field_from(cfg);
  const IdemGraph g = build_graph(enumerate_constructive(field), cfg.kind);
  std::ostringstream s;
  switch (*cfg.format) {
    case Format::EdgeList: write_edgelist(s, g); break;
    case Format::Dot: write_dot(s, g); break;
    case Format::Json: {
      json doc = to_json(g);
      doc["report"] = to_json(verify_all(field, VerifyOptions{resolve_cap(cfg)}));
      s << doc.dump(2) << '\n';
      break;
    }
  }
  return detail::emit(cfg.out, s.str(), out, err);
}

inline int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Field field = field_from(cfg);
  return detail::emit(cfg.out, to_json(enumerate_constructive(field)).dump(2) + "\n", out, err);
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Idempotents and idempotent graphs of 2x2 matrix rings over finite fields", "idemgraph"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_field_options = [&cfg](CLI::App* sub, bool p_required) {
    auto* p = sub->add_option("--p", cfg.p, "prime characteristic");
    if (p_required) p->required();
    sub->add_option("--k", cfg.k, "extension degree")->capture_default_str();
    sub->add_option("--modulus", cfg.modulus, "irreducible modulus, constant term first, e.g. \"1,1,1\"");
    sub->add_option("--out", cfg.out, "output path (default: stdout)");
    sub->add_option("--cap", cfg.cap, "brute-force enumeration cap on q^4 (overrides IDEMGRAPH_CAP)");
  };

  auto* verify = app.add_subcommand("verify", "check every structural claim; exit 1 on any failure");
  add_field_options(verify, false);
  auto* sweep = verify->add_flag("--sweep", cfg.sweep, "verify every prime power q <= 13");
  verify->get_option("--p")->excludes(sweep);

  auto* report = app.add_subcommand("report", "print computed metrics next to their closed forms");
  add_field_options(report, true);

  auto* exp = app.add_subcommand("export", "write a graph as DOT, edge list or JSON");
  add_field_options(exp, true);
  std::string kind_name = "gid";
  std::string format_name;
  exp->add_option("--kind", kind_name, "graph kind")
      ->check(CLI::IsMember({"ir", "gid"}, CLI::ignore_case))
      ->capture_default_str();
  exp->add_option("--format", format_name, "export format")
      ->required()
      ->check(CLI::IsMember({"dot", "edgelist", "json"}, CLI::ignore_case));

  auto* enumerate = app.add_subcommand("enumerate", "write the idempotent set as JSON");
  add_field_options(enumerate, true);

  try {
    app.parse(argc, argv);
    if (verify->parsed() && !cfg.sweep && verify->count("--p") == 0)
      throw CLI::RequiredError("--p (or --sweep)");
    if (exp->parsed()) {
      cfg.kind = kind_name == "ir" ? GraphKind::IR : GraphKind::GID;
      cfg.format = format_name == "dot" ? Format::Dot : format_name == "json" ? Format::Json : Format::EdgeList;
    }
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (report->parsed()) return cmd_report(cfg, out, err);
    if (exp->parsed()) return cmd_export(cfg, out, err);
    if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace idemgraph::cli
