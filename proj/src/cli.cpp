#include "heron/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heron/catalog.hpp"
#include "heron/cycles.hpp"
#include "heron/enumerate.hpp"
#include "heron/necklace.hpp"
#include "heron/verify.hpp"

namespace heron::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json triangle_record(const Triangle& t) {
  const Int area = *heron_area(t);
  return json{{"a", t.a()},           {"b", t.b()},    {"c", t.c()},
              {"perimeter", t.perimeter()}, {"area", area}, {"class", std::string(to_string(classify(t)))}};
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void print_triangle_rows(std::ostream& out, const std::vector<Triangle>& ts, const std::string& format) {
  if (format == "csv") {
    out << "a,b,c,perimeter,area,class\n";
    for (const auto& t : ts) {
      out << t.a() << ',' << t.b() << ',' << t.c() << ',' << t.perimeter() << ',' << *heron_area(t)
          << ',' << to_string(classify(t)) << '\n';
    }
    return;
  }
  out << std::setw(8) << "a" << std::setw(8) << "b" << std::setw(8) << "c" << std::setw(11)
      << "perimeter" << std::setw(10) << "area" << "  class\n";
  for (const auto& t : ts) {
    out << std::setw(8) << t.a() << std::setw(8) << t.b() << std::setw(8) << t.c() << std::setw(11)
        << t.perimeter() << std::setw(10) << *heron_area(t) << "  " << to_string(classify(t)) << '\n';
  }
  out << ts.size() << " triangle(s)\n";
}

// --- enumerate -------------------------------------------------------------

struct EnumerateArgs {
  std::optional<Int> perimeter;
  std::optional<Int> area;
  std::string format = "table";
};

int cmd_enumerate(const EnumerateArgs& args, std::ostream& out) {
  if (args.perimeter.has_value() == args.area.has_value()) {
    throw UsageError("enumerate needs exactly one of --perimeter or --area");
  }
  std::vector<Triangle> ts;
  json query;
  if (args.perimeter) {
    if (*args.perimeter < 1) throw UsageError("--perimeter must be positive");
    ts = triangles_with_perimeter(*args.perimeter);
    query["perimeter"] = *args.perimeter;
  } else {
    if (*args.area < 1) throw UsageError("--area must be positive");
    ts = triangles_with_area(*args.area);
    query["area"] = *args.area;
  }
  if (args.format == "json") {
    json rows = json::array();
    for (const auto& t : ts) rows.push_back(triangle_record(t));
    print_json(out, json{{"query", query}, {"count", ts.size()}, {"triangles", rows}});
  } else {
    print_triangle_rows(out, ts, args.format);
  }
  return kOk;
}

// --- cycles ----------------------------------------------------------------

struct CyclesArgs {
  int n = 0;
  std::optional<Int> p_max;
  bool symbolic = false;
  bool concrete = false;
  std::string format = "table";
};

int cmd_cycles(const CyclesArgs& args, std::ostream& out) {
  if (args.n < 1) throw UsageError("--n must be positive");
  if (args.symbolic && args.concrete) throw UsageError("--symbolic and --concrete are exclusive");
  if (!args.concrete) {
    const auto words = enumerate_words(args.n);
    if (args.format == "json") {
      json arr = json::array();
      for (const auto& w : words) arr.push_back(json{{"word", w.str()}});
      print_json(out, json{{"n", args.n}, {"mode", "symbolic"}, {"count", words.size()}, {"cycles", arr}});
    } else if (args.format == "csv") {
      out << "index,word\n";
      for (std::size_t i = 0; i < words.size(); ++i) out << i + 1 << ',' << words[i].str() << '\n';
    } else {
      for (const auto& w : words) out << w.str() << '\n';
      out << words.size() << " cycle(s) of length " << args.n << '\n';
    }
    return kOk;
  }
  if (!args.p_max) throw UsageError("--concrete requires --p-max");
  if (*args.p_max < 1) throw UsageError("--p-max must be positive");
  const auto cycles = find_cycles(args.n, *args.p_max);
  if (args.format == "json") {
    json arr = json::array();
    for (const auto& c : cycles) {
      json members = json::array();
      for (const auto& t : c.members()) members.push_back(triangle_record(t));
      arr.push_back(json{{"members", members}});
    }
    print_json(out, json{{"n", args.n},
                         {"mode", "concrete"},
                         {"p_max", *args.p_max},
                         {"count", cycles.size()},
                         {"cycles", arr}});
  } else if (args.format == "csv") {
    out << "cycle,position,a,b,c,perimeter,area\n";
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      const auto& ms = cycles[i].members();
      for (std::size_t k = 0; k < ms.size(); ++k) {
        out << i + 1 << ',' << k + 1 << ',' << ms[k].a() << ',' << ms[k].b() << ',' << ms[k].c()
            << ',' << ms[k].perimeter() << ',' << *heron_area(ms[k]) << '\n';
      }
    }
  } else {
    for (const auto& c : cycles) {
      for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " -> " : "") << c.members()[k];
      out << '\n';
    }
    out << cycles.size() << " cycle(s) of length " << args.n << " with perimeters <= " << *args.p_max
        << '\n';
  }
  return kOk;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string claim;
  Int p_max = 2000;
  int n_max = 8;
  std::optional<int> n;
  std::optional<Int> x, y, z;
  int exp_max = 64;
  std::string format = "table";
};

std::vector<TheoremReport> run_claim(const VerifyArgs& a) {
  const std::string& c = a.claim;
  const bool all = c == "all";
  std::vector<TheoremReport> reports;
  if (c == "equable-five" || all) reports.push_back(check_equable_five(a.p_max));
  if (c == "lemma2" || all) reports.push_back(check_lemma2(a.p_max));
  if (c == "lemma3" || all) reports.push_back(check_lemma3(a.p_max));
  if (c == "theorem1" || all) {
    const int given = a.x.has_value() + a.y.has_value() + a.z.has_value();
    if (given != 0 && (given != 3 || all)) {
      throw UsageError("theorem1 takes all of --x --y --z, or none");
    }
    if (given == 3) {
      if (*a.x < 1 || *a.y < 1 || *a.z < 1) throw UsageError("--x --y --z must be positive");
      reports.push_back(check_theorem1_triple(*a.x, *a.y, *a.z, a.n.value_or(3)));
    } else {
      reports.push_back(check_theorem1(a.p_max, a.n_max));
    }
  }
  if (c == "theorem2" || all) {
    reports.push_back(check_theorem2(a.n.value_or(3), a.p_max));
    reports.push_back(check_factorization_cases());
  }
  if (c == "gersonides" || all) reports.push_back(check_power_difference(a.exp_max));
  if (c == "theorem3" || all) reports.push_back(check_theorem3(a.p_max, a.n_max));
  return reports;
}

std::string bounds_text(const json& bounds) {
  std::string s;
  for (const auto& [k, v] : bounds.items()) {
    if (!s.empty()) s += ';';
    s += k + '=' + v.dump();
  }
  return s;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  static const std::vector<std::string> claims{"lemma2",     "lemma3",       "theorem1", "theorem2",
                                               "theorem3",   "gersonides",   "equable-five", "all"};
  if (std::find(claims.begin(), claims.end(), args.claim) == claims.end()) {
    throw UsageError("unknown claim '" + args.claim + "'");
  }
  if (args.p_max < 1 || args.n_max < 1 || args.exp_max < 0 || (args.n && *args.n < 1)) {
    throw UsageError("bounds must be positive");
  }
  const auto reports = run_claim(args);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.verified();
  if (args.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    print_json(out, arr);
  } else if (args.format == "csv") {
    out << "claim,verdict,bounds\n";
    for (const auto& r : reports) {
      out << r.claim << ',' << to_string(r.verdict) << ',' << bounds_text(r.bounds) << '\n';
    }
  } else {
    for (const auto& r : reports) {
      out << std::left << std::setw(22) << r.claim << std::setw(24) << to_string(r.verdict)
          << bounds_text(r.bounds) << '\n';
      out << "  " << r.witnesses.dump() << '\n';
    }
  }
  return ok ? kOk : kFailed;
}

// --- catalog ---------------------------------------------------------------

struct CatalogArgs {
  std::optional<Int> p_max;
  std::string out_path;
  std::string in_path;
  std::string format = "table";
};

json header_json(const CatalogHeader& h) {
  return json{{"version", h.version}, {"p_max", h.p_max}, {"count", h.count}, {"built", h.built}};
}

int cmd_catalog_build(const CatalogArgs& args, std::ostream& out, std::ostream& err) {
  if (!args.p_max) throw UsageError("catalog build requires --p-max");
  if (args.out_path.empty()) throw UsageError("catalog build requires --out");
  if (*args.p_max < 0) throw UsageError("--p-max must be nonnegative");
  const auto cat = Catalog::build(*args.p_max);
  try {
    cat.save(args.out_path);
  } catch (const CatalogError& e) {
    err << "heron: " << e.what() << '\n';
    return kFailed;
  }
  if (args.format == "json") {
    print_json(out, json{{"path", args.out_path}, {"p_max", cat.p_max()}, {"count", cat.records().size()}});
  } else if (args.format == "csv") {
    out << "path,p_max,count\n" << args.out_path << ',' << cat.p_max() << ',' << cat.records().size() << '\n';
  } else {
    out << "wrote " << cat.records().size() << " record(s) to " << args.out_path << '\n';
  }
  return kOk;
}

int cmd_catalog_info(const CatalogArgs& args, std::ostream& out, std::ostream& err) {
  std::string path = args.in_path;
  if (path.empty()) {
    if (const char* env = std::getenv("HERON_CATALOG")) path = env;
  }
  if (path.empty()) throw UsageError("catalog info requires --in or HERON_CATALOG");
  std::optional<Catalog> cat;
  try {
    cat.emplace(Catalog::load(path));
  } catch (const CatalogError& e) {
    err << "heron: " << path << ": " << e.what() << '\n';
    return kFailed;
  }
  const auto& h = cat->header();
  if (args.format == "json") {
    print_json(out, header_json(h));
  } else if (args.format == "csv") {
    out << "version,p_max,count,built\n" << h.version << ',' << h.p_max << ',' << h.count << ',' << h.built << '\n';
  } else {
    out << "version " << h.version << "\np_max   " << h.p_max << "\ncount   " << h.count << "\nbuilt   " << h.built
        << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Heronian triangles and their sociable cycles", "heron"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"table", "json", "csv"});

  EnumerateArgs ea;
  auto* enumerate = app.add_subcommand("enumerate", "List Heronian triangles by perimeter or area");
  enumerate->add_option("--perimeter", ea.perimeter, "Perimeter to match");
  enumerate->add_option("--area", ea.area, "Area to match");
  enumerate->add_option("--format", ea.format, "table | json | csv")->check(formats);

  CyclesArgs ca;
  auto* cycles = app.add_subcommand("cycles", "List n-sociable cycles");
  cycles->add_option("--n", ca.n, "Cycle length")->required();
  cycles->add_option("--p-max", ca.p_max, "Perimeter bound for the concrete search");
  cycles->add_flag("--symbolic", ca.symbolic, "Words over U, V, W (default)");
  cycles->add_flag("--concrete", ca.concrete, "Triangles found by graph search");
  cycles->add_option("--format", ca.format, "table | json | csv")->check(formats);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a claim within explicit bounds");
  verify->add_option("--claim", va.claim,
                     "lemma2 | lemma3 | theorem1 | theorem2 | theorem3 | gersonides | equable-five | all")
      ->required();
  verify->add_option("--p-max", va.p_max, "Perimeter bound")->capture_default_str();
  verify->add_option("--n-max", va.n_max, "Largest cycle length")->capture_default_str();
  verify->add_option("--n", va.n, "Cycle length for theorem1/theorem2 (default 3)");
  verify->add_option("--x", va.x, "Ravi x for a single theorem1 evaluation");
  verify->add_option("--y", va.y, "Ravi y");
  verify->add_option("--z", va.z, "Ravi z");
  verify->add_option("--exp-max", va.exp_max, "Exponent bound for gersonides")->capture_default_str();
  verify->add_option("--format", va.format, "table | json | csv")->check(formats);

  CatalogArgs cat_args;
  auto* catalog = app.add_subcommand("catalog", "Build or inspect a catalog file");
  catalog->require_subcommand(1);
  auto* build = catalog->add_subcommand("build", "Write all triangles up to --p-max as JSON Lines");
  build->add_option("--p-max", cat_args.p_max, "Perimeter bound");
  build->add_option("--out", cat_args.out_path, "Output path");
  build->add_option("--format", cat_args.format, "table | json | csv")->check(formats);
  auto* info = catalog->add_subcommand("info", "Print a catalog header");
  info->add_option("--in", cat_args.in_path, "Catalog path (default: $HERON_CATALOG)");
  info->add_option("--format", cat_args.format, "table | json | csv")->check(formats);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(ea, out);
    if (*cycles) return cmd_cycles(ca, out);
    if (*verify) return cmd_verify(va, out);
    if (*build) return cmd_catalog_build(cat_args, out, err);
    if (*info) return cmd_catalog_info(cat_args, out, err);
  } catch (const UsageError& e) {
    err << "heron: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "heron: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}

}  // namespace heron::cli
