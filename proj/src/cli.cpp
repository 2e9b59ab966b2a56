#include "orbigraph/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "orbigraph/cheeger.hpp"
#include "orbigraph/enumerate.hpp"
#include "orbigraph/error.hpp"
#include "orbigraph/goodness.hpp"
#include "orbigraph/io.hpp"
#include "orbigraph/markov.hpp"
#include "orbigraph/spectral.hpp"

namespace orbigraph::cli {

namespace {

using nlohmann::json;

// Raised for unreadable/unwritable files.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoFailure("cannot write " + path.string());
}

json strings(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.str());
  return out;
}

json strings(const RationalVector& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

std::string join(const std::vector<Vertex>& vs, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? sep : "") + std::to_string(vs[i]);
  return out;
}

std::string join(const RationalVector& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + to_string(xs[i]);
  return out;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return kIoError;
    case ErrorKind::NotEquitable: return kNotEquitable;
    case ErrorKind::NotGood: return kBad;
    default: return kInvalid;
  }
}

json error_json(const OrbigraphError& e) {
  json j{{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
  if (e.where().line) j["line"] = *e.where().line;
  if (e.where().row) j["row"] = *e.where().row;
  if (e.where().column) j["column"] = *e.where().column;
  return j;
}

// Output of one unit of work (usually one input file).
struct Report {
  int code = kOk;
  std::string out;
  std::string err;
};

struct Options {
  bool json = false;
};

// Runs `body` and converts library and I/O failures into a report.
Report guarded(const std::string& command, const std::string& file, const Options& opts,
               const std::function<Report()>& body) {
  try {
    return body();
  } catch (const OrbigraphError& e) {
    Report r{exit_code_for(e.kind()), "", ""};
    if (opts.json) {
      r.out = json{{"command", command}, {"file", file}, {"ok", false}, {"error", error_json(e)}}.dump() + "\n";
    }
    r.err = file + ": " + e.what() + "\n";
    return r;
  } catch (const IoFailure& e) {
    Report r{kIoError, "", std::string(e.what()) + "\n"};
    if (opts.json)
      r.out = json{{"command", command}, {"file", file}, {"ok", false},
                   {"error", {{"kind", "IoError"}, {"message", e.what()}}}}
                  .dump() +
              "\n";
    return r;
  }
}

// Evaluates `work` for every file concurrently; prints in input order and
// returns the largest exit code.
int for_each_file(const std::vector<std::string>& files, const std::function<Report(const std::string&)>& work,
                  std::ostream& out, std::ostream& err) {
  std::vector<std::future<Report>> pending;
  pending.reserve(files.size());
  for (const auto& f : files) pending.push_back(std::async(std::launch::async, work, f));
  int code = kOk;
  for (auto& p : pending) {
    const Report r = p.get();
    out << r.out;
    err << r.err;
    code = std::max(code, r.code);
  }
  return code;
}

Orbigraph load(const std::string& path, bool allow_disconnected = false) {
  return parse_orbigraph(read_file(path), allow_disconnected);
}

json local_models_json(const Orbigraph& g) {
  json out = json::array();
  for (Vertex v = 0; v < g.size(); ++v) out.push_back(local_model(g, v).weights());
  return out;
}

Report cmd_validate(const std::string& file, const Options& opts) {
  return guarded("validate", file, opts, [&] {
    const Orbigraph g = load(file);
    Report r;
    if (opts.json)
      r.out = json{{"command", "validate"}, {"file", file}, {"ok", true}, {"n", g.size()}, {"k", g.degree()}}.dump() +
              "\n";
    else
      r.out = file + ": valid " + std::to_string(g.degree()) + "-orbigraph on " + std::to_string(g.size()) +
              " vertices\n";
    return r;
  });
}

Report cmd_info(const std::string& file, const Options& opts, std::size_t walks) {
  return guarded("info", file, opts, [&] {
    const Orbigraph g = load(file, /*allow_disconnected=*/true);
    const auto singular = singular_vertices(g);
    const auto spectrum = length_spectrum(g, walks);
    const auto bounds = singular_bounds(g);

    json j{{"command", "info"},
           {"file", file},
           {"ok", true},
           {"n", g.size()},
           {"k", g.degree()},
           {"connected", g.connected()},
           {"simple_regular", is_simple_regular(g)},
           {"singular_vertices", singular},
           {"local_models", local_models_json(g)},
           {"length_spectrum", strings(spectrum.traces())},
           {"singular_bounds",
            {{"lower", to_string(bounds.lower)}, {"upper", bounds.upper.str()}, {"actual", bounds.actual}}},
           {"stationary_distribution", nullptr},
           {"min_entry_bound", nullptr},
           {"cheeger_bound", nullptr}};
    if (g.connected()) {
      j["stationary_distribution"] = strings(stationary_distribution(g));
      const auto mb = stationary_min_bound(g);
      j["min_entry_bound"] = {{"pi_min", to_string(mb.pi_min)}, {"bound", to_string(mb.bound)}, {"holds", mb.holds}};
      if (g.size() >= 2 && g.size() <= kDefaultCheegerMaxVertices) {
        const auto cb = cheeger_bound_check(g);
        j["cheeger_bound"] = {{"h", to_string(cb.h)}, {"bound", to_string(cb.bound)}, {"holds", cb.holds}};
      }
    }
    Report r;
    if (opts.json) {
      r.out = j.dump() + "\n";
      return r;
    }
    std::ostringstream s;
    s << file << '\n';
    s << "  n = " << g.size() << ", k = " << g.degree() << (g.connected() ? "" : " (disconnected)") << '\n';
    s << "  singular vertices: [" << join(singular, ", ") << "]\n";
    s << "  local models:";
    for (Vertex v = 0; v < g.size(); ++v) {
      const WeightMultiset model = local_model(g, v);
      const auto& w = model.weights();
      s << " {";
      for (std::size_t i = 0; i < w.size(); ++i) s << (i ? "," : "") << w[i];
      s << "}";
    }
    s << "\n  length spectrum:";
    for (const auto& t : spectrum.traces()) s << ' ' << t;
    s << "\n  singular bounds: " << to_string(bounds.lower) << " <= s = " << bounds.actual << " <= " << bounds.upper
      << '\n';
    if (g.connected()) {
      s << "  stationary distribution: " << join(stationary_distribution(g)) << '\n';
      const auto mb = stationary_min_bound(g);
      s << "  min entry " << to_string(mb.pi_min) << " >= " << to_string(mb.bound) << ": "
        << (mb.holds ? "holds" : "FAILS") << '\n';
      if (!j["cheeger_bound"].is_null())
        s << "  cheeger h = " << j["cheeger_bound"]["h"].get<std::string>() << " >= "
          << j["cheeger_bound"]["bound"].get<std::string>() << ": "
          << (j["cheeger_bound"]["holds"].get<bool>() ? "holds" : "FAILS") << '\n';
    }
    r.out = s.str();
    return r;
  });
}

Report cmd_goodness(const std::string& file, const Options& opts, const std::string& certificate_dir) {
  return guarded("goodness", file, opts, [&] {
    const Orbigraph g = load(file);
    const std::string stem = std::filesystem::path(file).stem().string();
    Report r;
    json j{{"command", "goodness"}, {"file", file}, {"ok", true}};
    std::ostringstream s;
    if (goodness_verdict(g) == Verdict::Bad) {
      const GoodnessCertificate cert = kolmogorov_certificate(g);
      const BadCycle& c = *cert.bad;
      r.code = kBad;
      j["verdict"] = "bad";
      j["cycle"] = c.cycle;
      j["forward_product"] = c.forward_product.str();
      j["reverse_product"] = c.reverse_product.str();
      s << file << ": bad; cycle " << join(c.cycle) << " forward " << c.forward_product << " reverse "
        << c.reverse_product << '\n';
      if (!certificate_dir.empty()) {
        std::filesystem::create_directories(certificate_dir);
        const auto path = std::filesystem::path(certificate_dir) / (stem + ".witness.txt");
        write_file(path, "cycle " + join(c.cycle) + "\nforward " + c.forward_product.str() + "\nreverse " +
                             c.reverse_product.str() + "\n");
        j["witness_file"] = path.string();
      }
    } else {
      const CoverWitness cover = connected_cover(g);
      const Orbigraph cover_graph = Orbigraph::validate(cover.cover.to_digraph());
      std::vector<std::size_t> sizes;
      for (const auto& cell : cover.partition.cells()) sizes.push_back(cell.size());
      j["verdict"] = "good";
      j["balance_vector"] = strings(cover.balance);
      j["scale"] = cover.scale.str();
      j["cover_vertices"] = cover.cover.size();
      j["cell_sizes"] = sizes;
      s << file << ": good; balance vector (" << join(RationalVector(cover.balance.begin(), cover.balance.end()))
        << "), connected cover on " << cover.cover.size() << " vertices\n";
      if (!certificate_dir.empty()) {
        std::filesystem::create_directories(certificate_dir);
        const auto gpath = std::filesystem::path(certificate_dir) / (stem + ".cover.obg");
        const auto ppath = std::filesystem::path(certificate_dir) / (stem + ".cover.part");
        write_file(gpath, serialize_orbigraph(cover_graph));
        write_file(ppath, serialize_partition(cover.partition));
        j["cover_file"] = gpath.string();
        j["partition_file"] = ppath.string();
      }
    }
    r.out = opts.json ? j.dump() + "\n" : s.str();
    return r;
  });
}

Report cmd_cover(const std::string& file, const Options& opts, const std::string& out_path,
                 const std::string& part_path, bool disconnected) {
  return guarded("cover", file, opts, [&] {
    const Orbigraph g = load(file);
    const CoverWitness cover = disconnected ? build_cover(g) : connected_cover(g);
    const Orbigraph cover_graph = Orbigraph::validate(cover.cover.to_digraph(), g.degree(), true);
    write_file(out_path, serialize_orbigraph(cover_graph));
    write_file(part_path, serialize_partition(cover.partition));
    std::vector<std::size_t> sizes;
    for (const auto& cell : cover.partition.cells()) sizes.push_back(cell.size());
    Report r;
    if (opts.json) {
      r.out = json{{"command", "cover"},       {"file", file},
                   {"ok", true},               {"vertices", cover.cover.size()},
                   {"edges", cover.cover.edges().size()}, {"connected", cover_graph.connected()},
                   {"cell_sizes", sizes},      {"out", out_path},
                   {"partition", part_path}}
                  .dump() +
              "\n";
    } else {
      r.out = "wrote " + std::to_string(cover.cover.size()) + "-vertex " + std::to_string(g.degree()) +
              "-regular cover to " + out_path + " and partition to " + part_path + "\n";
    }
    return r;
  });
}

Report cmd_quotient(const std::string& graph_file, const std::string& part_file, const Options& opts) {
  return guarded("quotient", graph_file, opts, [&] {
    const Orbigraph g = load(graph_file, /*allow_disconnected=*/true);
    const VertexPartition p = parse_partition(read_file(part_file), g.size());
    Report r;
    if (auto bad = find_equitable_violation(g.graph(), p)) {
      r.code = kNotEquitable;
      if (opts.json)
        r.out = json{{"command", "quotient"}, {"file", graph_file}, {"partition", part_file}, {"ok", false},
                     {"equitable", false},    {"violation", bad->describe()}}
                    .dump() +
                "\n";
      r.err = "not equitable: " + bad->describe() + "\n";
      return r;
    }
    const Orbigraph q = quotient(g, p);
    r.out = opts.json ? json{{"command", "quotient"}, {"file", graph_file}, {"partition", part_file}, {"ok", true},
                             {"equitable", true},     {"quotient", orbigraph_to_json(q)}}
                                .dump() +
                            "\n"
                      : serialize_orbigraph(q);
    return r;
  });
}

Report cmd_spectrum(const std::string& file, const Options& opts, double tol, bool exact_poly) {
  return guarded("spectrum", file, opts, [&] {
    const Orbigraph g = load(file, /*allow_disconnected=*/true);
    const IntPolynomial poly = char_poly(g);
    const auto roots = eigenvalues(g, tol);
    Report r;
    if (opts.json) {
      json eig = json::array();
      for (const auto& z : roots) eig.push_back({{"re", z.real()}, {"im", z.imag()}});
      r.out = json{{"command", "spectrum"},
                   {"file", file},
                   {"ok", true},
                   {"eigenvalues", eig},
                   {"char_poly", strings(poly.coefficients())},
                   {"real_root_count", count_real_roots(poly)}}
                  .dump() +
              "\n";
      return r;
    }
    std::ostringstream s;
    s << std::setprecision(12);
    s << file << '\n';
    if (exact_poly) s << "  char poly: " << poly.to_string() << '\n';
    s << "  eigenvalues:";
    for (const auto& z : roots) {
      const double re = std::abs(z.real()) < tol ? 0.0 : z.real();
      s << ' ' << re;
      if (std::abs(z.imag()) >= tol) s << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << 'i';
    }
    s << '\n';
    r.out = s.str();
    return r;
  });
}

Report cmd_cheeger(const std::string& file, const Options& opts, std::size_t max_n) {
  return guarded("cheeger", file, opts, [&] {
    const Orbigraph g = load(file);
    const auto result = cheeger_constant(g, max_n);
    const auto bound = cheeger_bound_check(g, max_n);
    Report r;
    if (opts.json)
      r.out = json{{"command", "cheeger"},          {"file", file}, {"ok", true}, {"h", to_string(result.h)},
                   {"argmin", result.argmin},       {"bound", to_string(bound.bound)},
                   {"holds", bound.holds}}
                  .dump() +
              "\n";
    else
      r.out = file + ": h = " + to_string(result.h) + " at S = {" + join(result.argmin, ", ") + "}; bound " +
              to_string(bound.bound) + (bound.holds ? " holds" : " FAILS") + "\n";
    return r;
  });
}

Report cmd_dot(const std::string& file, const Options& opts, bool unit_labels) {
  return guarded("dot", file, opts, [&] {
    const Orbigraph g = load(file, /*allow_disconnected=*/true);
    const std::string dot = export_dot(g, {.suppress_unit_labels = !unit_labels});
    Report r;
    r.out = opts.json ? json{{"command", "dot"}, {"file", file}, {"ok", true}, {"dot", dot}}.dump() + "\n" : dot;
    return r;
  });
}

int cmd_enumerate(const EnumerationSpec& spec, bool cospectral_report, bool annotate, const Options& opts,
                  std::ostream& out, std::ostream& err) {
  const Report r = guarded("enumerate", "", opts, [&] {
    std::ostringstream s;
    if (cospectral_report) {
      for (const auto& cls : find_cospectral_classes(spec)) {
        if (opts.json) {
          json members = json::array();
          for (const auto& m : cls.members)
            members.push_back({{"adjacency", m.graph.rows()},
                               {"verdict", m.verdict ? json(*m.verdict == Verdict::Good ? "good" : "bad") : json()}});
          s << json{{"char_poly", strings(cls.poly.coefficients())}, {"members", members}}.dump() << '\n';
        } else {
          s << "# class " << cls.poly.to_string() << " (" << cls.members.size() << " members)\n";
          for (const auto& m : cls.members) {
            s << "# verdict " << (m.verdict ? (*m.verdict == Verdict::Good ? "good" : "bad") : "n/a") << '\n';
            s << serialize_orbigraph(m.graph) << '\n';
          }
        }
      }
    } else {
      std::size_t count = 0;
      enumerate_orbigraphs(spec, [&](const Orbigraph& g) {
        ++count;
        std::optional<Verdict> verdict;
        if (annotate && g.connected()) verdict = goodness_verdict(g);
        if (opts.json) {
          json j = orbigraph_to_json(g);
          if (annotate) j["verdict"] = verdict ? json(*verdict == Verdict::Good ? "good" : "bad") : json();
          s << j.dump() << '\n';
        } else {
          if (annotate) s << "# verdict " << (verdict ? (*verdict == Verdict::Good ? "good" : "bad") : "n/a") << '\n';
          s << serialize_orbigraph(g) << '\n';
        }
        return true;
      });
      if (!opts.json) s << "# " << count << " orbigraphs\n";
    }
    return Report{kOk, s.str(), ""};
  });
  out << r.out;
  err << r.err;
  return r.code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbigraph analysis: validation, goodness certificates, covers, spectra, Cheeger constants."};
  app.require_subcommand(1);
  Options opts;
  app.add_flag("--json", opts.json, "Machine-readable JSON output");

  std::vector<std::string> files;
  auto add_files = [&](CLI::App* sub) {
    sub->add_option("files", files, "Orbigraph files (.obg or JSON)")->required();
    sub->add_flag("--json", opts.json, "Machine-readable JSON output");
  };

  auto* validate = app.add_subcommand("validate", "Check the orbigraph axioms");
  add_files(validate);

  std::size_t walks = 6;
  auto* info = app.add_subcommand("info", "Local structure, Markov and spectral summary");
  add_files(info);
  info->add_option("--walks", walks, "Length-spectrum prefix length")->check(CLI::PositiveNumber);

  std::string certificate_dir;
  auto* goodness = app.add_subcommand("goodness", "Decide good/bad with a certificate");
  add_files(goodness);
  goodness->add_option("--certificate", certificate_dir, "Directory for cover/partition or witness files");

  std::string cover_file;
  std::string cover_out;
  std::string cover_part;
  bool cover_disconnected = false;
  auto* cover = app.add_subcommand("cover", "Construct a finite regular cover");
  cover->add_option("file", cover_file, "Orbigraph file")->required();
  cover->add_option("--out", cover_out, "Cover graph output (.obg)")->required();
  cover->add_option("--partition", cover_part, "Partition output (.part)")->required();
  cover->add_flag("--disconnected", cover_disconnected, "Keep every component of the construction");
  cover->add_flag("--json", opts.json, "Machine-readable JSON output");

  std::string quot_graph;
  std::string quot_part;
  auto* quot = app.add_subcommand("quotient", "Quotient of a graph by an equitable partition");
  quot->add_option("graph", quot_graph, "Graph file (.obg)")->required();
  quot->add_option("partition", quot_part, "Partition file (.part)")->required();
  quot->add_flag("--json", opts.json, "Machine-readable JSON output");

  double tol = 1e-9;
  bool exact_poly = false;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and characteristic polynomial");
  add_files(spectrum);
  spectrum->add_option("--tol", tol, "Root residual tolerance")->check(CLI::PositiveNumber);
  spectrum->add_flag("--exact-poly", exact_poly, "Print the integer characteristic polynomial");

  std::size_t max_n = kDefaultCheegerMaxVertices;
  auto* cheeger = app.add_subcommand("cheeger", "Exact Cheeger constant");
  add_files(cheeger);
  cheeger->add_option("--max-n", max_n, "Largest vertex count to enumerate subsets for");

  EnumerationSpec spec;
  bool cospectral_report = false;
  bool annotate = false;
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate small orbigraphs");
  enumerate->add_option("-n", spec.n, "Vertex count")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("-k", spec.k, "Degree")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--connected", spec.connected_only, "Only connected orbigraphs");
  enumerate->add_flag("--canonical", spec.up_to_iso, "One representative per isomorphism class");
  enumerate->add_flag("--cospectral", cospectral_report, "Report cospectral classes");
  enumerate->add_flag("--verdict", annotate, "Annotate each orbigraph with its goodness verdict");
  enumerate->add_option("--budget", spec.budget, "Search-tree node budget");
  enumerate->add_flag("--json", opts.json, "Machine-readable JSON output");

  bool unit_labels = false;
  auto* dot = app.add_subcommand("dot", "Graphviz DOT export");
  add_files(dot);
  dot->add_flag("--unit-labels", unit_labels, "Label weight-1 edges too");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kIoError;
  }

  if (validate->parsed()) return for_each_file(files, [&](const std::string& f) { return cmd_validate(f, opts); }, out, err);
  if (info->parsed()) return for_each_file(files, [&](const std::string& f) { return cmd_info(f, opts, walks); }, out, err);
  if (goodness->parsed())
    return for_each_file(files, [&](const std::string& f) { return cmd_goodness(f, opts, certificate_dir); }, out, err);
  if (spectrum->parsed())
    return for_each_file(files, [&](const std::string& f) { return cmd_spectrum(f, opts, tol, exact_poly); }, out, err);
  if (cheeger->parsed())
    return for_each_file(files, [&](const std::string& f) { return cmd_cheeger(f, opts, max_n); }, out, err);
  if (dot->parsed()) return for_each_file(files, [&](const std::string& f) { return cmd_dot(f, opts, unit_labels); }, out, err);
  if (cover->parsed()) {
    const Report r = cmd_cover(cover_file, opts, cover_out, cover_part, cover_disconnected);
    out << r.out;
    err << r.err;
    return r.code;
  }
  if (quot->parsed()) {
    const Report r = cmd_quotient(quot_graph, quot_part, opts);
    out << r.out;
    err << r.err;
    return r.code;
  }
  if (enumerate->parsed()) return cmd_enumerate(spec, cospectral_report, annotate, opts, out, err);
  err << app.help();
  return kIoError;
}

}  // namespace orbigraph::cli
