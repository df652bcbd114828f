#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srings/aut.hpp"
#include "srings/catalog.hpp"
#include "srings/json_io.hpp"
#include "srings/structure.hpp"

using namespace srings;

namespace {

struct IoArgs {
  std::string ring;    // inline JSON
  std::string input;   // file path, "-" for stdin
  std::string output;  // file path, empty for stdout
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Json load_json(const std::string& inline_text, const std::string& path, const char* what) {
  if (!inline_text.empty()) return parse_json(inline_text);
  if (path.empty()) throw Error(std::string("no ") + what + " given (use --" + what + " or --input)");
  if (path == "-") return parse_json(read_all(std::cin));
  std::ifstream f(path);
  if (!f) throw Error("cannot open " + path);
  return parse_json(read_all(f));
}

SRing load_ring(const IoArgs& io) { return ring_from_json(load_json(io.ring, io.input, "ring")); }

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error("cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }
  void doc(const Json& j) { os() << j.dump(2) << "\n"; }
  void line(const Json& j) { os() << j.dump() << "\n"; }

 private:
  std::ofstream file_;
};

void add_ring_io(CLI::App* cmd, IoArgs& io) {
  cmd->add_option("--ring", io.ring, "S-ring as inline JSON");
  cmd->add_option("--input", io.input, "file holding the S-ring JSON ('-' for stdin)");
  cmd->add_option("--output", io.output, "write the report here instead of stdout");
}

void add_budget(CLI::App* cmd, AutOptions& aut) {
  cmd->add_option("--max-degree", aut.max_degree, "largest degree for automorphism search");
  cmd->add_option("--node-budget", aut.node_budget, "search tree node budget");
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error("not an integer: '" + tok + "'");
    }
  }
  return out;
}

Json lattice_json(const SRing& a) { return subgroup_lattice(a); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur rings over cyclic groups"};
  app.require_subcommand(1);

  IoArgs io;
  AutOptions aut;
  AutOptions schur_aut = schurity_defaults();
  int n = 0, u = 0, l = 0, jobs = 0, mult = 1;
  std::string kind, gens_text, ring_b, n_list;
  int n_from = 0, n_to = 0, omega_max = 0;
  bool brute = false, distinct = false, emit_ring = false, serial = false;
  std::uint64_t threshold = 1000000;
  std::size_t max_entries = EnumerateOptions{}.max_entries;
  Example12Params ex;

  auto* validate_cmd = app.add_subcommand("validate", "check the S-ring axioms");
  add_ring_io(validate_cmd, io);

  auto* construct_cmd = app.add_subcommand("construct", "build an S-ring");
  construct_cmd
      ->add_option("--kind", kind,
                   "full | rank2 | cyclotomic | tensor | gwp | section | multiply")
      ->required();
  construct_cmd->add_option("--n", n, "modulus (full, rank2, cyclotomic)");
  construct_cmd->add_option("--gens", gens_text, "comma-separated unit generators (cyclotomic)");
  construct_cmd->add_option("--u", u, "order of U (gwp, section)");
  construct_cmd->add_option("--l", l, "order of L (gwp, section)");
  construct_cmd->add_option("--m", mult, "unit multiplier (multiply)");
  construct_cmd->add_option("--ring-b", ring_b, "second S-ring as inline JSON (tensor, gwp)");
  add_ring_io(construct_cmd, io);

  auto* analyze_cmd = app.add_subcommand("analyze", "lattice, radical, sections and classes");
  add_ring_io(analyze_cmd, io);

  auto* aut_cmd = app.add_subcommand("aut", "automorphism group of the Cayley scheme");
  add_ring_io(aut_cmd, io);
  add_budget(aut_cmd, aut);

  auto* schurity_cmd = app.add_subcommand("schurity", "decide schurity");
  add_ring_io(schurity_cmd, io);
  schurity_cmd->add_option("--n", n, "expected modulus");
  add_budget(schurity_cmd, schur_aut);

  auto* nonschur_cmd = app.add_subcommand("nonschurity", "one-sided non-schurity test on a section");
  add_ring_io(nonschur_cmd, io);
  nonschur_cmd->add_option("--u", u, "order of U")->required();
  nonschur_cmd->add_option("--l", l, "order of L")->required();
  nonschur_cmd->add_option("--threshold", threshold, "intersection enumeration threshold");
  add_budget(nonschur_cmd, aut);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "all S-rings over Z_n, one JSON per line");
  enumerate_cmd->add_option("--n", n, "modulus")->required();
  enumerate_cmd->add_flag("--brute", brute, "use exhaustive search (n <= 13)");
  enumerate_cmd->add_option("--max-entries", max_entries, "per-divisor catalog budget");
  enumerate_cmd->add_option("--output", io.output, "output file");

  auto* sweep_cmd = app.add_subcommand("sweep", "schurity of every catalog entry, one JSON per n");
  sweep_cmd->add_option("--n", n_list, "comma-separated moduli");
  sweep_cmd->add_option("--from", n_from, "first modulus of a range");
  sweep_cmd->add_option("--to", n_to, "last modulus of a range");
  sweep_cmd->add_option("--omega-max", omega_max, "skip n with more prime factors");
  sweep_cmd->add_option("--jobs", jobs, "worker threads (0: default)");
  sweep_cmd->add_flag("--serial", serial, "single-threaded reference path");
  sweep_cmd->add_option("--max-entries", max_entries, "per-divisor catalog budget");
  sweep_cmd->add_option("--output", io.output, "output file");
  add_budget(sweep_cmd, schur_aut);

  auto* resolve_cmd = app.add_subcommand("resolve", "2-equivalent group via singular class resolution");
  add_ring_io(resolve_cmd, io);
  add_budget(resolve_cmd, aut);

  auto* ex_cmd = app.add_subcommand("example12", "non-schurian family over Z_{p^2 p3 p4}");
  ex_cmd->add_option("--p", ex.p, "prime p");
  ex_cmd->add_option("--p3", ex.p3, "prime p3 with p | p3 - 1");
  ex_cmd->add_option("--p4", ex.p4, "prime p4 != p");
  ex_cmd->add_option("--d", ex.d, "common divisor of p - 1 and p4 - 1");
  ex_cmd->add_flag("--distinct", distinct, "use two different isomorphisms for M1, M2");
  ex_cmd->add_flag("--emit-ring", emit_ring, "include the basic sets in the report");
  ex_cmd->add_option("--threshold", threshold, "intersection enumeration threshold");
  ex_cmd->add_option("--output", io.output, "output file");
  add_budget(ex_cmd, aut);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Output out(io.output);
    if (*validate_cmd) {
      const SRing a = load_ring(io);
      out.doc(Json{{"valid", true}, {"rank", a.rank()}, {"ring", ring_to_json(a)}});
    } else if (*construct_cmd) {
      SRing r;
      if (kind == "full") {
        r = full_group_ring(n);
      } else if (kind == "rank2") {
        r = rank2(n);
      } else if (kind == "cyclotomic") {
        r = cyclotomic(n, parse_int_list(gens_text));
      } else if (kind == "tensor") {
        r = tensor(load_ring(io), ring_from_json(parse_json(ring_b)));
      } else if (kind == "gwp") {
        const SRing a1 = load_ring(io);
        const SRing a2 = ring_from_json(parse_json(ring_b));
        if (u != a1.n) throw Error("--u must equal the modulus of the first ring");
        if (l < 1) throw Error("--l must be positive");
        r = generalized_wreath(a1, a2, make_section(a2.n * l, u, l));
      } else if (kind == "section") {
        const SRing a = load_ring(io);
        r = section_ring(a, make_section(a.n, u, l));
      } else if (kind == "multiply") {
        r = multiply(load_ring(io), mult);
      } else {
        throw Error("unknown kind: " + kind);
      }
      out.doc(ring_to_json(r));
    } else if (*analyze_cmd) {
      const SRing a = load_ring(io);
      Json classes = Json::array(), singular = Json::array();
      for (const auto& c : proj_classes(a)) {
        classes.push_back(proj_class_to_json(c));
        if (c.singular) singular.push_back(section_to_json(c.s_min));
      }
      out.doc(Json{{"n", a.n},
                   {"rank", a.rank()},
                   {"radical", radical(a)},
                   {"lattice", lattice_json(a)},
                   {"classification", classification_to_json(classify(a))},
                   {"proper_wreath", is_proper_wreath(a)},
                   {"classes", classes},
                   {"singular", singular}});
    } else if (*aut_cmd) {
      const SRing a = load_ring(io);
      const AutResult r = aut_search(a, aut);
      Json j = group_to_json(r.group);
      j["base"] = r.base;
      j["nodes"] = r.nodes;
      out.doc(j);
    } else if (*schurity_cmd) {
      const SRing a = load_ring(io);
      if (n != 0 && n != a.n)
        throw Error("--n " + std::to_string(n) + " does not match ring modulus " + std::to_string(a.n));
      out.doc(schurity_to_json(schurity(a, schur_aut)));
    } else if (*nonschur_cmd) {
      const SRing a = load_ring(io);
      const Section s = make_section(a.n, u, l);
      Json j = nonschurity_to_json(nonschurity_criterion(a, s, aut, threshold));
      j["section"] = section_to_json(s);
      out.doc(j);
    } else if (*enumerate_cmd) {
      if (brute) {
        for (const auto& a : brute_force_srings(n)) out.line(ring_to_json(a));
      } else {
        EnumerateOptions eo;
        eo.max_entries = max_entries;
        for (const auto& e : enumerate_srings(n, eo).entries) out.line(catalog_entry_to_json(e));
      }
    } else if (*sweep_cmd) {
      std::vector<int> ns = parse_int_list(n_list);
      if (n_from > 0)
        for (int k = n_from; k <= n_to; ++k) ns.push_back(k);
      if (ns.empty()) throw Error("no moduli given (use --n or --from/--to)");
      SweepOptions so;
      so.aut = schur_aut;
      so.jobs = jobs;
      so.enumerate.max_entries = max_entries;
      for (int k : ns) {
        if (k < 1) throw Error("moduli must be positive");
        if (omega_max > 0 && omega(k) > omega_max) continue;
        out.line(sweep_to_json(serial ? schurity_sweep_serial(k, so) : schurity_sweep(k, so)));
      }
    } else if (*resolve_cmd) {
      const SRing a = load_ring(io);
      const ResolveResult r = resolve(a, aut);
      Json j = group_to_json(r.group);
      j["depth"] = r.depth;
      j["verified"] = r.verified;
      if (r.verified) j["two_equivalent_to_aut"] = r.equivalent;
      out.doc(j);
    } else if (*ex_cmd) {
      const Example12 e = example12(ex, distinct);
      const bool valid = !axiom_violation(e.ring).has_value();
      const NonschurityResult ns = nonschurity_criterion(e.ring, e.section, aut, threshold);
      Json j{{"n", e.ring.n},
             {"params", {{"p", ex.p}, {"p3", ex.p3}, {"p4", ex.p4}, {"d", ex.d}}},
             {"distinct", e.distinct},
             {"generators", {{"M", e.m_gen}, {"M1", e.m1_gen}, {"M2", e.m2_gen}}},
             {"valid", valid},
             {"rank", e.ring.rank()},
             {"lattice", lattice_json(e.ring)},
             {"factor_sections_agree", e.factor_sections_agree},
             {"section", section_to_json(e.section)},
             {"nonschurity", nonschurity_to_json(ns)},
             {"nonschurian_certificate", ns.holds}};
      if (emit_ring) j["ring"] = ring_to_json(e.ring);
      out.doc(j);
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
