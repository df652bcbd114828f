#include "srings/json_io.hpp"

#include <algorithm>

namespace srings {

namespace {

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw Error(std::string(what) + " must be an integer, got " + j.dump());
  const auto v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) throw Error(std::string(what) + " out of range: " + j.dump());
  return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

SRing ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("basic_sets"))
    throw Error("ring must be an object with \"basic_sets\"");
  const Json& bs = j.at("basic_sets");
  if (!bs.is_array()) throw Error("\"basic_sets\" must be an array");
  std::vector<std::vector<int>> cells;
  int top = 0;
  for (const auto& c : bs) {
    cells.push_back(int_list(c, "basic set element"));
    for (int x : cells.back()) top = std::max(top, x);
  }
  const int n = j.contains("n") ? as_int(j.at("n"), "n") : top + 1;
  check_modulus(n);
  return validate(n, std::move(cells));
}

Json ring_to_json(const SRing& a) {
  return Json{{"n", a.n}, {"basic_sets", a.cells}};
}

PermGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("degree")) throw Error("group must be an object with \"degree\"");
  const int m = as_int(j.at("degree"), "degree");
  if (m < 1) throw Error("degree must be positive");
  std::vector<Perm> gens;
  if (j.contains("generators"))
    for (const auto& g : j.at("generators")) {
      Perm p = int_list(g, "generator image");
      if (static_cast<int>(p.size()) != m || !is_permutation(p))
        throw Error("generator " + std::to_string(gens.size()) + " is not a permutation of degree " +
                    std::to_string(m));
      gens.push_back(std::move(p));
    }
  return PermGroup(m, std::move(gens));
}

Json group_to_json(const PermGroup& g) {
  return Json{{"degree", g.degree()}, {"generators", g.generators()}, {"order", big_to_json(g.order())}};
}

Json big_to_json(const BigInt& x) { return x.str(); }

Json section_to_json(const Section& s) { return Json::array({s.u, s.l}); }

Json proj_class_to_json(const ProjClass& c) {
  Json secs = Json::array();
  for (const auto& s : c.sections) secs.push_back(section_to_json(s));
  return Json{{"order", c.order},
              {"s_min", section_to_json(c.s_min)},
              {"s_max", section_to_json(c.s_max)},
              {"rank", c.rank},
              {"primitive", c.primitive},
              {"isolated", c.isolated},
              {"singular", c.singular},
              {"sections", secs}};
}

Json classification_to_json(const Classification& c) {
  Json secs = Json::array();
  for (const auto& s : c.proper_gwp_sections) secs.push_back(section_to_json(s));
  return Json{{"rank", c.rank},
              {"dense", c.dense},
              {"primitive", c.primitive},
              {"trivial_radical", c.trivial_radical},
              {"proper_gwp_sections", secs}};
}

Json schurity_to_json(const SchurityReport& r) {
  return Json{{"schurian", r.schurian},
              {"aut_order", big_to_json(r.aut_order)},
              {"stabilizer_orbits", r.stabilizer_orbits}};
}

Json nonschurity_to_json(const NonschurityResult& r) {
  return Json{{"holds", r.holds},
              {"induced_from_u_order", big_to_json(r.induced_from_u_order)},
              {"induced_from_quotient_order", big_to_json(r.induced_from_quotient_order)},
              {"intersection_order", big_to_json(r.intersection_order)},
              {"section_aut_order", big_to_json(r.section_aut_order)},
              {"intersection_two_orbits", r.intersection_two_orbits},
              {"section_two_orbits", r.section_two_orbits}};
}

Json sweep_to_json(const SweepReport& r) {
  Json bad = Json::array();
  for (const auto& e : r.nonschurian) {
    Json secs = Json::array();
    for (const auto& s : e.gwp_sections) secs.push_back(section_to_json(s));
    Json facts = Json::array();
    for (const auto& f : e.facts)
      facts.push_back(Json{{"section", section_to_json(f.section)},
                           {"outer_orders_prime", f.outer_orders_prime},
                           {"order_not_four", f.order_not_four},
                           {"section_proper_wreath", f.section_proper_wreath},
                           {"factors_not_proper_wreath", f.factors_not_proper_wreath},
                           {"factors_not_both_normal", f.factors_not_both_normal}});
    bad.push_back(Json{{"ring", ring_to_json(e.ring)},
                       {"provenance", e.provenance},
                       {"aut_order", big_to_json(e.aut_order)},
                       {"gwp_sections", secs},
                       {"structure_checks", facts}});
  }
  return Json{{"n", r.n},
              {"omega", omega(r.n)},
              {"entries", r.entries},
              {"schurian", r.schurian},
              {"nonschurian", bad}};
}

Json catalog_entry_to_json(const CatalogEntry& e) {
  Json j = ring_to_json(e.ring);
  j["provenance"] = e.provenance;
  return j;
}

}  // namespace srings
