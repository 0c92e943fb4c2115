#include "dz/catalog.hpp"

#include <json.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

#include "dz/permmap.hpp"
#include "dz/seriesgen.hpp"

// Raw catalog data embedded at build time; defines dz::catalog::kCatalogJson.
#include "catalog_data.inc"

namespace dz::catalog {

namespace {

using nlohmann::json;

Poly poly_from_json(const json& spec) {
  Rat c = spec.contains("const") ? Rat::parse(spec["const"].get<std::string>()) : Rat(1);
  Poly acc = Poly::constant(c);
  for (const auto& f : spec["factors"]) {
    std::vector<Rat> coeffs;
    for (const auto& s : f["c"]) coeffs.push_back(Rat::parse(s.get<std::string>()));
    acc = acc * Poly(std::move(coeffs)).pow(f["e"].get<int>());
  }
  return acc;
}

Poly coeff_list(const json& arr) {
  std::vector<Rat> coeffs;
  for (const auto& s : arr) coeffs.push_back(Rat::parse(s.get<std::string>()));
  return Poly(std::move(coeffs));
}

// Picks the entry's tree out of its combinatorial orbit by the stated
// invariant. Unitrees are their whole orbit; the others are singled out by
// monodromy group order, symmetry order, or self-duality.
std::optional<WeightedTree> attach_tree(const std::string& rule, const Passport& pp) {
  auto orbit = enumerate_orbit(pp, 64);
  std::vector<WeightedTree> hits;
  if (rule == "unitree") {
    if (orbit.size() != 1)
      throw std::logic_error("catalog: passport " + pp.str() + " is not a unitree");
    hits = orbit;
  } else if (rule == "monodromy336") {
    for (const auto& t : orbit)
      if (group_order(expand_to_map(t)) == 336) hits.push_back(t);
  } else if (rule == "selfdual") {
    for (const auto& t : orbit)
      if (is_self_dual(t)) hits.push_back(t);
  } else if (rule.rfind("symmetry:", 0) == 0) {
    int want = std::stoi(rule.substr(9));
    for (const auto& t : orbit)
      if (t.symmetry_order() == want) hits.push_back(t);
  } else {
    throw std::logic_error("catalog: unknown tree rule " + rule);
  }
  if (hits.size() != 1)
    throw std::logic_error("catalog: tree rule '" + rule + "' picked " +
                           std::to_string(hits.size()) + " trees for " + pp.str());
  return hits.front();
}

Entry from_recipe(const std::string& name, DZPair pair, const std::string& notes,
                  const std::string& tree_rule) {
  Entry e;
  e.name = name;
  e.generated = true;
  e.P = pair.P;
  e.Q = pair.Q;
  e.R = pair.R;
  e.passport = pair.passport;
  e.notes = notes + " [generated from " + pair.provenance + "]";
  if (!tree_rule.empty()) e.tree = attach_tree(tree_rule, e.passport);
  return e;
}

struct Store {
  std::vector<Entry> entries;
  std::map<std::string, size_t> index;

  void put(Entry e) {
    index[e.name] = entries.size();
    entries.push_back(std::move(e));
  }
};

Store build_store() {
  Store store;
  json doc = json::parse(kCatalogJson);
  if (doc["format"] != "dzlab-catalog" || doc["version"] != 1)
    throw std::runtime_error("catalog: unsupported data file version");
  for (const auto& je : doc["entries"]) {
    Entry e;
    e.name = je["name"].get<std::string>();
    e.metadata_only = je.value("metadata_only", false);
    e.notes = je.value("notes", "");
    if (e.metadata_only) {
      if (je.contains("field_polynomial"))
        e.field_polynomial = coeff_list(je["field_polynomial"]);
      store.put(std::move(e));
      continue;
    }
    e.passport = Passport::parse(je["passport"].get<std::string>());
    e.P = poly_from_json(je["P"]);
    e.Q = poly_from_json(je["Q"]);
    e.R = e.P - e.Q;
    if (je.contains("R")) {
      Poly printed = poly_from_json(je["R"]);
      if (printed != e.R)
        throw std::runtime_error("catalog: stored R of " + e.name +
                                 " does not equal P - Q");
    }
    e.relaxed = je.value("relaxed", false);
    if (je.contains("tree_rule") && !je["tree_rule"].is_null())
      e.tree = attach_tree(je["tree_rule"].get<std::string>(), e.passport);
    store.put(std::move(e));
  }

  // Entries the source omits but gives recipes for.
  store.put(from_recipe(
      "bs_83_sym",
      dz::gen::power_lift(dz::gen::affine_normalize(dz::gen::series_E_even(1, 2, 1, 2, 1),
                                                    Rat(-1), Rat(1), Rat(1)),
                          2),
      "symmetric tree with passport (8^3|3^8): even double brush moved by "
      "x -> x-1 and lifted by x^2",
      "symmetry:2"));
  store.put(from_recipe(
      "bs_103_sym2",
      dz::gen::power_lift(dz::gen::affine_normalize(dz::gen::series_E_even(2, 1, 1, 3, 1),
                                                    Rat(-1), Rat(1), Rat(1)),
                          2),
      "order-2 symmetric tree with passport (10^3|3^10)", "symmetry:2"));
  store.put(from_recipe(
      "bs_103_sym3",
      dz::gen::power_lift(dz::gen::affine_normalize(dz::gen::series_A(3, 1, 3), Rat(1),
                                                    Rat(-1), Rat(-1)),
                          3),
      "order-3 symmetric tree with passport (10^3|3^10): star branch under "
      "x -> 1-x, sign flip, cubic lift",
      "symmetry:3"));

  // Alias: tree T with its reciprocal presentation.
  {
    const Entry& t = store.entries[store.index.at("T")];
    Entry e = t;
    e.name = "hist_T";
    e.generated = true;
    const int n = t.P.degree();
    int m = t.passport.black.size() + t.passport.white.size() - 1;
    Poly diff = t.P.reciprocal(n) - t.Q.reciprocal(n);
    e.notes = "tree T in reciprocal form: P* - Q* = x^" + std::to_string(diff.valuation()) +
              " * S with " + std::to_string(m) + " topological edges";
    store.put(std::move(e));
  }
  return store;
}

const Store& store() {
  static Store s = build_store();
  return s;
}

}  // namespace

const Entry& get(const std::string& name) {
  const auto& s = store();
  auto it = s.index.find(name);
  if (it == s.index.end()) throw std::out_of_range("catalog: unknown entry " + name);
  return s.entries[it->second];
}

bool contains(const std::string& name) { return store().index.count(name) > 0; }

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& e : store().entries) out.push_back(e.name);
  return out;
}

std::vector<VerifyLine> verify_all() {
  std::vector<VerifyLine> out;
  for (const auto& e : store().entries) {
    if (e.metadata_only) continue;
    VerifyLine line;
    line.name = e.name;
    line.passport = e.passport.str();
    line.relaxed = e.relaxed;
    line.report = check_dz(e.P, e.Q, e.passport);
    line.degR = line.report.degR_observed;
    if (e.relaxed)
      line.pass = line.report.coprime && !line.report.minimal &&
                  !line.report.bound_violated;
    else
      line.pass = line.report.pass();
    if (e.tree && e.tree->passport() != Passport(line.report.alpha_observed,
                                                 line.report.beta_observed))
      line.pass = false;
    out.push_back(std::move(line));
  }
  return out;
}

const std::string& raw_json() {
  static std::string s(kCatalogJson);
  return s;
}

}  // namespace dz::catalog
