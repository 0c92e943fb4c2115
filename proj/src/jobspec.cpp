#include "dz/jobspec.hpp"

#include <json.hpp>

#include <atomic>
#include <fstream>
#include <future>
#include <sstream>

#include "dz/catalog.hpp"
#include "dz/hall.hpp"
#include "dz/permmap.hpp"
#include "dz/seriesgen.hpp"
#include "dz/specfun.hpp"
#include "dz/verify.hpp"

namespace dz::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json poly_json(const Poly& p) {
  json arr = json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(p.coeff(i).str());
  return arr;
}

Poly poly_parse_csv(const std::string& line) {
  std::vector<Rat> coeffs;
  std::istringstream is(line);
  std::string tok;
  while (std::getline(is, tok, ',')) coeffs.push_back(Rat::parse(tok));
  if (coeffs.empty()) throw UsageError("empty coefficient list");
  return Poly(std::move(coeffs));
}

json report_json(const DZReport& r) {
  json j;
  j["n"] = r.n;
  j["coprime"] = r.coprime;
  j["alpha_observed"] = r.alpha_observed.str();
  j["beta_observed"] = r.beta_observed.str();
  j["p"] = r.p;
  j["q"] = r.q;
  j["degR_observed"] = r.degR_observed;
  j["degR_required"] = r.degR_required;
  j["minimal"] = r.minimal;
  if (r.passport_match) j["passport_match"] = *r.passport_match;
  j["bound_violated"] = r.bound_violated;
  j["messages"] = r.messages;
  j["pass"] = r.pass();
  return j;
}

json pair_json(const DZPair& pr) {
  json j;
  j["P"] = poly_json(pr.P);
  j["Q"] = poly_json(pr.Q);
  j["R"] = poly_json(pr.R);
  j["passport"] = pr.passport.str();
  j["n"] = pr.P.degree();
  j["degR"] = pr.R.is_zero() ? -1 : pr.R.degree();
  j["provenance"] = pr.provenance;
  return j;
}

std::string pair_text(const DZPair& pr) {
  std::ostringstream os;
  os << "# " << pr.provenance << "\n";
  os << "passport " << pr.passport.str() << "\n";
  os << "P = " << pr.P.str() << "\n";
  os << "Q = " << pr.Q.str() << "\n";
  os << "R = " << pr.R.str() << "\n";
  return os.str();
}

int get_int(const JobSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) throw UsageError("missing parameter --" + key);
  try {
    size_t pos = 0;
    int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError("parameter --" + key + " must be an integer");
  }
}

int get_int_or(const JobSpec& spec, const std::string& key, int fallback) {
  return spec.params.count(key) ? get_int(spec, key) : fallback;
}

std::string get_str(const JobSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) throw UsageError("missing parameter --" + key);
  return it->second;
}

// "3" or "1..4" -> inclusive list
std::vector<int> int_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    return {std::stoi(s)};
  }
  int lo = std::stoi(s.substr(0, dots));
  int hi = std::stoi(s.substr(dots + 2));
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

struct SeriesCall {
  std::string series;
  std::map<std::string, int> args;
};

DZPair construct_one(const SeriesCall& c) {
  const auto& a = c.args;
  auto arg = [&](const char* k) {
    auto it = a.find(k);
    if (it == a.end()) throw UsageError(std::string("series ") + c.series +
                                        " needs parameter --" + k);
    return it->second;
  };
  if (c.series == "A") return gen::series_A(arg("s"), arg("t"), arg("k"));
  if (c.series == "D") return gen::series_D(arg("s"), arg("t"));
  if (c.series == "E_even") return gen::series_E_even(arg("s"), arg("t"), arg("k"), arg("l"), arg("r"));
  if (c.series == "E_odd") return gen::series_E_odd(arg("s"), arg("t"), arg("k"), arg("l"), arg("r"));
  if (c.series == "C") return gen::series_C(arg("s"), arg("t"), arg("k"), arg("l"));
  if (c.series == "F") return gen::series_F(arg("k"), arg("l"), arg("m"));
  if (c.series == "G") return gen::series_G(arg("k"), arg("m"));
  if (c.series == "H") return gen::series_H(arg("k"), arg("l"));
  if (c.series == "I") return gen::series_I(arg("k"));
  if (c.series == "J") return gen::series_J(arg("k"));
  if (c.series == "selfdual") return gen::self_dual_series(arg("p"), arg("q"));
  if (c.series == "split_sym")
    return gen::split_orbit_belyi(arg("k"), gen::SplitVariant::kSymmetric);
  if (c.series == "split_asym")
    return gen::split_orbit_belyi(arg("k"), gen::SplitVariant::kAsymmetric);
  throw UsageError("unknown series '" + c.series + "'");
}

Outcome run_construct(const JobSpec& spec) {
  std::string series = get_str(spec, "series");
  // every non-series parameter may be a value or an inclusive range
  std::vector<SeriesCall> calls{{series, {}}};
  static const char* keys[] = {"s", "t", "k", "l", "r", "m", "p", "q"};
  for (const char* key : keys) {
    if (!spec.params.count(key)) continue;
    std::vector<int> values = int_range(spec.params.at(key));
    std::vector<SeriesCall> next;
    for (const auto& c : calls)
      for (int v : values) {
        SeriesCall c2 = c;
        c2.args[key] = v;
        next.push_back(std::move(c2));
      }
    calls = std::move(next);
  }
  // optional lift/affine post-steps
  int lift = get_int_or(spec, "lift", 1);

  std::vector<std::optional<DZPair>> results(calls.size());
  std::vector<std::string> errors(calls.size());
  std::atomic<bool> usage_error{false};
  auto work = [&](size_t i) {
    try {
      DZPair pr = construct_one(calls[i]);
      if (lift != 1) pr = gen::power_lift(pr, lift);
      results[i] = std::move(pr);
    } catch (const CertificationError& e) {
      errors[i] = e.what();
    } catch (const std::exception& e) {
      errors[i] = std::string("invalid parameters: ") + e.what();
      usage_error = true;
    }
  };
  int jobs = std::max(1, spec.jobs);
  if (jobs == 1 || calls.size() <= 1) {
    for (size_t i = 0; i < calls.size(); ++i) work(i);
  } else {
    std::vector<std::future<void>> fs;
    std::atomic<size_t> cursor{0};
    for (int t = 0; t < jobs; ++t)
      fs.push_back(std::async(std::launch::async, [&]() {
        for (size_t i = cursor.fetch_add(1); i < calls.size(); i = cursor.fetch_add(1))
          work(i);
      }));
    for (auto& f : fs) f.get();
  }

  bool any_fail = false;
  json arr = json::array();
  std::ostringstream text;
  for (size_t i = 0; i < calls.size(); ++i) {
    if (results[i]) {
      json j = pair_json(*results[i]);
      if (series == "D" && lift == 1) {
        auto quads = gen::series_D_quadratics(calls[i].args.at("s"),
                                              calls[i].args.at("t"));
        j["components"] = json{{"A", poly_json(quads.A)},
                               {"B", poly_json(quads.B)},
                               {"C", poly_json(quads.C)}};
      }
      arr.push_back(std::move(j));
      text << pair_text(*results[i]) << "\n";
    } else {
      any_fail = true;
      json j;
      j["error"] = errors[i];
      arr.push_back(j);
      text << "# error: " << errors[i] << "\n\n";
    }
  }
  json out = calls.size() == 1 ? arr[0] : json{{"results", arr}};
  int status = usage_error ? 2 : (any_fail ? 1 : 0);
  return {status, spec.json ? out.dump(1) + "\n" : text.str()};
}

Outcome run_verify(const JobSpec& spec) {
  if (spec.params.count("file"))
    return verify_file(get_str(spec, "file"),
                       spec.params.count("passport") ? spec.params.at("passport") : "",
                       spec.json);
  Poly P = poly_parse_csv(get_str(spec, "P"));
  Poly Q = poly_parse_csv(get_str(spec, "Q"));
  std::optional<Passport> expected;
  if (spec.params.count("passport"))
    expected = Passport::parse(spec.params.at("passport"));
  DZReport rep = check_dz(P, Q, expected);
  std::string out = spec.json ? report_json(rep).dump(1) + "\n" : rep.text() + "\n";
  return {rep.pass() ? 0 : 1, out};
}

Outcome run_enumerate(const JobSpec& spec) {
  Passport pp = Passport::parse(get_str(spec, "passport"));
  int bound = get_int_or(spec, "bound", default_enum_weight_bound());
  auto orbit = enumerate_orbit(pp, bound);
  json j;
  j["passport"] = pp.str();
  j["count"] = orbit.size();
  json arr = json::array();
  std::ostringstream text;
  text << "passport " << pp.str() << ": " << orbit.size() << " trees\n";
  for (const auto& t : orbit) {
    json jt;
    jt["tree"] = t.serialize();
    jt["symmetry_order"] = t.symmetry_order();
    jt["mirror_symmetric"] = t.is_mirror_symmetric();
    jt["self_dual"] = is_self_dual(t);
    if (pp.weight() <= 64) {
      auto m = expand_to_map(t);
      jt["monodromy_order"] = group_order(m).get_str();
      jt["faces"] = face_profile(m).str();
    }
    arr.push_back(jt);
    text << "  " << t.serialize() << "  sym=" << t.symmetry_order() << "\n";
  }
  j["trees"] = arr;
  return {0, spec.json ? j.dump(1) + "\n" : text.str()};
}

Outcome run_catalog(const JobSpec& spec) {
  if (spec.params.count("name")) {
    const auto& e = catalog::get(spec.params.at("name"));
    json j;
    j["name"] = e.name;
    j["notes"] = e.notes;
    if (e.metadata_only) {
      j["metadata_only"] = true;
      if (e.field_polynomial) j["field_polynomial"] = poly_json(*e.field_polynomial);
    } else {
      j["passport"] = e.passport.str();
      j["P"] = poly_json(e.P);
      j["Q"] = poly_json(e.Q);
      j["R"] = poly_json(e.R);
      j["relaxed"] = e.relaxed;
      j["generated"] = e.generated;
      if (e.tree) {
        j["tree"] = e.tree->serialize();
        j["symmetry_order"] = e.tree->symmetry_order();
      }
    }
    std::ostringstream text;
    text << e.name << ": " << e.notes << "\n";
    if (!e.metadata_only)
      text << "passport " << e.passport.str() << "\nP = " << e.P.str()
           << "\nQ = " << e.Q.str() << "\nR = " << e.R.str() << "\n";
    return {0, spec.json ? j.dump(1) + "\n" : text.str()};
  }
  if (spec.params.count("verify-all")) {
    auto lines = catalog::verify_all();
    bool all = true;
    json arr = json::array();
    std::ostringstream text;
    for (const auto& l : lines) {
      all = all && l.pass;
      json j;
      j["name"] = l.name;
      j["passport"] = l.passport;
      j["degR"] = l.degR;
      j["relaxed"] = l.relaxed;
      j["pass"] = l.pass;
      j["report"] = report_json(l.report);
      arr.push_back(j);
      text << (l.pass ? "PASS " : "FAIL ") << l.name << " passport=" << l.passport
           << " degR=" << l.degR << (l.relaxed ? " (relaxed, non-minimal expected)" : "")
           << "\n";
    }
    json out{{"all_pass", all}, {"entries", arr}};
    return {all ? 0 : 1, spec.json ? out.dump(1) + "\n" : text.str()};
  }
  json j = catalog::names();
  std::ostringstream text;
  for (const auto& n : catalog::names()) text << n << "\n";
  return {0, spec.json ? j.dump(1) + "\n" : text.str()};
}

Outcome run_hall(const JobSpec& spec) {
  int count = get_int_or(spec, "count", 5);
  auto pairs = hall::hall_pairs(count);
  json arr = json::array();
  std::ostringstream text;
  for (const auto& p : pairs) {
    arr.push_back(json{{"a", p.a.get_str()},
                       {"b", p.b.get_str()},
                       {"gap", p.gap.get_str()},
                       {"z", p.z.get_str()}});
    text << "a=" << p.a.get_str() << " b=" << p.b.get_str()
         << " gap=" << p.gap.get_str() << "\n";
  }
  json out = count == 1 ? arr[0] : json{{"pairs", arr}};
  return {0, spec.json ? out.dump(1) + "\n" : text.str()};
}

Outcome run_pade(const JobSpec& spec) {
  Rat a = Rat::parse(get_str(spec, "a"));
  Rat b = Rat::parse(get_str(spec, "b"));
  int n = get_int(spec, "n");
  int m = get_int(spec, "m");
  Series f = weight_series(a, b, n + m);
  PadeForm pf = pade_form(f, n, m);
  json j;
  j["a"] = a.str();
  j["b"] = b.str();
  j["n"] = n;
  j["m"] = m;
  j["p"] = poly_json(pf.p);
  j["q"] = poly_json(pf.q);
  std::ostringstream text;
  text << "pade form [" << n << "/" << m << "] of (1-x)^" << a.str() << " (1+x)^"
       << b.str() << "\np = " << pf.p.str() << "\nq = " << pf.q.str() << "\n";
  return {0, spec.json ? j.dump(1) + "\n" : text.str()};
}

}  // namespace

Outcome verify_file(const std::string& path, const std::string& expected_passport,
                    bool json_out) {
  std::ifstream in(path);
  if (!in) return {2, "cannot open file: " + path + "\n"};
  std::string l1, l2;
  if (!std::getline(in, l1) || !std::getline(in, l2))
    return {2, "expected two lines of comma-separated coefficients\n"};
  try {
    Poly P = poly_parse_csv(l1);
    Poly Q = poly_parse_csv(l2);
    std::optional<Passport> expected;
    if (!expected_passport.empty()) expected = Passport::parse(expected_passport);
    DZReport rep = check_dz(P, Q, expected);
    std::string out = json_out ? report_json(rep).dump(1) + "\n" : rep.text() + "\n";
    return {rep.pass() ? 0 : 1, out};
  } catch (const std::exception& e) {
    return {2, std::string("malformed input: ") + e.what() + "\n"};
  }
}

Outcome run(const JobSpec& spec) {
  try {
    if (spec.command == "construct") return run_construct(spec);
    if (spec.command == "verify") return run_verify(spec);
    if (spec.command == "enumerate") return run_enumerate(spec);
    if (spec.command == "catalog") return run_catalog(spec);
    if (spec.command == "hall") return run_hall(spec);
    if (spec.command == "pade") return run_pade(spec);
    return {2, "unknown command '" + spec.command + "'\n"};
  } catch (const UsageError& e) {
    return {2, std::string(e.what()) + "\n"};
  } catch (const CertificationError& e) {
    return {1, std::string(e.what()) + "\n"};
  } catch (const std::length_error& e) {
    return {2, std::string(e.what()) + "\n"};
  } catch (const std::invalid_argument& e) {
    return {2, std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    return {1, std::string(e.what()) + "\n"};
  }
}

}  // namespace dz::cli
