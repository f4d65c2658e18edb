#include "cremona/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cremona/census.hpp"
#include "cremona/text.hpp"

namespace cremona {

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::string field = "q";
  std::size_t n = 2;
  bool json = false;
};

struct Inputs {
  std::vector<std::string> exprs;
  std::string point;
  std::string points;
  std::string fixture;
  unsigned phi_samples = 0;
  unsigned d = 1;
  std::uint64_t p = 2;
  unsigned partitions = 1;
  unsigned threads = 0;
  std::uint64_t budget = kDefaultCensusBudget;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

/// Bad user input that is not a grammar error: wrong point arity, zero point.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string approx(const mpq_class& q) {
  std::ostringstream os;
  os << std::setprecision(12) << q.get_d();
  return os.str();
}

std::string approx_sqrt(const mpq_class& q) {
  std::ostringstream os;
  os << std::setprecision(12) << std::sqrt(q.get_d());
  return os.str();
}

Json point_json(std::span<const Scalar> pt) { return format_point(pt); }

Vector read_point(const std::string& text, const Field& field, std::size_t arity, const char* what) {
  if (text.empty()) throw InputError(std::string("missing --point for ") + what);
  Vector pt = parse_point(text, field);
  if (pt.size() != arity)
    throw InputError("point '" + text + "' has " + std::to_string(pt.size()) + " coordinates, expected " +
                     std::to_string(arity));
  if (std::all_of(pt.begin(), pt.end(), [](const Scalar& s) { return s.is_zero(); }))
    throw InputError("point '" + text + "' is zero");
  return pt;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

Json reduced_json(const MapTuple& t) {
  const auto r = normalize(t);
  Json j;
  j["formal_degree"] = t.degree();
  j["reduced_degree"] = r.reduced.degree();
  j["reduced"] = format_tuple(r.reduced);
  j["cofactor"] = format_poly(r.cofactor);
  j["is_identity"] = r.reduced == MapTuple::identity(t.field(), t.n());
  return j;
}

Json cmd_degree(const MapTuple& t) {
  const auto r = normalize(t);
  Json j;
  j["formal_degree"] = t.degree();
  j["reduced_degree"] = r.reduced.degree();
  j["cofactor"] = format_poly(r.cofactor);
  return j;
}

Json cmd_check(const MapTuple& t) {
  const auto c = certify_detailed(t);
  Json j;
  j["birational"] = c.map.has_value();
  j["reduced_degree"] = c.reduced_degree;
  j["map"] = format_tuple(normalize(t).reduced);
  if (c.map) {
    j["inverse"] = format_tuple(c.map->inverse());
    j["inverse_degree"] = c.map->inverse().degree();
    j["cofactor"] = format_poly(c.map->certificate_cofactor());
    j["inverse_cofactor"] = format_poly(c.map->inverse_cofactor());
  }
  j["degrees_tried"] = c.degrees_tried;
  j["non_dominant"] = c.non_dominant;
  j["dominant_without_certificate"] = c.dominant_without_certificate;
  return j;
}

CremonaMap require_birational(const MapTuple& t, const std::string& text) {
  auto f = certify_birational(t);
  if (!f) throw DomainError("not birational: " + text);
  return *f;
}

Json cmd_apply(const MapTuple& t, const Vector& pt) {
  const MapTuple f = normalize(t).reduced;
  Vector image;
  for (const auto& c : f.components()) image.push_back(c.evaluate(pt));
  if (std::all_of(image.begin(), image.end(), [](const Scalar& s) { return s.is_zero(); }))
    throw DomainError("base point " + format_point(pt) + " of " + format_tuple(f));
  Json j;
  j["point"] = point_json(canonical_point(pt));
  j["image"] = point_json(canonical_point(image));
  return j;
}

std::vector<Vector> phi_samples(const Field& field, unsigned count) {
  // (1:0), (0:1), then (1:t), (t:1), (1:-t), (-t:1) for t = 1, 2, ...
  std::vector<std::pair<long, long>> uv{{1, 0}, {0, 1}};
  std::set<std::pair<long, long>> seen(uv.begin(), uv.end());
  for (long t = 1; uv.size() < count; ++t) {
    for (auto c : {std::pair{1L, t}, {t, 1L}, {1L, -t}, {-t, 1L}}) {
      if (c.first < 0) c = {-c.first, -c.second};
      if (seen.insert(c).second) uv.push_back(c);
    }
  }
  uv.resize(count);
  std::vector<Vector> out;
  for (auto [u, v] : uv) out.push_back(phi_point(Scalar::from_int(field, u), Scalar::from_int(field, v)));
  return out;
}

ParametricFamily read_family(const Inputs& in, const Field& field, std::size_t n) {
  if (!in.fixture.empty()) {
    if (!in.exprs.empty()) throw InputError("give either a family or --fixture, not both");
    if (in.fixture == "pencil") return pencil_family(field, n);
    if (in.fixture == "nodal-cubic") return nodal_cubic_family(field, n);
    if (in.fixture == "nodal-lift") return nodal_cubic_pullback(field, n);
    throw InputError("unknown fixture '" + in.fixture + "' (expected pencil, nodal-cubic or nodal-lift)");
  }
  if (in.exprs.size() != 1) throw InputError("expected one family expression");
  return parse_family(in.exprs.front(), field, n);
}

Json cmd_family_profile(const ParametricFamily& fam, const Inputs& in) {
  std::vector<Vector> points;
  if (in.phi_samples) {
    if (fam.param_count() != 3) throw InputError("--phi-samples needs a family over P^2 parameters");
    points = phi_samples(fam.field(), in.phi_samples);
  }
  if (!in.points.empty())
    for (const auto& s : split(in.points, ';')) points.push_back(read_point(s, fam.field(), fam.param_count(), "profile"));
  if (points.empty()) throw InputError("profile needs --points or --phi-samples");
  const auto profile = degree_profile(fam, points);
  Json entries = Json::array();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& e = profile.entries[i];
    const MapTuple t = specialize(fam, points[i]);
    Json j;
    j["point"] = point_json(e.point);
    j["reduced_degree"] = e.reduced_degree;
    j["is_identity"] = e.is_identity;
    j["reduced"] = format_tuple(normalize(t).reduced);
    j["birational"] = certify_birational(t).has_value();
    entries.push_back(std::move(j));
  }
  Json j;
  j["family"] = fam.to_string();
  j["entries"] = std::move(entries);
  return j;
}

Json cmd_family_specialize(const ParametricFamily& fam, const Inputs& in) {
  const Vector pt = read_point(in.point, fam.field(), fam.param_count(), "specialize");
  const MapTuple t = specialize(fam, pt);
  Json j;
  j["point"] = point_json(canonical_point(pt));
  j["tuple"] = format_tuple(t);
  j.update(reduced_json(t));
  return j;
}

Json cmd_family_lift(const ParametricFamily& fam, const Inputs& in) {
  const Vector pt = read_point(in.point, fam.field(), fam.param_count(), "lift");
  const MapTuple lift = reduced_lift_at_point(fam, pt);
  const auto r = normalize(lift);
  Json j;
  j["point"] = point_json(canonical_point(pt));
  j["lift"] = format_tuple(lift);
  j["map"] = format_tuple(r.reduced);
  j["is_identity"] = r.reduced == MapTuple::identity(lift.field(), lift.n());
  return j;
}

Json census_json(const CensusReport& r) {
  Json j;
  j["mode"] = r.mode;
  j["n"] = r.n;
  j["d"] = r.d;
  j["p"] = r.p;
  j["total_classes"] = r.total_classes;
  j["examined"] = r.examined;
  j["birational"] = r.birational;
  Json strata = Json::object();
  for (auto [deg, count] : r.strata) strata[std::to_string(deg)] = count;
  j["strata"] = std::move(strata);
  j["certificate_failures"] = r.certificate_failures;
  j["partitions"] = r.partitions;
  if (r.seed) {
    j["seed"] = *r.seed;
    j["generator"] = r.generator;
  }
  return j;
}

void print_human(const Json& doc, std::ostream& out, const std::string& indent = "") {
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array()) {
      out << indent << key << ":\n";
      for (const auto& item : value) {
        if (item.is_object()) {
          out << indent << "  -\n";
          print_human(item, out, indent + "    ");
        } else {
          out << indent << "  - " << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
        }
      }
    } else if (value.is_object()) {
      out << indent << key << ":\n";
      print_human(value, out, indent + "  ");
    } else {
      out << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact birational maps of projective space", "cremona"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  Inputs in;
  app.add_option("--field", s.field, "q or fp:<prime>")->capture_default_str();
  app.add_option("--n", s.n, "ambient dimension")->check(CLI::Range(1, 9))->capture_default_str();
  app.add_flag("--json", s.json, "structured output");

  // One string per positional: vector options would read "[...]" as list syntax.
  std::string expr_text[2];
  auto exprs = [&](CLI::App* sub, const char* what, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) sub->add_option(i ? "g" : "f", expr_text[i], what)->required();
  };
  auto* degree = app.add_subcommand("degree", "formal and reduced degree of a tuple");
  exprs(degree, "tuple", 1);
  auto* norm = app.add_subcommand("normalize", "strip the common factor of a tuple");
  exprs(norm, "tuple", 1);
  auto* jac = app.add_subcommand("jacobian", "Jacobian determinant of a tuple");
  exprs(jac, "tuple", 1);
  auto* check = app.add_subcommand("check", "birationality with an explicit inverse");
  exprs(check, "tuple", 1);
  auto* inv = app.add_subcommand("inverse", "inverse of a birational map");
  exprs(inv, "tuple", 1);
  auto* comp = app.add_subcommand("compose", "f o g: apply g first, then f");
  exprs(comp, "tuples f g", 2);
  auto* apply = app.add_subcommand("apply", "image of a point");
  exprs(apply, "tuple", 1);
  apply->add_option("--point", in.point, "projective point, e.g. 1:2:3")->required();
  auto* dist = app.add_subcommand("dist", "Weyl distance between two tuples");
  exprs(dist, "tuples", 2);
  auto* fdist = app.add_subcommand("fiber-dist", "distance from a tuple to the fiber of a reduced map");
  exprs(fdist, "tuple and reduced map", 2);

  auto* family = app.add_subcommand("family", "parametric families");
  family->require_subcommand(1);
  family->fallthrough();
  auto family_inputs = [&](CLI::App* sub) {
    sub->add_option("family", expr_text[0], "family expression");
    sub->add_option("--fixture", in.fixture, "pencil, nodal-cubic or nodal-lift");
  };
  auto* profile = family->add_subcommand("profile", "reduced degree at parameter points");
  family_inputs(profile);
  profile->add_option("--points", in.points, "points separated by ';'");
  profile->add_option("--phi-samples", in.phi_samples, "points phi(u:v) on the nodal cubic");
  auto* spec = family->add_subcommand("specialize", "tuple at a parameter point");
  family_inputs(spec);
  spec->add_option("--point", in.point, "parameter point")->required();
  auto* lift = family->add_subcommand("lift", "reduced lift at a parameter point");
  family_inputs(lift);
  lift->add_option("--point", in.point, "parameter point")->required();

  auto* census = app.add_subcommand("census", "census of H_d over F_p");
  census->require_subcommand(1);
  census->fallthrough();
  auto census_inputs = [&](CLI::App* sub) {
    sub->add_option("--d", in.d, "degree")->check(CLI::Range(1, 255))->capture_default_str();
    sub->add_option("--p", in.p, "prime")->capture_default_str();
    sub->add_option("--partitions", in.partitions, "work partitions")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--threads", in.threads, "worker threads (0 = automatic)");
  };
  auto* enumerate = census->add_subcommand("enumerate", "every class of W_d(F_p)");
  census_inputs(enumerate);
  enumerate->add_option("--budget", in.budget, "maximum number of classes")->capture_default_str();
  auto* sample = census->add_subcommand("sample", "seeded random classes without replacement");
  census_inputs(sample);
  sample->add_option("--trials", in.trials, "number of classes")->required();
  sample->add_option("--seed", in.seed, "generator seed")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  for (const auto& e : expr_text)
    if (!e.empty()) in.exprs.push_back(e);

  try {
    const Field field = Field::from_string(s.field);
    const std::size_t n = s.n;
    auto tuple = [&](std::size_t i) { return parse_tuple(in.exprs.at(i), field, n); };
    Json doc;
    std::vector<std::string> notes;
    if (degree->parsed()) {
      doc = cmd_degree(tuple(0));
    } else if (norm->parsed()) {
      doc = reduced_json(tuple(0));
    } else if (jac->parsed()) {
      doc["jacobian"] = format_poly(jacobian_det(tuple(0).components()));
    } else if (check->parsed()) {
      doc = cmd_check(tuple(0));
    } else if (inv->parsed()) {
      const CremonaMap f = require_birational(tuple(0), in.exprs[0]);
      doc["inverse"] = format_tuple(f.inverse());
      doc["inverse_degree"] = f.inverse().degree();
      doc["cofactor"] = format_poly(f.inverse_cofactor());
    } else if (comp->parsed()) {
      const MapTuple f = tuple(0), g = tuple(1);
      doc = reduced_json(substitute_tuple(f, g));
    } else if (apply->parsed()) {
      const MapTuple f = tuple(0);
      doc = cmd_apply(f, read_point(in.point, field, n + 1, "apply"));
    } else if (dist->parsed()) {
      const mpq_class d2 = distance_sq(tuple(0), tuple(1));
      doc["distance_sq"] = d2.get_str();
      notes.push_back("distance ~ " + approx_sqrt(d2) + " (approximate)");
    } else if (fdist->parsed()) {
      const mpq_class d2 = fiber_distance_sq(tuple(0), tuple(1));
      doc["fiber_distance_sq"] = d2.get_str();
      notes.push_back("fiber_distance_sq ~ " + approx(d2) + " (approximate)");
      notes.push_back("fiber_distance ~ " + approx_sqrt(d2) + " (approximate)");
    } else if (family->parsed()) {
      const ParametricFamily fam = read_family(in, field, n);
      if (profile->parsed()) doc = cmd_family_profile(fam, in);
      else if (spec->parsed()) doc = cmd_family_specialize(fam, in);
      else doc = cmd_family_lift(fam, in);
    } else if (census->parsed()) {
      const CensusOptions options{in.partitions, in.budget, in.threads};
      const CensusReport r = enumerate->parsed() ? enumerate_hd(n, in.d, in.p, options)
                                                 : sample_random(n, in.d, in.p, in.trials, in.seed, options);
      doc = census_json(r);
      std::ostringstream secs;
      secs << std::fixed << std::setprecision(3) << r.seconds;
      notes.push_back("seconds: " + secs.str());
    }
    if (s.json) {
      out << doc.dump(2) << "\n";
    } else {
      print_human(doc, out);
      for (const auto& note : notes) out << note << "\n";
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace cremona
