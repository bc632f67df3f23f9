// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sdcm/sdcm.hpp>

#include "support/generators.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace sdcm;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Equal when both sides are exact, otherwise overlapping enclosures.
bool consistent(const Curvature& a, const Curvature& b) {
  if (a.is_exact() && b.is_exact()) return a == b;
  const Ordering o = compare(a, b);
  return o != Ordering::less && o != Ordering::greater;
}

std::string fmt_seconds(double s) {
  std::ostringstream out;
  out.precision(3);
  out << std::fixed << s << "s";
  return out.str();
}

struct Corpus {
  std::vector<SdcModel> models;
  std::vector<HomomorphismDescriptor> maps;
};

Corpus load_corpus() {
  Corpus c;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(SDCM_CORPUS_DIR)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    const json doc = detail::read_json_file(f.string());
    if (doc.contains("bass_phi")) {
      c.maps.push_back(homomorphism_from_json(doc));
    } else {
      c.models.push_back(model_from_json(doc));
    }
  }
  return c;
}

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  for (long r : {2, 3, 5}) {
    const MetricGraph g(square_zero_model(r));
    o.require(g.distance("R", "D") == Curvature::exact(r), "dist(R, D) != " + std::to_string(r));
    o.require(g.diameter() == Curvature::exact(r), "diameter != " + std::to_string(r));
  }
  const double t = seconds_since(start);
  o.require(t < 1.0, "runtime " + fmt_seconds(t));
  if (o.pass) o.detail = "r in {2,3,5}: dist = diam = r (" + fmt_seconds(t) + ")";
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto start = Clock::now();
  double first = 0;
  for (long r = 2; r <= 4; ++r) {
    for (long s = 2; s <= 4; ++s) {
      const MetricGraph g(iterated_model(r, s));
      const std::vector<std::tuple<const char*, const char*, long>> table{
          {"S", "DtensorS", r},      {"S", "cbcR", s},         {"S", "cbcD", std::max(r, s)},
          {"DtensorS", "cbcD", s}, {"cbcR", "cbcD", r},       {"cbcR", "DtensorS", r + s}};
      for (const auto& [a, b, d] : table) {
        o.require(g.distance(a, b) == Curvature::exact(d),
                  "(" + std::to_string(r) + "," + std::to_string(s) + ") dist(" + a + ", " + b + ") = " +
                      g.distance(a, b).str());
      }
      if (r == 2 && s == 3) first = seconds_since(start);
    }
  }
  o.require(first < 1.0, "runtime " + fmt_seconds(first));
  if (o.pass) o.detail = "(2,3) table {2,3,3,3,2,5} exact (" + fmt_seconds(first) + "); all (r,s) in {2,3,4}^2 match";
  return o;
}

Outcome criterion3() {
  Outcome o;
  const MetricGraph g(iterated_model(2, 3));
  const auto ball = g.ball("cbcR", Rational(3));
  o.require(ball == std::set<std::string>{"cbcR", "cbcD"}, "ball(cbcR, 3) has " + std::to_string(ball.size()) + " members");
  if (o.pass) o.detail = "ball(cbcR, 3) = {cbcD, cbcR}";
  return o;
}

std::vector<SdcModel> random_corpus() {
  std::mt19937_64 rng(20240601);
  std::vector<SdcModel> out;
  for (int i = 0; i < 500; ++i) out.push_back(gen::random_model(rng, 8));
  return out;
}

Outcome criterion4(const std::vector<SdcModel>& models) {
  Outcome o;
  const auto start = Clock::now();
  std::size_t classes = 0;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const auto& m = models[i];
    classes += m.size();
    o.require(validate(m).valid(), "random model " + std::to_string(i) + " invalid");
    const auto report = check_metric_axioms(MetricGraph(m));
    o.require(report.pass, "model " + std::to_string(i) + ": " + (report.witnesses.empty() ? "" : report.witnesses[0]));
  }
  const double t = seconds_since(start);
  o.require(t < 30.0, "runtime " + fmt_seconds(t));
  if (o.pass) {
    o.detail = std::to_string(models.size()) + " models, " + std::to_string(classes) + " classes (" + fmt_seconds(t) + ")";
  }
  return o;
}

Outcome criterion5(const std::vector<SdcModel>& models) {
  Outcome o;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < models.size(); ++i) {
    const MetricGraph g(models[i]);
    for (const auto& [a, b] : models[i].order_pairs()) {
      ++pairs;
      o.require(g.distance(a, b).is_exact() && g.distance(a, b) == g.sigma(a, b),
                "model " + std::to_string(i) + " pair " + models[i].id(a) + " <= " + models[i].id(b));
    }
    o.require(check_direct_edge(g).pass, "check_direct_edge failed on model " + std::to_string(i));
  }
  if (o.pass) o.detail = std::to_string(pairs) + " comparable pairs with dist = sigma exactly";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t total = 0, kept = 0, all_true = 0;
  for (const auto& m : gen::trichotomy_grid()) {
    ++total;
    if (!validate(m).valid() || !check_corollary_fixed(m).pass) continue;
    ++kept;
    const MetricGraph g(m);
    const auto t = evaluate_trichotomy(g);
    const bool agree = t.noncomparable_pair == t.at_least_three && t.at_least_three == t.nontrivial_ball;
    o.require(agree, "disagreement on a model with " + std::to_string(m.size()) + " classes");
    if (t.at_least_three) ++all_true;
  }
  o.require(all_true > 0 && all_true < kept, "grid does not exercise both outcomes");
  if (o.pass) {
    o.detail = std::to_string(kept) + " of " + std::to_string(total) + " grid models realizable; " +
               std::to_string(all_true) + " with all three true, the rest all false";
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> small(0, 3);
  std::uniform_int_distribution<long> shift(-6, 6);
  std::bernoulli_distribution irrational(0.2);
  auto random_series = [&] {
    std::vector<Integer> num{1 + small(rng), small(rng), small(rng)};
    LaurentSeries f = LaurentSeries::polynomial(IntPolynomial(num)) * gen::product_series(gen::random_multiset(rng, 0, 3, 5));
    if (irrational(rng)) f = f * parse_series("1/(1-t-t^2)");
    return f;
  };
  std::size_t exact_products = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto f = random_series();
    const auto g = random_series();
    const Curvature cf = curvature(f);
    const Curvature cg = curvature(g);
    o.require(consistent(curvature(LaurentSeries::monomial(shift(rng)) * f), cf), "shift changed curvature of " + render(f));
    const Curvature cfg = curvature(f * g);
    if (cf.is_exact() && cg.is_exact()) ++exact_products;
    o.require(consistent(cfg, max(cf, cg)), "product law fails for " + render(f) + " and " + render(g));
    // f divides f*g with a nonnegative quotient, so f precedes f*g.
    o.require(compare(cf, cfg) != Ordering::greater, "monotonicity fails for " + render(f));
  }
  if (o.pass) o.detail = "1000 pairs; " + std::to_string(exact_products) + " exact product-law instances";
  return o;
}

Outcome criterion8(const Corpus& corpus) {
  Outcome o;
  std::size_t count = 0;
  double worst = 0;
  auto check = [&](const LaurentSeries& s, const std::string& where) {
    const Curvature c = curvature(s);
    const double value = to_double(c.midpoint());
    const double estimate = to_double(curvature_estimate(s, 200));
    const double err = std::abs(value - estimate) / std::max(1.0, value);
    worst = std::max(worst, err);
    ++count;
    o.require(err <= 0.05, where + ": curvature " + c.str() + " vs estimate " + std::to_string(estimate));
  };
  for (const auto& m : corpus.models) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      check(m.poincare(i), m.name() + "/" + m.id(i));
      if (auto b = m.bass(i)) check(*b, m.name() + "/bass " + m.id(i));
    }
    if (m.ring_bass()) check(*m.ring_bass(), m.name() + "/ring_bass");
  }
  for (const auto& phi : corpus.maps) check(phi.bass_phi, phi.name);
  o.require(count > 0, "empty corpus");
  if (o.pass) {
    std::ostringstream out;
    out << count << " corpus series, worst relative gap " << worst;
    o.detail = out.str();
  }
  return o;
}

void check_duality(Outcome& o, const SdcModel& m) {
  const DaggerMap d = build_dagger(m);
  o.require(check_isometry(m, d).pass, m.name() + ": dagger is not an isometry");
  const bool gorenstein = *m.dualizing() == m.top();
  if (!gorenstein) {
    o.require(d.fixed_points().empty(), m.name() + ": non-Gorenstein with a self-dual class");
    o.require(m.size() % 2 == 0, m.name() + ": non-Gorenstein with odd cardinality");
  }
  o.require(check_fixed_points(m, d).pass, m.name() + ": fixed-point check failed");
}

Outcome criterion9(const Corpus& corpus) {
  Outcome o;
  std::size_t checked = 0;
  check_duality(o, iterated_model(2, 3));
  ++checked;
  for (const auto& m : corpus.models) {
    if (!m.dualizing()) continue;
    try {
      build_dagger(m);
    } catch (const NotClosedUnderDuality&) {
      continue;
    }
    check_duality(o, m);
    ++checked;
  }
  std::mt19937_64 rng(909);
  for (int i = 0; i < 100; ++i) {
    check_duality(o, gen::random_duality_closed_model(rng));
    ++checked;
  }
  // A self-dual middle class in a three-class model must be flagged.
  const auto three = gen::build("three", {{}, {2}, {2, 2}}, {{2, 1}}, 2, gen::Multiset{2, 2});
  o.require(!check_fixed_points(three, build_dagger(three)).pass, "three-class self-dual model not flagged");
  if (o.pass) o.detail = std::to_string(checked) + " duality-closed models isometric; non-Gorenstein ones fixed-point free with even cardinality";
  return o;
}

// Source ids like cbcD and DtensorS give both image families the id cbcDtensorS.
bool images_collide(const SdcModel& m, const HomomorphismDescriptor& phi) {
  std::set<std::string> ids;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!ids.insert(tensor_id(m, i, phi)).second || !ids.insert(cobase_id(m, i)).second) return true;
  }
  return false;
}

Outcome criterion10(const Corpus& corpus) {
  Outcome o;
  std::vector<SdcModel> sources;
  std::size_t skipped = 0;
  for (const auto& m : corpus.models) {
    if (images_collide(m, trivial_extension_phi(2))) {
      ++skipped;
    } else {
      sources.push_back(m);
    }
  }
  std::mt19937_64 rng(1010);
  for (int i = 0; i < 30; ++i) sources.push_back(gen::random_model(rng, 5));
  std::size_t pairs = 0;
  for (const auto& m : sources) {
    const MetricGraph gr(m);
    const HomomorphismDescriptor gor{"gorenstein", LaurentSeries::monomial(2), m.name(), "S"};
    const auto phi3 = trivial_extension_phi(3, m.name());
    const MetricGraph gb(base_change(m, phi3));
    const MetricGraph gm(cobase_change_model(m, gor));
    o.require(gm.size() == m.size(), m.name() + ": Gorenstein cobase change did not merge");
    for (std::size_t k = 0; k < m.size(); ++k) {
      for (std::size_t l = 0; l < m.size(); ++l) {
        o.require(gb.distance(tensor_id(m, k, phi3), tensor_id(m, l, phi3)) == gr.distance(k, l),
                  m.name() + ": base change moved dist(" + m.id(k) + ", " + m.id(l) + ")");
      }
    }
    for (long s = 2; s <= 4; ++s) {
      const auto phi = trivial_extension_phi(s, m.name());
      const SdcModel target = cobase_change_model(m, phi);
      const MetricGraph gs(target);
      for (std::size_t k = 0; k < m.size(); ++k) {
        o.require(gs.distance(cobase_id(m, k), tensor_id(m, k, phi)) == Curvature::exact(s),
                  m.name() + ": dist(cbc" + m.id(k) + ", " + tensor_id(m, k, phi) + ") != " + std::to_string(s));
        for (std::size_t l = 0; l < m.size(); ++l) {
          if (!m.leq(k, l)) continue;
          ++pairs;
          o.require(consistent(gs.distance(cobase_id(m, k), tensor_id(m, l, phi)), max(gr.distance(k, l), Curvature::exact(s))),
                    m.name() + ": mixed formula fails at " + m.id(k) + " <= " + m.id(l));
        }
      }
      o.require(check_mixed_distance(m, target, phi).pass, m.name() + ": check_mixed_distance failed");
    }
  }
  if (o.pass) {
    o.detail = std::to_string(sources.size()) + " sources (" + std::to_string(skipped) +
               " corpus models skipped for colliding image ids); base change isometric, t^d merges, " + std::to_string(pairs) +
               " mixed pairs match max(dist, s)";
  }
  return o;
}

Outcome criterion11() {
  Outcome o;
  const auto strict = decreasing_example_strict();
  const auto r1 = check_specialization(strict.big, strict.small, strict.class_map);
  o.require(r1.pass && r1.notes.size() == 1 && r1.notes[0].rfind("strict: dist(Rp, Rp) = 0 vs dist(R, D) = 2", 0) == 0,
            "first case is not strict 0 < 2");
  const auto equal = decreasing_example_equal();
  const auto r2 = check_specialization(equal.big, equal.small, equal.class_map);
  o.require(r2.pass && r2.notes.size() == 1 && r2.notes[0].rfind("equal: dist(Sq, Eq) = 2 vs dist(S, E) = 2", 0) == 0,
            "second case is not 2 = 2");
  if (o.pass) o.detail = "first case 0 < 2 (strict), second case 2 = 2";
  return o;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int n, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
  };
  Corpus corpus;
  try {
    corpus = load_corpus();
  } catch (const std::exception& e) {
    std::cout << "cannot load corpus: " << e.what() << std::endl;
    return 1;
  }
  const auto models = random_corpus();
  report(1, criterion1);
  report(2, criterion2);
  report(3, criterion3);
  report(4, [&] { return criterion4(models); });
  report(5, [&] { return criterion5(models); });
  report(6, criterion6);
  report(7, criterion7);
  report(8, [&] { return criterion8(corpus); });
  report(9, [&] { return criterion9(corpus); });
  report(10, [&] { return criterion10(corpus); });
  report(11, criterion11);
  return all ? 0 : 1;
}
