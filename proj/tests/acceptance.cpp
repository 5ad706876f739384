// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "oracles.hpp"
#include "twell/builtins.hpp"
#include "twell/induction.hpp"
#include "twell/sections.hpp"
#include "twell/supergeom.hpp"
#include "twell/transgression.hpp"
#include "twell/twisted_algebra.hpp"

using namespace twell;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Check {
  bool ok = true;
  std::string why;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

template <int N>
EquivariantSection random_section(Geometry geom, const Cochain<N>& beta, std::mt19937& rng) {
  EquivariantSection s(geom, beta.group());
  std::normal_distribution<double> d;
  for (auto& v : s.values) v = Complex(d(rng), d(rng));
  return make_equivariant(s, line_for(beta));
}

Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
  std::vector<Element> m(g.source.order());
  for (Element k = 0; k < g.source.order(); ++k) m[k] = f(g(k));
  return check_homomorphism(g.source, f.target, std::move(m));
}

// 1. combinatorial baselines
Check baselines(std::string& detail) {
  Check c;
  const auto t0 = Clock::now();
  const auto S3 = named_group("S3"), Q8 = named_group("Q8");
  c.require(commuting_pairs(S3).size() == 18, "|C(S3)|");
  c.require(pair_orbits(S3).size() == 8, "|C[S3]|");
  c.require(conjugacy_classes(S3).size() == 3, "#classes(S3)");
  c.require(conjugacy_classes(Q8).size() == 5, "#classes(Q8)");
  c.require(oracle::commuting_pair_count(S3) == 18 && oracle::pair_orbit_count(S3) == 8 &&
                oracle::class_count(S3) == 3 && oracle::class_count(Q8) == 5,
            "oracle counts");
  const double s = seconds_since(t0);
  c.require(s < 1.0, "time");
  detail = "18/8/3/5 in " + std::to_string(s) + " s";
  return c;
}

// 2. cocycle suite
Check cocycles(std::string& detail) {
  Check c;
  std::mt19937 rng(1);
  for (const auto& [name, G] : builtin_groups())
    for (int i = 0; i < 100; ++i) {
      if (i % 2 == 0)
        c.require(coboundary(coboundary(random_cochain<1>(G, rng, 120))).is_zero(), "d d on " + name);
      else
        c.require(coboundary(coboundary(random_cochain<2>(G, rng, 120))).is_zero(), "d d on " + name);
    }
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; k < n; ++k) c.require(is_cocycle(cyclic_3cocycle(n, k)).ok, "cyclic_3cocycle");
  // |G| = 48: Z/2 x S4 with the sign-pulled generator
  const auto G = named_group("Z2xS4");
  const auto S4 = named_group("S4");
  std::vector<Element> sign(G.order());
  const auto q = cyclic_quotient(S4, commutator_subgroup(S4), element_by_name(S4, "(1 2)"));
  for (Element x = 0; x < G.order(); ++x) sign[x] = q(x % 24);
  const auto a = pullback(check_homomorphism(G, named_group("Z/2"), sign), cyclic_3cocycle(2, 1));
  const auto t0 = Clock::now();
  const bool ok = is_cocycle(a).ok;
  const double s = seconds_since(t0);
  c.require(ok && G.order() == 48, "order-48 cocycle");
  c.require(s < 10.0, "order-48 time");
  detail = "order-48 check " + std::to_string(s) + " s";
  return c;
}

// 3. transgression laws
Check transgression(std::string& detail) {
  Check c;
  int cases = 0;
  for (const auto& t : builtin_twists2()) {
    c.require(transgress2(t.alpha).satisfies_composition(), "tau " + t.name);
    for (Element g = 0; g < t.alpha.group().order(); ++g)
      c.require(chi_g(t.alpha, g).is_homomorphism(t.alpha.group()), "chi_g " + t.name);
    ++cases;
  }
  for (const auto& t : builtin_twists3()) {
    c.require(transgress3(t.alpha).satisfies_composition(), "rho " + t.name);
    for (const auto& p : commuting_pairs(t.alpha.group()))
      c.require(chi_pair(t.alpha, p).is_homomorphism(t.alpha.group()), "chi_pair " + t.name);
    ++cases;
  }
  detail = std::to_string(cases) + " (G, twist) cases";
  return c;
}

int center(const Cochain2& a) { return center_dim(TwistedGroupAlgebra(a)).dimension; }
int regular(const Cochain2& a) { return static_cast<int>(regular_classes(a.group(), a).size()); }
int kdim(const Cochain2& a) {
  return ktheory_dim(a.group(), point_data(a.group(), Geometry::Loop), a, Parity::Even).dimension;
}

// 4. three-way consistency at a point
Check three_way(std::string& detail) {
  Check c;
  const Cochain2 s3(named_group("S3"));
  const auto kl = klein_2cocycle();
  c.require(center(s3) == 3 && regular(s3) == 3 && kdim(s3) == 3, "(S3, 0)");
  c.require(center(kl) == 1 && regular(kl) == 1 && kdim(kl) == 1, "(Klein, klein)");
  detail = "(S3,0) -> " + std::to_string(kdim(s3)) + ", (Klein,klein) -> " + std::to_string(kdim(kl));
  return c;
}

// 5. G-set oracle
Check gsets(std::string& detail) {
  Check c;
  int n = 0;
  for (const auto& [name, G] : builtin_groups())
    for (const auto& X : builtin_gsets(G)) {
      const auto d = cohomology_from_gset(G, X.set, Geometry::Loop);
      c.require(ktheory_dim(G, d, Cochain2(G), Parity::Even).dimension == oracle::gset_k_rank(G, X.set.size, X.set.act),
                name + " " + X.name);
      ++n;
    }
  detail = std::to_string(n) + " G-sets";
  return c;
}

// 6. induction
Check induction(std::string& detail) {
  Check c;
  std::mt19937 rng(6);
  const auto S3 = named_group("S3");
  {
    const auto f = subgroup_inclusion(S3, {element_by_name(S3, "(1 2)")});
    EquivariantSection s(Geometry::Loop, f.source);
    s.at(0) = s.at(1) = 1;
    const auto out = induce_k(f, Cochain2(S3), s);
    const auto classes = conjugacy_classes(S3);
    const double expect[3] = {3, 1, 0};
    for (int k = 0; k < 3; ++k) c.require(std::abs(out.at(classes[k].front()) - expect[k]) < 1e-12, "(3,1,0)");
  }
  for (const auto& [name, G] : builtin_groups()) {
    const auto f = check_homomorphism(named_group("Z/1"), G, {0});
    EquivariantSection s(Geometry::Loop, f.source);
    s.at(0) = 1;
    const auto out = induce_k(f, Cochain2(G), s);
    for (Element g = 0; g < G.order(); ++g)
      c.require(std::abs(out.at(g) - (g == 0 ? double(G.order()) : 0.0)) < 1e-12, "regular character " + name);
  }
  double worst = 0;
  const auto inclusions = [](const FiniteGroup& G) {
    std::vector<Homomorphism> out{check_homomorphism(named_group("Z/1"), G, {0}), identity_hom(G)};
    for (Element g = 1; g < G.order(); ++g) out.push_back(subgroup_inclusion(G, {g}));
    return out;
  };
  for (const auto& t : builtin_twists2())
    for (const auto& f : inclusions(t.alpha.group())) {
      const auto s = random_section(Geometry::Loop, pullback(f, t.alpha), rng);
      worst = std::max(worst, max_difference(induce_k(f, t.alpha, s), induce_k_fiber(f, t.alpha, s)));
      if (f.source.order() == f.target.order() && f.map[1] == 1 && std::is_sorted(f.map.begin(), f.map.end()))
        c.require(max_difference(induce_k(f, t.alpha, s), s) < 1e-12, "id " + t.name);
    }
  for (const auto& t : builtin_twists3())
    for (const auto& f : inclusions(t.alpha.group())) {
      const auto s = random_section(Geometry::Torus, pullback(f, t.alpha), rng);
      worst = std::max(worst, max_difference(induce_ell(f, t.alpha, s), induce_ell_fiber(f, t.alpha, s)));
      if (f.source.order() == f.target.order() && std::is_sorted(f.map.begin(), f.map.end()))
        c.require(max_difference(induce_ell(f, t.alpha, s), s) < 1e-12, "id " + t.name);
    }
  c.require(worst < 1e-12, "formula vs fiber");
  // Z/2 -> S3 -> S4
  const auto S4 = named_group("S4");
  const auto f = subgroup_inclusion(S4, {element_by_name(S4, "(1 2)"), element_by_name(S4, "(1 2 3)")});
  const auto g = subgroup_inclusion(f.source, {element_by_name(f.source, "(1 2)")});
  const auto fg = compose(f, g);
  const Cochain2 alpha(S4);
  const auto s = random_section(Geometry::Loop, pullback(fg, alpha), rng);
  const double trans = max_difference(induce_k(fg, alpha, s), induce_k(f, alpha, induce_k(g, pullback(f, alpha), s)));
  c.require(trans < 1e-12, "transitivity");
  char buf[96];
  std::snprintf(buf, sizeof buf, "formula/fiber %.1e, transitivity %.1e", worst, trans);
  detail = buf;
  return c;
}

int ell0(const Cochain3& a) {
  return ell_rank(a.group(), point_data(a.group(), Geometry::Torus), a, 0).total.dimension;
}

// 7. elliptic ranks
Check elliptic(std::string& detail) {
  Check c;
  for (const auto& [name, G] : builtin_groups())
    c.require(ell0(Cochain3(G)) == oracle::pair_orbit_count(G), "ell rank " + name);
  c.require(ell0(Cochain3(named_group("Z/2"))) == 4 && ell0(Cochain3(named_group("S3"))) == 8, "Z/2, S3");
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k < n; ++k) {
      const auto a = cyclic_3cocycle(n, k);
      c.require(static_cast<int>(regular_pair_orbits(a.group(), a).size()) == oracle::regular_pair_orbit_count(a),
                "triple scan Z/" + std::to_string(n));
    }
  for (const auto& t : builtin_twists3()) c.require(sl2z_blocks(t.alpha.group(), t.alpha).stable, "S,T " + t.name);
  detail = "Z/2 -> " + std::to_string(ell0(Cochain3(named_group("Z/2")))) + ", S3 -> " +
           std::to_string(ell0(Cochain3(named_group("S3"))));
  return c;
}

// 8. invariance under alpha -> alpha + d beta
Check invariance(std::string& detail) {
  Check c;
  std::mt19937 rng(8);
  int cases = 0;
  for (const auto& a : {Cochain2(named_group("S3")), klein_2cocycle()}) {
    const int base = kdim(a);
    for (int i = 0; i < 20; ++i) {
      const auto b = a + coboundary(random_cochain<1>(a.group(), rng, 60));
      c.require(center(b) == base && regular(b) == base && kdim(b) == base, "criterion 4 dims");
    }
    ++cases;
  }
  std::vector<Cochain3> twists;
  for (const auto& [name, G] : builtin_groups()) twists.push_back(Cochain3(G));
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k < n; ++k) twists.push_back(cyclic_3cocycle(n, k));
  for (const auto& a : twists) {
    const int base = ell0(a);
    const auto nreg = regular_pair_orbits(a.group(), a).size();
    for (int i = 0; i < 20; ++i) {
      const auto b = a + coboundary(random_cochain<2>(a.group(), rng, 60));
      c.require(ell0(b) == base && regular_pair_orbits(b.group(), b).size() == nreg, "criterion 7 dims");
    }
    ++cases;
  }
  detail = std::to_string(cases) + " cases x 20 coboundaries";
  return c;
}

// 9. RG bookkeeping
Check rg(std::string& detail) {
  Check c;
  int n = 0;
  for (const auto geom : {Geometry::Loop, Geometry::Torus})
    for (int twice_a = 0; twice_a <= 8; ++twice_a)
      for (int i = 0; i <= 8; ++i, ++n)
        c.require(rg_weight_check(geom, Rational(twice_a, 2), i) == (twice_a == i),
                  "a=" + std::to_string(twice_a) + "/2 i=" + std::to_string(i));
  detail = std::to_string(n) + " grid points";
  return c;
}

// 10. supergeometry
Check supergeometry(std::string& detail) {
  Check c;
  const auto t0 = Clock::now();
  const auto r = super::check_model_axioms();
  const double s = seconds_since(t0);
  for (const auto& e : r.entries)
    if (!e.informational) c.require(e.holds, e.name);
  c.require(s < 1.0, "time");
  detail = std::to_string(r.entries.size()) + " entries in " + std::to_string(s) + " s";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check(std::string&)>>> criteria = {
      {"combinatorial baselines", baselines},   {"cocycle suite", cocycles},
      {"transgression laws", transgression},    {"three-way point consistency", three_way},
      {"G-set oracle", gsets},                  {"induction", induction},
      {"elliptic ranks", elliptic},             {"cohomology invariance", invariance},
      {"RG bookkeeping", rg},                   {"supergeometry axioms", supergeometry},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    Check c;
    try {
      c = criteria[i].second(detail);
    } catch (const std::exception& e) {
      c.ok = false;
      c.why = std::string("exception: ") + e.what();
    }
    std::printf("%s %2zu %s: %s\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                c.ok ? detail.c_str() : c.why.c_str());
    failed += !c.ok;
  }
  return failed ? 1 : 0;
}
