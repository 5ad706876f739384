// twell: command-line front end.
//
// Every run prints one document {command, inputs, results, diagnostics},
// either as JSON or as an indented key/value rendering of the same document.
// Exit status: 0 ok, 1 bad input, 2 internal consistency failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "twell/builtins.hpp"
#include "twell/cochain.hpp"
#include "twell/group.hpp"
#include "twell/induction.hpp"
#include "twell/inertia.hpp"
#include "twell/io.hpp"
#include "twell/parallel.hpp"
#include "twell/sections.hpp"
#include "twell/supergeom.hpp"
#include "twell/transgression.hpp"
#include "twell/twisted_algebra.hpp"

namespace {

using namespace twell;
using Doc = nlohmann::ordered_json;

struct Options {
  std::string format = "table";
  int threads = 0;
  int max_order = kDefaultMaxOrder;
  std::string group = "Z/1";
  std::string twist = "zero";
  std::string geometry = "loop";
  std::string parity = "even";
  std::string gset, data, out;
  int degree = 2;
  int weight = 0;
  // cocycle
  std::string cochain;
  // induce
  std::string source, target, hom, section, route = "formula";
  bool fiberwise = false;
  bool dump_matrices = false;
};

Geometry parse_geometry(const std::string& s) {
  if (s == "loop" || s == "1|1") return Geometry::Loop;
  if (s == "torus" || s == "2|1") return Geometry::Torus;
  throw InputError("geometry must be loop or torus");
}

std::string geometry_name(Geometry g) { return g == Geometry::Loop ? "loop" : "torus"; }

template <int N>
Cochain<N> rehome(const Cochain<N>& c, const FiniteGroup& G) {
  const FiniteGroup& B = c.group();
  bool same = B.order() == G.order();
  for (Element a = 0; same && a < G.order(); ++a)
    for (Element b = 0; same && b < G.order(); ++b) same = B.mul(a, b) == G.mul(a, b);
  if (!same) throw InputError("built-in twist does not match the group's multiplication table");
  Cochain<N> r(G);
  for (std::size_t i = 0; i < r.size(); ++i) r.at_offset(i) = c.at_offset(i);
  return r;
}

/// zero | klein | cyclic:k | built-in name | path to a cochain CSV
template <int N>
Cochain<N> load_twist(const FiniteGroup& G, const std::string& spec) {
  if (spec == "zero") return Cochain<N>(G);
  if (spec == "klein") {
    if constexpr (N == 2) return rehome(klein_2cocycle(), G);
    throw InputError("twist 'klein' is a 2-cocycle");
  }
  if (spec.rfind("cyclic:", 0) == 0) {
    if constexpr (N == 3) {
      int k = 0;
      try {
        k = std::stoi(spec.substr(7));
      } catch (const std::exception&) {
        throw InputError("twist '" + spec + "': level is not an integer");
      }
      return rehome(cyclic_3cocycle(G.order(), k), G);
    }
    throw InputError("twist 'cyclic:k' is a 3-cocycle");
  }
  // built-in names such as D4:klein or A4:quotient-cyclic:1
  if (spec.find(':') != std::string::npos) {
    if constexpr (N == 2) {
      for (const auto& t : builtin_twists2())
        if (t.name == spec) return rehome(t.alpha, G);
    } else if constexpr (N == 3) {
      for (const auto& t : builtin_twists3())
        if (t.name == spec) return rehome(t.alpha, G);
    }
  }
  return io::load_cochain<N>(G, spec);
}

Doc phase_json(const Phase& p) { return Doc::array({p.num(), p.den()}); }

Doc names_json(const FiniteGroup& G, const std::vector<Element>& xs) {
  Doc a = Doc::array();
  for (Element x : xs) a.push_back(G.name(x));
  return a;
}

Doc pair_json(const FiniteGroup& G, CommutingPair p) { return Doc::array({G.name(p.g1), G.name(p.g2)}); }

// ---------------------------------------------------------------------------
// Commands. Each fills results and diagnostics.

struct Run {
  Doc inputs = Doc::object();
  Doc results = Doc::object();
  Doc diagnostics = Doc::object();
  std::string raw;  // written to --out (CSV payloads)
};

void group_info(const Options& o, Run& r) {
  const auto G = io::load_group(o.group, o.max_order);
  r.inputs["group"] = o.group;
  r.results["order"] = G.order();
  r.results["exponent"] = G.exponent();
  r.results["elements"] = names_json(G, [&] {
    std::vector<Element> v(G.order());
    for (Element g = 0; g < G.order(); ++g) v[g] = g;
    return v;
  }());
  Doc classes = Doc::array();
  for (const auto& c : conjugacy_classes(G))
    classes.push_back({{"representative", G.name(c.front())},
                       {"size", c.size()},
                       {"centralizer_order", centralizer(G, c.front()).size()}});
  r.results["class_count"] = classes.size();
  r.results["classes"] = classes;
  const PairIndex index(G);
  r.results["commuting_pairs"] = index.size();
  r.results["pair_orbits"] = index.orbits().size();
  r.diagnostics["burnside_identity"] = index.size() == static_cast<std::size_t>(G.order()) * classes.size();
}

template <int N>
void cocycle_check_n(const Options& o, const FiniteGroup& G, Run& r) {
  const auto c = o.cochain.empty() ? load_twist<N>(G, o.twist) : io::load_cochain<N>(G, o.cochain);
  const auto chk = is_cocycle(c);
  r.results["normalized"] = c.is_normalized();
  r.results["is_cocycle"] = chk.ok;
  if (!chk.ok) {
    Doc w = Doc::array();
    for (Element x : *chk.witness) w.push_back(x);
    r.results["witness"] = w;
    r.results["defect"] = phase_json(chk.defect);
    std::string t;
    for (std::size_t i = 0; i < w.size(); ++i) t += (i ? "," : "") + std::to_string((*chk.witness)[i]);
    throw InputError("not a cocycle: coboundary is " + chk.defect.str() + " at (" + t + ")");
  }
}

void cocycle_check(const Options& o, Run& r) {
  const auto G = io::load_group(o.group, o.max_order);
  r.inputs = {{"group", o.group}, {"degree", o.degree}, {"cochain", o.cochain.empty() ? o.twist : o.cochain}};
  switch (o.degree) {
    case 1: cocycle_check_n<1>(o, G, r); break;
    case 2: cocycle_check_n<2>(o, G, r); break;
    case 3: cocycle_check_n<3>(o, G, r); break;
    default: throw InputError("degree must be 1, 2 or 3");
  }
}

void cocycle_gen(const Options& o, Run& r) {
  const auto G = io::load_group(o.group, o.max_order);
  r.inputs = {{"group", o.group}, {"degree", o.degree}, {"twist", o.twist}};
  if (o.degree == 2) {
    const auto c = load_twist<2>(G, o.twist);
    r.raw = io::cochain_to_csv(c);
    r.results["is_cocycle"] = is_cocycle(c).ok;
    r.results["denominator"] = c.common_denominator();
  } else if (o.degree == 3) {
    const auto c = load_twist<3>(G, o.twist);
    r.raw = io::cochain_to_csv(c);
    r.results["is_cocycle"] = is_cocycle(c).ok;
    r.results["denominator"] = c.common_denominator();
  } else {
    throw InputError("degree must be 2 or 3");
  }
  r.results["nonzero_entries"] = std::count(r.raw.begin(), r.raw.end(), '\n');
}

void inertia_orbits(const Options& o, Run& r) {
  const auto G = io::load_group(o.group, o.max_order);
  const auto geom = parse_geometry(o.geometry);
  r.inputs = {{"group", o.group}, {"geometry", geometry_name(geom)}};
  if (geom == Geometry::Loop) {
    Doc a = Doc::array();
    for (const auto& c : conjugacy_classes(G))
      a.push_back({{"representative", G.name(c.front())}, {"members", names_json(G, c)},
                   {"stabilizer_order", centralizer(G, c.front()).size()}});
    r.results["component_count"] = a.size();
    r.results["components"] = a;
    return;
  }
  const PairIndex index(G);
  Doc a = Doc::array();
  std::size_t total = 0;
  for (const auto& orb : index.orbits()) {
    a.push_back({{"representative", pair_json(G, orb.representative)}, {"size", orb.members.size()},
                 {"stabilizer_order", orb.stabilizer.size()}});
    total += orb.members.size();
  }
  r.results["commuting_pairs"] = index.size();
  r.results["component_count"] = a.size();
  r.results["components"] = a;
  Doc blocks = Doc::array();
  for (const auto& b : sl2z_orbits(G, index)) blocks.push_back(b);
  r.results["sl2z_orbit_count"] = blocks.size();
  r.results["sl2z_orbits"] = blocks;
  r.diagnostics["orbit_sizes_sum_to_pairs"] = total == index.size();
}

void transgress(const Options& o, Run& r) {
  const auto G = io::load_group(o.group, o.max_order);
  r.inputs = {{"group", o.group}, {"twist", o.twist}, {"degree", o.degree}};
  std::string csv = "object,h,num,den\n";
  const auto dump = [&](const ActionCocycle& t, auto label) {
    for (int x = 0; x < t.groupoid().object_count(); ++x)
      for (Element h = 0; h < G.order(); ++h) {
        const Phase& p = t(h, x);
        csv += label(x) + "," + std::to_string(h) + "," + std::to_string(p.num()) + "," + std::to_string(p.den()) + "\n";
      }
  };
  Doc chars = Doc::array();
  if (o.degree == 2) {
    const auto a = load_twist<2>(G, o.twist);
    const auto t = transgress2(a);
    dump(t, [](int x) { return std::to_string(x); });
    r.diagnostics["composition_law"] = t.satisfies_composition();
    for (const auto& c : conjugacy_classes(G)) {
      const auto chi = chi_g(a, c.front());
      Doc ph = Doc::array();
      for (const auto& p : chi.phase) ph.push_back(phase_json(p));
      chars.push_back({{"class", G.name(c.front())}, {"stabilizer", names_json(G, chi.subgroup)}, {"chi", ph},
                       {"trivial", chi.is_trivial()}, {"homomorphism", chi.is_homomorphism(G)}});
    }
    const auto d = loop_conventions(a);
    r.diagnostics["triviality_agrees"] = d.triviality_agrees;
    r.diagnostics["restriction_is_inverse_character"] = d.restriction_is_inverse;
    r.diagnostics["restriction_is_character"] = d.restriction_is_equal;
  } else if (o.degree == 3) {
    const auto a = load_twist<3>(G, o.twist);
    const auto t = transgress3(a);
    const auto pairs = t.groupoid().pairs().pairs();
    dump(t, [&](int x) { return std::to_string(pairs[x].g1) + ":" + std::to_string(pairs[x].g2); });
    r.diagnostics["composition_law"] = t.satisfies_composition();
    for (const auto& orb : pair_orbits(G)) {
      const auto chi = chi_pair(a, orb.representative);
      Doc ph = Doc::array();
      for (const auto& p : chi.phase) ph.push_back(phase_json(p));
      chars.push_back({{"orbit", pair_json(G, orb.representative)}, {"stabilizer", names_json(G, chi.subgroup)},
                       {"chi", ph}, {"trivial", chi.is_trivial()}, {"homomorphism", chi.is_homomorphism(G)}});
    }
    const auto d = torus_conventions(a);
    r.diagnostics["triviality_agrees"] = d.triviality_agrees;
    r.diagnostics["restriction_is_inverse_character"] = d.restriction_is_inverse;
    r.diagnostics["restriction_is_character"] = d.restriction_is_equal;
  } else {
    throw InputError("degree must be 2 or 3");
  }
  r.results["characters"] = chars;
  r.raw = csv;
  if (!r.diagnostics["composition_law"].get<bool>())
    throw ConsistencyError("transgressed cocycle violates the composition law");
}

Doc section_space_json(const SectionSpace& s) {
  return {{"dimension", s.dimension}, {"weight", s.weight}, {"degree", s.degree},
          {"modular_weight", s.modular_weight}, {"basis", s.basis}};
}

CohomologyData load_data(const Options& o, const FiniteGroup& G, Geometry geom, Run& r) {
  if (!o.data.empty()) {
    if (!o.gset.empty()) throw InputError("give either --gset or --data, not both");
    r.inputs["data"] = o.data;
    auto d = io::load_cohomology(G, o.data);
    if (d.geometry != geom) throw InputError(o.data + ": geometry does not match the command");
    return d;
  }
  if (!o.gset.empty()) {
    r.inputs["gset"] = o.gset;
    return cohomology_from_gset(G, io::load_gset(G, o.gset), geom);
  }
  r.inputs["space"] = "point";
  return point_data(G, geom);
}

void sections_k(const Options& o, Run& r) {
  const auto G = io::load_group(o.group, o.max_order);
  r.inputs = {{"group", o.group}, {"twist", o.twist}, {"parity", o.parity}};
  if (o.parity != "even" && o.parity != "odd") throw InputError("parity must be even or odd");
  const auto a = load_twist<2>(G, o.twist);
  const auto data = load_data(o, G, Geometry::Loop, r);
  const auto s = ktheory_dim(G, data, a, o.parity == "even" ? Parity::Even : Parity::Odd);
  r.results = section_space_json(s);
  Doc reg = Doc::array();
  for (const auto& c : regular_classes(G, a)) reg.push_back(G.name(c.front()));
  r.results["regular_classes"] = reg;
}

void sections_ell(const Options& o, Run& r) {
  const auto G = io::load_group(o.group, o.max_order);
  r.inputs = {{"group", o.group}, {"twist", o.twist}, {"weight", o.weight}};
  const auto a = load_twist<3>(G, o.twist);
  const auto data = load_data(o, G, Geometry::Torus, r);
  const auto e = ell_rank(G, data, a, o.weight);
  r.results = section_space_json(e.total);
  Doc per = Doc::array();
  for (const auto& s : e.by_degree) per.push_back(section_space_json(s));
  r.results["by_degree"] = per;
  Doc reg = Doc::array();
  for (const auto& orb : regular_pair_orbits(G, a)) reg.push_back(pair_json(G, orb.representative));
  r.results["regular_orbits"] = reg;
  const auto b = sl2z_blocks(G, a);
  r.results["sl2z_blocks"] = b.blocks;
  r.diagnostics["sl2z_stable"] = b.stable;
  r.diagnostics["sl2z_block_assumption"] = SL2ZBlocks::assumption;
  r.diagnostics["coefficient_ranks_only"] = "holomorphic factor has infinite dimension; ranks are per modular weight";
  if (!b.stable) throw ConsistencyError("regular pair orbits are not stable under SL2(Z) generators S, T");
}

void sections_rg(const Options& o, Run& r, const std::string& a_text, int i) {
  const auto geom = parse_geometry(o.geometry);
  Rational a;
  try {
    const auto slash = a_text.find('/');
    a = slash == std::string::npos ? Rational(std::stoll(a_text))
                                   : Rational(std::stoll(a_text.substr(0, slash)), std::stoll(a_text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw InputError("exponent must be an integer or a fraction p/q");
  }
  r.inputs = {{"geometry", geometry_name(geom)}, {"a", a_text}, {"degree", i}};
  r.results["invariant"] = rg_weight_check(geom, a, i);
  const std::map<int, std::string> names{{0, "r"}, {1, "vol"}, {2, "l1"}, {3, "l2"}, {4, "lb1"}, {5, "lb2"}, {6, "F"}};
  if (geom == Geometry::Loop) {
    r.results["residual"] = rg_residual(geom, a, i).str(names);
  } else {
    r.results["residual_first"] = rg_residual(geom, a, i, RGField::First).str(names);
    r.results["residual_second"] = rg_residual(geom, a, i, RGField::Second).str(names);
    r.diagnostics["residual_second_plus_sign"] = rg_residual(geom, a, i, RGField::SecondPlusSign).str(names);
  }
}

void algebra_center(const Options& o, Run& r) {
  const auto G = io::load_group(o.group, o.max_order);
  r.inputs = {{"group", o.group}, {"twist", o.twist}};
  const TwistedGroupAlgebra A(load_twist<2>(G, o.twist));
  const auto c = center_dim(A);
  r.results["dimension"] = c.dimension;
  Doc basis = Doc::array();
  for (const auto& b : c.basis) basis.push_back(b.label(G));
  r.results["basis"] = basis;
  Doc reg = Doc::array();
  for (const auto& cls : regular_classes(G, A.alpha())) reg.push_back(G.name(cls.front()));
  r.results["regular_classes"] = reg;
  if (c.numeric_dimension) r.diagnostics["numeric_dimension"] = *c.numeric_dimension;
  const auto rep = regular_rep(A);
  r.diagnostics["regular_rep_defect_below_1e-9"] = rep.defect(A.alpha()) <= 1e-9;
  r.diagnostics["character_transform"] = character_transform_check(rep, A.alpha());
  if (o.dump_matrices) {
    std::string csv = "g,row,col,re,im\n";
    for (Element g = 0; g < G.order(); ++g)
      for (int i = 0; i < rep.dimension; ++i)
        for (int j = 0; j < rep.dimension; ++j) {
          const auto v = rep.matrices[g](i, j);
          if (v == 0.0) continue;
          std::ostringstream os;
          os << g << ',' << i << ',' << j << ',' << v.real() << ',' << v.imag() << '\n';
          csv += os.str();
        }
    r.raw = csv;
  }
}

void induce(const Options& o, Run& r) {
  const auto H = io::load_group(o.source, o.max_order);
  const auto G = io::load_group(o.target, o.max_order);
  const auto geom = parse_geometry(o.geometry);
  r.inputs = {{"source", o.source}, {"target", o.target}, {"hom", o.hom}, {"twist", o.twist},
              {"geometry", geometry_name(geom)}};
  std::vector<Element> map;
  if (!o.hom.empty()) {
    map = io::load_hom(H, G, o.hom).map;
  } else if (G.order() == 1) {
    map.assign(H.order(), 0);
  } else if (H.order() == 1) {
    map = {0};
  } else if (o.source == o.target) {
    map = identity_hom(G).map;
  } else {
    throw InputError("--hom is required unless one group is trivial or source equals target");
  }
  const auto hom = check_homomorphism(H, G, map);
  if (o.fiberwise) {
    // the twist lives on the source
    r.inputs["twist_on"] = "source";
    const auto put = [&](const FiberwisePushforward& p) {
      Doc comps = Doc::array();
      const LoopGroupoid base(G, geom);
      for (const auto& c : p.components) {
        Doc label = geom == Geometry::Loop ? Doc(G.name(c.base_object))
                                           : pair_json(G, base.pairs().pairs()[c.base_object]);
        comps.push_back({{"base", label}, {"fiber_dim", c.fiber_dim}, {"invariant_dim", c.invariant_dim}});
      }
      r.results["components"] = comps;
      r.results["total_invariant"] = p.total_invariant;
    };
    if (geom == Geometry::Loop) {
      const auto b = load_twist<2>(H, o.twist);
      require_cocycle(b);
      put(pushforward_fiberwise(hom, b));
    } else {
      const auto b = load_twist<3>(H, o.twist);
      require_cocycle(b);
      put(pushforward_fiberwise(hom, b));
    }
    return;
  }
  if (o.section.empty()) throw InputError("--section is required");
  r.inputs["section"] = o.section;
  r.inputs["route"] = o.route;
  if (o.route != "formula" && o.route != "fiber") throw InputError("route must be formula or fiber");
  const auto s = io::load_section(H, geom, o.section);
  EquivariantSection out, other;
  double in_defect = 0, out_defect = 0;
  if (geom == Geometry::Loop) {
    const auto a = load_twist<2>(G, o.twist);
    require_cocycle(a);
    const auto pb = pullback(hom, a);
    in_defect = equivariance_defect(s, transgress2(pb));
    out = o.route == "formula" ? induce_k(hom, a, s) : induce_k_fiber(hom, a, s);
    other = o.route == "formula" ? induce_k_fiber(hom, a, s) : induce_k(hom, a, s);
    out_defect = equivariance_defect(out, transgress2(a));
  } else {
    const auto a = load_twist<3>(G, o.twist);
    require_cocycle(a);
    const auto pb = pullback(hom, a);
    in_defect = equivariance_defect(s, transgress3(pb));
    out = o.route == "formula" ? induce_ell(hom, a, s) : induce_ell_fiber(hom, a, s);
    other = o.route == "formula" ? induce_ell_fiber(hom, a, s) : induce_ell(hom, a, s);
    out_defect = equivariance_defect(out, transgress3(a));
  }
  if (in_defect > 1e-9) throw InputError(o.section + ": section is not equivariant for the pulled-back twist");
  r.raw = io::section_to_csv(out);
  Doc vals = Doc::array();
  const auto pairs = commuting_pairs(G);
  for (int x = 0; x < out.object_count(); ++x) {
    Doc key = geom == Geometry::Loop ? Doc(G.name(x)) : pair_json(G, pairs[x]);
    const auto v = out.at(x);
    vals.push_back({{"object", key}, {"re", std::abs(v.real()) < 5e-13 ? 0.0 : v.real()},
                    {"im", std::abs(v.imag()) < 5e-13 ? 0.0 : v.imag()}});
  }
  r.results["values"] = vals;
  const bool agree = max_difference(out, other) <= 1e-12;
  r.diagnostics["routes_agree_1e-12"] = agree;
  r.diagnostics["output_equivariant_1e-9"] = out_defect <= 1e-9;
  if (!agree || out_defect > 1e-9) throw ConsistencyError("induced section failed its cross-checks");
}

void superlaw_check(const Options&, Run& r) {
  const auto rep = super::check_model_axioms();
  Doc req = Doc::array(), info = Doc::array();
  for (const auto& e : rep.entries) (e.informational ? info : req).push_back({{"name", e.name}, {"holds", e.holds}});
  r.results["axioms"] = req;
  r.results["all_passed"] = rep.all_passed();
  r.diagnostics["projections"] = info;
  if (!rep.all_passed()) throw ConsistencyError("super group law axioms failed");
}

// ---------------------------------------------------------------------------
// Output

void render(std::ostream& os, const Doc& d, const std::string& indent) {
  for (const auto& [k, v] : d.items()) {
    if (v.is_object()) {
      os << indent << k << ":\n";
      render(os, v, indent + "  ");
    } else if (v.is_array() && !v.empty() && (v.front().is_object())) {
      os << indent << k << ":\n";
      for (const auto& item : v) {
        os << indent << "  -";
        bool first = true;
        for (const auto& [ik, iv] : item.items()) {
          os << (first ? " " : ", ") << ik << "=" << (iv.is_string() ? iv.get<std::string>() : iv.dump());
          first = false;
        }
        os << '\n';
      }
    } else {
      os << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"twisted equivariant K-theory and elliptic character data of finite groups"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--threads", o.threads, "worker threads (default: TWELL_THREADS or 1)");
  app.add_option("--max-order", o.max_order, "largest group order accepted");

  std::string command;
  std::string rg_a = "0";
  int rg_i = 0;
  const auto group_opt = [&](CLI::App* s) { s->add_option("--group,-g", o.group, "built-in name or group .json"); };
  const auto twist_opt = [&](CLI::App* s) {
    s->add_option("--twist,-t", o.twist, "zero | klein | cyclic:k | built-in (e.g. D4:klein) | cochain .csv");
  };

  auto* group = app.add_subcommand("group", "group data");
  group->require_subcommand(1);
  auto* info = group->add_subcommand("info", "order, classes, commuting pairs");
  group_opt(info);

  auto* cocycle = app.add_subcommand("cocycle", "cochains");
  cocycle->require_subcommand(1);
  auto* check = cocycle->add_subcommand("check", "test the cocycle condition");
  group_opt(check);
  twist_opt(check);
  check->add_option("--cochain,-c", o.cochain, "cochain .csv");
  check->add_option("--degree,-n", o.degree, "1, 2 or 3");
  auto* gen = cocycle->add_subcommand("gen", "emit a built-in twist as CSV");
  group_opt(gen);
  twist_opt(gen);
  gen->add_option("--degree,-n", o.degree, "2 or 3");
  gen->add_option("--out,-o", o.out, "CSV output path");

  auto* inertia = app.add_subcommand("inertia", "inertia groupoids");
  inertia->require_subcommand(1);
  auto* orbits = inertia->add_subcommand("orbits", "classes or commuting-pair orbits");
  group_opt(orbits);
  orbits->add_option("--geometry", o.geometry, "loop or torus");

  auto* trans = app.add_subcommand("transgress", "transgression tables and stabilizer characters");
  group_opt(trans);
  twist_opt(trans);
  trans->add_option("--degree,-n", o.degree, "2 (loops) or 3 (tori)");
  trans->add_option("--out,-o", o.out, "CSV output path for the phase table");

  auto* sections = app.add_subcommand("sections", "invariant sections");
  sections->require_subcommand(1);
  auto* sk = sections->add_subcommand("k", "twisted K-theory rank");
  group_opt(sk);
  twist_opt(sk);
  sk->add_option("--parity", o.parity, "even or odd");
  sk->add_option("--gset", o.gset, "G-set .json");
  sk->add_option("--data", o.data, "cohomology data .json");
  auto* sell = sections->add_subcommand("ell", "elliptic coefficient ranks");
  group_opt(sell);
  twist_opt(sell);
  sell->add_option("--weight,-k", o.weight, "total weight k");
  sell->add_option("--gset", o.gset, "G-set .json");
  sell->add_option("--data", o.data, "cohomology data .json");
  auto* srg = sections->add_subcommand("rg", "RG weight check");
  srg->add_option("--geometry", o.geometry, "loop or torus");
  srg->add_option("--exponent,-a", rg_a, "exponent a (integer or p/q)");
  srg->add_option("--form-degree,-i", rg_i, "form degree i");

  auto* algebra = app.add_subcommand("algebra", "twisted group algebra");
  algebra->require_subcommand(1);
  auto* center = algebra->add_subcommand("center", "center dimension and basis");
  group_opt(center);
  twist_opt(center);
  center->add_flag("--dump-matrices", o.dump_matrices, "write regular-representation entries as CSV");
  center->add_option("--out,-o", o.out, "CSV output path");

  auto* ind = app.add_subcommand("induce", "pushforward along a homomorphism");
  ind->add_option("--source", o.source, "source group H")->required();
  ind->add_option("--target", o.target, "target group G")->required();
  ind->add_option("--hom", o.hom, "homomorphism .json {\"map\": [...]}");
  twist_opt(ind);
  ind->add_option("--section,-s", o.section, "section .csv over H");
  ind->add_option("--geometry", o.geometry, "loop or torus");
  ind->add_option("--route", o.route, "formula or fiber");
  ind->add_flag("--fiberwise", o.fiberwise, "fiber section-space dimensions (twist on H)");
  ind->add_option("--out,-o", o.out, "CSV output path");

  auto* superlaw = app.add_subcommand("superlaw", "super group laws");
  superlaw->require_subcommand(1);
  auto* scheck = superlaw->add_subcommand("check", "verify the model axioms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (o.threads <= 0) {
    if (const char* env = std::getenv("TWELL_THREADS")) o.threads = std::atoi(env);
  }
  set_max_threads(o.threads > 0 ? o.threads : 1);

  Run r;
  int status = 0;
  std::string error;
  try {
    if (info->parsed()) command = "group info", group_info(o, r);
    else if (check->parsed()) command = "cocycle check", cocycle_check(o, r);
    else if (gen->parsed()) command = "cocycle gen", cocycle_gen(o, r);
    else if (orbits->parsed()) command = "inertia orbits", inertia_orbits(o, r);
    else if (trans->parsed()) command = "transgress", transgress(o, r);
    else if (sk->parsed()) command = "sections k", sections_k(o, r);
    else if (sell->parsed()) command = "sections ell", sections_ell(o, r);
    else if (srg->parsed()) command = "sections rg", sections_rg(o, r, rg_a, rg_i);
    else if (center->parsed()) command = "algebra center", algebra_center(o, r);
    else if (ind->parsed()) command = "induce", induce(o, r);
    else if (scheck->parsed()) command = "superlaw check", superlaw_check(o, r);
  } catch (const InputError& e) {
    status = 1;
    error = e.what();
  } catch (const ConsistencyError& e) {
    status = 2;
    error = e.what();
  } catch (const std::exception& e) {
    status = 2;
    error = std::string("internal error: ") + e.what();
  }

  if (status == 0 && !r.raw.empty() && !o.out.empty()) {
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
      status = 1;
      error = o.out + ": cannot write file";
    } else {
      f << r.raw;
      r.results["written"] = o.out;
    }
  }
  if (status != 0) r.diagnostics["error"] = error;
  r.diagnostics["exit_code"] = status;

  if (status == 0 && !r.raw.empty() && o.out.empty() && o.format == "json") r.results["csv"] = r.raw;
  Doc doc = {{"command", command}, {"inputs", r.inputs}, {"results", r.results}, {"diagnostics", r.diagnostics}};
  if (o.format == "json") {
    std::cout << doc.dump(2) << '\n';
  } else {
    render(std::cout, doc, "");
    if (status == 0 && !r.raw.empty() && o.out.empty()) std::cout << "---\n" << r.raw;
  }
  if (status != 0) std::cerr << "error: " << error << '\n';
  return status;
}
