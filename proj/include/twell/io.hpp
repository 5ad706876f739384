#ifndef TWELL_IO_HPP
#define TWELL_IO_HPP

// File formats. Needs nlohmann json ("json.hpp") on the include path.

#include <complex>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "twell/cochain.hpp"
#include "twell/error.hpp"
#include "twell/group.hpp"
#include "twell/induction.hpp"
#include "twell/sections.hpp"

namespace twell::io {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(where + ": byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

namespace detail {

// typed field access with a readable location on failure
template <typename T>
T field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(where + ": field '" + key + "' has the wrong type");
  }
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) {
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return out;
}

inline std::int64_t to_int(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(where + ": '" + s + "' is not an integer");
  }
}

inline double to_double(const std::string& s, const std::string& where) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError(where + ": '" + s + "' is not a number");
  }
}

// data rows of a CSV text: skips blanks, '#' comments and a non-numeric header
inline std::vector<std::pair<int, std::vector<std::string>>> csv_rows(const std::string& text) {
  std::vector<std::pair<int, std::vector<std::string>>> rows;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto cells = split_csv(line);
    if (rows.empty() && !cells.empty() && !cells[0].empty() &&
        cells[0].find_first_not_of("+-0123456789") != std::string::npos)
      continue;  // header
    rows.emplace_back(lineno, std::move(cells));
  }
  return rows;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Groups, G-sets, homomorphisms

/// {"type":"named","name":"S3"}
/// {"type":"permutation","degree":3,"generators":[[1,0,2],[1,2,0]]}
/// {"type":"table","table":[[...],...],"names":[...]}   (names optional)
inline FiniteGroup group_from_json(const json& j, const std::string& where, int max_order = kDefaultMaxOrder) {
  const auto type = detail::field<std::string>(j, "type", where);
  if (type == "named") return named_group(detail::field<std::string>(j, "name", where));
  if (type == "permutation") {
    const int degree = detail::field<int>(j, "degree", where);
    const auto gens = detail::field<std::vector<std::vector<int>>>(j, "generators", where);
    try {
      return group_from_permutations(degree, gens, max_order);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (type == "table") {
    auto table = detail::field<std::vector<std::vector<int>>>(j, "table", where);
    std::vector<std::string> names;
    if (j.contains("names")) names = detail::field<std::vector<std::string>>(j, "names", where);
    try {
      return FiniteGroup::from_table(std::move(table), std::move(names), max_order);
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": unknown group type '" + type + "'");
}

/// A file path ending in .json is read as a group document; anything else
/// is a built-in name.
inline FiniteGroup load_group(const std::string& spec, int max_order = kDefaultMaxOrder) {
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json")
    return group_from_json(parse_json(read_file(spec), spec), spec, max_order);
  return named_group(spec);
}

inline json group_to_json(const FiniteGroup& G) {
  std::vector<std::vector<int>> t(G.order(), std::vector<int>(G.order()));
  std::vector<std::string> names;
  for (Element a = 0; a < G.order(); ++a) {
    names.push_back(G.name(a));
    for (Element b = 0; b < G.order(); ++b) t[a][b] = G.mul(a, b);
  }
  return {{"type", "table"}, {"table", t}, {"names", names}};
}

/// {"size": n, "action": [[g.0, g.1, ...] per group element]}
inline GSet gset_from_json(const FiniteGroup& G, const json& j, const std::string& where) {
  const int size = detail::field<int>(j, "size", where);
  auto act = detail::field<std::vector<std::vector<int>>>(j, "action", where);
  try {
    return make_gset(G, size, std::move(act));
  } catch (const InputError& e) {
    throw InputError(where + ": " + e.what());
  }
}

inline GSet load_gset(const FiniteGroup& G, const std::string& path) {
  return gset_from_json(G, parse_json(read_file(path), path), path);
}

/// {"map": [f(0), f(1), ...]}
inline Homomorphism load_hom(const FiniteGroup& H, const FiniteGroup& G, const std::string& path) {
  const auto j = parse_json(read_file(path), path);
  try {
    return check_homomorphism(H, G, detail::field<std::vector<int>>(j, "map", path));
  } catch (const InputError& e) {
    const std::string m = e.what();
    throw InputError(m.rfind(path, 0) == 0 ? m : path + ": " + m);
  }
}

// ---------------------------------------------------------------------------
// Cochains

/// Rows "i,j[,k],num,den"; omitted tuples are 0. Duplicate tuples and
/// non-normalized tables are rejected.
template <int N>
Cochain<N> cochain_from_csv(const FiniteGroup& G, const std::string& text, const std::string& where) {
  Cochain<N> c(G);
  std::vector<char> set(c.size(), 0);
  for (const auto& [lineno, cells] : detail::csv_rows(text)) {
    const std::string loc = where + ":" + std::to_string(lineno);
    if (static_cast<int>(cells.size()) != N + 2)
      throw InputError(loc + ": expected " + std::to_string(N + 2) + " columns, got " + std::to_string(cells.size()));
    typename Cochain<N>::Args a{};
    for (int i = 0; i < N; ++i) {
      const auto x = detail::to_int(cells[i], loc);
      if (x < 0 || x >= G.order()) throw InputError(loc + ": element index " + cells[i] + " out of range");
      a[i] = static_cast<Element>(x);
    }
    const auto num = detail::to_int(cells[N], loc);
    const auto den = detail::to_int(cells[N + 1], loc);
    if (den <= 0) throw InputError(loc + ": denominator must be positive");
    const auto off = c.offset(a);
    if (set[off]) throw InputError(loc + ": duplicate entry");
    set[off] = 1;
    c.at_offset(off) = Phase(num, den);
    for (Element x : a)
      if (x == 0 && !c.at_offset(off).is_zero())
        throw InputError(loc + ": nonzero value with an identity argument (table not normalized)");
  }
  return c;
}

template <int N>
Cochain<N> load_cochain(const FiniteGroup& G, const std::string& path) {
  return cochain_from_csv<N>(G, read_file(path), path);
}

/// Nonzero entries only, lexicographic.
template <int N>
std::string cochain_to_csv(const Cochain<N>& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Phase& p = c.at_offset(i);
    if (p.is_zero()) continue;
    for (Element x : c.args(i)) os << x << ',';
    os << p.num() << ',' << p.den() << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Sections

/// Rows "g,re,im" (loop) or "g1,g2,re,im" (torus) over a point; omitted
/// objects are 0.
inline EquivariantSection section_from_csv(const FiniteGroup& G, Geometry geom, const std::string& text,
                                           const std::string& where) {
  EquivariantSection s(geom, G);
  const int keys = geom == Geometry::Loop ? 1 : 2;
  const PairIndex index = geom == Geometry::Torus ? PairIndex(G) : PairIndex();
  for (const auto& [lineno, cells] : detail::csv_rows(text)) {
    const std::string loc = where + ":" + std::to_string(lineno);
    if (static_cast<int>(cells.size()) != keys + 2)
      throw InputError(loc + ": expected " + std::to_string(keys + 2) + " columns");
    std::vector<Element> e;
    for (int i = 0; i < keys; ++i) {
      const auto x = detail::to_int(cells[i], loc);
      if (x < 0 || x >= G.order()) throw InputError(loc + ": element index out of range");
      e.push_back(static_cast<Element>(x));
    }
    int object = e[0];
    if (geom == Geometry::Torus) {
      object = index.index({e[0], e[1]});
      if (object < 0) throw InputError(loc + ": elements do not commute");
    }
    s.at(object) = {detail::to_double(cells[keys], loc), detail::to_double(cells[keys + 1], loc)};
  }
  return s;
}

inline EquivariantSection load_section(const FiniteGroup& G, Geometry geom, const std::string& path) {
  return section_from_csv(G, geom, read_file(path), path);
}

inline std::string section_to_csv(const EquivariantSection& s, int precision = 12) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(precision);
  const auto clean = [](double v) { return std::abs(v) < 5e-13 ? 0.0 : v; };
  if (s.geometry == Geometry::Loop) {
    os << "g,re,im\n";
    for (Element g = 0; g < s.group.order(); ++g)
      os << g << ',' << clean(s.at(g).real()) << ',' << clean(s.at(g).imag()) << '\n';
  } else {
    os << "g1,g2,re,im\n";
    const auto pairs = commuting_pairs(s.group);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      os << pairs[i].g1 << ',' << pairs[i].g2 << ',' << clean(s.at(static_cast<int>(i)).real()) << ','
         << clean(s.at(static_cast<int>(i)).imag()) << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Cohomology data

/// {"geometry": "loop" | "torus",
///  "components": [{"label": "g" or "g1,g2", "entries": [ENTRY, ...]}, ...]}
///
/// ENTRY is {"degree": i, "dim": d} with one of
///   "eigenphases": [[[num,den], ...d of them] per stabilizer element]
///   "phases":      [[num,den] per stabilizer element]     (d must be 1)
///   "character":   [[re,im] per stabilizer element]
/// Stabilizer elements are in increasing index order. Labels name any
/// element (or commuting pair) of the component; every component must appear.
inline CohomologyData cohomology_from_json(const FiniteGroup& G, const json& j, const std::string& where) {
  const auto gname = detail::field<std::string>(j, "geometry", where);
  if (gname != "loop" && gname != "torus") throw InputError(where + ": geometry must be 'loop' or 'torus'");
  CohomologyData d;
  d.geometry = gname == "loop" ? Geometry::Loop : Geometry::Torus;
  std::map<std::string, Element> by_name;
  for (Element g = 0; g < G.order(); ++g) by_name[G.name(g)] = g;
  const auto element = [&](std::string s, const std::string& loc) -> Element {
    const auto b = s.find_first_not_of(' ');
    const auto e = s.find_last_not_of(' ');
    s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    if (auto it = by_name.find(s); it != by_name.end()) return it->second;
    const auto x = detail::to_int(s, loc);
    if (x < 0 || x >= G.order()) throw InputError(loc + ": unknown element '" + s + "'");
    return static_cast<Element>(x);
  };
  std::vector<Subgroup> stabilizers;
  std::vector<int> component_of;  // object -> component
  if (d.geometry == Geometry::Loop) {
    const auto classes = conjugacy_classes(G);
    component_of = class_index(G);
    for (const auto& c : classes) stabilizers.push_back(centralizer(G, c.front()));
  } else {
    const PairIndex index(G);
    for (const auto& o : index.orbits()) stabilizers.push_back(o.stabilizer);
    for (std::size_t i = 0; i < index.size(); ++i) component_of.push_back(index.orbit(index.pairs()[i]));
  }
  d.components.assign(stabilizers.size(), {});
  std::vector<char> seen(stabilizers.size(), 0);
  const PairIndex pairs = d.geometry == Geometry::Torus ? PairIndex(G) : PairIndex();
  const auto comps = detail::field<json>(j, "components", where);
  if (!comps.is_array()) throw InputError(where + ": 'components' must be a list");
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    const std::string loc = where + ": components[" + std::to_string(ci) + "]";
    int comp;
    if (d.geometry == Geometry::Loop) {
      comp = component_of[element(detail::field<std::string>(comps[ci], "label", loc), loc)];
    } else {
      std::string first, second;
      if (comps[ci].contains("label") && comps[ci]["label"].is_array()) {
        const auto v = detail::field<std::vector<std::string>>(comps[ci], "label", loc);
        if (v.size() != 2) throw InputError(loc + ": torus label needs two elements");
        first = v[0];
        second = v[1];
      } else {
        // split at the top-level comma; element names may contain commas in parentheses
        const auto label = detail::field<std::string>(comps[ci], "label", loc);
        int depth = 0;
        std::size_t comma = std::string::npos;
        for (std::size_t i = 0; i < label.size() && comma == std::string::npos; ++i) {
          if (label[i] == '(') ++depth;
          if (label[i] == ')') --depth;
          if (label[i] == ',' && depth == 0) comma = i;
        }
        if (comma == std::string::npos) throw InputError(loc + ": torus label needs 'g1,g2'");
        first = label.substr(0, comma);
        second = label.substr(comma + 1);
      }
      const int idx = pairs.index({element(first, loc), element(second, loc)});
      if (idx < 0) throw InputError(loc + ": label elements do not commute");
      comp = component_of[idx];
    }
    if (seen[comp]) throw InputError(loc + ": component listed twice");
    seen[comp] = 1;
    const std::size_t z = stabilizers[comp].size();
    const auto entries = detail::field<json>(comps[ci], "entries", loc);
    for (std::size_t ei = 0; ei < entries.size(); ++ei) {
      const std::string eloc = loc + ".entries[" + std::to_string(ei) + "]";
      const auto& ej = entries[ei];
      CohomologyEntry e;
      e.degree = detail::field<int>(ej, "degree", eloc);
      e.dim = detail::field<int>(ej, "dim", eloc);
      if (e.dim < 0 || e.degree < 0) throw InputError(eloc + ": degree and dim must be nonnegative");
      const auto columns = [&](std::size_t n) {
        if (n != z)
          throw InputError(eloc + ": character table needs " + std::to_string(z) + " columns, got " + std::to_string(n));
      };
      if (ej.contains("eigenphases")) {
        const auto v = detail::field<std::vector<std::vector<std::array<std::int64_t, 2>>>>(ej, "eigenphases", eloc);
        columns(v.size());
        std::vector<std::vector<Phase>> eig;
        for (const auto& col : v) {
          if (static_cast<int>(col.size()) != e.dim) throw InputError(eloc + ": eigenphase list length differs from dim");
          std::vector<Phase> ps;
          for (const auto& q : col) {
            if (q[1] <= 0) throw InputError(eloc + ": denominator must be positive");
            ps.emplace_back(q[0], q[1]);
          }
          eig.push_back(std::move(ps));
        }
        e.eigenphases = std::move(eig);
      } else if (ej.contains("phases")) {
        if (e.dim != 1) throw InputError(eloc + ": 'phases' describes a one-dimensional entry");
        const auto v = detail::field<std::vector<std::array<std::int64_t, 2>>>(ej, "phases", eloc);
        columns(v.size());
        std::vector<std::vector<Phase>> eig;
        for (const auto& q : v) {
          if (q[1] <= 0) throw InputError(eloc + ": denominator must be positive");
          eig.push_back({Phase(q[0], q[1])});
        }
        e.eigenphases = std::move(eig);
      } else if (ej.contains("character")) {
        const auto v = detail::field<std::vector<std::array<double, 2>>>(ej, "character", eloc);
        columns(v.size());
        std::vector<std::complex<double>> t;
        for (const auto& q : v) t.emplace_back(q[0], q[1]);
        e.traces = std::move(t);
      } else {
        throw InputError(eloc + ": needs 'eigenphases', 'phases' or 'character'");
      }
      d.components[comp].push_back(std::move(e));
    }
  }
  for (std::size_t c = 0; c < seen.size(); ++c)
    if (!seen[c]) throw InputError(where + ": component " + std::to_string(c) + " missing from the data");
  return d;
}

inline CohomologyData load_cohomology(const FiniteGroup& G, const std::string& path) {
  return cohomology_from_json(G, parse_json(read_file(path), path), path);
}

}  // namespace twell::io

#endif
