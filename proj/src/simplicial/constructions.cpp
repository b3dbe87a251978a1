#include "strathom/errors.hpp"
#include "strathom/simplicial.hpp"

#include <algorithm>
#include <functional>

namespace strathom::simplicial {

namespace {

// A label not used by `s`, starting from `base`.
std::string fresh_label(const SimplicialComplex& s, const std::string& base) {
  std::string label = base;
  for (int k = 1;; ++k) {
    const auto& ls = s.labels();
    if (std::find(ls.begin(), ls.end(), label) == ls.end()) return label;
    label = base + std::to_string(k);
  }
}

// Joins every maximal simplex of s with each vertex in `apexes`.
StratifiedComplex join_with_points(const SimplicialComplex& s, const std::vector<std::string>& names) {
  if (s.vertex_count() == 0) throw ContractError("cone or suspension of an empty complex");
  std::vector<std::string> labels = s.labels();
  std::vector<std::size_t> apexes;
  for (const auto& name : names) {
    std::string label = fresh_label(SimplicialComplex::from_indices(labels, {}), name);
    apexes.push_back(labels.size());
    labels.push_back(label);
  }
  std::vector<Simplex> top;
  for (const auto& m : s.maximal_simplices()) {
    for (std::size_t a : apexes) {
      Simplex t = m;
      t.push_back(a);
      top.push_back(std::move(t));
    }
  }
  StratifiedComplex out;
  out.complex = SimplicialComplex::from_indices(std::move(labels), top);
  out.in_sigma.assign(out.complex.vertex_count(), false);
  for (std::size_t a : apexes) out.in_sigma[a] = true;
  out.codim = s.dimension() + 1;
  return out;
}

std::string simplex_label(const SimplicialComplex& s, const Simplex& x) {
  if (x.size() == 1) return s.labels()[x[0]];
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ",";
    out += s.labels()[x[i]];
  }
  return out + "]";
}

}  // namespace

StratifiedComplex cone(const SimplicialComplex& s) { return join_with_points(s, {"apex"}); }

StratifiedComplex suspension(const SimplicialComplex& s) {
  return join_with_points(s, {"north", "south"});
}

SimplicialComplex barycentric_subdivide(const SimplicialComplex& s) {
  // New vertices: every simplex, by dimension then lexicographically.
  std::vector<std::string> labels;
  std::map<Simplex, std::size_t> vertex_of;
  for (int d = 0; d <= s.dimension(); ++d) {
    for (const auto& x : s.simplices(d)) {
      vertex_of.emplace(x, labels.size());
      labels.push_back(simplex_label(s, x));
    }
  }
  // A top simplex per maximal flag: remove one vertex at a time.
  std::vector<Simplex> top;
  std::function<void(const Simplex&, Simplex&)> descend = [&](const Simplex& x, Simplex& chain) {
    chain.push_back(vertex_of.at(x));
    if (x.size() == 1) {
      Simplex t = chain;
      std::sort(t.begin(), t.end());
      top.push_back(std::move(t));
    } else {
      for (std::size_t i = 0; i < x.size(); ++i) {
        Simplex face = x;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        descend(face, chain);
      }
    }
    chain.pop_back();
  };
  for (const auto& m : s.maximal_simplices()) {
    Simplex chain;
    descend(m, chain);
  }
  return SimplicialComplex::from_indices(std::move(labels), top);
}

StratifiedComplex barycentric_subdivide(const StratifiedComplex& s) {
  StratifiedComplex out;
  out.complex = barycentric_subdivide(s.complex);
  out.codim = s.codim;
  // Barycentres follow the vertex order used above.
  for (int d = 0; d <= s.complex.dimension(); ++d) {
    for (const auto& x : s.complex.simplices(d)) {
      out.in_sigma.push_back(s.sigma_vertices(x) == x.size());
    }
  }
  return out;
}

SimplicialComplex product(const SimplicialComplex& a, const SimplicialComplex& b) {
  const std::size_t nb = b.vertex_count();
  std::vector<std::string> labels;
  for (const auto& la : a.labels()) {
    for (const auto& lb : b.labels()) labels.push_back(la + "*" + lb);
  }
  std::vector<Simplex> top;
  for (const auto& x : a.maximal_simplices()) {
    for (const auto& y : b.maximal_simplices()) {
      const std::size_t p = x.size() - 1;
      const std::size_t q = y.size() - 1;
      // Each lattice path from (0,0) to (p,q) is a staircase simplex.
      std::vector<bool> steps(p + q, false);
      std::fill(steps.begin() + static_cast<std::ptrdiff_t>(q), steps.end(), true);
      do {
        std::size_t i = 0, j = 0;
        Simplex t{x[0] * nb + y[0]};
        for (bool right : steps) {
          right ? ++i : ++j;
          t.push_back(x[i] * nb + y[j]);
        }
        top.push_back(std::move(t));
      } while (std::next_permutation(steps.begin(), steps.end()));
    }
  }
  return SimplicialComplex::from_indices(std::move(labels), top);
}

}  // namespace strathom::simplicial
