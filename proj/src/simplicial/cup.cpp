#include "strathom/errors.hpp"
#include "strathom/simplicial.hpp"

#include <algorithm>
#include <deque>

namespace strathom::simplicial {

namespace {

struct Coface {
  std::size_t top;
  std::size_t omitted;  // position of the vertex dropped to reach the face
};

int parity_sign(std::size_t i) { return i % 2 == 0 ? 1 : -1; }

// Relative coboundary d^j on cochains vanishing on the boundary subcomplex.
MatrixQ relative_coboundary(const SimplicialComplex& k, int j,
                            const std::vector<std::size_t>& rel_j,
                            const std::vector<std::size_t>& rel_up) {
  return boundary_matrix(k, j + 1).select_rows(rel_j).select_cols(rel_up).transpose();
}

}  // namespace

OrientedPseudomanifold make_oriented(SimplicialComplex complex,
                                     std::optional<std::vector<Simplex>> boundary,
                                     std::optional<std::vector<int>> orientation) {
  const int n = complex.dimension();
  if (n < 1) throw ContractError("pseudomanifold must have dimension >= 1");
  for (const auto& m : complex.maximal_simplices()) {
    if (static_cast<int>(m.size()) - 1 != n) throw ContractError("complex is not pure");
  }
  const auto& tops = complex.simplices(n);
  std::vector<std::vector<Coface>> cofaces(complex.count(n - 1));
  for (std::size_t t = 0; t < tops.size(); ++t) {
    for (std::size_t i = 0; i < tops[t].size(); ++i) {
      Simplex face = tops[t];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      cofaces[*complex.index_of(face)].push_back({t, i});
    }
  }

  OrientedPseudomanifold out;
  const auto& faces = complex.simplices(n - 1);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (cofaces[f].size() > 2) {
      throw ContractError("codimension-one face with more than two cofaces: not a pseudomanifold");
    }
    if (cofaces[f].size() == 1) out.boundary_facets.push_back(faces[f]);
  }
  if (boundary) {
    std::vector<Simplex> given = *boundary;
    for (auto& s : given) std::sort(s.begin(), s.end());
    std::sort(given.begin(), given.end());
    given.erase(std::unique(given.begin(), given.end()), given.end());
    if (given != out.boundary_facets) {
      throw ContractError("given boundary differs from the faces with a single coface");
    }
  }

  if (orientation) {
    if (orientation->size() != tops.size()) {
      throw ContractError("orientation must have one sign per top simplex");
    }
    for (int o : *orientation) {
      if (o != 1 && o != -1) throw ContractError("orientation signs must be +1 or -1");
    }
    out.orientation = *orientation;
  } else {
    out.orientation.assign(tops.size(), 0);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(tops.size());
    for (const auto& cf : cofaces) {
      if (cf.size() != 2) continue;
      adj[cf[0].top].push_back({cf[1].top, cf[0].omitted + cf[1].omitted});
      adj[cf[1].top].push_back({cf[0].top, cf[0].omitted + cf[1].omitted});
    }
    for (std::size_t root = 0; root < tops.size(); ++root) {
      if (out.orientation[root] != 0) continue;
      out.orientation[root] = 1;
      std::deque<std::size_t> queue{root};
      while (!queue.empty()) {
        std::size_t t = queue.front();
        queue.pop_front();
        for (const auto& [u, parity] : adj[t]) {
          if (out.orientation[u] == 0) {
            out.orientation[u] = -out.orientation[t] * parity_sign(parity);
            queue.push_back(u);
          }
        }
      }
    }
  }
  // Induced signs on every interior face must cancel.
  for (const auto& cf : cofaces) {
    if (cf.size() != 2) continue;
    const int a = out.orientation[cf[0].top] * parity_sign(cf[0].omitted);
    const int b = out.orientation[cf[1].top] * parity_sign(cf[1].omitted);
    if (a + b != 0) {
      throw ContractError(orientation ? "orientation is incoherent" : "complex is not orientable");
    }
  }

  for (const auto& f : out.boundary_facets) {
    for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < f.size(); ++i) {
        if (mask & (1u << i)) face.push_back(f[i]);
      }
      out.boundary_closure.insert(std::move(face));
    }
  }
  out.complex = std::move(complex);
  return out;
}

PairingData cup_pairing(const OrientedPseudomanifold& m, std::size_t degree) {
  const int n = m.dimension();
  const int d = static_cast<int>(degree);
  if (2 * d != n) throw ContractError("cup pairing needs 2 * degree = dimension");
  const SimplicialComplex& k = m.complex;

  auto relative = [&](int j) {
    std::vector<std::size_t> idx;
    const auto& s = k.simplices(j);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!m.in_boundary(s[i])) idx.push_back(i);
    }
    return idx;
  };
  const std::vector<std::size_t> rel_lo = relative(d - 1);
  const std::vector<std::size_t> rel = relative(d);
  const std::vector<std::size_t> rel_hi = relative(d + 1);

  MatrixQ incoming = d == 0 ? MatrixQ(rel.size(), 0) : relative_coboundary(k, d - 1, rel_lo, rel);
  MatrixQ outgoing = relative_coboundary(k, d, rel, rel_hi);
  std::vector<qlinalg::Vector> classes = chains::homology_representatives(incoming, outgoing);

  // Position of each middle simplex among the relative cochain coordinates.
  std::vector<std::ptrdiff_t> coord(k.count(d), -1);
  for (std::size_t i = 0; i < rel.size(); ++i) coord[rel[i]] = static_cast<std::ptrdiff_t>(i);

  const std::size_t h = classes.size();
  MatrixQ pairing(h, h);
  const auto& tops = k.simplices(n);
  for (std::size_t t = 0; t < tops.size(); ++t) {
    const Simplex front(tops[t].begin(), tops[t].begin() + d + 1);
    const Simplex back(tops[t].end() - d - 1, tops[t].end());
    const std::ptrdiff_t f = coord[*k.index_of(front)];
    const std::ptrdiff_t b = coord[*k.index_of(back)];
    if (f < 0 || b < 0) continue;
    const qlinalg::Rational sign = m.orientation[t];
    for (std::size_t x = 0; x < h; ++x) {
      const auto& ax = classes[x][static_cast<std::size_t>(f)];
      if (ax == 0) continue;
      for (std::size_t y = 0; y < h; ++y) {
        const auto& by = classes[y][static_cast<std::size_t>(b)];
        if (by != 0) pairing.add_to(x, y, sign * ax * by);
      }
    }
  }
  PairingData out;
  out.degree = degree;
  out.matrix = std::move(pairing);
  out.basis_note = std::to_string(h) + " relative degree-" + std::to_string(degree) +
                   " cohomology classes; second argument taken in absolute cohomology";
  return out;
}

}  // namespace strathom::simplicial
