#include "strathom/errors.hpp"
#include "strathom/simplicial.hpp"

#include <algorithm>
#include <set>

namespace strathom::simplicial {

namespace {

void add_faces(const Simplex& s, std::vector<std::set<Simplex>>& out) {
  const std::size_t k = s.size();
  if (out.size() < k) out.resize(k);
  // Every nonempty subset, via bit masks; simplices here are small.
  if (k > 20) throw ContractError("simplex too large to close under faces");
  for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
    Simplex face;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (1u << i)) face.push_back(s[i]);
    }
    out[face.size() - 1].insert(std::move(face));
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_indices(std::vector<std::string> labels,
                                                  const std::vector<Simplex>& top) {
  {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw InputError("duplicate vertex label '" + l + "'");
    }
  }
  SimplicialComplex c;
  c.labels_ = std::move(labels);
  std::vector<std::set<Simplex>> faces;
  for (Simplex s : top) {
    if (s.empty()) throw InputError("empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw InputError("simplex repeats a vertex");
    }
    if (s.back() >= c.labels_.size()) throw InputError("simplex uses an unknown vertex index");
    add_faces(s, faces);
  }
  if (faces.empty() && !c.labels_.empty()) faces.resize(1);
  for (std::size_t v = 0; v < c.labels_.size(); ++v) faces[0].insert(Simplex{v});
  c.by_dim_.resize(faces.size());
  c.index_.resize(faces.size());
  for (std::size_t d = 0; d < faces.size(); ++d) {
    c.by_dim_[d].assign(faces[d].begin(), faces[d].end());
    for (std::size_t i = 0; i < c.by_dim_[d].size(); ++i) c.index_[d].emplace(c.by_dim_[d][i], i);
  }
  return c;
}

SimplicialComplex SimplicialComplex::from_labels(std::vector<std::string> labels,
                                                 const std::vector<std::vector<std::string>>& top) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
  std::vector<Simplex> simplices;
  for (const auto& t : top) {
    Simplex s;
    for (const auto& l : t) {
      auto it = index.find(l);
      if (it == index.end()) throw InputError("simplex uses unknown vertex '" + l + "'");
      s.push_back(it->second);
    }
    simplices.push_back(std::move(s));
  }
  return from_indices(std::move(labels), simplices);
}

std::size_t SimplicialComplex::count(int dim) const {
  if (dim < 0 || dim > dimension()) return 0;
  return by_dim_[static_cast<std::size_t>(dim)].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const {
  static const std::vector<Simplex> none;
  if (dim < 0 || dim > dimension()) return none;
  return by_dim_[static_cast<std::size_t>(dim)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > by_dim_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d) {
    std::set<Simplex> covered;
    for (const auto& up : simplices(d + 1)) {
      for (std::size_t i = 0; i < up.size(); ++i) {
        Simplex face = up;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        covered.insert(std::move(face));
      }
    }
    for (const auto& s : simplices(d)) {
      if (!covered.count(s)) out.push_back(s);
    }
  }
  return out;
}

std::size_t SimplicialComplex::label_index(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown vertex '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

MatrixQ boundary_matrix(const SimplicialComplex& s, int dim) {
  MatrixQ d(s.count(dim - 1), s.count(dim));
  if (dim <= 0) return d;
  const auto& cols = s.simplices(dim);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (std::size_t i = 0; i < cols[c].size(); ++i) {
      Simplex face = cols[c];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
      d.set(*s.index_of(face), c, i % 2 == 0 ? 1 : -1);
    }
  }
  return d;
}

ChainComplex chain_complex_of(const SimplicialComplex& s) {
  GradedVS spaces;
  std::map<int, MatrixQ> d;
  for (int j = 0; j <= s.dimension(); ++j) {
    spaces.set(j, s.count(j));
    if (j > 0) d.emplace(j, boundary_matrix(s, j));
  }
  return ChainComplex(std::move(spaces), std::move(d));
}

std::size_t StratifiedComplex::sigma_vertices(const Simplex& s) const {
  std::size_t n = 0;
  for (std::size_t v : s) n += in_sigma[v] ? 1 : 0;
  return n;
}

StratifiedComplex make_stratified(SimplicialComplex complex, const std::vector<std::string>& sigma,
                                  int codim) {
  if (codim < 1) throw ContractError("codimension of the singular set must be >= 1");
  StratifiedComplex out;
  out.in_sigma.assign(complex.vertex_count(), false);
  for (const auto& label : sigma) out.in_sigma[complex.label_index(label)] = true;
  out.complex = std::move(complex);
  out.codim = codim;
  return out;
}

}  // namespace strathom::simplicial
