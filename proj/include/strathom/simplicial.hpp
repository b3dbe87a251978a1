#pragma once

// Finite simplicial complexes, their chain complexes, standard constructions,
// a brute-force intersection homology oracle and cup-product pairings.

#include "strathom/chains.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace strathom::simplicial {

using chains::ChainComplex;
using chains::GradedVS;
using qlinalg::MatrixQ;

/// Sorted, duplicate-free vertex indices.
using Simplex = std::vector<std::size_t>;

/// Face-closed set of simplices on labelled vertices. The vertex order is
/// the order of the label list; it fixes all orientation signs.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closes `top` under faces. Throws InputError on unknown or repeated labels.
  static SimplicialComplex from_labels(std::vector<std::string> labels,
                                       const std::vector<std::vector<std::string>>& top);
  /// Same, with simplices given as vertex indices.
  static SimplicialComplex from_indices(std::vector<std::string> labels,
                                        const std::vector<Simplex>& top);

  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t vertex_count() const { return labels_.size(); }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int dim) const;
  /// Simplices of one dimension in lexicographic order.
  const std::vector<Simplex>& simplices(int dim) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  /// Simplices that are not a proper face of another simplex.
  std::vector<Simplex> maximal_simplices() const;
  std::size_t label_index(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

/// Boundary matrix d_dim with the usual alternating signs.
MatrixQ boundary_matrix(const SimplicialComplex& s, int dim);
ChainComplex chain_complex_of(const SimplicialComplex& s);

/// Complex with a singular set: the full subcomplex spanned by `sigma`.
struct StratifiedComplex {
  SimplicialComplex complex;
  std::vector<bool> in_sigma;  // one flag per vertex
  int codim = 1;

  /// Number of vertices of s lying in the singular set.
  std::size_t sigma_vertices(const Simplex& s) const;
};

StratifiedComplex make_stratified(SimplicialComplex complex, const std::vector<std::string>& sigma,
                                  int codim);

/// Closed cone with a new apex; sigma = {apex}, codim = dim s + 1.
StratifiedComplex cone(const SimplicialComplex& s);
/// Join with two apexes; sigma = both apexes, codim = dim s + 1.
StratifiedComplex suspension(const SimplicialComplex& s);

SimplicialComplex barycentric_subdivide(const SimplicialComplex& s);
/// Subdivides the complex; the new singular set is the subdivision of the old.
StratifiedComplex barycentric_subdivide(const StratifiedComplex& s);

/// Staircase triangulation of the product; vertices are pairs ordered
/// lexicographically and labelled "a*b".
SimplicialComplex product(const SimplicialComplex& a, const SimplicialComplex& b);

/// Intersection homology of simplicial chains for perversity value p at
/// the codimension of the singular set. An i-simplex is allowable when it
/// misses the singular set or its singular face has dimension
/// <= i - codim + p. Simplices inside the singular set are zero chains, so
/// the differential drops faces lying there.
GradedVS ih_direct(const StratifiedComplex& s, int p);

/// Pure n-dimensional complex with a boundary subcomplex and coherent signs
/// on its top simplices.
struct OrientedPseudomanifold {
  SimplicialComplex complex;
  std::vector<Simplex> boundary_facets;  // (n-1)-simplices with one coface
  std::vector<int> orientation;          // +-1 per top simplex, in complex order
  std::set<Simplex> boundary_closure;    // every face of a boundary facet

  int dimension() const { return complex.dimension(); }
  bool in_boundary(const Simplex& s) const { return boundary_closure.count(s) > 0; }
};

/// Validates the pseudomanifold conditions. The boundary is derived from the
/// faces with a single coface when absent and checked against them when
/// given; the orientation is propagated from the first top simplex of each
/// component when absent and checked for coherence when given. Throws
/// ContractError on any violation.
OrientedPseudomanifold make_oriented(SimplicialComplex complex,
                                     std::optional<std::vector<Simplex>> boundary = std::nullopt,
                                     std::optional<std::vector<int>> orientation = std::nullopt);

struct PairingData {
  std::size_t degree = 0;
  MatrixQ matrix;
  std::string basis_note;
};

/// Cup-product pairing on middle-degree relative cohomology: entry (a, b) is
/// <a cup b, [M, dM]> with b mapped to absolute cohomology, using ordered
/// front and back faces. Requires 2 * degree = dim M.
PairingData cup_pairing(const OrientedPseudomanifold& m, std::size_t degree);

}  // namespace strathom::simplicial
