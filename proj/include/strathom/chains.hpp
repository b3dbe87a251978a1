#pragma once

// Graded vector spaces, chain complexes and the homological algebra built on
// them: homology with representatives, mapping cones, tensor products and
// truncations.

#include "strathom/qlinalg.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace strathom::chains {

using qlinalg::MatrixQ;
using qlinalg::Rational;
using qlinalg::Vector;

/// Finitely supported map degree -> dimension. Zero entries are never stored,
/// so two spaces compare equal iff they agree in every degree.
class GradedVS {
 public:
  GradedVS() = default;
  explicit GradedVS(const std::map<int, std::size_t>& dims);
  /// dims[i] is placed in degree start + i.
  static GradedVS from_vector(const std::vector<std::size_t>& dims, int start = 0);

  std::size_t operator[](int degree) const;
  void set(int degree, std::size_t dim);
  const std::map<int, std::size_t>& dims() const { return dims_; }

  bool empty() const { return dims_.empty(); }
  int min_degree() const;  // 0 when empty
  int max_degree() const;  // -1 when empty
  std::size_t total() const;
  long euler_characteristic() const;

  /// Dimensions in degrees lo..hi inclusive.
  std::vector<std::size_t> to_vector(int lo, int hi) const;

  friend bool operator==(const GradedVS&, const GradedVS&) = default;

 private:
  std::map<int, std::size_t> dims_;
};

/// (a * b)_j = sum over p + q = j of a_p b_q.
GradedVS convolve(const GradedVS& a, const GradedVS& b);
/// Moves degree j to j + by.
GradedVS shift(const GradedVS& v, int by);

enum class Truncation { AtMost, AtLeast };
/// Keeps degrees <= cut (AtMost) or >= cut (AtLeast).
GradedVS truncate_graded(const GradedVS& v, Truncation mode, int cut);

/// Degree-preserving linear map; absent blocks are zero.
class GradedMap {
 public:
  GradedMap() = default;
  GradedMap(GradedVS source, GradedVS target);

  const GradedVS& source() const { return source_; }
  const GradedVS& target() const { return target_; }

  /// Throws DimensionError unless m is target[j] x source[j].
  void set_block(int degree, MatrixQ m);
  MatrixQ block(int degree) const;
  const std::map<int, MatrixQ>& blocks() const { return blocks_; }

  /// Degrees where source or target is nonzero.
  int min_degree() const;
  int max_degree() const;

  friend bool operator==(const GradedMap&, const GradedMap&) = default;

 private:
  GradedVS source_;
  GradedVS target_;
  std::map<int, MatrixQ> blocks_;
};

/// dim coker(beta_j) + dim ker(beta_{j-1}) for every degree: the third term
/// of a long exact sequence ... -> S_j -> T_j -> H_j -> S_{j-1} -> ...
GradedVS les_third_dims(const GradedMap& beta);

/// Chain complex with differentials d_j: C_j -> C_{j-1}. Construction checks
/// shapes and d_{j-1} d_j = 0.
class ChainComplex {
 public:
  ChainComplex() = default;
  ChainComplex(GradedVS spaces, std::map<int, MatrixQ> differentials);

  const GradedVS& spaces() const { return spaces_; }
  std::size_t dim(int degree) const { return spaces_[degree]; }
  /// d_j, a zero matrix of the right shape when not stored.
  MatrixQ differential(int degree) const;
  const std::map<int, MatrixQ>& differentials() const { return d_; }

  int min_degree() const { return spaces_.min_degree(); }
  int max_degree() const { return spaces_.max_degree(); }

 private:
  GradedVS spaces_;
  std::map<int, MatrixQ> d_;
};

/// Chain map; construction checks f_{j-1} d_j = d_j f_j in every degree.
class ChainMap {
 public:
  ChainMap(ChainComplex source, ChainComplex target, std::map<int, MatrixQ> blocks);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  MatrixQ block(int degree) const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::map<int, MatrixQ> blocks_;
};

ChainMap identity_map(const ChainComplex& c);

/// Homology together with representative cycles in each degree.
struct HomologyData {
  GradedVS dims;
  std::map<int, std::vector<Vector>> representatives;
  /// Columns: a basis of the boundaries followed by the representatives.
  std::map<int, MatrixQ> boundary_and_reps;

  /// Coordinates of the class of a cycle in the representative basis.
  /// Throws ContractError if z is not a cycle of this degree.
  Vector project(int degree, const Vector& cycle) const;
};

GradedVS homology(const ChainComplex& c);
HomologyData homology_with_representatives(const ChainComplex& c);

/// Cycles of `outgoing` whose classes form a basis of ker(outgoing) / im(incoming).
/// `boundaries` receives a basis of im(incoming) when non-null.
std::vector<Vector> homology_representatives(const MatrixQ& incoming, const MatrixQ& outgoing,
                                             std::vector<Vector>* boundaries = nullptr);

/// Homology with degree 0 reduced by the augmentation (sum of coefficients).
/// Throws ContractError when C_0 = 0 or the augmentation does not kill
/// boundaries.
GradedVS reduced_homology(const ChainComplex& c);

/// cone(f)_j = source_{j-1} (+) target_j with d = [[-d_s, 0], [f, d_t]].
ChainComplex mapping_cone(const ChainMap& f);

/// (a (x) b)_j ordered by b-degree ascending, then lexicographically by
/// (a-index, b-index); d = d (x) 1 + (-1)^p 1 (x) d.
ChainComplex tensor_complex(const ChainComplex& a, const ChainComplex& b);

/// Map induced on homology, in the representative bases.
GradedMap induced_on_homology(const ChainMap& f, const HomologyData& source,
                              const HomologyData& target);

}  // namespace strathom::chains
