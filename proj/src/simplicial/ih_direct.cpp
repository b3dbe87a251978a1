#include "strathom/simplicial.hpp"

namespace strathom::simplicial {

namespace {

bool inside_sigma(const StratifiedComplex& s, const Simplex& x) {
  return s.sigma_vertices(x) == x.size();
}

bool allowable(const StratifiedComplex& s, const Simplex& x, int p) {
  const std::size_t n = s.sigma_vertices(x);
  if (n == 0) return true;
  const int i = static_cast<int>(x.size()) - 1;
  return static_cast<int>(n) - 1 <= i - s.codim + p;
}

struct DegreeData {
  std::size_t allowable = 0;
  std::size_t rank_full = 0;        // rank of d' on allowable chains
  std::size_t rank_disallowed = 0;  // rank of its rows at non-allowable faces
};

}  // namespace

// Simplices inside the singular set are zero chains, matching d' which
// drops them. With A_i the remaining allowable chains, d' the differential
// without singular faces and N_i the rows of d'|A_i at non-allowable
// (i-1)-simplices:
//   IC_i = ker N_i,  rank(d'|IC_i) = rank d'|A_i - rank N_i,
// because ker d'|A_i lies inside ker N_i.
GradedVS ih_direct(const StratifiedComplex& s, int p) {
  const SimplicialComplex& k = s.complex;
  const int top = k.dimension();
  std::vector<DegreeData> data(static_cast<std::size_t>(top + 2));

  for (int i = 0; i <= top; ++i) {
    std::vector<std::size_t> cols;
    const auto& simplices = k.simplices(i);
    for (std::size_t c = 0; c < simplices.size(); ++c) {
      if (!inside_sigma(s, simplices[c]) && allowable(s, simplices[c], p)) cols.push_back(c);
    }
    DegreeData& d = data[static_cast<std::size_t>(i)];
    d.allowable = cols.size();
    if (i == 0 || cols.empty()) continue;

    // Rows: (i-1)-simplices outside the singular set, split by allowability.
    const auto& faces = k.simplices(i - 1);
    std::vector<std::ptrdiff_t> row_of(faces.size(), -1);
    std::vector<bool> row_allowed;
    for (std::size_t r = 0; r < faces.size(); ++r) {
      if (inside_sigma(s, faces[r])) continue;
      row_of[r] = static_cast<std::ptrdiff_t>(row_allowed.size());
      row_allowed.push_back(allowable(s, faces[r], p));
    }
    MatrixQ full(row_allowed.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Simplex& x = simplices[cols[c]];
      for (std::size_t v = 0; v < x.size(); ++v) {
        Simplex face = x;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(v));
        const std::ptrdiff_t r = row_of[*k.index_of(face)];
        if (r >= 0) full.set(static_cast<std::size_t>(r), c, v % 2 == 0 ? 1 : -1);
      }
    }
    std::vector<std::size_t> bad_rows;
    for (std::size_t r = 0; r < row_allowed.size(); ++r) {
      if (!row_allowed[r]) bad_rows.push_back(r);
    }
    d.rank_full = qlinalg::rank(full);
    d.rank_disallowed = qlinalg::rank(full.select_rows(bad_rows));
  }

  GradedVS out;
  for (int i = 0; i <= top; ++i) {
    const DegreeData& d = data[static_cast<std::size_t>(i)];
    const DegreeData& up = data[static_cast<std::size_t>(i + 1)];
    const std::size_t ic = d.allowable - d.rank_disallowed;
    const std::size_t r_here = d.rank_full - d.rank_disallowed;
    const std::size_t r_up = up.rank_full - up.rank_disallowed;
    out.set(i, ic - r_here - r_up);
  }
  return out;
}

}  // namespace strathom::simplicial
