#pragma once

// JSON readers and writers for spaces, triangulations and pairings.
// Every schema violation raises InputError naming the offending field.

#include "json.hpp"
#include "strathom/simplicial.hpp"
#include "strathom/stratified.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace strathom::io {

using Json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path);
Json parse_json(const std::string& text, const std::string& source);
Json load_json(const std::filesystem::path& path);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

struct SimplicialInput {
  simplicial::SimplicialComplex complex;
  std::vector<std::string> sigma;
  std::optional<int> codim;
  std::optional<std::vector<simplicial::Simplex>> boundary;
  std::optional<std::vector<int>> orientation;
};

/// { "vertices", "top_simplices", "sigma"?, "codim"?, "boundary"?, "orientation"? }
SimplicialInput parse_simplicial(const Json& j);
/// Codimension defaults to dim(complex) - dim(sigma subcomplex).
simplicial::StratifiedComplex to_stratified(const SimplicialInput& in);
simplicial::OrientedPseudomanifold to_oriented(const SimplicialInput& in);
Json simplicial_to_json(const simplicial::SimplicialComplex& s,
                        const std::vector<std::string>& sigma = {},
                        const std::optional<std::vector<int>>& orientation = std::nullopt);

/// Kinds "algebraic", "suspension_product" and "isolated_cone". File
/// references inside are resolved relative to `base`.
stratified::TwoStrataSpace parse_space(const Json& j, const std::filesystem::path& base = {});
/// Algebraic form; parse_space(space_to_json(x)) == x.
Json space_to_json(const stratified::TwoStrataSpace& space);

/// { "degree", "matrix" }, or a triangulation (inline or "triangulation":
/// path) whose cup pairing is taken in `degree` (default: half the dimension).
simplicial::PairingData parse_pairing(const Json& j, const std::filesystem::path& base = {},
                                      std::optional<std::size_t> degree = std::nullopt);

qlinalg::Rational parse_entry(const Json& j, const std::string& field);
qlinalg::MatrixQ parse_matrix(const Json& j, const std::string& field);
Json matrix_to_json(const qlinalg::MatrixQ& m);
Json dims_to_json(const chains::GradedVS& v, int lo, int hi);

}  // namespace strathom::io
