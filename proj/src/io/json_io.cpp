#include "strathom/io.hpp"

#include "strathom/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace strathom::io {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw InputError("field '" + field + "': " + what);
}

const Json& require(const Json& j, const std::string& key, const std::string& prefix = {}) {
  if (!j.is_object()) fail(prefix.empty() ? "<root>" : prefix, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(prefix + key, "missing");
  return *it;
}

int as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& field) {
  if (!j.is_string()) fail(field, "expected a string");
  return j.get<std::string>();
}

chains::GradedVS parse_betti(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected an array of Betti numbers");
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer() || j[i].get<long>() < 0) {
      fail(field + "[" + std::to_string(i) + "]", "expected a non-negative integer");
    }
    v.push_back(j[i].get<std::size_t>());
  }
  return chains::GradedVS::from_vector(v);
}

std::map<int, qlinalg::MatrixQ> parse_blocks(const Json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object keyed by degree");
  std::map<int, qlinalg::MatrixQ> out;
  for (const auto& [key, value] : j.items()) {
    int degree = 0;
    try {
      std::size_t used = 0;
      degree = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      fail(field + "." + key, "degree keys must be integers");
    }
    out.emplace(degree, parse_matrix(value, field + "." + key));
  }
  return out;
}

// Homology and dimension of a factor given as Betti numbers, an inline
// triangulation or a path to one.
struct Factor {
  chains::GradedVS betti;
  int dim = 0;
};

Factor parse_factor(const Json& j, const std::string& field, const std::filesystem::path& base,
                    const Json& parent, const std::string& dim_key) {
  Factor f;
  if (j.is_array()) {
    f.betti = parse_betti(j, field);
    f.dim = static_cast<int>(j.size()) - 1;
  } else {
    Json tri = j;
    if (j.is_string()) tri = load_json(base / j.get<std::string>());
    if (!tri.is_object()) fail(field, "expected Betti numbers, a triangulation or a file name");
    SimplicialInput in = parse_simplicial(tri);
    f.betti = chains::homology(simplicial::chain_complex_of(in.complex));
    f.dim = in.complex.dimension();
  }
  if (auto it = parent.find(dim_key); it != parent.end()) f.dim = as_int(*it, dim_key);
  if (f.betti.empty()) fail(field, "empty factor");
  return f;
}

std::vector<simplicial::Simplex> parse_simplices(const Json& j, const std::string& field,
                                                 const simplicial::SimplicialComplex& k) {
  if (!j.is_array()) fail(field, "expected an array of simplices");
  std::vector<simplicial::Simplex> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string f = field + "[" + std::to_string(i) + "]";
    if (!j[i].is_array()) fail(f, "expected an array of vertex labels");
    simplicial::Simplex s;
    for (const auto& v : j[i]) {
      const std::string label = as_string(v, f);
      const auto& ls = k.labels();
      auto it = std::find(ls.begin(), ls.end(), label);
      if (it == ls.end()) fail(f, "unknown vertex '" + label + "'");
      s.push_back(static_cast<std::size_t>(it - ls.begin()));
    }
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON in '" + source + "': " + e.what());
  }
}

Json load_json(const std::filesystem::path& path) {
  return parse_json(read_file(path), path.string());
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

qlinalg::Rational parse_entry(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return qlinalg::Rational(j.get<long>());
  if (!j.is_string()) fail(field, "expected a rational string such as \"3/2\"");
  try {
    return qlinalg::parse_rational(j.get<std::string>());
  } catch (const InputError& e) {
    fail(field, e.what());
  }
}

qlinalg::MatrixQ parse_matrix(const Json& j, const std::string& field) {
  if (!j.is_array()) fail(field, "expected a row-major array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? (j[0].is_array() ? j[0].size() : 0) : 0;
  qlinalg::MatrixQ m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rf = field + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) fail(rf, "expected a row");
    if (j[r].size() != cols) fail(rf, "row length " + std::to_string(j[r].size()) +
                                          " differs from " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) {
      m.set(r, c, parse_entry(j[r][c], rf + "[" + std::to_string(c) + "]"));
    }
  }
  return m;
}

Json matrix_to_json(const qlinalg::MatrixQ& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_dense()) {
    Json row = Json::array();
    for (const auto& x : r) row.push_back(qlinalg::to_string(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json dims_to_json(const chains::GradedVS& v, int lo, int hi) {
  Json out = Json::array();
  for (int j = lo; j <= hi; ++j) out.push_back(v[j]);
  return out;
}

SimplicialInput parse_simplicial(const Json& j) {
  SimplicialInput in;
  const Json& vertices = require(j, "vertices");
  if (!vertices.is_array()) fail("vertices", "expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    labels.push_back(as_string(vertices[i], "vertices[" + std::to_string(i) + "]"));
  }
  const Json& top = require(j, "top_simplices");
  if (!top.is_array()) fail("top_simplices", "expected an array of simplices");
  std::vector<std::vector<std::string>> simplices;
  for (std::size_t i = 0; i < top.size(); ++i) {
    const std::string f = "top_simplices[" + std::to_string(i) + "]";
    if (!top[i].is_array()) fail(f, "expected an array of vertex labels");
    std::vector<std::string> s;
    for (const auto& v : top[i]) {
      s.push_back(as_string(v, f));
      if (std::find(labels.begin(), labels.end(), s.back()) == labels.end()) {
        fail(f, "unknown vertex '" + s.back() + "'");
      }
    }
    simplices.push_back(std::move(s));
  }
  try {
    in.complex = simplicial::SimplicialComplex::from_labels(labels, simplices);
  } catch (const InputError& e) {
    fail("top_simplices", e.what());
  }
  if (auto it = j.find("sigma"); it != j.end()) {
    if (!it->is_array()) fail("sigma", "expected an array of labels");
    for (std::size_t i = 0; i < it->size(); ++i) {
      in.sigma.push_back(as_string((*it)[i], "sigma[" + std::to_string(i) + "]"));
    }
  }
  if (auto it = j.find("codim"); it != j.end()) in.codim = as_int(*it, "codim");
  if (auto it = j.find("boundary"); it != j.end()) {
    in.boundary = parse_simplices(*it, "boundary", in.complex);
  }
  if (auto it = j.find("orientation"); it != j.end()) {
    if (!it->is_array()) fail("orientation", "expected an array of +1/-1");
    std::vector<int> o;
    for (std::size_t i = 0; i < it->size(); ++i) {
      const int x = as_int((*it)[i], "orientation[" + std::to_string(i) + "]");
      if (x != 1 && x != -1) fail("orientation[" + std::to_string(i) + "]", "must be +1 or -1");
      o.push_back(x);
    }
    in.orientation = std::move(o);
  }
  return in;
}

simplicial::StratifiedComplex to_stratified(const SimplicialInput& in) {
  int codim = in.codim.value_or(0);
  if (!in.codim) {
    simplicial::StratifiedComplex probe;
    try {
      probe = simplicial::make_stratified(in.complex, in.sigma, 1);
    } catch (const InputError& e) {
      fail("sigma", e.what());
    }
    int sigma_dim = -1;
    for (int d = 0; d <= in.complex.dimension(); ++d) {
      for (const auto& s : in.complex.simplices(d)) {
        if (probe.sigma_vertices(s) == s.size()) sigma_dim = d;
      }
    }
    codim = sigma_dim < 0 ? 1 : in.complex.dimension() - sigma_dim;
  }
  try {
    return simplicial::make_stratified(in.complex, in.sigma, codim);
  } catch (const InputError& e) {
    fail("sigma", e.what());
  }
}

simplicial::OrientedPseudomanifold to_oriented(const SimplicialInput& in) {
  return simplicial::make_oriented(in.complex, in.boundary, in.orientation);
}

Json simplicial_to_json(const simplicial::SimplicialComplex& s, const std::vector<std::string>& sigma,
                        const std::optional<std::vector<int>>& orientation) {
  Json j;
  j["vertices"] = s.labels();
  Json top = Json::array();
  std::vector<simplicial::Simplex> facets = s.maximal_simplices();
  for (const auto& f : facets) {
    Json t = Json::array();
    for (std::size_t v : f) t.push_back(s.labels()[v]);
    top.push_back(std::move(t));
  }
  j["top_simplices"] = std::move(top);
  if (!sigma.empty()) j["sigma"] = sigma;
  if (orientation) j["orientation"] = *orientation;
  return j;
}

stratified::TwoStrataSpace parse_space(const Json& j, const std::filesystem::path& base) {
  const std::string kind = as_string(require(j, "kind"), "kind");
  std::string label;
  if (auto it = j.find("label"); it != j.end()) label = as_string(*it, "label");
  std::optional<bool> oriented;
  if (auto it = j.find("closed_oriented"); it != j.end()) {
    if (!it->is_boolean()) fail("closed_oriented", "expected true or false");
    oriented = it->get<bool>();
  }

  try {
    if (kind == "algebraic") {
      const int l = as_int(require(j, "l"), "l");
      const int s = as_int(require(j, "s"), "s");
      if (auto it = j.find("n"); it != j.end() && as_int(*it, "n") != l + s + 1) {
        fail("n", "must equal l + s + 1 = " + std::to_string(l + s + 1));
      }
      auto hL = parse_betti(require(j, "link_betti"), "link_betti");
      auto hS = parse_betti(require(j, "sigma_betti"), "sigma_betti");
      auto hM = parse_betti(require(j, "m_betti"), "m_betti");
      auto beta = parse_blocks(require(j, "beta_T"), "beta_T");
      return stratified::algebraic_space(l, s, hL, hS, hM, beta, oriented.value_or(false), label);
    }
    if (kind == "suspension_product") {
      Factor link = parse_factor(require(j, "link"), "link", base, j, "link_dim");
      Factor sigma = parse_factor(require(j, "sigma"), "sigma", base, j, "sigma_dim");
      auto x = stratified::suspension_product(link.betti, link.dim, sigma.betti, sigma.dim, label);
      if (oriented) x.closed_oriented = *oriented;
      return x;
    }
    if (kind == "isolated_cone") {
      Factor link = parse_factor(require(j, "link"), "link", base, j, "link_dim");
      auto hM = parse_betti(require(j, "m_betti"), "m_betti");
      auto beta = parse_blocks(require(j, "beta_T"), "beta_T");
      return stratified::isolated_cone(link.betti, link.dim, hM, beta, oriented.value_or(true),
                                       label);
    }
  } catch (const ContractError& e) {
    // Validation failures name the field in their message.
    throw InputError(std::string("invalid space: ") + e.what());
  }
  fail("kind", "unknown kind '" + kind + "' (expected algebraic, suspension_product or isolated_cone)");
}

Json space_to_json(const stratified::TwoStrataSpace& space) {
  Json j;
  j["kind"] = "algebraic";
  if (!space.label.empty()) j["label"] = space.label;
  j["n"] = space.n;
  j["l"] = space.l;
  j["s"] = space.s;
  j["link_betti"] = dims_to_json(space.hL, 0, space.hL.max_degree());
  j["sigma_betti"] = dims_to_json(space.hSigma, 0, space.hSigma.max_degree());
  j["m_betti"] = dims_to_json(space.hM, 0, space.hM.max_degree());
  Json beta = Json::object();
  for (const auto& [d, m] : space.betaT.blocks()) beta[std::to_string(d)] = matrix_to_json(m);
  j["beta_T"] = std::move(beta);
  j["closed_oriented"] = space.closed_oriented;
  return j;
}

simplicial::PairingData parse_pairing(const Json& j, const std::filesystem::path& base,
                                      std::optional<std::size_t> degree) {
  if (j.is_object() && j.contains("matrix")) {
    simplicial::PairingData p;
    const int d = as_int(require(j, "degree"), "degree");
    if (d < 0) fail("degree", "must be non-negative");
    p.degree = static_cast<std::size_t>(d);
    p.matrix = parse_matrix(j["matrix"], "matrix");
    if (p.matrix.rows() != p.matrix.cols()) fail("matrix", "must be square");
    p.basis_note = "given matrix";
    return p;
  }
  Json tri = j;
  if (j.is_object() && j.contains("triangulation")) {
    if (j.contains("degree")) degree = static_cast<std::size_t>(as_int(j["degree"], "degree"));
    const Json& t = j["triangulation"];
    tri = t.is_string() ? load_json(base / t.get<std::string>()) : t;
  }
  SimplicialInput in = parse_simplicial(tri);
  const simplicial::OrientedPseudomanifold m = to_oriented(in);
  const std::size_t d = degree.value_or(static_cast<std::size_t>(m.dimension() / 2));
  return simplicial::cup_pairing(m, d);
}

}  // namespace strathom::io
