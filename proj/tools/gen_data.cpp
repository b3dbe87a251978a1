// Writes the bundled triangulations into a data directory.

#include "fixtures.hpp"
#include "strathom/io.hpp"

#include <fstream>
#include <iostream>

using namespace strathom;
using namespace strathom::simplicial;

namespace {

void write(const std::filesystem::path& path, const io::Json& j) {
  std::ofstream out(path);
  out << j.dump(1) << "\n";
  std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "data";
  std::filesystem::create_directories(dir);

  StratifiedComplex cone_torus = cone(testing::torus7());
  write(dir / "cone_torus.json", io::simplicial_to_json(cone_torus.complex, {"apex"}));

  // The bundled orientation makes the cup square of the generator positive.
  const SimplicialComplex cp2 = testing::cp2_9();
  const OrientedPseudomanifold m = make_oriented(cp2);
  std::vector<int> orientation = m.orientation;
  if (qlinalg::signature_sym(cup_pairing(m, 2).matrix).signature() < 0) {
    for (int& o : orientation) o = -o;
  }
  write(dir / "cp2_9.json", io::simplicial_to_json(cp2, {}, orientation));

  const SimplicialComplex ball_removed = testing::cp2_minus_simplex();
  std::vector<int> rest(orientation.begin() + 1, orientation.end());
  write(dir / "cp2_minus_ball.json", io::simplicial_to_json(ball_removed, {}, rest));

  const SimplicialComplex prism =
      product(product(testing::interval(), testing::hollow_triangle()), testing::torus7());
  write(dir / "i_s1_t2.json", io::simplicial_to_json(prism));
  return 0;
}
