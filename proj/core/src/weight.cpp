#include "d43/weight.hpp"

#include <sstream>
#include <stdexcept>

namespace d43 {

namespace {

void check_node(int i) {
  if (i < 0 || i > 2) throw std::invalid_argument("node index must be 0, 1 or 2");
}

constexpr long kCartan[3][3] = {{2, -1, 0}, {-1, 2, -3}, {0, -1, 2}};

}  // namespace

long ClWeight::pair(int i) const {
  check_node(i);
  return i == 0 ? m0 : i == 1 ? m1 : m2;
}

std::string ClWeight::str() const {
  std::ostringstream os;
  os << "(" << m0 << "," << m1 << "," << m2 << ")";
  return os.str();
}

ClWeight fundamental_weight(int i) {
  check_node(i);
  ClWeight w;
  (i == 0 ? w.m0 : i == 1 ? w.m1 : w.m2) = 1;
  return w;
}

long cartan(int i, int j) {
  check_node(i);
  check_node(j);
  return kCartan[i][j];
}

ClWeight simple_root(int j) {
  check_node(j);
  return {kCartan[0][j], kCartan[1][j], kCartan[2][j]};
}

}  // namespace d43
