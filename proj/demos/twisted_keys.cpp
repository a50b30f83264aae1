// Extended twisted products and the Hopf pairing over Q(v) for A2 over F_2.

#include <iostream>

#include "hallalg/twisted.hpp"

using namespace hallalg;

int main() {
  auto dc = std::make_shared<DerivedCategory>(std::make_shared<Catalog>(Quiver::type_a(2), 2));
  TwistedExt et(std::make_shared<DerivedHall>(dc));
  auto show = [&](const EtElt& e) {
    for (const auto& [k, c] : e) std::cout << " + (" << c << ") K" << et.to_string(k.k) << " " << dc->to_string(k.x);
    std::cout << "\n";
  };
  EtElt a = et.basis({0, 0}, dc->parse("I[2,2]")), b = et.basis({1, 0}, dc->parse("I[1,1]"));
  std::cout << "plus side:";
  show(et.mul(a, b, EtSide::plus));
  std::cout << "minus side:";
  show(et.mul(a, b, EtSide::minus));
  EtElt c = et.basis({0, 1}, dc->parse("I[1,2]"));
  auto [lhs, rhs] = et.pairing_identity_sides(c, a, et.basis({0, 1}, dc->parse("I[1,1]")));
  std::cout << "(a, bc) = " << lhs << ", (delta a, b (x) c) = " << rhs << "\n";
}
