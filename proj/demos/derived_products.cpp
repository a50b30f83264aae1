// Derived Hall products of shifted objects and the dual constants for A2 over F_2.

#include <iostream>

#include "hallalg/derived_hall.hpp"

using namespace hallalg;

int main() {
  auto dc = std::make_shared<DerivedCategory>(std::make_shared<Catalog>(Quiver::type_a(2), 2));
  DerivedHall dh(dc);
  auto show = [&](const std::string& x, const std::string& y) {
    DObj a = dc->parse(x), b = dc->parse(y);
    std::cout << "u_" << x << " u_" << y << " =";
    for (const auto& [l, c] : dh.product(a, b)) std::cout << " + " << c << " u_" << dc->to_string(l);
    std::cout << "\n  v_" << x << " * v_" << y << " =";
    for (const auto& [l, c] : dh.dual_product(a, b)) std::cout << " + " << c << " v_" << dc->to_string(l);
    std::cout << "\n";
  };
  show("I[2,2]", "I[1,1]");
  show("I[1,1]", "I[1,1]");
  show("I[1,1]", "I[1,2][1]");
  show("I[1,2][1]", "I[1,2]");
  DObj x = dc->parse("I[1,1]+I[1,2][1]");
  std::cout << "|Aut " << dc->to_string(x) << "| = " << dc->daut_order(x) << ", t = " << dh.t(x) << "\n";
}
