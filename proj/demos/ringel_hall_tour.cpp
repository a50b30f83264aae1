// Ringel-Hall products and the Riedtmann-Peng identity for A2 over F_2.

#include <iostream>

#include "hallalg/ringel_hall.hpp"

using namespace hallalg;

int main() {
  auto cat = std::make_shared<Catalog>(Quiver::type_a(2), 2);
  RingelHall rh(cat);
  ModClass s1 = cat->parse("I[1,1]"), s2 = cat->parse("I[2,2]"), p1 = cat->parse("I[1,2]");

  auto show = [&](const char* name, const RingelHall::Table& t) {
    std::cout << name << " =";
    for (const auto& [l, c] : t) std::cout << " + " << c << " " << cat->to_string(l);
    std::cout << "\n";
  };
  show("u_S2 u_S1", rh.product(s2, s1));
  show("u_S1 u_S2", rh.product(s1, s2));
  show("u_S1 u_S1", rh.product(s1, s1));
  show("v_S2 * v_S1", rh.dual_product(s2, s1));

  ModClass two = s1 + s1;
  std::cout << "h = " << rh.h(s1, s1, two) << ", g = " << rh.g(s1, s1, two) << ", |Aut 2S1| = " << aut_order(*cat, two)
            << ", identity holds: " << std::boolalpha << rh.rp_check(s1, s1, two) << "\n";
  std::cout << "(S2, S1, P1) holds: " << rh.rp_check(s2, s1, p1) << "\n";
}
