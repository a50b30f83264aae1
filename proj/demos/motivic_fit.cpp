// Motivic structure constants fitted over several primes and checked at a held-out one.

#include <iostream>

#include "hallalg/motivic.hpp"

using namespace hallalg;

int main() {
  Motivic mot(Quiver::type_a(2));
  const DerivedCategory& dc = mot.base();
  DObj s1 = dc.parse("I[1,1]"), s2 = dc.parse("I[2,2]");
  std::cout << "fit primes:";
  for (int p : mot.fit_primes()) std::cout << " " << p;
  std::cout << ", held out: " << mot.held_out() << "\n";
  std::cout << "v_S2 * v_S1 = " << mot.to_string(mot.hall_mul(mot_basis(s2), mot_basis(s1))) << "\n";
  std::cout << "u_S2 u_S1 = " << mot.to_string(mot.t_mul(mot_basis(s2), mot_basis(s1))) << "\n";
  std::cout << "Y(Aut 2S1) = " << mot.upsilon_aut(s1 + s1).to_string() << "\n";
  // strata of Hom(S1, S2[1]) by cone; the cone E gives the term v_{E[-1]} of v_S2 * v_S1
  for (const auto& [c, cp] : mot.strata(s1, s2.shifted(1)))
    std::cout << "[Hom(S1, S2[1])_" << dc.to_string(c) << "] = " << cp.poly.to_string() << "\n";
  std::cout << "specializes at 7: " << std::boolalpha << mot.specializes(s2, s1, 7) << "\n";
}
