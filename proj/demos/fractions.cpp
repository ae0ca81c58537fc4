// Localizes Z6 at {1,3,5}, prints the fraction classes, and checks that the
// result is the two-element field.

#include <iostream>

#include "khr/khr.hpp"

int main() {
  using namespace khr;
  const Structure z6 = ring_embedding(6);
  const Localization loc = build_localization(z6, ElementSet::of({1, 3, 5}));
  std::cout << serialize(loc) << '\n' << loc.report().render();

  const auto iso = find_isomorphism(loc.ring(), ring_embedding(2));
  std::cout << (iso ? "isomorphic to Z2\n" + iso->render() : std::string("not isomorphic to Z2\n"));

  const Quotient q = build_quotient(z6, ElementSet::of({0, 3}));
  std::cout << '\n' << serialize(q);
  return iso ? 0 : 1;
}
