// Writes the built-in models in canonical catalog form to stdout.
#include <iostream>

#include "mingenus/catalog.hpp"
#include "mingenus/fixtures.hpp"

int main() {
  const auto catalog = mingenus::fixtures::builtin_catalog();
  for (const auto& v : mingenus::validate(catalog)) std::cerr << v.to_string() << "\n";
  std::cout << mingenus::serialize_catalog(catalog);
}
