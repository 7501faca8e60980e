#include "trimod/fixtures.hpp"

namespace trimod {

BasePtr make_base(BialgebraFD b) { return std::make_shared<const BialgebraFD>(std::move(b)); }

MonoidTable example_monoid() { return {{0, 1}, {1, 1}}; }

std::vector<LeftComoduleFD> comodule_pool(const BasePtr& base) {
  std::vector<LeftComoduleFD> pool;
  pool.push_back(trivial_left(base));
  pool.push_back(regular_left(base));
  LinearMap unit = base->unit;
  for (std::size_t z = 0; z < base->dim; ++z) {
    if (is_grouplike(*base, z) && !unit.at(z, 0).is_one()) pool.push_back(simple_graded_comodule(base, z));
  }
  if (base->basis == std::vector<std::string>{"1", "g", "x", "gx"}) {
    LinearMap span = LinearMap::from_ints(base->field, 4, 2, {1, 0, 0, 0, 0, 1, 0, 0});
    pool.push_back(subcomodule(regular_left(base), Subspace::span(span), "span{1,x}"));
  }
  return pool;
}

BaseFixture fixture_base(const std::string& name, Field f) {
  BialgebraFD b;
  if (name == "k") {
    b = trivial_bialgebra(f);
  } else if (name == "k[Z/2]") {
    b = monoid_bialgebra(f, {{0, 1}, {1, 0}}, {"e", "g"});
  } else if (name == "k[S]") {
    b = monoid_bialgebra(f, example_monoid(), {"e", "s"});
  } else if (name == "H4") {
    b = sweedler_h4(f);
  } else {
    throw Error("unknown-fixture", name);
  }
  BaseFixture out;
  out.name = name;
  out.base = make_base(std::move(b));
  out.characteristic_zero = f.is_rational();
  out.pool = comodule_pool(out.base);
  return out;
}

std::vector<BaseFixture> fixture_bases(Field f) {
  std::vector<BaseFixture> out;
  for (const char* name : {"k", "k[Z/2]", "k[S]", "H4"}) out.push_back(fixture_base(name, f));
  return out;
}

}  // namespace trimod
