#pragma once

#include <string>
#include <vector>

#include "trimod/comodule.hpp"

namespace trimod {

struct BaseFixture {
  std::string name;
  BasePtr base;
  bool characteristic_zero = true;
  std::vector<LeftComoduleFD> pool;
};

BasePtr make_base(BialgebraFD b);

// The monoid S = {e, s} with s^2 = s.
MonoidTable example_monoid();

// k_triv, regular, the graded simples delta_z for grouplike z other than
// the unit, and span{1, x} for Sweedler's algebra.
std::vector<LeftComoduleFD> comodule_pool(const BasePtr& base);

// Trivial k, k[Z/2], k[S], Sweedler's 4-dim algebra, in that order.
std::vector<BaseFixture> fixture_bases(Field f = Field::rationals());
BaseFixture fixture_base(const std::string& name, Field f = Field::rationals());

}  // namespace trimod
