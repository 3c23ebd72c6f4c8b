#pragma once

// Hand-written reference tables. These are frozen on purpose: library
// constructors are tested against them, never the other way round.

#include "hoops/hoops.hpp"

namespace fixtures {

using hoops::Elem;
using hoops::Hoop;
using hoops::HoopData;

// two element chain, 0 < 1
inline HoopData two_chain_data() {
  return HoopData{2, 1, {0, 0, 0, 1}, {1, 1, 0, 1}, {}};
}

// three element chain with truncated addition, 0 < 1 < 2
inline HoopData three_chain_data() {
  return HoopData{3,
                  2,
                  {0, 0, 0,  //
                   0, 0, 1,  //
                   0, 1, 2},
                  {2, 2, 2,  //
                   1, 2, 2,  //
                   0, 1, 2},
                  {}};
}

// three element chain with idempotent multiplication (min)
inline HoopData godel_chain_data() {
  return HoopData{3,
                  2,
                  {0, 0, 0,  //
                   0, 1, 1,  //
                   0, 1, 2},
                  {2, 2, 2,  //
                   0, 2, 2,  //
                   0, 1, 2},
                  {}};
}

inline Hoop two_chain() { return Hoop(two_chain_data()); }
inline Hoop three_chain() { return Hoop(three_chain_data()); }
inline Hoop godel_chain() { return Hoop(godel_chain_data()); }

// the square of the two chain, pairs indexed (0,0),(1,0),(0,1),(1,1)
inline HoopData square_data() {
  return HoopData{4,
                  3,
                  {0, 0, 0, 0,  //
                   0, 1, 0, 1,  //
                   0, 0, 2, 2,  //
                   0, 1, 2, 3},
                  {3, 3, 3, 3,  //
                   2, 3, 2, 3,  //
                   1, 1, 3, 3,  //
                   0, 1, 2, 3},
                  {}};
}

inline Hoop square() { return Hoop(square_data()); }

inline std::vector<Hoop> census_through(int max_order) {
  std::vector<Hoop> out;
  for (int n = 1; n <= max_order; ++n)
    for (auto& h : hoops::enumerate_hoops(n, 8).representatives) out.push_back(h);
  return out;
}

}  // namespace fixtures
