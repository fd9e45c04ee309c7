#pragma once

#include "aztec/model.hpp"

namespace fixtures {

inline aztec::WeightSpec uniform() { return aztec::make_spec(1, {1.0}, {1.0}); }
inline aztec::WeightSpec fig2x3() {
  return aztec::make_spec(3, {1.0 / 0.3, 0.3, 1.0}, {1.0, 1.0, 1.0});
}
inline aztec::WeightSpec two_periodic() { return aztec::make_spec(2, {0.5, 2.0}, {1.0, 1.0}); }

} // namespace fixtures
