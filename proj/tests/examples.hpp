#pragma once

#include <string>
#include <vector>

#include "hilbertkit/ideal.hpp"

namespace ex {

inline hk::Ideal ideal(std::vector<std::string> vars, std::vector<std::string> gens, std::uint32_t p = 32003) {
  return hk::Ideal::parse(hk::make_ring(p, std::move(vars)), gens);
}

inline hk::Ideal binomial_xy() { return ideal({"x", "y"}, {"x^6", "y^6", "x^5*y + x^2*y^4"}); }
inline hk::Ideal quadrics_xyz() { return ideal({"x", "y", "z"}, {"x^2 - y^2", "y^2 - z^2", "x*y", "y*z", "x*z"}); }
inline hk::Ideal staircase_22() { return ideal({"x", "y"}, {"x^6", "y^6", "x^5*y", "x^3*y^3", "x^2*y^4", "x*y^5"}); }
inline hk::Ideal staircase_23a() { return ideal({"x", "y"}, {"x^6", "y^6", "x^5*y", "x^3*y^3", "x^2*y^4"}); }
inline hk::Ideal staircase_23b() { return ideal({"x", "y"}, {"x^6", "y^6", "x^5*y", "x^3*y^3", "x*y^5"}); }
inline hk::Ideal staircase_24() { return ideal({"x", "y"}, {"x^6", "y^6", "x^5*y", "x^2*y^4", "x*y^5"}); }
inline hk::Ideal parameter_xy() { return ideal({"x", "y"}, {"x^2", "y^2"}); }
inline hk::Ideal m_squared() { return ideal({"x", "y"}, {"x^2", "x*y", "y^2"}); }

}  // namespace ex
