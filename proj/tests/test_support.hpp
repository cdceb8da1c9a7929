#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "eopkit/ratfunc.hpp"

namespace eop::testing {

inline Rat q(const char* text) { return Rat::parse(text); }

/// Polynomial over Q from ascending coefficient strings.
inline QPoly qpoly(std::initializer_list<const char*> ascending) {
  std::vector<Rat> c;
  for (const char* s : ascending) c.push_back(Rat::parse(s));
  return QPoly(std::move(c));
}

/// Polynomial in t over Q, embedded in Q(t).
inline RatFunc tpoly(std::initializer_list<const char*> ascending) { return RatFunc(qpoly(ascending)); }

inline const RatFunc T = RatFunc::t();

}  // namespace eop::testing
