#pragma once

#include <algorithm>
#include <string>

#include "doctest.h"
#include "gprime/error.hpp"
#include "gprime/instance.hpp"

namespace gprime::test {

inline std::string fixture(const std::string& name) { return std::string(GPRIME_FIXTURE_DIR) + "/" + name + ".json"; }
inline Instance load(const std::string& name) { return load_instance(fixture(name)); }

inline Elem el(const FiniteRing& r, const std::string& expr) { return r.parse(expr); }

inline std::vector<Elem> sorted_of(const FiniteRing& r, std::initializer_list<const char*> exprs) {
  std::vector<Elem> out;
  for (const char* x : exprs) out.push_back(r.parse(x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::MalformedInput;
}

}  // namespace gprime::test
