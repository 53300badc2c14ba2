#pragma once

#include <gtest/gtest.h>

#include "orelim/error.hpp"
#include "orelim/field.hpp"
#include "orelim/ore_poly.hpp"

namespace orelim::test {

// GF(4) = GF(2)[t]/(t^2 + t + 1); w is the class of t.
struct Gf4 {
  FieldPtr k = FieldCtx::create(2, 2);
  Automorphism id{k, 0};
  Automorphism frob{k, 1};
  FieldElem zero{0}, one{1}, w{2}, w1{3};  // w1 = w + 1

  OrePoly poly(const Automorphism& s, std::vector<FieldElem> c) const {
    return OrePoly(s, std::move(c));
  }
  OrePoly x() const { return OrePoly::monomial(frob, one, 1); }
};

}  // namespace orelim::test

#define EXPECT_CODE(stmt, expected)                               \
  do {                                                            \
    try {                                                         \
      stmt;                                                       \
      ADD_FAILURE() << "no error thrown by " #stmt;               \
    } catch (const ::orelim::Error& e) {                          \
      EXPECT_EQ(e.code(), (expected)) << e.what();                \
    }                                                             \
  } while (0)
