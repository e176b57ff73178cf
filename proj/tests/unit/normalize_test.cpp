#include "doctest.h"

#include "bcint/normalize.hpp"

using bcint::normalize;

TEST_CASE("normalize folds case, trims and drops trailing parentheses") {
  CHECK(normalize("Reading ()") == "reading");
  CHECK(normalize("  First  Name ") == "first name");
  CHECK(normalize("client") == "client");
  CHECK(normalize("reading()") == "reading");
  CHECK(normalize("reading( )") == "reading");
  CHECK(normalize("Consulting ( )") == "consulting");
  CHECK(normalize("\tReader\nNumber ") == "reader number");
}

TEST_CASE("normalize removes only one trailing pair") {
  CHECK(normalize("f()()") == "f()");
  CHECK(normalize("f(x)") == "f(x)");
  CHECK(normalize("()") == "");
  CHECK(normalize("   ") == "");
}

TEST_CASE("normalize is a fixpoint on normalized terms without parentheses") {
  for (const char* s : {"first name", "reader number", "a b c", "x"}) {
    CHECK(normalize(normalize(s)) == normalize(s));
  }
}
