#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reduktor/ideal_ops.hpp"
#include "reduktor/parse.hpp"

using namespace reduktor;

using FP = PrimeField;

static Ring<FP> ring3(std::uint64_t p = 32003) {
  return make_ring(FP(p), {"x", "y", "z"});
}

static Ideal<FP> ideal_of(const Ring<FP>& R,
                          std::initializer_list<const char*> gens) {
  std::vector<Polynomial<FP>> v;
  for (const char* s : gens) v.push_back(parse_polynomial(R, s));
  return make_ideal(R, std::move(v));
}

TEST_CASE("normal form, lex") {
  auto R = ring3();
  auto I = ideal_of(R, {"x^2", "x*z + y^2"});
  // NF(xz) = -y^2: single reduction step by the second generator
  auto nf = normal_form(I, parse_polynomial(R, "x*z"), MonomialOrder::lex());
  CHECK(nf == parse_polynomial(R, "-y^2"));
  // members reduce to zero; normal form is linear over the field
  auto f = parse_polynomial(R, "x^2*y + (x*z + y^2)*z");
  CHECK(normal_form(I, f, MonomialOrder::lex()) ==
        normal_form(I, parse_polynomial(R, "(x*z + y^2)*z"),
                    MonomialOrder::lex()));
}

TEST_CASE("reduced basis properties") {
  auto R = ring3();
  auto I = ideal_of(R, {"x^2", "x*z + y^2"});
  for (auto order : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
    const auto& basis = groebner_basis(I, order);
    CHECK(is_groebner_basis(R, basis, order));
    // reduced: monic, and no term of g_i divisible by LT(g_j), j != i
    for (const auto& g : basis) {
      CHECK(g.leading_coeff() == 1);
      for (const auto& h : basis) {
        if (&g == &h) continue;
        for (const auto& t : g.terms())
          CHECK_FALSE(h.leading_monomial().divides(t.mono));
      }
    }
    // generators lie in the span
    for (const auto& g : I.generators())
      CHECK(normal_form(R, g, basis, order).is_zero());
  }
  // lex basis of this ideal: x^2, xz + y^2, xy^2 - ..., y^4 ...
  const auto& lexb = groebner_basis(I, MonomialOrder::lex());
  std::vector<Monomial> lts;
  for (const auto& g : lexb) lts.push_back(g.leading_monomial());
  std::vector<Monomial> expect = {Monomial({2, 0, 0}), Monomial({1, 0, 1}),
                                  Monomial({1, 2, 0}), Monomial({0, 4, 0})};
  REQUIRE(lts.size() == 4);
  for (const auto& e : expect) {
    bool found = false;
    for (const auto& l : lts)
      if (l == e) found = true;
    CHECK(found);
  }
}

TEST_CASE("basis cache is per order and stable") {
  auto R = ring3();
  auto I = ideal_of(R, {"x^2 - y*z", "y^3"});
  const auto& b1 = groebner_basis(I, MonomialOrder::grevlex());
  const auto& b2 = groebner_basis(I, MonomialOrder::grevlex());
  CHECK(&b1 == &b2);  // cached object
  const auto& bl = groebner_basis(I, MonomialOrder::lex());
  CHECK(is_groebner_basis(R, bl, MonomialOrder::lex()));
}

TEST_CASE("elimination") {
  auto R = make_ring(FP(32003), std::vector<std::string>{"t", "x", "y"});
  SUBCASE("twisted line: keep x,y") {
    auto I = ideal_of(R, {"t*x", "(1 - t)*y"});
    auto E = eliminate(I, {1, 2});
    REQUIRE(E.generators().size() == 1);
    CHECK(E.generators()[0] == parse_polynomial(R, "x*y"));
  }
  SUBCASE("unit-like elimination is empty") {
    auto I = ideal_of(R, {"t*x - 1"});
    auto E = eliminate(I, {1, 2});
    CHECK(E.generators().empty());
  }
  SUBCASE("membership soundness on random combinations") {
    auto I = ideal_of(R, {"t^2 - x", "t^3 - y"});
    auto E = eliminate(I, {1, 2});
    CHECK_FALSE(E.generators().empty());
    for (const auto& g : E.generators()) {
      for (const auto& term : g.terms()) CHECK(term.mono[0] == 0);
      CHECK(contains(I, g));
    }
    // x^3 = y^2 on the cuspidal cubic
    CHECK(contains(E, parse_polynomial(R, "x^3 - y^2")));
  }
}

TEST_CASE("colon and saturation") {
  auto R = ring3();
  SUBCASE("monomial colon") {
    auto I = ideal_of(R, {"x^2*y", "x*z^2"});
    auto C = colon(I, parse_polynomial(R, "x"));
    CHECK(equal_ideals(C, ideal_of(R, {"x*y", "z^2"})));
  }
  SUBCASE("saturation removes the embedded component") {
    auto I = ideal_of(R, {"x^2", "x*y"});
    auto S = saturate(I, parse_polynomial(R, "y"));
    CHECK(equal_ideals(S, ideal_of(R, {"x"})));
    // idempotent
    CHECK(equal_ideals(saturate(S, parse_polynomial(R, "y")), S));
  }
  SUBCASE("colon stabilizes to the saturation") {
    auto I = ideal_of(R, {"x^3", "x^2*y"});
    auto f = parse_polynomial(R, "y");
    auto S = saturate(I, f);
    Ideal<FP> C = I;
    for (int i = 0; i < 5; ++i) C = colon(C, f);
    CHECK(equal_ideals(C, S));
    CHECK(contains_ideal(S, I));
  }
}

TEST_CASE("intersection") {
  auto R = ring3();
  auto A = ideal_of(R, {"x"});
  auto B = ideal_of(R, {"y"});
  CHECK(equal_ideals(intersect(A, B), ideal_of(R, {"x*y"})));
  auto I = ideal_of(R, {"x^2", "y"});
  auto J = ideal_of(R, {"x", "z"});
  auto M = intersect(I, J);
  // contained in both, and contains the product
  CHECK(contains_ideal(I, M));
  CHECK(contains_ideal(J, M));
  CHECK(contains_ideal(M, ideal_product(I, J)));
}

TEST_CASE("radical membership") {
  auto R = ring3();
  auto I = ideal_of(R, {"x^2", "y^3"});
  CHECK(radical_member(parse_polynomial(R, "x"), I));
  CHECK(radical_member(parse_polynomial(R, "x + y"), I));
  CHECK(radical_member(parse_polynomial(R, "x*y"), I));
  CHECK_FALSE(radical_member(parse_polynomial(R, "z"), I));
  CHECK_FALSE(radical_member(parse_polynomial(R, "x + z"), I));
  CHECK(radical_member(poly_zero(R, MonomialOrder::grevlex()), I));
  // u2*u3 is not in rad(u1*u2*u3); u1*u2*u3 is in rad(u2*u3)
  auto U = make_ring(FP(32003), std::vector<std::string>{"u1", "u2", "u3"});
  auto J123 = make_ideal(U, {parse_polynomial(U, "u1*u2*u3")});
  auto J23 = make_ideal(U, {parse_polynomial(U, "u2*u3")});
  CHECK_FALSE(radical_member(parse_polynomial(U, "u2*u3"), J123));
  CHECK(radical_member(parse_polynomial(U, "u1*u2*u3"), J23));
}

TEST_CASE("krull dimension") {
  auto R = ring3();
  CHECK(krull_dimension(ideal_of(R, {"x^2", "x*z + y^2"})) == 1);
  CHECK(krull_dimension(make_ideal(R, std::vector<Polynomial<FP>>{})) == 3);
  CHECK(krull_dimension(ideal_of(R, {"x", "y", "z"})) == 0);
  CHECK(krull_dimension(ideal_of(R, {"x*y - 1", "x"})) == -1);  // unit
  CHECK(krull_dimension(ideal_of(R, {"x*y"})) == 2);
}

TEST_CASE("krull dimension agrees with brute force over subsets") {
  // oracle: max |S| with in(I) ∩ k[S] = 0, checked by radical-free direct
  // divisibility of every initial-ideal generator
  SeededRng rng(17);
  auto R = ring3(101);
  for (int inst = 0; inst < 20; ++inst) {
    std::vector<Polynomial<FP>> gens;
    int n = 1 + (int)rng.below(3);
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(3, 0);
      int deg = 1 + (int)rng.below(3);
      for (int d = 0; d < deg; ++d) e[rng.below(3)]++;
      gens.push_back(poly_monomial(R, Monomial(e), MonomialOrder::grevlex()));
    }
    auto I = make_ideal(R, gens);
    // monomial ideal: dimension = max subset avoiding all supports
    int expect = 0;
    for (int mask = 0; mask < 8; ++mask) {
      int size = __builtin_popcount(mask);
      bool ok = true;
      for (const auto& g : gens) {
        bool inside = true;
        for (int v = 0; v < 3; ++v)
          if (g.leading_monomial()[v] > 0 && !(mask & (1 << v)))
            inside = false;
        if (inside) ok = false;
      }
      if (ok && size > expect) expect = size;
    }
    CHECK(krull_dimension(I) == expect);
  }
}

TEST_CASE("budgets raise typed resource errors") {
  auto R = ring3();
  auto I = ideal_of(R, {"x^3 - y*z^2", "y^3 - x*z^2"});
  GroebnerLimits tiny;
  tiny.max_pair_degree = 2;
  CHECK_THROWS_AS((void)groebner_basis_raw(R, I.generators(),
                                           MonomialOrder::grevlex(), tiny),
                  resource_error);
  GroebnerLimits small;
  small.max_basis = 2;
  CHECK_THROWS_AS((void)groebner_basis_raw(R, I.generators(),
                                           MonomialOrder::lex(), small),
                  resource_error);
}

TEST_CASE("rational coefficients") {
  using FQ = RationalField;
  auto R = make_ring(FQ{}, std::vector<std::string>{"x", "y"});
  auto f = parse_polynomial(R, "2*x^2 - y^2");
  auto g = parse_polynomial(R, "x*y");
  auto I = make_ideal(R, {f, g});
  const auto& basis = groebner_basis(I, MonomialOrder::grevlex());
  CHECK(is_groebner_basis(R, basis, MonomialOrder::grevlex()));
  CHECK(contains(I, poly_mul(R, f, g)));
  CHECK(krull_dimension(I) == 0);
}
