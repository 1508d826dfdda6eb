#include <gtest/gtest.h>

#include <random>

#include "quotlab/parse.hpp"
#include "quotlab/polynomial.hpp"
#include "quotlab/symbolic_matrix.hpp"

namespace quotlab {
namespace {

using QPoly = Polynomial<Rationals>;
using FPoly = Polynomial<PrimeField>;

RingPtr<Rationals> qring(std::vector<std::string> names) { return PolyRing<Rationals>::make(std::move(names), {}); }

TEST(PolyOp, AddCancels) {
  auto r = qring({"x", "y"});
  auto p = parse_polynomial(r, "x + y") + parse_polynomial(r, "x - y");
  EXPECT_EQ(p, parse_polynomial(r, "2*x"));
  EXPECT_EQ(p.size(), 1u);
}

TEST(PolyOp, ZeroAbsorbs) {
  auto r = qring({"x"});
  auto p = parse_polynomial(r, "x") * QPoly(r);
  EXPECT_TRUE(p.is_zero());
}

TEST(PolyOp, FrobeniusOverF2) {
  auto r = PolyRing<PrimeField>::make({"x", "y"}, PrimeField(2));
  auto s = parse_polynomial(r, "x + y");
  EXPECT_EQ(s * s, parse_polynomial(r, "x^2 + y^2"));
}

TEST(PolyOp, RingMismatchThrows) {
  auto r1 = qring({"x"});
  auto r2 = qring({"y"});
  EXPECT_THROW(parse_polynomial(r1, "x") + parse_polynomial(r2, "y"), AlgebraError);
  auto r3 = r1->with_order(MonomialOrder::lex());
  // same variable list under another order is a different context
  auto r4 = PolyRing<Rationals>::make({"x", "z"}, {}, MonomialOrder::lex());
  EXPECT_THROW(parse_polynomial(r3, "x") * parse_polynomial(r4, "z"), AlgebraError);
}

TEST(PolyOp, TermsDescendInOrder) {
  auto r = qring({"x", "y", "z"});
  auto p = parse_polynomial(r, "z^2 + x*y + y^2 + x^2 + x + 1");
  const auto& ord = r->order();
  for (std::size_t i = 1; i < p.size(); ++i) EXPECT_GT(ord.compare(p.terms()[i - 1].mono, p.terms()[i].mono), 0);
  EXPECT_EQ(p.to_string(), "x^2 + x*y + y^2 + z^2 + x + 1");
}

TEST(MonomialOrder, GrevlexLexBlock) {
  Monomial xy{1, 1, 0}, z2{0, 0, 2}, x2{2, 0, 0}, yz{0, 1, 1};
  auto g = MonomialOrder::grevlex();
  EXPECT_GT(g.compare(xy, z2), 0);   // grevlex: x*y > z^2
  EXPECT_GT(g.compare(x2, xy), 0);
  EXPECT_GT(g.compare(xy, yz), 0);
  auto l = MonomialOrder::lex();
  EXPECT_GT(l.compare(Monomial{1, 0, 0}, Monomial{0, 5, 5}), 0);
  auto b = MonomialOrder::block_elimination(1);
  EXPECT_GT(b.compare(Monomial{1, 0, 0}, Monomial{0, 3, 3}), 0);  // x dominates
  EXPECT_GT(b.compare(Monomial{0, 2, 0}, Monomial{0, 0, 1}), 0);
  EXPECT_EQ(MonomialOrder::parse("block:4"), MonomialOrder::block_elimination(4));
}

TEST(Substitute, QuadricVanishesOnChart) {
  auto r = qring({"p12", "p34", "p14", "a"});
  auto q = parse_polynomial(r, "p12*p34 - p14^2");
  Binding<Rationals> b{{"p12", QPoly::from_int(r, 1)},
                       {"p34", parse_polynomial(r, "a^2")},
                       {"p14", parse_polynomial(r, "a")}};
  EXPECT_TRUE(substitute(q, b).is_zero());
}

TEST(Substitute, EmptyBindingIsIdentity) {
  auto r = qring({"x"});
  auto x = parse_polynomial(r, "x");
  EXPECT_EQ(substitute(x, {}), x);
}

TEST(Substitute, ConstantsCancel) {
  auto r = qring({"x", "y"});
  auto p = parse_polynomial(r, "x + y");
  EXPECT_TRUE(substitute_values<Rationals>(p, {{"x", 1}, {"y", -1}}).is_zero());
  EXPECT_THROW(substitute_values<Rationals>(p, {{"w", 1}}), AlgebraError);
}

TEST(SymbolicDet, Identity) {
  auto r = qring({"x"});
  for (std::size_t n = 1; n <= 6; ++n) {
    PolyMatrix<Rationals> m(n, std::vector<QPoly>(n, QPoly(r)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = QPoly::from_int(r, 1);
    EXPECT_TRUE(symbolic_det(m).is_one());
  }
}

TEST(SymbolicDet, ToeplitzBlockTwoByTwo) {
  auto r = qring({"a_{2,0}", "a_{2,1}"});
  PolyMatrix<Rationals> m{{parse_polynomial(r, "a_{2,0}"), QPoly(r)},
                          {parse_polynomial(r, "a_{2,1}"), parse_polynomial(r, "a_{2,0}")}};
  EXPECT_EQ(symbolic_det(m), parse_polynomial(r, "a_{2,0}^2"));
}

TEST(SymbolicDet, DualNumberKernel) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto r = PolyRing<DualFp>::make({"t"}, DualFp(PrimeField(p)));
    auto diag = parse_polynomial(r, "t - eps");
    PolyMatrix<DualFp> m{{diag, Polynomial<DualFp>(r)}, {Polynomial<DualFp>(r), diag}};
    EXPECT_EQ(symbolic_det(m), parse_polynomial(r, "t^2 - 2*eps*t")) << "p=" << p;
  }
}

TEST(SymbolicDet, NonSquareThrows) {
  auto r = qring({"x"});
  PolyMatrix<Rationals> m{{QPoly(r), QPoly(r)}};
  EXPECT_THROW(symbolic_det(m), AlgebraError);
}

QPoly random_poly(const RingPtr<Rationals>& r, std::mt19937_64& rng, int terms = 3) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 2);
  std::vector<QPoly::Term> ts;
  for (int i = 0; i < terms; ++i) {
    Monomial m(r->nvars());
    for (std::size_t v = 0; v < r->nvars(); ++v) m.set(v, e(rng));
    ts.push_back({m, mpq_class(c(rng))});
  }
  return QPoly::from_terms(r, ts);
}

TEST(SymbolicDet, MultiplicativeOnRandom2x2) {
  auto r = qring({"x", "y"});
  std::mt19937_64 rng(5);
  for (int s = 0; s < 25; ++s) {
    PolyMatrix<Rationals> a(2, std::vector<QPoly>(2, QPoly(r))), b = a, ab = a;
    for (auto& row : a)
      for (auto& e : row) e = random_poly(r, rng);
    for (auto& row : b)
      for (auto& e : row) e = random_poly(r, rng);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) ab[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    EXPECT_EQ(symbolic_det(ab), symbolic_det(a) * symbolic_det(b));
  }
}

TEST(SymbolicDet, LowerTriangularToeplitzLaw) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::string> names;
    for (std::size_t k = 0; k < n; ++k) names.push_back("c" + std::to_string(k));
    auto r = qring(names);
    PolyMatrix<Rationals> m(n, std::vector<QPoly>(n, QPoly(r)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) m[i][j] = QPoly::variable(r, i - j);
    EXPECT_EQ(symbolic_det(m), QPoly::variable(r, 0).pow(static_cast<unsigned>(n))) << "n=" << n;
  }
}

TEST(Homogenize, QuadricPadding) {
  auto r = qring({"p12", "p14", "p34"});
  auto h = homogenize(parse_polynomial(r, "p34 - p14^2"), "p12");
  EXPECT_EQ(h, parse_polynomial(r, "p12*p34 - p14^2"));
  EXPECT_TRUE(h.is_homogeneous());
  EXPECT_EQ(dehomogenize(h, 0), parse_polynomial(r, "p34 - p14^2"));
}

TEST(Homogenize, ConstantAndLinear) {
  auto r = qring({"h", "x"});
  EXPECT_EQ(homogenize(QPoly::from_int(r, 7), "h"), QPoly::from_int(r, 7));
  EXPECT_EQ(homogenize(parse_polynomial(r, "x + 1"), "h"), parse_polynomial(r, "x + h"));
  EXPECT_THROW(homogenize(parse_polynomial(r, "x + h"), "h"), AlgebraError);
}

TEST(Homogenize, DehomogenizeRoundTripOnRandomPolys) {
  auto r = qring({"h", "x", "y", "z"});
  auto sub = qring({"x", "y", "z"});
  std::mt19937_64 rng(9);
  std::vector<int> into{1, 2, 3};
  for (int s = 0; s < 50; ++s) {
    auto p = transfer(random_poly(sub, rng, 5), r, into);
    auto h = homogenize(p, 0);
    EXPECT_TRUE(h.is_homogeneous());
    EXPECT_EQ(h.total_degree(), p.total_degree());
    EXPECT_EQ(dehomogenize(h, 0), p);
  }
}

TEST(Parse, Errors) {
  auto r = qring({"x"});
  EXPECT_THROW(parse_polynomial(r, "x +"), ParseError);
  EXPECT_THROW(parse_polynomial(r, "y"), ParseError);
  EXPECT_THROW(parse_polynomial(r, "(x"), ParseError);
}

}  // namespace
}  // namespace quotlab
