#include <gtest/gtest.h>

#include <array>
#include <tuple>
#include <vector>

#include "oracle.hpp"
#include "rbo/rbo.hpp"

using namespace rbo;

namespace {

const AlgebraDescriptor M2 = make_matrix_algebra(2);

using Term = std::tuple<std::size_t, std::size_t, long long>;

Tensor2 tensor(const std::vector<Term>& terms) {
  Tensor2 r(M2);
  for (auto [i, j, c] : terms) r.add({i, j}, Rational(c));
  return r;
}

std::vector<long long> unit_vec(std::size_t i) {
  std::vector<long long> v(4, 0);
  v[i] = 1;
  return v;
}

/// r13 r12 - r12 r23 + r23 r13 expanded slot by slot with integer matrix units.
std::array<long long, 64> oracle_residual(const std::vector<Term>& terms) {
  std::array<long long, 64> out{};
  auto mul = [](std::size_t a, std::size_t b) { return oracle::matrix_unit_product(2, unit_vec(a), unit_vec(b)); };
  auto put = [&](const std::vector<long long>& x, const std::vector<long long>& y, const std::vector<long long>& z, long long c) {
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t k = 0; k < 4; ++k) out[i * 16 + j * 4 + k] += c * x[i] * y[j] * z[k];
  };
  for (auto [ak, bk, ck] : terms)
    for (auto [al, bl, cl] : terms) {
      const long long c = ck * cl;
      put(mul(ak, al), unit_vec(bl), unit_vec(bk), c);
      put(unit_vec(ak), mul(bk, al), unit_vec(bl), -c);
      put(unit_vec(al), unit_vec(ak), mul(bk, bl), c);
    }
  return out;
}

std::array<long long, 64> dense(const Tensor3& t) {
  std::array<long long, 64> out{};
  for (const auto& [idx, c] : t.terms()) {
    EXPECT_TRUE(c.is_integer());
    out[idx[0] * 16 + idx[1] * 4 + idx[2]] = static_cast<long long>(c.numerator());
  }
  return out;
}

}  // namespace

TEST(Tensor, AddCancelsAndRejectsBadIndex) {
  Tensor2 r = tensor({{1, 1, 2}, {1, 1, -2}});
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(r.str(), "0");
  EXPECT_THROW(r.add({4, 0}, Rational(1)), Error);
  EXPECT_THROW(Tensor2{make_laurent()}, Error);
  EXPECT_EQ(tensor({{1, 1, 1}}).str(), "1 e2(x)e2");
}

TEST(Tensor, EmbedSlots) {
  Tensor2 r = tensor({{0, 1, 1}});
  Tensor3 r12 = embed(r, Slots::s12);
  Tensor3 r13 = embed(r, Slots::s13);
  Tensor3 r23 = embed(r, Slots::s23);
  EXPECT_EQ(r12.terms().size(), 2u);
  EXPECT_EQ(r12.coeff({0, 1, 0}), Rational(1));
  EXPECT_EQ(r12.coeff({0, 1, 3}), Rational(1));
  EXPECT_EQ(r13.coeff({0, 0, 1}), Rational(1));
  EXPECT_EQ(r13.coeff({0, 3, 1}), Rational(1));
  EXPECT_EQ(r23.coeff({0, 0, 1}), Rational(1));
  EXPECT_EQ(r23.coeff({3, 0, 1}), Rational(1));
  EXPECT_THROW(embed(Tensor2(make_window_algebra(2)), Slots::s12), Error);
}

TEST(Tensor, Mul3SlotWise) {
  Tensor3 a(M2), b(M2);
  a.add({0, 1, 2}, Rational(2));
  b.add({1, 2, 0}, Rational(3));
  // E11 E12 = E12, E12 E21 = E11, E21 E11 = E21.
  Tensor3 p = mul3(a, b);
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p.coeff({1, 0, 2}), Rational(6));
  EXPECT_TRUE(mul3(b, a).is_zero());
}

TEST(Acybe, CorpusResiduals) {
  EXPECT_TRUE(acybe_residual(tensor({})).is_zero());
  EXPECT_TRUE(acybe_residual(tensor({{1, 1, 1}})).is_zero());
  Tensor2 scaled(M2);
  scaled.add({1, 1}, Rational(BigInt(3), BigInt(2)));
  EXPECT_TRUE(acybe_residual(scaled).is_zero());

  Tensor3 e11(M2);
  e11.add({0, 0, 0}, Rational(1));
  EXPECT_EQ(acybe_residual(tensor({{0, 0, 1}})), e11);
  EXPECT_EQ(acybe_residual(tensor({{0, 1, 1}})).str(), "1 e1(x)e2(x)e2");
  EXPECT_EQ(acybe_residual(tensor({{1, 3, 1}})).str(), "1 e2(x)e2(x)e4");
  EXPECT_EQ(acybe_residual(tensor({{2, 1, 1}})).str(), "-1 e3(x)e1(x)e2");
}

TEST(Acybe, MatchesMatrixUnitOracle) {
  const std::vector<std::vector<Term>> cases{
      {{0, 0, 1}}, {{0, 1, 1}}, {{1, 3, 1}}, {{2, 1, 1}}, {{0, 1, 1}, {1, 3, 1}}, {{0, 3, 2}, {3, 0, -1}, {1, 2, 1}}, {{2, 2, 5}}};
  for (const auto& c : cases) EXPECT_EQ(dense(acybe_residual(tensor(c))), oracle_residual(c));
}

TEST(Acybe, ResidualIsQuadratic) {
  for (const auto& c : std::vector<std::vector<Term>>{{{0, 1, 1}}, {{2, 1, 1}, {1, 0, 2}}}) {
    Tensor2 r = tensor(c);
    Tensor3 res = acybe_residual(r);
    EXPECT_EQ(acybe_residual(Rational(-3) * r), Rational(9) * res);
  }
}

TEST(Induced, Examples) {
  WeightedOperator R = induced_operator(tensor({{1, 1, 1}}));
  EXPECT_EQ(R.declared_weight, Rational(0));
  EXPECT_EQ(R(M2, M2.basis(2)), M2.basis(1));
  for (std::size_t i : {0u, 1u, 3u}) EXPECT_TRUE(R(M2, M2.basis(i)).is_zero());
  EXPECT_TRUE(check_rbr(M2, R, 0, DomainSpec::finite_basis()).pass);
  WeightedOperator R11 = induced_operator(tensor({{0, 0, 1}}));
  EXPECT_FALSE(check_rbr(M2, R11, 0, DomainSpec::finite_basis()).pass);
}

TEST(AcybeProperty, ZeroResidualGivesWeightZeroOperator) {
  // Every r with at most two terms and coefficients +-1: the library residual
  // matches the oracle, and solutions induce weight-0 Rota-Baxter operators.
  std::vector<std::vector<Term>> all;
  for (std::size_t p = 0; p < 16; ++p)
    for (long long s : {1LL, -1LL}) {
      all.push_back({{p / 4, p % 4, s}});
      for (std::size_t q = p + 1; q < 16; ++q)
        for (long long t : {1LL, -1LL}) all.push_back({{p / 4, p % 4, s}, {q / 4, q % 4, t}});
    }
  ASSERT_EQ(all.size(), 512u);
  int solutions = 0;
  for (const auto& c : all) {
    Tensor3 res = acybe_residual(tensor(c));
    ASSERT_EQ(dense(res), oracle_residual(c));
    if (!res.is_zero()) continue;
    ++solutions;
    EXPECT_TRUE(check_rbr(M2, induced_operator(tensor(c)), 0, DomainSpec::finite_basis()).pass) << tensor(c).str();
  }
  EXPECT_GT(solutions, 2);
}
