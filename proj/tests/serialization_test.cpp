#include "rigid/serialization.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "rigid/dual_certificate.hpp"
#include "rigid/rational.hpp"

using rigid::build_dual;
using rigid::certificate_from_json;
using rigid::certificate_to_json;
using rigid::DualCertificate;
using rigid::GradedMap;
using rigid::Json;
using rigid::map_from_json;
using rigid::map_to_json;
using rigid::Mode;
using rigid::Parity;
using rigid::Rational;
using rigid::SuperSpace;

namespace {

TEST(Rationals, StringRoundTrip) {
  EXPECT_EQ(rigid::rational_to_string(Rational(-2, 3)), "-2/3");
  EXPECT_EQ(rigid::rational_to_string(Rational(7)), "7");
  EXPECT_EQ(rigid::rational_from_string("-2/3"), Rational(-2, 3));
  EXPECT_EQ(rigid::rational_from_string("4/6"), Rational(2, 3));
  EXPECT_EQ(rigid::rational_from_string("0"), Rational(0));
  EXPECT_THROW(rigid::rational_from_string(""), std::invalid_argument);
  EXPECT_THROW(rigid::rational_from_string("1/0"), std::invalid_argument);
  EXPECT_THROW(rigid::rational_from_string("x"), std::invalid_argument);
}

TEST(Maps, JsonRoundTripOnRandomMaps) {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Parity> sp(rng() % 4), tp(rng() % 4);
    for (auto& p : sp) p = rng() % 2 ? Parity::odd : Parity::even;
    for (auto& p : tp) p = rng() % 2 ? Parity::odd : Parity::even;
    const SuperSpace source{sp}, target{tp};
    std::vector<Rational> entries(source.dim() * target.dim());
    for (std::size_t i = 0; i < target.dim(); ++i)
      for (std::size_t j = 0; j < source.dim(); ++j) {
        if (target.parity(i) != source.parity(j)) continue;
        Rational q(static_cast<int>(rng() % 11) - 5, 1 + static_cast<int>(rng() % 4));
        q.canonicalize();
        entries[i * source.dim() + j] = q;
      }
    const GradedMap f(source, target, entries);
    EXPECT_EQ(map_from_json(map_to_json(f)), f);
  }
}

TEST(Maps, RejectsMalformedJson) {
  const GradedMap id = GradedMap::identity(SuperSpace::even_space(2));
  Json good = map_to_json(id);

  Json bad = good;
  bad["entries"][0].erase(1);
  EXPECT_THROW(map_from_json(bad), std::invalid_argument);

  bad = good;
  bad["entries"].erase(1);
  EXPECT_THROW(map_from_json(bad), std::invalid_argument);

  bad = good;
  bad["entries"][0][0] = "1/0";
  EXPECT_THROW(map_from_json(bad), std::invalid_argument);

  bad = good;
  bad["source"] = "eq";
  EXPECT_THROW(map_from_json(bad), std::invalid_argument);

  // Parity-violating nonzero entry is rejected at construction.
  bad = good;
  bad["source"] = "eo";
  EXPECT_THROW(map_from_json(bad), std::invalid_argument);
}

TEST(Certificates, JsonRoundTrip) {
  const DualCertificate cert = build_dual(SuperSpace::even_space(2), 2, Mode::bosonic);
  const DualCertificate back = certificate_from_json(certificate_to_json(cert));
  EXPECT_EQ(back.x, cert.x);
  EXPECT_EQ(back.exponent, cert.exponent);
  EXPECT_EQ(back.mode, cert.mode);
  EXPECT_EQ(back.line, cert.line);
  EXPECT_EQ(back.y, cert.y);
  EXPECT_EQ(back.epsilon, cert.epsilon);
  EXPECT_EQ(back.delta, cert.delta);
  EXPECT_EQ(back.phi, cert.phi);
  EXPECT_EQ(back.phi_inv, cert.phi_inv);
  EXPECT_EQ(back.ev, cert.ev);
  EXPECT_EQ(back.co, cert.co);
  EXPECT_EQ(back.sign, cert.sign);
  EXPECT_EQ(back.dimension, cert.dimension);
}

TEST(Certificates, ShapeConsistencyEnforced) {
  const DualCertificate cert = build_dual(SuperSpace::even_space(2), 2, Mode::bosonic);
  Json j = certificate_to_json(cert);
  j["y"] = "eee";
  EXPECT_THROW(certificate_from_json(j), std::invalid_argument);

  j = certificate_to_json(cert);
  j["sign"] = 2;
  EXPECT_THROW(certificate_from_json(j), std::invalid_argument);
}

// The committed fixtures are exactly what the deterministic pipeline
// regenerates.
TEST(Certificates, FixturesAreFresh) {
  const struct {
    const char* file;
    SuperSpace x;
    int n;
    Mode mode;
  } rows[] = {
      {"cert_even2_n2_bosonic.json", SuperSpace::even_space(2), 2, Mode::bosonic},
      {"cert_even3_n3_bosonic.json", SuperSpace::even_space(3), 3, Mode::bosonic},
      {"cert_odd1_n3_bosonic.json", SuperSpace::odd_space(1), 3, Mode::bosonic},
      {"cert_odd2_n2_fermionic.json", SuperSpace::odd_space(2), 2, Mode::fermionic},
  };
  for (const auto& row : rows) {
    SCOPED_TRACE(row.file);
    std::ifstream in(std::string(RIGID_FIXTURE_DIR) + "/" + row.file);
    ASSERT_TRUE(in.good());
    std::stringstream buffer;
    buffer << in.rdbuf();
    const DualCertificate cert = build_dual(row.x, row.n, row.mode);
    EXPECT_EQ(buffer.str(), certificate_to_json(cert).dump(2) + "\n");
  }
}

TEST(Elements, CanonicalJson) {
  const Json j = rigid::element_to_json(rigid::antisymmetrizer(2));
  EXPECT_EQ(j["degree"], 2);
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0], "1/2 [0 1]");
  EXPECT_EQ(j["terms"][1], "-1/2 [1 0]");
}

TEST(Polynomials, CoefficientStrings) {
  const Json j = rigid::polynomial_to_json(rigid::falling_binomial(2));
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0], "0");
  EXPECT_EQ(j[1], "-1/2");
  EXPECT_EQ(j[2], "1/2");
}

}  // namespace
