#include <gtest/gtest.h>

#include <clocale>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "io.hpp"

using namespace teich2io;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Format, SeventeenSignificantDigits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(-2.5e-20), "-2.4999999999999999e-20");
  EXPECT_EQ(format_double(NAN), "nan");
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

TEST(Csv, HeaderOnlyForEmptyTable) {
  CsvTable t{{"phi", "a", "alpha_tilde", "P_check"}, {}};
  EXPECT_EQ(to_csv(t), "phi,a,alpha_tilde,P_check\n");
}

TEST(Csv, RowsQuotingAndWidth) {
  CsvTable t{{"word", "x"}, {}};
  t.add_row({"g0*g1^-1", format_double(0.5)});
  t.add_row({"a,b", "1"});
  EXPECT_EQ(to_csv(t), "word,x\ng0*g1^-1,0.5\n\"a,b\",1\n");
  EXPECT_THROW(t.add_row({"only one"}), std::invalid_argument);
  EXPECT_EQ(to_csv(t).find('\r'), std::string::npos);
}

TEST(Json, SchemaFirstAndBitExactRoundTrip) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  Json values = Json::array();
  for (int i = 0; i < 500; ++i) values.push_back(u(rng) * std::pow(10.0, i % 40 - 20));
  const std::string text = to_json(versioned(Json{{"values", values}, {"schema", "ignored"}}));
  EXPECT_EQ(text.rfind("{\n  \"schema\": \"teich2/v1\"", 0), 0u);
  const Json parsed = Json::parse(text);
  EXPECT_EQ(parsed["schema"], "teich2/v1");
  ASSERT_EQ(parsed["values"].size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    EXPECT_EQ(parsed["values"][i].get<double>(), values[i].get<double>());
  }
}

TEST(Svg, OnePathPerCellWithArcs) {
  const double r = 0.6;
  Polygon oct{};
  for (int k = 0; k < 8; ++k) oct[k] = {r * std::cos(k * M_PI / 4), r * std::sin(k * M_PI / 4)};
  const std::string svg = to_svg({oct, oct, oct});
  EXPECT_EQ(count(svg, "<path"), 3u);
  EXPECT_EQ(count(svg, " A "), 24u);
  EXPECT_NE(svg.find("viewBox=\"0 0 1000 1000\""), std::string::npos);
  EXPECT_NE(svg.find("<circle cx=\"500\" cy=\"500\" r=\"500\""), std::string::npos);
  EXPECT_EQ(count(to_svg({}), "<path"), 0u);
}

TEST(Svg, ArcRadiusIsTheOrthogonalCircle) {
  // Points e^{+-i t} r lie on the geodesic centred on the real axis.
  const double r = 0.5, t = 0.4;
  Polygon poly{};
  for (auto& p : poly) p = {0.0, 0.0};
  poly[0] = {r * std::cos(t), -r * std::sin(t)};
  poly[1] = {r * std::cos(t), r * std::sin(t)};
  const std::string svg = to_svg({poly});
  // Centre c on the real axis with 2 Re(p conj c) = 1 + |p|^2.
  const double c = (1.0 + r * r) / (2.0 * r * std::cos(t));
  const double radius = std::sqrt(c * c - 1.0) * 500.0;
  char expected[64];
  std::snprintf(expected, sizeof expected, "A %.6f %.6f 0 0 0 ", radius, radius);
  EXPECT_NE(svg.find(expected), std::string::npos) << svg;
  // Sides through the origin are straight.
  EXPECT_NE(svg.find(" L "), std::string::npos);
}

TEST(Files, WriteAndReportPath) {
  const std::string path = ::testing::TempDir() + "teich2_io_test.csv";
  emit_csv(CsvTable{{"P", "area"}, {}}, path);
  EXPECT_EQ(read_file(path), "P,area\n");
  std::remove(path.c_str());
  try {
    emit_json(Json::object(), "/nonexistent-dir/out.json");
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_EQ(e.path(), "/nonexistent-dir/out.json");
    EXPECT_NE(std::string(e.what()).find("/nonexistent-dir/out.json"), std::string::npos);
  }
}

TEST(Format, IgnoresNumericLocale) {
  if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") == nullptr) GTEST_SKIP() << "locale unavailable";
  EXPECT_EQ(format_double(0.5), "0.5");
  std::setlocale(LC_NUMERIC, "C");
}
