#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "superlie/cli.hpp"

using namespace superlie;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "superlie");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(SUPERLIE_SAMPLES_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("superlie_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, ValidateCatalogEntry) {
  const auto r = run({"validate", "g_4_2_s"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "quadratic Lie superalgebra: OK\n");
  const auto h = run({"validate", "heisenberg", "--param", "n=2"});
  EXPECT_EQ(h.code, 0);
  EXPECT_EQ(h.out, "Lie superalgebra: OK\n");
}

TEST(Cli, BettiTableEndsWithB2) {
  const auto r = run({"betti", "g_4_2_s", "--max-degree", "2"});
  EXPECT_EQ(r.code, 0);
  ASSERT_GE(r.out.size(), 8u);
  EXPECT_EQ(r.out.substr(r.out.size() - 8), "b_2 = 0\n");
}

TEST(Cli, BrokenJacobiFixture) {
  const auto r = run({"validate", sample("broken_jacobi.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("super Jacobi identity violated at (Y0, X1, Y1)"), std::string::npos) << r.out;
  const auto j = run({"validate", sample("broken_jacobi.json"), "--format", "json"});
  EXPECT_EQ(j.code, 1);
  const Json doc = Json::parse(j.out);
  EXPECT_EQ(doc["ok"], false);
  EXPECT_EQ(doc["violations"][0]["witness"], Json::array({"Y0", "X1", "Y1"}));
}

TEST(Cli, SampleFixtureMatchesCatalog) {
  EXPECT_EQ(run({"validate", sample("g_4_2_s.json")}).code, 0);
  const auto from_file = algebra_from_json_text(cli::read_file(sample("g_4_2_s.json")));
  EXPECT_TRUE(from_file.algebra.same_table(catalog_build("g_4_2_s").algebra));
}

TEST(Cli, InputErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"validate", "no_such_key"},
           {"betti", "g_6_2", "--param", "lambda=0"},
           {"betti", "g_6_2", "--param", "lambda=0.5"},
           {"betti", "g_6_2", "--param", "lambda"},
           {"validate", "/nonexistent/file.json"},
           {"validate", sample("g_4_2_s.json"), "--param", "lambda=1"},
           {"poisson", "heisenberg", "--right", "e(Z)"},
           {"poisson", "g_4_1_s", "--right", "e(Q)"},
           {"cohomology", "heisenberg", "--param", "n=30", "--param", "m=30", "--degree", "3"},
           {"double-extend", "g_4_1_s", "--derivation", "1 0 0 0;0 0 0 0;0 0 0 0;0 0 0 0"},
           {"double-extend", "g_4_1_s", "--derivation", "1 0;0 1"},
           {"double-extend", "g_4_1_s"}}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 2) << args[0] << " " << args[1];
    EXPECT_EQ(r.err.rfind("error: ", 0), 0u) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
  }
}

TEST(Cli, MalformedJsonFile) {
  const auto path = temp_file("bad.json");
  std::ofstream(path) << "{\"basis\": [";
  const auto r = run({"validate", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("malformed JSON"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrorsAndHelp) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"betti", "g_4_1_s", "--format", "xml"}).code, 2);
  const auto h = run({"--help"});
  EXPECT_EQ(h.code, 0);
  EXPECT_NE(h.out.find("double-extend"), std::string::npos);
}

TEST(Cli, ExportImportRoundTrip) {
  const auto path = temp_file("g829.json");
  ASSERT_EQ(run({"export", "g_8_2_4_s", "--param", "lambda=-2/3", "--param", "mu=5", "--output", path.string()}).code, 0);
  const auto back = algebra_from_json_text(cli::read_file(path.string()));
  const auto orig = catalog_build("g_8_2_4_s", {{"lambda", Scalar(-2, 3)}, {"mu", 5}});
  EXPECT_TRUE(back.algebra.same_table(orig.algebra));
  EXPECT_EQ(back.form->gram(), orig.form->gram());
  EXPECT_EQ(run({"validate", path.string()}).code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, ReportsAreDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{{"betti", "g_6_s", "--format", "json"},
                                                                {"cohomology", "g_8_2_9_s", "--degree", "2"},
                                                                {"list", "--format", "json"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, CohomologyJson) {
  const auto r = run({"cohomology", "g_4_1_s", "--degree", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["results"][0]["betti"], 2);
  EXPECT_EQ(doc["results"][0]["dim_cocycles"], 4);
  EXPECT_EQ(doc["results"][0]["dim_coboundaries"], 2);
}

TEST(Cli, Poisson) {
  const auto r = run({"poisson", "g_4_1_s", "--right", "e(X0)", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["bracket"], "-1 * e() ⊗ s(Y1,Y1)");
  EXPECT_EQ(doc["delta"], "1 * e() ⊗ s(Y1,Y1)");
  const auto two = run({"poisson", "g_4_1_s", "--left", "s(X1)", "--right", "s(X1)"});
  EXPECT_EQ(two.code, 0);
  EXPECT_NE(two.out.find("} = "), std::string::npos);
}

TEST(Cli, DoubleExtend) {
  // ad(Y0) on g_4_1_s: X1 -> 2 X1... read off the engine's own ad matrix
  const auto q = catalog_build_quadratic("g_4_1_s");
  const Matrix d = q.algebra().ad(q.basis().index_of("Y0"));
  std::string text;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) text += to_string(d(i, j)) + (j + 1 < d.cols() ? " " : "");
    if (i + 1 < d.rows()) text += ";";
  }
  const auto r = run({"double-extend", "g_4_1_s", "--derivation", text, "--e-label", "E", "--f-label", "F"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ext = algebra_from_json_text(r.out);
  EXPECT_EQ(ext.algebra.dim(), 6u);
  EXPECT_TRUE(validate_full(ext.quadratic()).ok());
  EXPECT_TRUE(same_up_to_labels(ext.quadratic(), one_dim_double_extension(q, d, "E", "F")));

  const auto path = temp_file("d.txt");
  std::ofstream(path) << "0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n";
  const auto z = run({"double-extend", "g_4_1_s", "--derivation-file", path.string()});
  EXPECT_EQ(z.code, 0) << z.err;
  std::filesystem::remove(path);
}

TEST(Cli, List) {
  const auto r = run({"list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("g_8_2_9_s"), std::string::npos);
  const Json doc = Json::parse(run({"list", "--format", "json"}).out);
  EXPECT_EQ(doc["entries"].size(), catalog_list().size());
}
