#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "esgames/fixtures.hpp"
#include "esgames/suite.hpp"

using namespace esgames;
namespace fs = std::filesystem;

namespace {

const fs::path kData = ESGAMES_DATA_DIR;

std::string fixture(const std::string& name) { return cli::quote((kData / "fixtures" / (name + ".json")).string()); }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "esgames-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch(name);
  std::ofstream(p) << text;
  return cli::quote(p.string());
}

}  // namespace

TEST(Cli, CatalogValidates) {
  std::string args = "validate";
  for (const auto& e : fs::directory_iterator(kData / "fixtures")) args += " " + cli::quote(e.path().string());
  const cli::Run r = cli::run(args);
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, ShippedFilesMatchCatalog) {
  for (const auto& [name, bundle] : fixture_catalog()) {
    std::ifstream in(kData / "fixtures" / (name + ".json"));
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    EXPECT_TRUE(text == dump_bundle(bundle)) << name << " differs from the catalog; rerun esgames catalog";
  }
}

TEST(Cli, CorruptedLawExitsOne) {
  Bundle b;
  b.add("token", token_game(2));
  auto j = nlohmann::json::parse(dump_bundle(b));
  bool corrupted = false;
  for (auto& d : j["documents"])
    if (d["kind"] == "law") {
      d["body"]["table"][1][2] = "e";
      corrupted = true;
    }
  ASSERT_TRUE(corrupted);
  const cli::Run r = cli::run("validate " + write("bad-law.json", j.dump()));
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("law"), std::string::npos) << r.out;
}

TEST(Cli, LibraryAndCliAgree) {
  const std::string path = (kData / "fixtures" / "negative.json").string();
  const cli::Run r = cli::run("validate --report json " + cli::quote(path), false);
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out == format_json(run_suite(load_bundle_file(path))));
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(cli::run("validate " + write("broken.json", "{\"documents\": [")).code, 2);
  EXPECT_EQ(cli::run("validate " + write("unknown.json", R"({"documents": [{"id": "x", "kind": "monad"}]})")).code, 2);
  EXPECT_EQ(cli::run("no-such-command").code, 2);
  EXPECT_EQ(cli::run("export-dot " + fixture("pairs") + " --ref nothing").code, 2);
}

TEST(Cli, BangOnMixedGame) {
  const cli::Run r = cli::run("build bang --in " + fixture("token-2") + " --ref token-2");
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("initial moves all have the same polarity"), std::string::npos) << r.out;
}

TEST(Cli, BuildOutputRevalidates) {
  for (const std::string& c : {"dual", "bang", "copycat", "uniform-copycat", "tcg"}) {
    const fs::path out = scratch("built-" + c + ".json");
    const cli::Run b = cli::run("build " + c + " --in " + fixture("pairs") + " --ref pairs --out " + cli::quote(out.string()));
    ASSERT_EQ(b.code, 0) << c << "\n" << b.out;
    const cli::Run v = cli::run("validate " + cli::quote(out.string()));
    EXPECT_EQ(v.code, 0) << c << "\n" << v.out;
  }
}

TEST(Cli, SearchUniform) {
  const cli::Run found = cli::run("search-uniform " + fixture("token-2") + " --ref token-2-strategy-1", false);
  ASSERT_EQ(found.code, 0) << found.out;
  EXPECT_NE(found.out.find("uniform-strategy"), std::string::npos);

  const fs::path cert = scratch("cert.json");
  const cli::Run none = cli::run("search-uniform " + fixture("token-3") + " --ref token-3-strategy-4 --certificate " +
                                 cli::quote(cert.string()));
  EXPECT_EQ(none.code, 0) << none.out;
  std::ifstream in(cert);
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["result"], "none");
  EXPECT_EQ(j["exhaustive"], true);
}

TEST(Cli, SearchBoundExceeded) {
  const cli::Run r = cli::run("search-uniform " + fixture("token-2") + " --ref token-2-strategy-1 --bound 1");
  EXPECT_EQ(r.code, 3) << r.out;
}

TEST(Cli, ExportDotDeterministic) {
  const std::string args = "export-dot " + fixture("token-2") + " --ref token-2-strategy-1";
  const cli::Run a = cli::run(args, false);
  const cli::Run b = cli::run(args, false);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '>'), 2);
}
