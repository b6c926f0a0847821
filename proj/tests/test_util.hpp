#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "cmv/dsl.hpp"
#include "cmv/taxonomy.hpp"

namespace cmvtest {

inline std::string fixture_path(const std::string& name) {
  return std::string(CMV_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(bool(in), "cannot open " << path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline cmv::ModelGraph load_fixture(const std::string& name) {
  auto result = cmv::parse(read_file(fixture_path(name)), cmv::published_catalog());
  for (const auto& e : result.errors)
    MESSAGE(name << ":" << e.line << ":" << e.col << ": " << e.message);
  REQUIRE_MESSAGE(result.graph.has_value(), name << " must parse");
  return std::move(*result.graph);
}

// Compares content against a checked-in golden file. Setting
// CMV_UPDATE_GOLDEN=1 rewrites the golden instead; the test then passes and
// the diff shows up in version control.
inline void check_golden(const std::string& path, const std::string& content) {
  if (const char* update = std::getenv("CMV_UPDATE_GOLDEN"); update && *update == '1') {
    std::filesystem::create_directories(std::filesystem::path(path).parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
    REQUIRE_MESSAGE(bool(out), "cannot write " << path);
    return;
  }
  REQUIRE_MESSAGE(std::filesystem::exists(path),
                  path << " missing; run with CMV_UPDATE_GOLDEN=1 to create it");
  CHECK_MESSAGE(read_file(path) == content,
                path << " is stale; rerun with CMV_UPDATE_GOLDEN=1 and review the diff");
}

}  // namespace cmvtest
