#include "otoric/fixtures.hpp"

#include <array>
#include <utility>

namespace otoric {

namespace {

// Same documents as fixtures/*.json.
constexpr std::array<std::pair<std::string_view, std::string_view>, 9> kFixtures{{
    {"c8", R"({"vertices": [{"id": "v1", "weight": 4}, {"id": "v2", "weight": 3}, {"id": "v3", "weight": 2}, {"id": "v4", "weight": 1}, {"id": "v5", "weight": 36}, {"id": "v6", "weight": 7}, {"id": "v7", "weight": 6}, {"id": "v8", "weight": 1}],
  "edges": [
      {"id": "e1", "tail": "v2", "head": "v1"},
      {"id": "e2", "tail": "v3", "head": "v2"},
      {"id": "e3", "tail": "v4", "head": "v3"},
      {"id": "e4", "tail": "v4", "head": "v5"},
      {"id": "e5", "tail": "v5", "head": "v6"},
      {"id": "e6", "tail": "v7", "head": "v6"},
      {"id": "e7", "tail": "v8", "head": "v7"},
      {"id": "e8", "tail": "v8", "head": "v1"}]})"},
    {"theta", R"({"vertices": [{"id": "v1", "weight": 1}, {"id": "v2", "weight": 2}, {"id": "v3", "weight": 3}, {"id": "v4", "weight": 4}, {"id": "v5", "weight": 5}],
  "edges": [
      {"id": "e1", "tail": "v1", "head": "v2"},
      {"id": "e2", "tail": "v2", "head": "v3"},
      {"id": "e3", "tail": "v4", "head": "v3"},
      {"id": "e4", "tail": "v1", "head": "v4"},
      {"id": "e5", "tail": "v5", "head": "v3"},
      {"id": "e6", "tail": "v1", "head": "v5"}]})"},
    {"triangle", R"({"vertices": [{"id": "v1", "weight": 1}, {"id": "v2", "weight": 1}, {"id": "v3", "weight": 1}],
  "edges": [
      {"id": "e1", "tail": "v1", "head": "v2"},
      {"id": "e2", "tail": "v2", "head": "v3"},
      {"id": "e3", "tail": "v1", "head": "v3"}]})"},
    {"bowtie", R"({"vertices": [{"id": "v1", "weight": 1}, {"id": "v2", "weight": 1}, {"id": "v3", "weight": 1}, {"id": "v4", "weight": 1}, {"id": "v5", "weight": 1}],
  "edges": [
      {"id": "e1", "tail": "v1", "head": "v2"},
      {"id": "e2", "tail": "v2", "head": "v3"},
      {"id": "e3", "tail": "v1", "head": "v3"},
      {"id": "e4", "tail": "v1", "head": "v4"},
      {"id": "e5", "tail": "v4", "head": "v5"},
      {"id": "e6", "tail": "v1", "head": "v5"}]})"},
    {"bowtie-weighted", R"({"vertices": [{"id": "v1", "weight": 1}, {"id": "v2", "weight": 1}, {"id": "v3", "weight": 2}, {"id": "v4", "weight": 1}, {"id": "v5", "weight": 1}],
  "edges": [
      {"id": "e1", "tail": "v1", "head": "v2"},
      {"id": "e2", "tail": "v2", "head": "v3"},
      {"id": "e3", "tail": "v3", "head": "v1"},
      {"id": "e4", "tail": "v1", "head": "v4"},
      {"id": "e5", "tail": "v4", "head": "v5"},
      {"id": "e6", "tail": "v1", "head": "v5"}]})"},
    {"dumbbell", R"({"vertices": [{"id": "v1", "weight": 1}, {"id": "v2", "weight": 1}, {"id": "v3", "weight": 1}, {"id": "v4", "weight": 1}, {"id": "v5", "weight": 1}, {"id": "v6", "weight": 1}],
  "edges": [
      {"id": "e1", "tail": "v1", "head": "v2"},
      {"id": "e2", "tail": "v2", "head": "v3"},
      {"id": "e3", "tail": "v1", "head": "v3"},
      {"id": "e4", "tail": "v1", "head": "v4"},
      {"id": "e5", "tail": "v4", "head": "v5"},
      {"id": "e6", "tail": "v5", "head": "v6"},
      {"id": "e7", "tail": "v4", "head": "v6"}]})"},
    {"theta-weighted", R"({"vertices": [{"id": "v1", "weight": 1}, {"id": "v2", "weight": 1}, {"id": "v3", "weight": 2}, {"id": "v4", "weight": 1}],
  "edges": [
      {"id": "e1", "tail": "v1", "head": "v2"},
      {"id": "e2", "tail": "v2", "head": "v3"},
      {"id": "e3", "tail": "v3", "head": "v1"},
      {"id": "e4", "tail": "v2", "head": "v4"},
      {"id": "e5", "tail": "v1", "head": "v4"}]})"},
    {"three-unbalanced", R"({"vertices": [{"id": "v1", "weight": 1}, {"id": "v2", "weight": 1}, {"id": "v3", "weight": 1}, {"id": "v4", "weight": 1}, {"id": "v5", "weight": 1}, {"id": "v6", "weight": 1}, {"id": "v7", "weight": 1}],
  "edges": [
      {"id": "e1", "tail": "v1", "head": "v2"},
      {"id": "e2", "tail": "v2", "head": "v3"},
      {"id": "e3", "tail": "v1", "head": "v3"},
      {"id": "e4", "tail": "v1", "head": "v4"},
      {"id": "e5", "tail": "v4", "head": "v5"},
      {"id": "e6", "tail": "v1", "head": "v5"},
      {"id": "e7", "tail": "v1", "head": "v6"},
      {"id": "e8", "tail": "v6", "head": "v7"},
      {"id": "e9", "tail": "v1", "head": "v7"}]})"},
    {"c8-pendant", R"({"vertices": [{"id": "v1", "weight": 4}, {"id": "v2", "weight": 3}, {"id": "v3", "weight": 2}, {"id": "v4", "weight": 1}, {"id": "v5", "weight": 36}, {"id": "v6", "weight": 7}, {"id": "v7", "weight": 6}, {"id": "v8", "weight": 1}, {"id": "v9", "weight": 1}],
  "edges": [
      {"id": "e1", "tail": "v2", "head": "v1"},
      {"id": "e2", "tail": "v3", "head": "v2"},
      {"id": "e3", "tail": "v4", "head": "v3"},
      {"id": "e4", "tail": "v4", "head": "v5"},
      {"id": "e5", "tail": "v5", "head": "v6"},
      {"id": "e6", "tail": "v7", "head": "v6"},
      {"id": "e7", "tail": "v8", "head": "v7"},
      {"id": "e8", "tail": "v8", "head": "v1"},
      {"id": "e9", "tail": "v1", "head": "v9"}]})"},
}};

} // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, doc] : kFixtures) out.emplace_back(name);
  return out;
}

std::optional<std::string> fixture_document(std::string_view name) {
  for (const auto& [n, doc] : kFixtures)
    if (n == name) return std::string(doc);
  return std::nullopt;
}

} // namespace otoric
