#include "rigidity/catalog.hpp"

#include "json_detail.hpp"
#include "rigidity/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace rigidity {

namespace {

CatalogEntry entry(std::string name, std::string description, std::vector<QMatrix> matrices,
                   std::vector<Rational> locations, long long index, bool rigid) {
  const std::size_t n = matrices.front().rows();
  std::vector<SingularPoint> points;
  for (std::size_t i = 0; i < matrices.size(); ++i) points.push_back({locations[i], std::move(matrices[i])});
  return {std::move(name), std::move(description), make_tuple(n, std::move(points)), index, rigid};
}

}  // namespace

std::vector<CatalogEntry> builtin_catalog() {
  const Rational half(1, 2);
  std::vector<CatalogEntry> c;
  c.push_back(entry("kummer", "rank 1, one finite point: A_0 = 2, A_oo = 1/2",
                    {QMatrix{{2}}}, {0}, 2, true));
  c.push_back(entry("rank1_two_point", "rank 1 on 0, 1, oo: A_0 = 2, A_1 = 3, A_oo = 1/6",
                    {QMatrix{{2}}, QMatrix{{3}}}, {0, 1}, 2, true));
  c.push_back(entry("rank1_unit_infinity", "rank 1 on 0, 1 with trivial monodromy at infinity",
                    {QMatrix{{2}}, QMatrix{{half}}}, {0, 1}, 2, true));
  c.push_back(entry("hypergeometric2",
                    "rank 2 on 0, 1, oo, every local monodromy with two distinct eigenvalues; "
                    "A_1 is a pseudo-reflection",
                    {QMatrix{{2, 0}, {0, 3}}, QMatrix{{2, 1}, {1, 2}}}, {0, 1}, 2, true));
  c.push_back(entry("hypergeometric3",
                    "rank 3 Levelt pair: companion of (x-2)(x-3)(x+1) at 0, pseudo-reflection at 1",
                    {QMatrix{{0, 0, -6}, {1, 0, -1}, {0, 1, 4}},
                     QMatrix{{1, 0, Rational(28, 3)}, {0, 1, Rational(1, 6)}, {0, 0, Rational(5, 6)}}},
                    {0, 1}, 2, true));
  c.push_back(entry("nonrigid4", "rank 2 on 0, 1, 2, oo with distinct eigenvalues everywhere; index 0",
                    {QMatrix{{2, 0}, {0, 3}}, QMatrix{{2, 1}, {1, 2}}, QMatrix{{1, 2}, {0, -1}}}, {0, 1, 2}, 0,
                    false));
  c.push_back(entry("reducible_diagonal", "rank 2 diagonal tuple on 0, oo; reducible, so never rigid",
                    {QMatrix{{2, 0}, {0, 3}}}, {0}, 4, false));
  return c;
}

std::vector<CatalogEntry> load_catalog_directory(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& de : std::filesystem::directory_iterator(dir)) {
    if (de.is_regular_file() && de.path().extension() == ".json") files.push_back(de.path());
  }
  std::sort(files.begin(), files.end());

  std::vector<CatalogEntry> out;
  for (const auto& path : files) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    const auto j = detail::parse_json(buf.str());

    CatalogEntry e;
    e.name = path.stem().string();
    if (j.is_object() && j.contains("tuple")) {
      e.tuple = detail::tuple_from(j["tuple"]);
      if (j.contains("name")) e.name = j["name"].get<std::string>();
      if (j.contains("description")) e.description = j["description"].get<std::string>();
      const auto report = rigidity_report(e.tuple);
      e.expected_index = j.contains("expected_index") ? j["expected_index"].get<long long>() : report.index;
      e.expected_rigid = j.contains("expected_rigid") ? j["expected_rigid"].get<bool>() : report.physically_rigid;
    } else {
      e.tuple = detail::tuple_from(j);
      e.description = "loaded from " + path.filename().string();
      const auto report = rigidity_report(e.tuple);
      e.expected_index = report.index;
      e.expected_rigid = report.physically_rigid;
    }
    out.push_back(std::move(e));
  }
  return out;
}

void check_entry(const CatalogEntry& entry) {
  const auto report = rigidity_report(entry.tuple);
  if (report.index != entry.expected_index || report.physically_rigid != entry.expected_rigid) {
    throw Error(ErrorKind::Validation, "catalog entry " + entry.name + ": stored expectations (index " +
                                           std::to_string(entry.expected_index) + ") do not match recomputation (index " +
                                           std::to_string(report.index) + ")");
  }
}

std::vector<CatalogEntry> load_catalog() {
  auto catalog = builtin_catalog();
  if (const char* dir = std::getenv("RIGIDITY_LAB_CATALOG"); dir != nullptr && *dir != '\0') {
    auto extra = load_catalog_directory(dir);
    catalog.insert(catalog.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));
  }
  for (const auto& e : catalog) check_entry(e);
  return catalog;
}

const CatalogEntry* find_entry(std::span<const CatalogEntry> catalog, std::string_view name) {
  auto it = std::find_if(catalog.begin(), catalog.end(), [&](const CatalogEntry& e) { return e.name == name; });
  return it == catalog.end() ? nullptr : &*it;
}

}  // namespace rigidity
