#pragma once

#include "rigidity/monodromy.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace rigidity {

struct CatalogEntry {
  std::string name;
  std::string description;
  MonodromyTuple tuple;
  long long expected_index = 0;
  bool expected_rigid = false;
};

/// Shipped examples: rank-1 Kummer, rank-1 on two and three finite points,
/// a hypergeometric-type rank-2 system, a non-rigid four-point rank-2
/// system and a reducible diagonal one.
std::vector<CatalogEntry> builtin_catalog();

/// Every *.json file in `dir`, sorted by file name. A file is either a bare
/// tuple (name = file stem, expectations recomputed) or an entry object
/// {"name", "description", "expected_index", "expected_rigid", "tuple"}.
std::vector<CatalogEntry> load_catalog_directory(const std::filesystem::path& dir);

/// Built-in entries plus, when RIGIDITY_LAB_CATALOG is set, the entries of
/// that directory. Every entry is checked with check_entry.
std::vector<CatalogEntry> load_catalog();

/// Recomputes index and rigidity; throws Error(Validation) on mismatch.
void check_entry(const CatalogEntry& entry);

/// nullptr when absent.
const CatalogEntry* find_entry(std::span<const CatalogEntry> catalog, std::string_view name);

}  // namespace rigidity
