#pragma once

#include "rigidity/campaign.hpp"
#include "rigidity/catalog.hpp"
#include "rigidity/fourier.hpp"
#include "rigidity/monodromy.hpp"
#include "rigidity/qmatrix.hpp"
#include "rigidity/theta_pair.hpp"

#include <span>
#include <string>
#include <string_view>

namespace rigidity {

// Wire formats. Rationals are strings "p/q" ("p" when q = 1); matrices are
// row-major arrays of rows. JSON output keeps a fixed field order so equal
// inputs give byte-identical text.
//
// Parsing throws Error(Parse) for malformed JSON and Error(Schema) when the
// document does not have the expected shape.

enum class Format { Json, Text };

QMatrix matrix_from_json(std::string_view text);
std::string matrix_to_json(const QMatrix& m);

/// {"dim_E", "dim_F", "u", "v"}
ThetaPair pair_from_json(std::string_view text);
std::string pair_to_json(const ThetaPair& p);

/// {"rank", "finite_points": [{"location", "matrix"}], "infinity_matrix"}.
/// A missing infinity_matrix is computed as (A_1 ... A_k)^{-1}. The tuple is
/// not validated here.
MonodromyTuple tuple_from_json(std::string_view text);
std::string tuple_to_json(const MonodromyTuple& t);

std::string render(const RigidityReport& r, Format format);
/// Local data plus centralizer dimensions, invariant factors and irregularity.
std::string render(const FourierLocalData& d, Format format);
std::string render(const PreservationReport& r, Format format);
/// {"trials_run", "all_equal", "failures", ...}
std::string render(const CampaignSummary& s, Format format);
std::string render_catalog_list(std::span<const CatalogEntry> catalog, Format format);

}  // namespace rigidity
