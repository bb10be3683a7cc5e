#include "rigidity/io.hpp"

#include "json_detail.hpp"
#include "rigidity/error.hpp"
#include "rigidity/linalg.hpp"
#include "rigidity/similarity.hpp"

#include <sstream>

namespace rigidity {

namespace detail {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from(const Json& j, std::string_view field) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
      throw Error(ErrorKind::Schema, "schema violation: " + std::string(field) + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  throw Error(ErrorKind::Schema,
              "schema violation: " + std::string(field) + " must be a rational string \"p/q\" or an integer");
}

Json matrix_json(const QMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(rational_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

QMatrix matrix_from(const Json& j, std::string_view field, std::optional<std::pair<std::size_t, std::size_t>> shape) {
  const std::string where(field);
  if (!j.is_array()) throw Error(ErrorKind::Schema, "schema violation: " + where + " must be an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
  if (shape) {
    if (shape->first == 0) {
      if (rows != 0) throw Error(ErrorKind::Schema, "schema violation: " + where + " must be empty");
      return QMatrix(0, shape->second);
    }
    cols = shape->second;
    if (rows != shape->first) {
      throw Error(ErrorKind::Schema, "schema violation: " + where + " must have " + std::to_string(shape->first) +
                                         " rows");
    }
  }
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || row.size() != cols) {
      throw Error(ErrorKind::Schema, "schema violation: " + where + " rows must be arrays of equal length " +
                                         std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from(row[c], where);
  }
  return m;
}

Json tuple_json(const MonodromyTuple& t) {
  Json points = Json::array();
  for (const auto& pt : t.finite_points) {
    points.push_back(Json{{"location", rational_json(pt.location)}, {"matrix", matrix_json(pt.monodromy)}});
  }
  return Json{{"rank", t.rank}, {"finite_points", std::move(points)}, {"infinity_matrix", matrix_json(t.infinity_matrix)}};
}

MonodromyTuple tuple_from(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Schema, "schema violation: tuple must be a JSON object");
  if (!j.contains("rank") || !j["rank"].is_number_integer() || j["rank"].get<long long>() < 1) {
    throw Error(ErrorKind::Schema, "schema violation: \"rank\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(j["rank"].get<long long>());
  if (!j.contains("finite_points") || !j["finite_points"].is_array()) {
    throw Error(ErrorKind::Schema, "schema violation: \"finite_points\" must be an array");
  }

  std::vector<SingularPoint> points;
  for (std::size_t i = 0; i < j["finite_points"].size(); ++i) {
    const auto& p = j["finite_points"][i];
    const std::string where = "finite_points[" + std::to_string(i) + "]";
    if (!p.is_object() || !p.contains("location") || !p.contains("matrix")) {
      throw Error(ErrorKind::Schema, "schema violation: " + where + " needs \"location\" and \"matrix\"");
    }
    points.push_back({rational_from(p["location"], where + ".location"),
                      matrix_from(p["matrix"], where + ".matrix", std::pair{n, n})});
  }

  if (j.contains("infinity_matrix") && !j["infinity_matrix"].is_null()) {
    MonodromyTuple t;
    t.rank = n;
    t.finite_points = std::move(points);
    t.infinity_matrix = matrix_from(j["infinity_matrix"], "infinity_matrix", std::pair{n, n});
    return t;
  }
  return make_tuple(n, std::move(points));
}

}  // namespace detail

using detail::Json;

QMatrix matrix_from_json(std::string_view text) { return detail::matrix_from(detail::parse_json(text), "matrix"); }

std::string matrix_to_json(const QMatrix& m) { return detail::matrix_json(m).dump(); }

ThetaPair pair_from_json(std::string_view text) {
  const Json j = detail::parse_json(text);
  for (const char* key : {"dim_E", "dim_F"}) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 0) {
      throw Error(ErrorKind::Schema, std::string("schema violation: \"") + key + "\" must be a non-negative integer");
    }
  }
  if (!j.contains("u") || !j.contains("v")) throw Error(ErrorKind::Schema, "schema violation: pair needs \"u\" and \"v\"");
  const auto e = j["dim_E"].get<std::size_t>();
  const auto f = j["dim_F"].get<std::size_t>();
  return ThetaPair(detail::matrix_from(j["u"], "u", std::pair{f, e}), detail::matrix_from(j["v"], "v", std::pair{e, f}));
}

std::string pair_to_json(const ThetaPair& p) {
  return Json{{"dim_E", p.dim_E()},
              {"dim_F", p.dim_F()},
              {"u", detail::matrix_json(p.u())},
              {"v", detail::matrix_json(p.v())}}
      .dump();
}

MonodromyTuple tuple_from_json(std::string_view text) { return detail::tuple_from(detail::parse_json(text)); }

std::string tuple_to_json(const MonodromyTuple& t) { return detail::tuple_json(t).dump(2); }

namespace {

Json polynomial_json(const QPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(to_string(c));
  return coeffs;
}

std::string join_factors(const SimilarityInvariant& inv) {
  std::string s;
  for (const auto& f : inv.invariant_factors) {
    if (!s.empty()) s += ", ";
    s += to_string(f);
  }
  return s.empty() ? "(none)" : s;
}

}  // namespace

std::string render(const RigidityReport& r, Format format) {
  if (format == Format::Json) {
    return Json{{"rank", r.rank},
                {"num_points", r.num_points},
                {"centralizer_dims", r.centralizer_dims},
                {"index", r.index},
                {"irreducible", r.irreducible},
                {"physically_rigid", r.physically_rigid}}
        .dump(2);
  }
  std::ostringstream os;
  os << "rank:              " << r.rank << "\n"
     << "singular points:   " << r.num_points << " (including infinity)\n"
     << "dim Z(A_i):        ";
  for (std::size_t i = 0; i < r.centralizer_dims.size(); ++i) os << (i ? " " : "") << r.centralizer_dims[i];
  os << "\n"
     << "rigidity index:    " << r.index << "\n"
     << "irreducible:       " << (r.irreducible ? "yes" : "no") << "\n"
     << "physically rigid:  " << (r.physically_rigid ? "yes" : "no");
  return os.str();
}

std::string render(const FourierLocalData& d, Format format) {
  const SimilarityInvariant zero_inv = invariant_factors(d.zero_monodromy);
  const std::size_t zero_z = centralizer_dimension(d.zero_monodromy);

  if (format == Format::Json) {
    Json comps = Json::array();
    for (const auto& c : d.components) {
      comps.push_back(Json{{"exp_coefficient", to_string(c.coefficient)},
                           {"dimension", c.dimension},
                           {"regular_monodromy", detail::matrix_json(c.regular_monodromy)},
                           {"centralizer_dim", centralizer_dimension(c.regular_monodromy)}});
    }
    Json factors = Json::array();
    for (const auto& f : zero_inv.invariant_factors) factors.push_back(polynomial_json(f));
    return Json{{"source_rank", d.source_rank},
                {"rank_hat", d.rank_hat},
                {"components", std::move(comps)},
                {"zero_monodromy", detail::matrix_json(d.zero_monodromy)},
                {"zero_centralizer_dim", zero_z},
                {"zero_invariant_factors", std::move(factors)},
                {"irregularity", irregularity_end(d)},
                {"warnings", d.warnings}}
        .dump(2);
  }
  std::ostringstream os;
  for (const auto& w : d.warnings) os << "warning: " << w << "\n";
  os << "source rank:       " << d.source_rank << "\n"
     << "rank at 0:         " << d.rank_hat << "\n"
     << "components at infinity (exp(c/tau) x R):\n";
  for (const auto& c : d.components) {
    os << "  c = " << to_string(c.coefficient) << ": dim " << c.dimension << ", T = " << to_string(c.regular_monodromy)
       << ", dim Z = " << centralizer_dimension(c.regular_monodromy) << "\n";
  }
  os << "monodromy at 0:    " << to_string(d.zero_monodromy) << "\n"
     << "invariant factors: " << join_factors(zero_inv) << "\n"
     << "dim Z(T_0):        " << zero_z << "\n"
     << "irregularity:      " << irregularity_end(d);
  return os.str();
}

std::string render(const PreservationReport& r, Format format) {
  if (format == Format::Json) {
    Json ids = Json::array();
    for (const auto& p : r.per_point_identities) ids.push_back(Json{{"point", p.point}, {"lhs", p.lhs}, {"rhs", p.rhs}});
    return Json{{"rig_source", r.rig_source},
                {"rig_fourier", r.rig_fourier},
                {"equal", r.equal},
                {"hypothesis_satisfied", r.hypothesis_satisfied},
                {"rank_hat", r.data.rank_hat},
                {"irregularity", r.irregularity},
                {"per_point_identities", std::move(ids)}}
        .dump(2);
  }
  std::ostringstream os;
  if (!r.hypothesis_satisfied) os << "warning: input is reducible; equality below is not asserted\n";
  os << "rig(M):            " << r.rig_source << "\n"
     << "rig(M_F):          " << r.rig_fourier << "\n"
     << "preserved:         " << (r.equal ? "yes" : "no") << "\n"
     << "irregularity:      " << r.irregularity << "\n"
     << "local identities (lhs = rhs):";
  for (const auto& p : r.per_point_identities) {
    os << "\n  " << p.point << ": " << p.lhs << " = " << p.rhs << (p.lhs == p.rhs ? "" : "  FAILED");
  }
  return os.str();
}

std::string render(const CampaignSummary& s, Format format) {
  if (format == Format::Json) {
    Json failures = Json::array();
    for (const auto& f : s.failures) failures.push_back(Json{{"trial", f.trial}, {"seed", f.seed}, {"reason", f.reason}});
    return Json{{"trials_run", s.trials_run},
                {"all_equal", s.all_equal},
                {"failures", std::move(failures)},
                {"corollary_failures", s.corollary_failures},
                {"discarded_reducible", s.discarded_reducible}}
        .dump(2);
  }
  std::ostringstream os;
  os << "trials run:          " << s.trials_run << "\n"
     << "all equal:           " << (s.all_equal ? "yes" : "no") << "\n"
     << "corollary failures:  " << s.corollary_failures << "\n"
     << "discarded reducible: " << s.discarded_reducible;
  for (const auto& f : s.failures) os << "\n  trial " << f.trial << " (seed " << f.seed << "): " << f.reason;
  return os.str();
}

std::string render_catalog_list(std::span<const CatalogEntry> catalog, Format format) {
  if (format == Format::Json) {
    Json list = Json::array();
    for (const auto& e : catalog) {
      list.push_back(Json{{"name", e.name},
                          {"description", e.description},
                          {"rank", e.tuple.rank},
                          {"num_points", e.tuple.num_finite() + 1},
                          {"expected_index", e.expected_index},
                          {"expected_rigid", e.expected_rigid}});
    }
    return list.dump(2);
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const auto& e = catalog[i];
    if (i) os << "\n";
    os << e.name << "  (rank " << e.tuple.rank << ", " << e.tuple.num_finite() + 1 << " points, index "
       << e.expected_index << (e.expected_rigid ? ", rigid" : ", not rigid") << ")  " << e.description;
  }
  return os.str();
}

}  // namespace rigidity
