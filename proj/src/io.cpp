#include "coxlat/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>

#include "coxlat/error.hpp"

namespace coxlat::io {

namespace {

Error bad_json(const std::string& what) { return Error(ErrorCode::InvalidInput, "JSON: " + what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw bad_json(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::int64_t small_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw bad_json(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace

json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
      throw bad_json("malformed integer string " + j.get<std::string>());
    }
  }
  throw bad_json("expected an integer");
}

json poly_to_json(const IntPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(integer_to_json(c));
  return arr;
}

json series_to_json(const PowerSeries& s) {
  json arr = json::array();
  for (const auto& c : s.coeffs()) arr.push_back(integer_to_json(c));
  return {{"order", s.order()}, {"coeffs", arr}};
}

json lattice_to_json(const Lattice& lattice) {
  json rows = json::array();
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < lattice.rank(); ++j) row.push_back(integer_to_json(lattice.pairing(i, j)));
    rows.push_back(row);
  }
  return {{"labels", lattice.labels()}, {"gram", rows}};
}

Lattice lattice_from_json(const json& j) {
  const json& rows = member(j, "gram");
  if (!rows.is_array()) throw bad_json("\"gram\" must be an array of rows");
  const std::size_t n = rows.size();
  IntMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw bad_json("\"gram\" must be square");
    for (std::size_t k = 0; k < n; ++k) gram(i, k) = integer_from_json(rows[i][k]);
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const json& lj = j.at("labels");
    if (!lj.is_array() || lj.size() != n) throw bad_json("\"labels\" must list one name per row");
    for (const auto& l : lj) {
      if (!l.is_string()) throw bad_json("labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  }
  return Lattice(std::move(labels), std::move(gram));
}

json invariants_to_json(const OrbitInvariants& inv) {
  json pairs = json::array();
  for (const auto& p : inv.pairs) pairs.push_back({p.alpha, p.beta});
  json out{{"g", inv.g}, {"b", inv.b}, {"pairs", pairs}, {"alpha", inv.alphas()}};
  try {
    out["kind"] = std::string(kind_name(validate(inv)));
  } catch (const Error&) {
  }
  return out;
}

OrbitInvariants invariants_from_json(const json& j) {
  if (!j.is_object()) throw bad_json("invariants must be an object");
  if (j.contains("pairs")) {
    OrbitInvariants inv;
    inv.g = small_int(member(j, "g"), "g");
    inv.b = small_int(member(j, "b"), "b");
    const json& pairs = j.at("pairs");
    if (!pairs.is_array()) throw bad_json("\"pairs\" must be an array");
    for (const auto& p : pairs) {
      if (!p.is_array() || p.size() != 2) throw bad_json("each pair must be [alpha, beta]");
      inv.pairs.push_back({small_int(p[0], "alpha"), small_int(p[1], "beta")});
    }
    std::stable_sort(inv.pairs.begin(), inv.pairs.end(),
                     [](const OrbitPair& x, const OrbitPair& y) { return x.alpha < y.alpha; });
    return inv;
  }
  const json& kind = member(j, "kind");
  const json& alpha = member(j, "alpha");
  if (!kind.is_string() || !alpha.is_array()) throw bad_json("shorthand needs a kind string and an alpha array");
  std::vector<std::int64_t> as;
  for (const auto& a : alpha) as.push_back(small_int(a, "alpha"));
  const std::string k = kind.get<std::string>();
  if (k == "kleinian") return OrbitInvariants::kleinian(as);
  if (k == "fuchsian") return OrbitInvariants::fuchsian(as);
  throw bad_json("kind must be \"kleinian\" or \"fuchsian\"");
}

json tower_to_json(const LatticeTower& tower, const std::optional<OrbitInvariants>& inv) {
  json out{{"minus", lattice_to_json(tower.minus.lattice)},
           {"zero", lattice_to_json(tower.zero.lattice)},
           {"plus", lattice_to_json(tower.plus.lattice)}};
  if (inv) out["invariants"] = invariants_to_json(*inv);
  return out;
}

GramDocument gram_document_from_json(const json& j) {
  if (!j.is_object()) throw bad_json("Gram document must be an object");
  std::optional<OrbitInvariants> inv;
  if (j.contains("invariants")) inv = invariants_from_json(j.at("invariants"));
  if (j.contains("minus")) return {lattice_from_json(j.at("minus")), inv};
  return {lattice_from_json(j), inv};
}

json report_to_json(const VerificationReport& report) {
  json out{{"input", report.input},
           {"check", report.check},
           {"status", std::string(status_name(report.status))},
           {"order", report.order},
           {"elapsed_ms", report.elapsed_ms}};
  if (report.witness) {
    out["witness"] = {{"index", report.witness->index},
                      {"expected", report.witness->expected},
                      {"got", report.witness->got}};
  } else {
    out["witness"] = nullptr;
  }
  if (!report.detail.empty()) out["detail"] = report.detail;
  return out;
}

std::vector<std::int64_t> parse_alpha_list(const std::string& text) {
  std::vector<std::int64_t> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  auto bad = [&] { return Error(ErrorCode::InvalidInput, "'" + text + "' is not a comma-separated integer list"); };
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) throw bad();
    item = item.substr(first, item.find_last_not_of(" \t") - first + 1);
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != item.size()) throw bad();
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path + ": " + e.what());
  }
}

}  // namespace coxlat::io
