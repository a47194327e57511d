#pragma once

// JSON, TSV and LaTeX renderings, the reference-table fixture format and an
// optional on-disk cache of bar-matrix blocks.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qfock/canonical.hpp"
#include "qfock/combinatorics.hpp"
#include "qfock/fock.hpp"
#include "qfock/involution.hpp"
#include "qfock/laurent.hpp"
#include "qfock/wedge.hpp"

namespace qfock {

using Json = nlohmann::ordered_json;

/// {"exponent": coefficient, ...}; coefficients outside int64 become strings.
inline Json to_json(const LaurentPoly& p) {
  Json j = Json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      j[std::to_string(e)] = static_cast<long long>(c);
    else
      j[std::to_string(e)] = c.str();
  }
  return j;
}

inline LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial must be a JSON object");
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [k, v] : j.items()) {
    Integer c = v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<long long>());
    terms.emplace_back(std::stoi(k), std::move(c));
  }
  return LaurentPoly::from_terms(std::move(terms));
}

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Json to_json(const WedgeVector& v) {
  Json terms = Json::array();
  for (const auto& [k, c] : v.terms()) terms.push_back({{"indices", k}, {"coeff", to_json(c)}, {"text", c.to_string()}});
  return {{"terms", terms}};
}

inline Json to_json(const FockVector& v) {
  Json terms = Json::array();
  for (const auto& [p, c] : v.terms()) {
    const ChargedPartition cp{p, v.charge()};
    terms.push_back({{"partition", to_json(p)},
                     {"multipartition", iota_l(cp, v.ambient()).to_cli()},
                     {"coeff", to_json(c)},
                     {"text", c.to_string()}});
  }
  return {{"n", v.ambient().n}, {"l", v.ambient().l}, {"charge", v.charge()}, {"terms", terms}};
}

namespace detail {

template <class Block>
Json block_labels_json(const Block& blk) {
  Json labels = Json::array();
  for (const auto& p : blk.labels) {
    const Multipartition mp = iota_l({p, blk.charge}, blk.ambient);
    labels.push_back({{"partition", to_json(p)}, {"multipartition", mp.to_cli()}, {"charges", mp.charges}});
  }
  return labels;
}

/// columns[j][i] = entries[j][i]: the column of label j lists its expansion.
template <class Block>
Json block_columns_json(const Block& blk) {
  Json cols = Json::array();
  for (std::size_t j = 0; j < blk.labels.size(); ++j) {
    Json col = Json::array();
    for (std::size_t i = 0; i < blk.labels.size(); ++i) col.push_back(to_json(blk.entries[j][i]));
    cols.push_back(col);
  }
  return cols;
}

}  // namespace detail

inline Json to_json(const TransitionMatrix& D) {
  return {{"kind", "D"},
          {"sign", sign_name(D.sign)},
          {"n", D.ambient.n},
          {"l", D.ambient.l},
          {"charge", D.charge},
          {"degree", D.degree},
          {"labels", detail::block_labels_json(D)},
          {"columns", detail::block_columns_json(D)}};
}

inline Json to_json(const BarMatrix& A) {
  return {{"kind", "A"},
          {"n", A.ambient.n},
          {"l", A.ambient.l},
          {"charge", A.charge},
          {"degree", A.degree},
          {"labels", detail::block_labels_json(A)},
          {"columns", detail::block_columns_json(A)}};
}

/// Rows labelled "mu | mu_l", one column per lambda: cell (mu, lambda) is the
/// coefficient of phi(mu) in the image of lambda.
template <class Block>
std::string to_tsv(const Block& blk) {
  std::ostringstream os;
  os << "partition\tmultipartition";
  for (const auto& p : blk.labels) os << "\t" << p.to_string();
  os << "\n";
  for (std::size_t i = 0; i < blk.labels.size(); ++i) {
    os << blk.labels[i].to_string() << "\t" << iota_l({blk.labels[i], blk.charge}, blk.ambient).label();
    for (std::size_t j = 0; j < blk.labels.size(); ++j) os << "\t" << blk.entries[j][i].to_string();
    os << "\n";
  }
  return os.str();
}

inline std::string latex_poly(const LaurentPoly& p) {
  if (p.is_zero()) return "\\cdot";
  std::string s;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const Integer mag = c < 0 ? Integer(-c) : c;
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      s += mag.str();
      continue;
    }
    if (mag != 1) s += mag.str() + "\\,";
    s += e == 1 ? "q" : "{q^{" + std::to_string(e) + "}}";
  }
  return s;
}

inline std::string latex_partition(const Partition& p) {
  if (p.empty()) return "\\emptyset";
  std::string s = p.to_exponent_string();
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '^') {
      std::size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out += "^{" + s.substr(i + 1, j - i - 1) + "}";
      i = j - 1;
    } else {
      out += s[i];
    }
  }
  return out;
}

template <class Block>
std::string to_latex(const Block& blk) {
  std::ostringstream os;
  os << "\\begin{array}{l|l|";
  for (std::size_t j = 0; j < blk.labels.size(); ++j) os << " c";
  os << "}\n";
  for (std::size_t i = 0; i < blk.labels.size(); ++i) {
    const Multipartition mp = iota_l({blk.labels[i], blk.charge}, blk.ambient);
    os << latex_partition(blk.labels[i]) << " & (";
    for (std::size_t b = 0; b < mp.width(); ++b) os << (b ? ", " : "") << latex_partition(mp.components[b]);
    os << ")";
    for (std::size_t j = 0; j < blk.labels.size(); ++j) os << " & " << latex_poly(blk.entries[j][i]);
    os << (i + 1 < blk.labels.size() ? " \\cr\n" : "\n");
  }
  os << "\\end{array}\n";
  return os.str();
}

/// One reference table: labels as (lambda, lambda_l) and rows[i][j] = D(lambda_j, mu_i).
struct FixtureBlock {
  int multipartition_size = 0;
  std::vector<Partition> partitions;
  std::vector<Multipartition> multipartitions;
  std::vector<std::vector<LaurentPoly>> rows;
};

struct FixtureSet {
  Ambient ambient;
  std::vector<int> charges;
  Sign sign = Sign::Plus;
  std::vector<FixtureBlock> blocks;
};

inline FixtureSet parse_fixtures(const Json& doc) {
  FixtureSet fs;
  fs.ambient = Ambient(doc.at("n").get<int>(), doc.at("l").get<int>());
  fs.charges = doc.at("charges").get<std::vector<int>>();
  fs.sign = parse_sign(doc.at("sign").get<std::string>());
  for (const auto& b : doc.at("blocks")) {
    FixtureBlock fb;
    fb.multipartition_size = b.at("multipartition_size").get<int>();
    for (const auto& lab : b.at("labels")) {
      fb.partitions.push_back(Partition(parse_int_list(lab.at("partition").get<std::string>())));
      fb.multipartitions.emplace_back(parse_components(lab.at("multipartition").get<std::string>()), fs.charges);
    }
    for (const auto& row : b.at("rows")) {
      std::vector<LaurentPoly> r;
      for (const auto& cell : row) {
        const std::string t = cell.get<std::string>();
        r.push_back(t == "." ? LaurentPoly{} : parse_laurent(t));
      }
      if (r.size() != fb.partitions.size()) throw std::invalid_argument("fixture row length does not match its labels");
      fb.rows.push_back(std::move(r));
    }
    if (fb.rows.size() != fb.partitions.size()) throw std::invalid_argument("fixture is not square");
    fs.blocks.push_back(std::move(fb));
  }
  return fs;
}

inline FixtureSet load_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fixture file " + path.string());
  return parse_fixtures(Json::parse(in));
}

/// Compares every fixture block with the computed matrices: label bijection,
/// completeness of each block, and every entry. Returns the discrepancies.
inline std::vector<std::string> verify_fixtures(const FixtureSet& fs, const Straightener& st) {
  std::vector<std::string> problems;
  if (!(st.ambient() == fs.ambient)) throw std::invalid_argument("verify_fixtures: ambient mismatch");
  std::map<int, std::vector<TransitionMatrix>> computed;
  for (std::size_t bi = 0; bi < fs.blocks.size(); ++bi) {
    const FixtureBlock& fb = fs.blocks[bi];
    const std::string where = "block " + std::to_string(bi) + " (|lambda_l|=" + std::to_string(fb.multipartition_size) + ")";
    const int s = std::accumulate(fs.charges.begin(), fs.charges.end(), 0);
    for (std::size_t i = 0; i < fb.partitions.size(); ++i) {
      const Multipartition got = iota_l({fb.partitions[i], s}, fs.ambient);
      if (got != fb.multipartitions[i])
        problems.push_back(where + ": " + fb.partitions[i].to_string() + " labels " + got.label() + ", table says " +
                           fb.multipartitions[i].label());
    }
    if (!computed.count(fb.multipartition_size))
      computed[fb.multipartition_size] = multipartition_blocks(st, fs.charges, fb.multipartition_size, fs.sign);
    const TransitionMatrix* match = nullptr;
    for (const auto& D : computed[fb.multipartition_size])
      if (!fb.partitions.empty() && D.degree == fb.partitions.front().size()) match = &D;
    if (!match) {
      problems.push_back(where + ": no computed block of that degree");
      continue;
    }
    if (match->labels != fb.partitions) {
      problems.push_back(where + ": computed block has " + std::to_string(match->dim()) + " labels in a different set or order");
      continue;
    }
    for (std::size_t i = 0; i < fb.rows.size(); ++i)
      for (std::size_t j = 0; j < fb.rows.size(); ++j)
        if (match->entries[j][i] != fb.rows[i][j])
          problems.push_back(where + ": D(" + fb.multipartitions[j].label() + ", " + fb.multipartitions[i].label() +
                             ") = " + match->entries[j][i].to_string() + ", table says " + fb.rows[i][j].to_string());
  }
  return problems;
}

/// Versioned on-disk store of bar-matrix blocks. A missing or unreadable
/// entry is recomputed; results never depend on the cache.
class BlockCache {
public:
  static constexpr int kVersion = 1;

  explicit BlockCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}
  /// Directory from QFOCK_CACHE_DIR, if set and non-empty.
  static BlockCache from_environment() {
    const char* env = std::getenv("QFOCK_CACHE_DIR");
    if (env && *env) return BlockCache(std::filesystem::path(env));
    return BlockCache(std::nullopt);
  }
  bool enabled() const { return dir_.has_value(); }

  BarMatrix bar_block(const Straightener& st, int charge, int d, const std::vector<int>& component) const {
    if (!dir_) return bar_matrix_block(st, charge, d, component);
    const auto path = *dir_ / key(st.ambient(), charge, d, component);
    if (auto hit = read(path, st.ambient(), charge, d, component)) return *hit;
    BarMatrix A = bar_matrix_block(st, charge, d, component);
    write(path, A);
    return A;
  }

private:
  static std::string key(const Ambient& amb, int charge, int d, const std::vector<int>& comp) {
    std::string k = "A-v" + std::to_string(kVersion) + "-n" + std::to_string(amb.n) + "-l" + std::to_string(amb.l) +
                    "-s" + std::to_string(charge) + "-d" + std::to_string(d);
    for (int c : comp) k += "_" + std::to_string(c);
    return k + ".json";
  }

  static std::optional<BarMatrix> read(const std::filesystem::path& path, const Ambient& amb, int charge, int d,
                                       const std::vector<int>& comp) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
      const Json j = Json::parse(in);
      if (j.at("version").get<int>() != kVersion) return std::nullopt;
      BarMatrix A;
      A.ambient = amb;
      A.charge = charge;
      A.degree = d;
      A.component = comp;
      A.labels = block_labels(amb, charge, d, comp);
      const auto& rows = j.at("rows");
      if (rows.size() != A.labels.size()) return std::nullopt;
      for (const auto& r : rows) {
        std::vector<LaurentPoly> row;
        for (const auto& c : r) row.push_back(laurent_from_json(c));
        if (row.size() != A.labels.size()) return std::nullopt;
        A.entries.push_back(std::move(row));
      }
      return A;
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  static void write(const std::filesystem::path& path, const BarMatrix& A) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    Json rows = Json::array();
    for (const auto& r : A.entries) {
      Json row = Json::array();
      for (const auto& c : r) row.push_back(to_json(c));
      rows.push_back(row);
    }
    const auto tmp = path.string() + ".tmp";
    {
      std::ofstream out(tmp);
      if (!out) return;
      out << Json{{"version", kVersion}, {"rows", rows}}.dump() << "\n";
    }
    std::filesystem::rename(tmp, path, ec);
  }

  std::optional<std::filesystem::path> dir_;
};

}  // namespace qfock
