// Command-line front end: matrices, single operators, straightening,
// the KL cross-check and the reference-table fixtures.

#include <CLI11.hpp>

#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qfock/qfock.hpp"

#ifndef QFOCK_DATA_DIR
#define QFOCK_DATA_DIR "data"
#endif

namespace {

using namespace qfock;

enum Exit { kOk = 0, kUsage = 1, kMismatch = 2, kInternal = 3 };

/// Thrown for input that parses but makes no sense.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  int n = 2;
  int l = 2;
  std::string charges = "0";
  int size = 0;
  std::string sign = "plus";
  std::string format = "json";
  std::string cache_dir;
  std::string partition;
  std::string multipartition;
  std::string generator = "f:0";
  std::string side = "N";
  bool oracle = false;
  std::string indices;
  int kl_bound = KazhdanLusztig::kDefaultLengthBound;
  std::string fixture_path = std::string(QFOCK_DATA_DIR) + "/appendix.json";
};

void add_ambient(CLI::App* app, Options& o) {
  app->add_option("--n", o.n, "dimension of the first factor")->check(CLI::Range(2, 64));
  app->add_option("--l", o.l, "dimension of the second factor")->check(CLI::Range(2, 64));
}

void add_charges(CLI::App* app, Options& o) {
  app->add_option("--s", o.charges, "global charge s, or component charges s_1,...,s_l");
}

std::vector<int> charge_list(const Options& o) {
  auto v = parse_int_list(o.charges);
  if (v.empty()) throw UsageError("--s needs at least one integer");
  return v;
}

BlockCache cache_for(const Options& o) {
  if (!o.cache_dir.empty()) return BlockCache(std::filesystem::path(o.cache_dir));
  return BlockCache::from_environment();
}

template <class Block>
void print_blocks(const std::vector<Block>& blocks, const std::string& format) {
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& b : blocks) arr.push_back(to_json(b));
    std::cout << Json{{"blocks", arr}}.dump(1) << "\n";
    return;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) std::cout << "\n";
    std::cout << (format == "tsv" ? to_tsv(blocks[i]) : to_latex(blocks[i]));
  }
}

/// Blocks selected by --s/--size: with l charges, all multipartitions of size
/// --size in that component; with one charge, the full degree block.
std::vector<BarMatrix> bar_blocks(const Options& o, const Straightener& st) {
  const auto ch = charge_list(o);
  const BlockCache cache = cache_for(o);
  if (ch.size() == 1) return {cache.bar_block(st, ch[0], o.size, {})};
  if (static_cast<int>(ch.size()) != o.l) throw UsageError("--s takes 1 or l charges here");
  std::vector<BarMatrix> out;
  const int s = std::accumulate(ch.begin(), ch.end(), 0);
  for (const auto& [d, labs] : labels_by_degree(st.ambient(), ch, o.size))
    out.push_back(restrict_block(cache.bar_block(st, s, d, ch), labs));
  return out;
}

std::vector<TransitionMatrix> d_blocks(const Options& o, const Straightener& st) {
  const Sign sign = parse_sign(o.sign);
  const auto ch = charge_list(o);
  if (ch.size() == 1) return {canonical_block(cache_for(o).bar_block(st, ch[0], o.size, {}), sign)};
  if (static_cast<int>(ch.size()) != o.l) throw UsageError("--s takes 1 or l charges here");
  if (!cache_for(o).enabled()) return multipartition_blocks(st, ch, o.size, sign);
  std::vector<TransitionMatrix> out;
  const int s = std::accumulate(ch.begin(), ch.end(), 0);
  for (const auto& [d, labs] : labels_by_degree(st.ambient(), ch, o.size))
    out.push_back(restrict_block(canonical_block(cache_for(o).bar_block(st, s, d, ch), sign), labs));
  return out;
}

/// The charged partition named by --partition (with one charge) or
/// --multipartition (with l charges for the l-labeling, n for the n-labeling).
ChargedPartition selected_vector(const Options& o, const Ambient& amb) {
  const auto ch = charge_list(o);
  if (!o.partition.empty() && !o.multipartition.empty())
    throw UsageError("give either --partition or --multipartition");
  if (!o.multipartition.empty()) {
    Multipartition mp(parse_components(o.multipartition), ch);
    if (static_cast<int>(ch.size()) == amb.l && mp.width() == static_cast<std::size_t>(amb.l))
      return iota_l_inv(mp, amb);
    if (static_cast<int>(ch.size()) == amb.n) return iota_n_inv(mp, amb);
    throw UsageError("--multipartition needs l (or n) components and as many charges");
  }
  if (ch.size() != 1) throw UsageError("--partition takes a single global charge");
  return {parse_partition(o.partition), ch[0]};
}

int run_dmat(const Options& o) {
  const Straightener st(Ambient(o.n, o.l));
  print_blocks(d_blocks(o, st), o.format);
  return kOk;
}

int run_amat(const Options& o) {
  const Straightener st(Ambient(o.n, o.l));
  print_blocks(bar_blocks(o, st), o.format);
  return kOk;
}

int run_bar(const Options& o) {
  const Ambient amb(o.n, o.l);
  const Straightener st(amb);
  const ChargedPartition cp = selected_vector(o, amb);
  const FockVector image = bar_fock(phi(cp, amb), st);
  Json coords = Json::array();
  for (const auto& [p, c] : phi_coordinates(image))
    coords.push_back({{"partition", to_json(p)}, {"coeff", to_json(c)}, {"text", c.to_string()}});
  std::cout << Json{{"input", to_json(cp.lambda)}, {"charge", cp.charge}, {"monomial", to_json(image)}, {"phi", coords}}.dump(1)
            << "\n";
  return kOk;
}

int run_act(const Options& o) {
  const Ambient amb(o.n, o.l);
  const Straightener st(amb);
  const ChargedPartition cp = selected_vector(o, amb);
  const Generator g = Generator::parse(o.generator);
  Side side;
  if (o.side == "N" || o.side == "n")
    side = Side::N;
  else if (o.side == "L" || o.side == "l")
    side = Side::L;
  else
    throw UsageError("--side must be N or L");
  const FockVector v = FockVector::monomial(amb, cp);
  const FockVector comb = chevalley_action(g, side, v);
  Json out{{"generator", g.to_string()}, {"side", o.side}, {"result", to_json(comb)}};
  if (o.oracle) {
    const FockVector w = wedge_action_oracle(g, side, v, st);
    out["oracle"] = to_json(w);
    out["agree"] = w == comb;
    std::cout << out.dump(1) << "\n";
    return w == comb ? kOk : kMismatch;
  }
  std::cout << out.dump(1) << "\n";
  return kOk;
}

int run_straighten(const Options& o) {
  const Straightener st(Ambient(o.n, o.l));
  const auto k = parse_int_list(o.indices);
  if (k.empty()) throw UsageError("--indices needs at least one integer");
  std::cout << to_json(st.normal_form(k)).dump(1) << "\n";
  return kOk;
}

int run_klcheck(const Options& o) {
  const Ambient amb(o.n, o.l);
  const Straightener st(amb);
  const Sign sign = parse_sign(o.sign);
  int disagreements = 0;
  Json entries = Json::array();
  for (const auto& D : d_blocks(o, st)) {
    KazhdanLusztig kl(D.degree == 0 ? 1 : D.degree, o.kl_bound);
    for (std::size_t i = 0; i < D.dim(); ++i)
      for (std::size_t j = 0; j < D.dim(); ++j) {
        const LaurentPoly via_kl = d_via_kl({D.labels[i], D.charge}, {D.labels[j], D.charge}, amb, sign, kl);
        const bool ok = via_kl == D.entries[i][j];
        disagreements += !ok;
        entries.push_back({{"lambda", to_json(D.labels[i])},
                           {"mu", to_json(D.labels[j])},
                           {"canonical", D.entries[i][j].to_string()},
                           {"kl", via_kl.to_string()},
                           {"agree", ok}});
      }
  }
  if (o.format == "json") {
    std::cout << Json{{"entries", entries}, {"disagreements", disagreements}}.dump(1) << "\n";
  } else {
    std::cout << "lambda\tmu\tcanonical\tkl\tstatus\n";
    for (const auto& e : entries)
      std::cout << Partition(e["lambda"].get<std::vector<int>>()).to_string() << "\t"
                << Partition(e["mu"].get<std::vector<int>>()).to_string() << "\t" << e["canonical"].get<std::string>()
                << "\t" << e["kl"].get<std::string>() << "\t" << (e["agree"].get<bool>() ? "agree" : "disagree") << "\n";
  }
  return disagreements ? kMismatch : kOk;
}

int run_fixtures(const Options& o, bool verify) {
  const FixtureSet fs = load_fixtures(o.fixture_path);
  if (!verify) {
    Json blocks = Json::array();
    for (const auto& b : fs.blocks)
      blocks.push_back({{"multipartition_size", b.multipartition_size},
                        {"degree", b.partitions.empty() ? 0 : b.partitions.front().size()},
                        {"dim", b.partitions.size()}});
    std::cout << Json{{"path", o.fixture_path}, {"blocks", blocks}}.dump(1) << "\n";
    return kOk;
  }
  const Straightener st(fs.ambient);
  const auto problems = verify_fixtures(fs, st);
  for (const auto& p : problems) std::cout << "MISMATCH " << p << "\n";
  std::cout << fs.blocks.size() << " blocks checked, " << problems.size() << " mismatches\n";
  return problems.empty() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical bases of higher-level q-deformed Fock spaces"};
  app.require_subcommand(1);
  Options o;
  int code = kOk;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "json, tsv or latex")->check(CLI::IsMember({"json", "tsv", "latex"}));
  };
  auto add_cache = [&](CLI::App* c) {
    c->add_option("--cache-dir", o.cache_dir, "bar-matrix cache directory (default: $QFOCK_CACHE_DIR)");
  };

  auto* dmat = app.add_subcommand("dmat", "transition matrices D+ or D-");
  add_ambient(dmat, o);
  add_charges(dmat, o);
  dmat->add_option("--size", o.size, "|lambda_l| with l charges, |lambda| with one")->required()->check(CLI::NonNegativeNumber);
  dmat->add_option("--sign", o.sign, "plus or minus")->check(CLI::IsMember({"plus", "minus", "+", "-"}));
  add_format(dmat);
  add_cache(dmat);

  auto* amat = app.add_subcommand("amat", "bar-involution matrices A");
  add_ambient(amat, o);
  add_charges(amat, o);
  amat->add_option("--size", o.size, "|lambda_l| with l charges, |lambda| with one")->required()->check(CLI::NonNegativeNumber);
  add_format(amat);
  add_cache(amat);

  auto* bar = app.add_subcommand("bar", "bar involution of one phi basis vector");
  add_ambient(bar, o);
  add_charges(bar, o);
  bar->add_option("--partition,--lambda", o.partition, "parts, e.g. 2,1");
  bar->add_option("--multipartition", o.multipartition, "components, e.g. 2,1|1");

  auto* act = app.add_subcommand("act", "one Chevalley generator on a basis vector");
  add_ambient(act, o);
  add_charges(act, o);
  act->add_option("--partition,--lambda", o.partition, "parts, e.g. 2,1");
  act->add_option("--multipartition", o.multipartition, "components, e.g. 2,1|1");
  act->add_option("--gen", o.generator, "generator: f:i, e:i or t:i");
  act->add_option("--side", o.side, "N (U_q(sl_n)) or L (U_q(sl_l))");
  act->add_flag("--oracle", o.oracle, "also compute through the coproduct on wedges and compare");

  auto* straighten = app.add_subcommand("straighten", "normal form of a finite wedge monomial");
  add_ambient(straighten, o);
  straighten->add_option("--indices", o.indices, "k_1,...,k_r")->required();

  auto* klcheck = app.add_subcommand("klcheck", "compare D with the Kazhdan-Lusztig expression");
  add_ambient(klcheck, o);
  add_charges(klcheck, o);
  klcheck->add_option("--size", o.size, "|lambda_l| with l charges, |lambda| with one")->required()->check(CLI::NonNegativeNumber);
  klcheck->add_option("--sign", o.sign, "plus or minus")->check(CLI::IsMember({"plus", "minus", "+", "-"}));
  klcheck->add_option("--kl-bound", o.kl_bound, "largest Weyl group length to expand");
  klcheck->add_option("--format", o.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto* fixtures = app.add_subcommand("fixtures", "reference-table fixtures");
  fixtures->require_subcommand(1);
  auto* load = fixtures->add_subcommand("load", "parse and summarize the fixture file");
  auto* verify = fixtures->add_subcommand("verify", "recompute and diff every fixture block");
  for (auto* c : {load, verify}) c->add_option("--path", o.fixture_path, "fixture JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*dmat) code = run_dmat(o);
    else if (*amat) code = run_amat(o);
    else if (*bar) code = run_bar(o);
    else if (*act) code = run_act(o);
    else if (*straighten) code = run_straighten(o);
    else if (*klcheck) code = run_klcheck(o);
    else if (*load) code = run_fixtures(o, false);
    else if (*verify) code = run_fixtures(o, true);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const ArithmeticError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const LengthBoundError& e) {
    std::cerr << "error: " << e.what() << " (raise --kl-bound)\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return code;
}
