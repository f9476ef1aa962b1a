#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <stdexcept>

#include "toricschubert/classify.hpp"
#include "toricschubert/errors.hpp"
#include "toricschubert/fan.hpp"
#include "toricschubert/oracles.hpp"
#include "toricschubert/partition.hpp"

namespace toricschubert::cli {

namespace {

constexpr int kMaxN = 12;
constexpr int kMaxD = 6;
constexpr int kOracleMaxN = 7;
constexpr int kOracleMaxD = 4;

struct RunConfig {
  std::optional<int> n;
  std::optional<int> d;
  std::optional<std::string> perm;
  std::optional<std::string> partition;
  std::optional<std::string> word;
  std::string space = "grassmannian";
  std::optional<std::string> format;
  std::optional<std::string> out;
  int dmax = 5;
  std::uint64_t seed = 42;
  std::size_t samples = 10000;
  std::string filter = "all";
  std::string oracle_kind;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- input

void check_n(int n) {
  if (n < 2 || n > kMaxN) {
    throw InputError("--n must lie in [2, " + std::to_string(kMaxN) + "] (desk-scale cap), got " + std::to_string(n));
  }
}

void check_d(int d, int n) {
  if (d < 1 || d > n - 1) {
    throw InputError("--d must lie in [1, n-1] = [1, " + std::to_string(n - 1) + "], got " + std::to_string(d));
  }
}

struct Variety {
  Permutation w;
  int d;
  int n;
  std::optional<ReducedWord> word;
};

Variety resolve(const RunConfig& cfg) {
  const int given = int{cfg.perm.has_value()} + int{cfg.partition.has_value()} + int{cfg.word.has_value()};
  if (given != 1) throw InputError("give exactly one of --perm, --partition, --word");
  if (!cfg.d) throw InputError("--d is required");

  if (cfg.perm) {
    const Permutation w = Permutation::parse(*cfg.perm);
    const int n = cfg.n.value_or(w.size());
    if (n != w.size()) {
      throw InputError("--perm " + *cfg.perm + " is not in S_" + std::to_string(n));
    }
    check_n(n);
    check_d(*cfg.d, n);
    return {w, *cfg.d, n, std::nullopt};
  }
  if (!cfg.n) throw InputError("--n is required with --partition and --word");
  check_n(*cfg.n);
  check_d(*cfg.d, *cfg.n);
  if (cfg.partition) {
    return {perm_of(Partition::parse(*cfg.partition), *cfg.d, *cfg.n), *cfg.d, *cfg.n, std::nullopt};
  }
  ReducedWord word(parse_int_list(*cfg.word), *cfg.n);
  return {word.permutation(), *cfg.d, *cfg.n, word};
}

// ---------------------------------------------------------------- output

struct Sink {
  std::ostream* stream;
  std::unique_ptr<std::ofstream> file;
  bool color;
};

Sink open_sink(const RunConfig& cfg, std::ostream& out, bool color) {
  if (!cfg.out) return {&out, nullptr, color};
  auto file = std::make_unique<std::ofstream>(*cfg.out);
  if (!*file) throw InputError("cannot open --out file " + *cfg.out);
  std::ostream* stream = file.get();
  return {stream, std::move(file), false};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void write_csv(std::ostream& os, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  const auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string styled(const std::string& cell, bool header, bool color) {
  if (!color) return cell;
  if (header) return "\x1b[1m" + cell + "\x1b[0m";
  if (cell == "yes" || cell == "ok") return "\x1b[32m" + cell + "\x1b[0m";
  if (cell == "no" || cell == "FAIL") return "\x1b[31m" + cell + "\x1b[0m";
  return cell;
}

void write_table(std::ostream& os, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows, bool color) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  const auto line = [&](const std::vector<std::string>& cells, bool is_header) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << "  ";
      os << styled(cells[i], is_header, color);
      if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size(), ' ');
    }
    os << "\n";
  };
  line(header, true);
  std::size_t total = 0;
  for (std::size_t w : width) total += w;
  os << std::string(total + 2 * (width.size() - 1), '-') << "\n";
  for (const auto& r : rows) line(r, false);
}

const std::vector<std::string> kReportHeader = {"perm",   "d",      "n",      "lambda", "toric", "smooth",
                                                "gorenstein", "hook_x", "hook_y", "dim",  "iso_canonical"};

std::vector<std::string> report_cells(const ClassificationReport& r, bool table) {
  const auto part = [&](const Partition& p) { return table ? "(" + p.to_string() + ")" : p.to_string(); };
  return {r.w.to_string(),
          std::to_string(r.d),
          std::to_string(r.n),
          part(r.lambda),
          yes_no(r.is_toric),
          yes_no(r.is_smooth),
          yes_no(r.is_gorenstein),
          r.hook ? std::to_string(r.hook->x) : (table ? "-" : ""),
          r.hook ? std::to_string(r.hook->y) : (table ? "-" : ""),
          std::to_string(r.dimension),
          part(r.iso_canonical)};
}

void write_reports(Sink& sink, const std::string& format, const std::vector<ClassificationReport>& reports,
                   bool single) {
  std::ostream& os = *sink.stream;
  if (format == "json") {
    if (single) {
      os << to_json(reports.front()).dump(2) << "\n";
    } else {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      os << arr.dump(2) << "\n";
    }
    return;
  }
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : reports) rows.push_back(report_cells(r, format == "table"));
  if (format == "csv") {
    write_csv(os, kReportHeader, rows);
  } else {
    write_table(os, kReportHeader, rows, sink.color);
  }
}

// ---------------------------------------------------------------- commands

int cmd_classify(const RunConfig& cfg, Sink& sink) {
  const Variety v = resolve(cfg);
  write_reports(sink, cfg.format.value_or("table"), {classify_report(v.w, v.d, v.n)}, true);
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg, Sink& sink) {
  if (!cfg.n) throw InputError("--n is required");
  check_n(*cfg.n);
  const int n = *cfg.n;
  std::vector<int> ds;
  if (cfg.d) {
    check_d(*cfg.d, n);
    ds.push_back(*cfg.d);
  } else {
    for (int d = 1; d < n; ++d) ds.push_back(d);
  }
  std::vector<ClassificationReport> reports;
  for (int d : ds) {
    for (const auto& w : grassmannian_permutations(d, n)) {
      ClassificationReport r = classify_report(w, d, n);
      const bool keep = cfg.filter == "all" || (cfg.filter == "toric" && r.is_toric) ||
                        (cfg.filter == "smooth-toric" && r.is_toric && r.is_smooth) ||
                        (cfg.filter == "gorenstein-toric" && r.is_toric && r.is_gorenstein);
      if (keep) reports.push_back(std::move(r));
    }
  }
  write_reports(sink, cfg.format.value_or("table"), reports, false);
  return kOk;
}

int cmd_fan(const RunConfig& cfg, Sink& sink) {
  if (cfg.format && *cfg.format != "json") throw InputError("fans are written as JSON only");
  const Variety v = resolve(cfg);
  if (!is_toric(v.w, v.d, v.n)) {
    throw Error(ErrorCode::NotToric, "X_" + v.w.to_string() + " in Gr(" + std::to_string(v.d) + "," +
                                         std::to_string(v.n) + ") is not toric; its partition is not a hook");
  }
  Fan f;
  if (cfg.space == "flag") {
    f = flag_fan(v.word ? *v.word : toric_word_of(v.w, v.d));
  } else {
    f = grassmannian_fan(v.w, v.d, v.n);
  }
  *sink.stream << to_json(f).dump(2) << "\n";
  return kOk;
}

struct FanoRow {
  int d = 0;
  std::size_t rays = 0;
  std::size_t expected_rays = 0;
  std::size_t cones = 0;
  std::optional<bool> relations;
  bool gorenstein = false;
  bool fano = false;
  bool complete = false;
  bool cases_match = false;
  std::size_t smooth_checked = 0;
  bool smooth_ok = true;
  std::size_t toric_checked = 0;
  bool toric_ok = true;
  std::vector<std::string> certificates;

  bool ok() const {
    return rays == expected_rays && cones == static_cast<std::size_t>(d * d + 1) && relations.value_or(true) &&
           gorenstein && fano && complete && cases_match && smooth_ok && toric_ok;
  }
};

std::string describe(const NotGorenstein& ng) {
  std::string s = "maximal cone " + std::to_string(ng.cone) + ": ";
  if (ng.reason == NotGorenstein::Reason::Inconsistent) return s + "<m, u_rho> = -1 has no solution";
  s += "m = (";
  for (std::size_t i = 0; i < ng.m->size(); ++i) s += (i ? "," : "") + to_string((*ng.m)[i]);
  return s + ") is not integral";
}

std::string describe(const FanoViolation& v) {
  return "maximal cone " + std::to_string(v.cone) + ", ray " + std::to_string(v.ray) + ": <m, u_rho> = " +
         to_string(v.value) + " <= -1";
}

FanoRow verify_wd(int d, const RunConfig& cfg) {
  FanoRow row;
  row.d = d;
  const Fan f = wd_fan(d);
  // For d = 1 the rays v_1 and v_d coincide, leaving the two rays of P^1.
  row.expected_rays = d == 1 ? 2 : static_cast<std::size_t>(2 * d + 1);
  row.rays = f.rays.size();
  row.cones = f.max_cones.size();
  if (d >= 2) row.relations = verify_ray_relations(d);

  const auto cartier = anticanonical_cartier(f);
  if (const auto* ng = std::get_if<NotGorenstein>(&cartier)) {
    row.certificates.push_back("w_" + std::to_string(d) + " " + describe(*ng));
  } else {
    row.gorenstein = true;
    const auto violation = fano_violation(f, std::get<CartierData>(cartier));
    row.fano = !violation;
    if (violation) row.certificates.push_back("w_" + std::to_string(d) + " " + describe(*violation));
  }
  row.complete = is_complete_sampled(f, cfg.samples, cfg.seed);
  if (!row.complete) row.certificates.push_back("w_" + std::to_string(d) + ": a sample escapes every cone");
  row.cases_match = same_labeled_fan(f, grassmannian_fan(wd_word(d).permutation(), d, 2 * d));
  if (!row.cases_match) row.certificates.push_back("w_" + std::to_string(d) + ": Cases 1-5 differ from the merged fan");

  for (const auto& w : grassmannian_permutations(d, 2 * d)) {
    if (!is_toric(w, d, 2 * d)) continue;
    const Fan g = grassmannian_fan(w, d, 2 * d);
    if (is_smooth(w, d, 2 * d)) {
      ++row.smooth_checked;
      if (is_projective_space_fan(g) != length(w)) {
        row.smooth_ok = false;
        row.certificates.push_back(w.to_string() + ": smooth but its fan is not that of P^" +
                                   std::to_string(length(w)));
      }
    }
    ++row.toric_checked;
    const auto c = anticanonical_cartier(g);
    const bool gorenstein = std::holds_alternative<CartierData>(c);
    if (gorenstein != is_gorenstein(w, d, 2 * d)) {
      row.toric_ok = false;
      row.certificates.push_back(w.to_string() + ": fan Gorenstein verdict " + yes_no(gorenstein) +
                                 " disagrees with the corner criterion");
    } else if (gorenstein) {
      if (const auto v = fano_violation(g, std::get<CartierData>(c))) {
        row.toric_ok = false;
        row.certificates.push_back(w.to_string() + " " + describe(*v));
      }
    }
  }
  return row;
}

int cmd_verify_fano(const RunConfig& cfg, Sink& sink, std::ostream& err) {
  if (cfg.dmax < 1 || cfg.dmax > kMaxD) {
    throw InputError("--dmax must lie in [1, " + std::to_string(kMaxD) + "] (desk-scale cap)");
  }
  if (cfg.samples == 0) throw InputError("--samples must be positive");
  std::vector<FanoRow> rows;
  for (int d = 1; d <= cfg.dmax; ++d) rows.push_back(verify_wd(d, cfg));

  const std::string format = cfg.format.value_or("table");
  std::ostream& os = *sink.stream;
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      nlohmann::ordered_json j;
      j["d"] = r.d;
      j["rays"] = r.rays;
      j["cones"] = r.cones;
      j["ray_relations"] = r.relations ? nlohmann::ordered_json(*r.relations) : nlohmann::ordered_json(nullptr);
      j["gorenstein"] = r.gorenstein;
      j["fano"] = r.fano;
      j["complete"] = r.complete;
      j["cases_match"] = r.cases_match;
      j["smooth_checked"] = r.smooth_checked;
      j["toric_checked"] = r.toric_checked;
      j["pass"] = r.ok();
      j["certificates"] = r.certificates;
      arr.push_back(std::move(j));
    }
    os << arr.dump(2) << "\n";
  } else {
    const std::vector<std::string> header = {"d",        "rays",     "cones",       "relations", "gorenstein",
                                             "fano",     "complete", "cases",       "P^l sweep", "toric sweep",
                                             "verdict"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
      cells.push_back({std::to_string(r.d), std::to_string(r.rays), std::to_string(r.cones),
                       r.relations ? yes_no(*r.relations) : "n/a", yes_no(r.gorenstein), yes_no(r.fano),
                       yes_no(r.complete), yes_no(r.cases_match),
                       std::to_string(r.smooth_checked) + (r.smooth_ok ? " ok" : " FAIL"),
                       std::to_string(r.toric_checked) + (r.toric_ok ? " ok" : " FAIL"), r.ok() ? "ok" : "FAIL"});
    }
    if (format == "csv") {
      write_csv(os, header, cells);
    } else {
      write_table(os, header, cells, sink.color);
      os << "samples=" << cfg.samples << " seed=" << cfg.seed << "\n";
    }
  }

  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.ok();
  if (!all_ok) {
    for (const auto& r : rows) {
      for (const auto& c : r.certificates) err << "certificate: " << c << "\n";
    }
    return kVerificationFailure;
  }
  return kOk;
}

int cmd_oracle(const RunConfig& cfg, Sink& sink, std::ostream& err) {
  std::ostream& os = *sink.stream;
  const bool json = cfg.format.value_or("table") == "json";
  nlohmann::ordered_json j;
  j["oracle"] = cfg.oracle_kind;
  std::optional<std::string> counterexample;

  if (cfg.oracle_kind == "bruhat") {
    const int n = cfg.n.value_or(6);
    if (n < 1 || n > kOracleMaxN) throw InputError("oracle bruhat needs --n in [1, " + std::to_string(kOracleMaxN) + "]");
    const OracleReport subwords = check_bruhat_subwords(n);
    const OracleReport partitions = subwords.ok() ? check_bruhat_partitions(n) : OracleReport{};
    counterexample = subwords.ok() ? partitions.counterexample : subwords.counterexample;
    j["n"] = n;
    j["subword_pairs"] = subwords.comparisons;
    j["partition_pairs"] = partitions.comparisons;
    if (!json) {
      os << "bruhat n=" << n << ": " << subwords.comparisons << " pairs checked against the subword oracle, "
         << partitions.comparisons << " Grassmannian pairs against partition containment\n";
    }
  } else {
    const int d = cfg.d.value_or(cfg.oracle_kind == "lifts" ? 3 : 2);
    if (d < 1 || d > kOracleMaxD) {
      throw InputError("oracle " + cfg.oracle_kind + " needs --d in [1, " + std::to_string(kOracleMaxD) + "]");
    }
    j["d"] = d;
    if (cfg.oracle_kind == "lifts") {
      const OracleReport r = check_lifts(d);
      counterexample = r.counterexample;
      j["classes"] = r.classes;
      j["size_sum"] = r.size_sum;
      if (!json) {
        os << "lifts d=" << d << ": " << r.classes << " classes match the closed form, sizes sum to " << r.size_sum
           << " = 2^" << (2 * d - 1) << "\n";
      }
    } else {
      const OracleReport r = check_cones(d);
      counterexample = r.counterexample;
      j["merged_cones"] = r.comparisons;
      j["identity_pieces"] = r.identity_pieces;
      if (!json) {
        os << "cones d=" << d << ": " << r.comparisons << " merged cones certified, C_e tiled by "
           << r.identity_pieces << " unimodular pieces\n";
      }
    }
  }
  j["agree"] = !counterexample.has_value();
  if (json) os << j.dump(2) << "\n";
  if (counterexample) {
    err << "oracle disagreement: " << *counterexample << "\n";
    return kOracleDisagreement;
  }
  return kOk;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err, bool color) {
  CLI::App app{"Toric Schubert varieties in Grassmannians: classification, fans, Fano verification",
               "toric-schubert"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_variety = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "rank of S_n; ambient space C^n");
    sub->add_option("--d", cfg.d, "dimension of the subspaces, Gr(d,n)");
    sub->add_option("--perm", cfg.perm, "Grassmannian permutation in one-line notation, e.g. 2413");
    sub->add_option("--partition", cfg.partition, "partition, e.g. 2,1");
    sub->add_option("--word", cfg.word, "reduced word, e.g. 1,3,2");
  };
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
  };
  const auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "write output to this file"); };

  CLI::App* classify = app.add_subcommand("classify", "toric / smooth / Gorenstein report for one variety");
  add_variety(classify);
  add_format(classify);
  add_out(classify);

  CLI::App* fan = app.add_subcommand("fan", "fan of a toric Schubert variety as JSON");
  add_variety(fan);
  fan->add_option("--space", cfg.space, "flag or grassmannian")->check(CLI::IsMember({"flag", "grassmannian"}));
  add_format(fan);
  add_out(fan);

  CLI::App* verify = app.add_subcommand("verify-fano", "check Gorenstein => Fano on w_d for d <= dmax");
  verify->add_option("--dmax", cfg.dmax, "largest d");
  verify->add_option("--seed", cfg.seed, "completeness sampling seed");
  verify->add_option("--samples", cfg.samples, "completeness samples per fan");
  add_format(verify);
  add_out(verify);

  CLI::App* enumerate = app.add_subcommand("enumerate", "classify every Grassmannian permutation of S_n");
  enumerate->add_option("--n", cfg.n, "rank of S_n");
  enumerate->add_option("--d", cfg.d, "restrict to Gr(d,n)");
  enumerate->add_option("--filter", cfg.filter, "all, toric, smooth-toric or gorenstein-toric")
      ->check(CLI::IsMember({"all", "toric", "smooth-toric", "gorenstein-toric"}));
  add_format(enumerate);
  add_out(enumerate);

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  oracle->add_option("kind", cfg.oracle_kind, "bruhat, lifts or cones")
      ->required()
      ->check(CLI::IsMember({"bruhat", "lifts", "cones"}));
  oracle->add_option("--n", cfg.n, "rank for the Bruhat oracle");
  oracle->add_option("--d", cfg.d, "d for the lift and cone oracles");
  add_format(oracle);
  add_out(oracle);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    Sink sink = open_sink(cfg, out, color);
    if (classify->parsed()) return cmd_classify(cfg, sink);
    if (fan->parsed()) return cmd_fan(cfg, sink);
    if (verify->parsed()) return cmd_verify_fano(cfg, sink, err);
    if (enumerate->parsed()) return cmd_enumerate(cfg, sink);
    return cmd_oracle(cfg, sink, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::NotToric) return kNotToric;
    if (e.code() == ErrorCode::ClassifierBug) return kVerificationFailure;
    return kInputError;
  }
}

}  // namespace toricschubert::cli
