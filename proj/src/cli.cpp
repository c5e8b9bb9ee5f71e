#include "pscalc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "pscalc/bernoulli.hpp"
#include "pscalc/serialize.hpp"

namespace pscalc::cli {

namespace fs = std::filesystem;

std::optional<fs::path> cache_directory(const std::string& flag_value) {
  if (!flag_value.empty()) return fs::path(flag_value);
  if (const char* env = std::getenv(kCacheEnv); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return fs::path(xdg) / "pscalc";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "pscalc";
  }
  return std::nullopt;
}

namespace {

enum class Format { json, csv, table };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Loads the persistent Bernoulli table on construction and writes it back if
// the command extended it.
class CacheSession {
 public:
  CacheSession(std::optional<fs::path> dir, std::ostream& err)
      : dir_(std::move(dir)), err_(err) {
    if (!dir_) return;
    std::ifstream in(*dir_ / kCacheFile);
    if (!in) return;
    try {
      BernoulliCache::global().load(in);
      loaded_ = BernoulliCache::global().max_m();
    } catch (const DomainError& e) {
      // Left at 0 so the file is rewritten.
      err_ << "warning: ignoring Bernoulli cache: " << e.what() << '\n';
    }
  }

  void flush() {
    if (!dir_ || BernoulliCache::global().max_m() <= loaded_) return;
    if (BernoulliCache::global().max_m() == 0) return;
    std::error_code ec;
    fs::create_directories(*dir_, ec);
    const fs::path target = *dir_ / kCacheFile;
    const fs::path temp = *dir_ / (std::string(kCacheFile) + ".tmp");
    {
      std::ofstream out(temp, std::ios::trunc);
      if (out) BernoulliCache::global().save(out);
      if (!out) {
        err_ << "warning: could not write Bernoulli cache to " << target.string() << '\n';
        return;
      }
    }
    fs::rename(temp, target, ec);
    if (ec) err_ << "warning: could not write Bernoulli cache to " << target.string() << '\n';
    loaded_ = BernoulliCache::global().max_m();
  }

 private:
  std::optional<fs::path> dir_;
  std::ostream& err_;
  unsigned loaded_ = 0;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

void emit_json(std::ostream& out, const Json& json) { out << json.dump() << '\n'; }

// --- command bodies -------------------------------------------------------

void cmd_bernoulli(std::ostream& out, Format format, unsigned m, bool all) {
  if (m == 0) throw DomainError("index starts at 1");
  std::vector<BernoulliRecord> records;
  for (unsigned i = all ? 1 : m; i <= m; ++i) {
    records.push_back({i, bernoulli_exact(i), num_b_over_2m(i)});
  }
  switch (format) {
    case Format::json: {
      if (!all) return emit_json(out, to_json(records.front()));
      Json array = Json::array();
      for (const auto& r : records) array.push_back(to_json(r));
      return emit_json(out, array);
    }
    case Format::csv:
      out << "m,numerator,denominator,num_b_over_2m\n";
      for (const auto& r : records) {
        out << fmt::format("{},{},{},{}\n", r.m, r.value.numerator().get_str(),
                           r.value.denominator().get_str(), r.num_b_over_2m.get_str());
      }
      return;
    case Format::table:
      for (const auto& r : records) {
        out << fmt::format("B_{} = {}    |Num(B_{}/{})| = {}\n", r.m, r.value.to_string(),
                           r.m, 2 * r.m, r.num_b_over_2m.get_str());
      }
      return;
  }
}

void cmd_tconst(std::ostream& out, Format format, unsigned m) {
  const auto t = t_constant(m);
  switch (format) {
    case Format::json:
      return emit_json(out, to_json(t));
    case Format::csv:
      out << "m,value,factor_power,factor_num\n"
          << fmt::format("{},{},{},{}\n", t.m, t.value.get_str(), t.factor_power.get_str(),
                         t.factor_num.get_str());
      return;
    case Format::table:
      if (m == 0) {
        out << "t(0) = 1 (convention)\n";
      } else {
        out << fmt::format("t({}) = (2^{} - 1) * |Num(B_{}/{})| = {} * {} = {}\n", m,
                           2 * m - 1, m, 2 * m, t.factor_power.get_str(),
                           t.factor_num.get_str(), t.value.get_str());
      }
      return;
  }
}

void cmd_aconst(std::ostream& out, Format format, unsigned m, unsigned n) {
  const AConstantRecord record{m, n, a_constant(m, n)};
  switch (format) {
    case Format::json:
      return emit_json(out, to_json(record));
    case Format::csv:
      out << "m,n,value\n" << fmt::format("{},{},{}\n", m, n, record.value.get_str());
      return;
    case Format::table:
      out << fmt::format("A({}, {}) = {}\n", m, n, record.value.get_str());
      return;
  }
}

void cmd_sweep(std::ostream& out, Format format, unsigned m_max, const std::string& strategy,
               unsigned workers, bool timing) {
  const auto report = sweep_a2(m_max, sweep_strategy_from_string(strategy), workers);
  switch (format) {
    case Format::json:
      return emit_json(out, to_json(report, timing));
    case Format::csv:
      out << "m,gcd\n";
      for (const auto& row : report.rows) {
        const Integer& g = row.full ? *row.full : *row.four_condition;
        out << row.m << ',' << g.get_str() << '\n';
      }
      return;
    case Format::table: {
      std::vector<std::string> failures;
      for (unsigned m : report.failures) failures.push_back(std::to_string(m));
      out << fmt::format("A(m,2) sweep, 2 <= m <= {}, strategy {}: {} failure(s)\n", m_max,
                         strategy, failures.size());
      if (!failures.empty()) out << "failures: " << join(failures, " ") << '\n';
      if (timing) out << fmt::format("wall time: {:.3f} s\n", report.wall_time.count());
      return;
    }
  }
}

void cmd_primes(std::ostream& out, Format format, std::uint64_t below, bool only_very_regular,
                bool only_regular, bool only_irregular) {
  std::vector<PrimeRecord> records;
  for (Prime p : primes_up_to(below == 0 ? 0 : below - 1)) {
    if (p.value() == 2) continue;
    PrimeRecord r{p.value(), is_regular(p), false};
    r.very_regular = is_very_regular(p);
    if (only_very_regular && !r.very_regular) continue;
    if (only_regular && !r.regular) continue;
    if (only_irregular && r.regular) continue;
    records.push_back(r);
  }
  switch (format) {
    case Format::json: {
      Json j;
      j["below"] = below;
      j["primes"] = Json::array();
      for (const auto& r : records) j["primes"].push_back(to_json(r));
      return emit_json(out, j);
    }
    case Format::csv:
      out << "p,regular,very_regular\n";
      for (const auto& r : records) {
        out << fmt::format("{},{},{}\n", r.p, r.regular, r.very_regular);
      }
      return;
    case Format::table:
      out << fmt::format("{:>8}  {:<9}  {}\n", "p", "regular", "very regular");
      for (const auto& r : records) {
        out << fmt::format("{:>8}  {:<9}  {}\n", r.p, r.regular ? "yes" : "no",
                           r.very_regular ? "yes" : "no");
      }
      return;
  }
}

GenusRecord genus_record(const Manifold& manifold) {
  GenusRecord record{manifold.name, manifold.numbers.dimension(),
                     ahat_number(manifold.numbers), signature_number(manifold.numbers),
                     std::nullopt};
  try {
    record.ko_ahat = ko_ahat(manifold.numbers);
  } catch (const DomainError&) {
    // Not realizable by a spin manifold; reported as null.
  }
  return record;
}

void cmd_genus(std::ostream& out, Format format, const std::string& builtin,
               const std::string& manifold_file, unsigned polynomials,
               const std::string& kind) {
  if (polynomials > 0) {
    std::vector<std::pair<std::string, Genus>> kinds;
    if (kind != "l") kinds.emplace_back("ahat", Genus::ahat);
    if (kind != "ahat") kinds.emplace_back("L", Genus::l);
    switch (format) {
      case Format::json: {
        Json j = Json::object();
        for (const auto& [name, genus] : kinds) {
          j[name] = Json::array();
          for (const auto& poly : genus_polynomials(genus, polynomials)) {
            j[name].push_back(to_json(poly));
          }
        }
        return emit_json(out, j);
      }
      case Format::csv:
        out << "genus,j,monomial,coefficient\n";
        for (const auto& [name, genus] : kinds) {
          for (const auto& poly : genus_polynomials(genus, polynomials)) {
            for (const auto& [monomial, c] : poly.terms()) {
              out << fmt::format("{},{},{},{}\n", name, poly.weight(), monomial.to_string(),
                                 c.to_string());
            }
          }
        }
        return;
      case Format::table:
        for (const auto& [name, genus] : kinds) {
          for (const auto& poly : genus_polynomials(genus, polynomials)) {
            out << fmt::format("{}_{} = {}\n", name, poly.weight(), poly.to_string());
          }
        }
        return;
    }
  }

  const Manifold manifold = manifold_file.empty()
                                ? builtin_manifold(builtin)
                                : manifold_from_json(read_json_file(manifold_file));
  const GenusRecord record = genus_record(manifold);
  const std::string ko = record.ko_ahat ? record.ko_ahat->to_string() : "";
  switch (format) {
    case Format::json:
      return emit_json(out, to_json(record));
    case Format::csv:
      out << "name,dimension,ahat,signature,ko_ahat\n"
          << fmt::format("{},{},{},{},{}\n", record.name, record.dimension,
                         record.ahat.to_string(), record.signature.to_string(), ko);
      return;
    case Format::table:
      out << fmt::format("{} (dimension {})\n  A-hat genus: {}\n  signature:   {}\n  KO A-hat:    {}\n",
                         record.name, record.dimension, record.ahat.to_string(),
                         record.signature.to_string(), ko.empty() ? "(not spin)" : ko);
      return;
  }
}

void cmd_lattice(std::ostream& out, Format format, const std::string& form,
                 const std::string& gram_file, std::optional<std::int64_t> target, bool even,
                 std::int64_t bound) {
  IntegralLattice lattice = IntegralLattice::hyperbolic();
  std::string name = form;
  if (!gram_file.empty()) {
    lattice = lattice_from_json(read_json_file(gram_file));
    name = gram_file;
  } else if (form == "k3") {
    lattice = IntegralLattice::k3_form();
  } else if (form == "e8neg") {
    lattice = IntegralLattice::e8_negative();
  }

  LatticeRecord record;
  record.form = name;
  record.rank = lattice.rank();
  record.determinant = determinant(lattice);
  if (record.determinant != 0) record.signature = signature(lattice);
  record.even = lattice.is_even();
  if (target) {
    const Parity parity = even ? Parity::even_vector : Parity::any;
    record.represent = RepresentRecord{*target, parity, bound,
                                       represent(lattice, *target, parity, bound)};
  }

  auto vector_text = [&](const char* sep) {
    if (!record.represent || !record.represent->vector) return std::string();
    std::vector<std::string> parts;
    for (auto x : *record.represent->vector) parts.push_back(std::to_string(x));
    return join(parts, sep);
  };
  const std::string signature_text =
      record.signature ? std::to_string(*record.signature) : "degenerate";

  switch (format) {
    case Format::json:
      return emit_json(out, to_json(record));
    case Format::csv:
      out << "form,rank,signature,determinant,even,target,parity,bound,found,vector\n";
      out << fmt::format("{},{},{},{},{}", record.form, record.rank, signature_text,
                         record.determinant.get_str(), record.even);
      if (record.represent) {
        out << fmt::format(",{},{},{},{},{}\n", record.represent->target,
                           even ? "even_vector" : "any", record.represent->bound,
                           record.represent->vector.has_value(), vector_text(" "));
      } else {
        out << ",,,,,\n";
      }
      return;
    case Format::table:
      out << fmt::format("form {}: rank {}, signature {}, determinant {}, {}\n", record.form,
                         record.rank, signature_text, record.determinant.get_str(),
                         record.even ? "even" : "odd");
      if (record.represent) {
        out << fmt::format("  q(v) = {} ({} coordinates, |v_i| <= {}): {}\n",
                           record.represent->target, even ? "even" : "any",
                           record.represent->bound,
                           record.represent->vector ? "(" + vector_text(", ") + ")"
                                                    : "not found");
      }
      return;
  }
}

std::string citations_csv(const SurjectivityReport& r) { return join(r.citations, ";"); }

void emit_reports(std::ostream& out, Format format,
                  const std::vector<SurjectivityReport>& reports, bool as_array) {
  switch (format) {
    case Format::json: {
      if (!as_array) return emit_json(out, to_json(reports.front()));
      Json array = Json::array();
      for (const auto& r : reports) array.push_back(to_json(r));
      return emit_json(out, array);
    }
    case Format::csv:
      out << "d,k,degree,kind,generator,rational,mod2,integral,m,n,index_divides,citations\n";
      for (const auto& r : reports) {
        out << fmt::format("{},{},{},{},{},{},{},{},", r.dimension, r.k, r.target.degree,
                           to_string(r.target.kind), r.target.generator,
                           r.rational_surjective, r.mod2_surjective,
                           r.integrally_surjective);
        if (r.away_from_two) {
          out << fmt::format("{},{},{},", r.away_from_two->m, r.away_from_two->n,
                             r.away_from_two->index_divisor.get_str());
        } else {
          out << ",,,";
        }
        out << citations_csv(r) << '\n';
      }
      return;
    case Format::table:
      out << markdown_header() << '\n';
      for (const auto& r : reports) out << markdown_row(r) << '\n';
      return;
  }
}

void cmd_ko(std::ostream& out, Format format, std::optional<int> group,
            const std::vector<int>& report) {
  if (group) {
    const KOGroup g = ko_group(*group);
    switch (format) {
      case Format::json:
        return emit_json(out, to_json(g));
      case Format::csv:
        out << "degree,kind,generator\n"
            << fmt::format("{},{},{}\n", g.degree, to_string(g.kind), g.generator);
        return;
      case Format::table: {
        const std::string value = g.kind == KOKind::z    ? "Z, generated by " + g.generator
                                  : g.kind == KOKind::z2 ? "Z/2, generated by " + g.generator
                                                         : "0";
        out << fmt::format("pi_{}(ko) = {}\n", g.degree, value);
        return;
      }
    }
  }
  emit_reports(out, format, {surjectivity_report(report.at(0), report.at(1))}, false);
}

void cmd_report(std::ostream& out, Format format, int dimension, std::optional<int> k_max) {
  std::vector<SurjectivityReport> reports;
  const int last = k_max.value_or(2 * dimension);
  if (last < 0) throw DomainError("outside theorem hypotheses");
  for (int k = 0; k <= last; ++k) reports.push_back(surjectivity_report(dimension, k));
  emit_reports(out, format, reports, true);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for Bernoulli-number obstruction constants, genera, "
               "intersection forms and KO-theory tables.",
               "pscalc"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "json";
  std::string cache_dir;
  bool no_cache = false;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--cache-dir", cache_dir,
                 std::string("Bernoulli cache directory (overrides $") + kCacheEnv + ")");
  app.add_flag("--no-cache", no_cache, "Do not read or write the Bernoulli cache");

  unsigned bern_m = 0;
  bool bern_all = false;
  auto* bernoulli = app.add_subcommand("bernoulli", "Bernoulli number B_m (Milnor-Stasheff)");
  bernoulli->add_option("m", bern_m)->required();
  bernoulli->add_flag("--all", bern_all, "List B_1 .. B_m");

  unsigned t_m = 0;
  auto* tconst = app.add_subcommand("tconst", "t(m) = (2^{2m-1} - 1) |Num(B_m/2m)|");
  tconst->add_option("m", t_m)->required();

  unsigned a_m = 0, a_n = 0;
  auto* aconst = app.add_subcommand("aconst", "gcd constant A(m, n)");
  aconst->add_option("m", a_m)->required();
  aconst->add_option("n", a_n)->required()->check(CLI::PositiveNumber);

  unsigned sweep_max = 300;
  std::string sweep_strategy = "cross_check";
  unsigned sweep_workers = std::max(1u, std::thread::hardware_concurrency());
  bool sweep_timing = false;
  auto* sweep = app.add_subcommand("sweep", "Check A(m, 2) = 1 for 2 <= m <= max");
  sweep->add_option("--max", sweep_max, "Largest m")->capture_default_str();
  sweep->add_option("--strategy", sweep_strategy)
      ->check(CLI::IsMember({"four_condition", "full_gcd", "cross_check"}))
      ->capture_default_str();
  sweep->add_option("--workers", sweep_workers, "Worker threads")
      ->check(CLI::PositiveNumber);
  sweep->add_flag("--timing", sweep_timing, "Include wall time in the output");

  std::uint64_t primes_below = 0;
  bool primes_very_regular = false, primes_regular = false, primes_irregular = false;
  auto* primes = app.add_subcommand("primes", "Classify odd primes below a bound");
  primes->add_option("--below", primes_below)->required();
  auto* f_vr = primes->add_flag("--very-regular", primes_very_regular);
  auto* f_r = primes->add_flag("--regular", primes_regular);
  auto* f_i = primes->add_flag("--irregular", primes_irregular);
  f_i->excludes(f_r)->excludes(f_vr);

  std::string genus_builtin, genus_file, genus_kind = "both";
  unsigned genus_polys = 0;
  auto* genus = app.add_subcommand("genus", "A-hat genus, signature and KO A-hat invariant");
  auto* g_b = genus->add_option("--builtin", genus_builtin)
                  ->check(CLI::IsMember({"k3", "plumbing8"}));
  auto* g_m = genus->add_option("--manifold", genus_file, "Manifold JSON file");
  auto* g_p = genus->add_option("--polynomials", genus_polys, "Print K_1 .. K_J")
                  ->check(CLI::PositiveNumber);
  genus->add_option("--kind", genus_kind)->check(CLI::IsMember({"ahat", "l", "both"}));
  g_b->excludes(g_m)->excludes(g_p);
  g_m->excludes(g_p);

  std::string lattice_form, lattice_gram;
  std::optional<std::int64_t> lattice_target;
  bool lattice_even = false;
  std::int64_t lattice_bound = 8;
  auto* lattice = app.add_subcommand("lattice", "Intersection forms and representations");
  auto* l_f = lattice->add_option("--form", lattice_form)
                  ->check(CLI::IsMember({"k3", "h", "e8neg"}));
  auto* l_g = lattice->add_option("--gram", lattice_gram, "Gram matrix JSON file");
  l_f->excludes(l_g);
  lattice->add_option("--represent", lattice_target, "Target value q(v)");
  lattice->add_flag("--even", lattice_even, "Require all coordinates even");
  lattice->add_option("--bound", lattice_bound, "Coordinate bound")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  std::optional<int> ko_group_degree;
  std::vector<int> ko_report;
  auto* ko = app.add_subcommand("ko", "pi_*(ko) groups and surjectivity reports");
  auto* k_g = ko->add_option("--group", ko_group_degree, "Degree n")
                  ->check(CLI::NonNegativeNumber);
  auto* k_r = ko->add_option("--report", ko_report, "d k")->expected(2);
  k_g->excludes(k_r);

  int report_dimension = 0;
  std::optional<int> report_kmax;
  auto* report = app.add_subcommand("report", "Surjectivity table for k = 0 .. kmax");
  report->add_option("d", report_dimension, "Manifold dimension")->required();
  report->add_option("--kmax", report_kmax, "Largest k (default 2d)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (genus->parsed() && genus_builtin.empty() && genus_file.empty() && genus_polys == 0) {
      throw UsageError("genus: one of --builtin, --manifold, --polynomials is required");
    }
    if (lattice->parsed() && lattice_form.empty() && lattice_gram.empty()) {
      throw UsageError("lattice: one of --form, --gram is required");
    }
    if (ko->parsed() && !ko_group_degree && ko_report.empty()) {
      throw UsageError("ko: one of --group, --report is required");
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\nrun with --help for usage\n";
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const Format format = format_name == "csv"     ? Format::csv
                        : format_name == "table" ? Format::table
                                                 : Format::json;
  try {
    const bool needs_bernoulli = bernoulli->parsed() || tconst->parsed() ||
                                 aconst->parsed() || sweep->parsed() || ko->parsed() ||
                                 report->parsed();
    std::optional<CacheSession> cache;
    if (needs_bernoulli) {
      cache.emplace(no_cache ? std::nullopt : cache_directory(cache_dir), err);
    }

    if (bernoulli->parsed()) cmd_bernoulli(out, format, bern_m, bern_all);
    if (tconst->parsed()) cmd_tconst(out, format, t_m);
    if (aconst->parsed()) cmd_aconst(out, format, a_m, a_n);
    if (sweep->parsed()) {
      cmd_sweep(out, format, sweep_max, sweep_strategy, sweep_workers, sweep_timing);
    }
    if (primes->parsed()) {
      cmd_primes(out, format, primes_below, primes_very_regular, primes_regular,
                 primes_irregular);
    }
    if (genus->parsed()) {
      cmd_genus(out, format, genus_builtin, genus_file, genus_polys, genus_kind);
    }
    if (lattice->parsed()) {
      cmd_lattice(out, format, lattice_form, lattice_gram, lattice_target, lattice_even,
                  lattice_bound);
    }
    if (ko->parsed()) cmd_ko(out, format, ko_group_degree, ko_report);
    if (report->parsed()) cmd_report(out, format, report_dimension, report_kmax);

    if (cache) cache->flush();
  } catch (const DomainError& e) {
    Json record;
    record["error"] = "domain_error";
    record["message"] = e.what();
    err << record.dump() << '\n';
    return 1;
  } catch (const std::exception& e) {
    Json record;
    record["error"] = "internal_error";
    record["message"] = e.what();
    err << record.dump() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace pscalc::cli
