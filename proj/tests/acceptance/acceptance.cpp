// Acceptance checks. One line per criterion: PASS, FAIL or SKIP with the
// measured values. Exit status is nonzero when any criterion fails.
//
// The full-corpus criterion runs only when these point at the public corpus:
//   TALEBIAS_FULL_CORPUS       directory of story .txt files
//   TALEBIAS_FULL_METADATA     story metadata JSONL
//   TALEBIAS_FULL_LEXICON      eMFD lexicon CSV
//   TALEBIAS_FULL_ANNOTATIONS  AnnotationBundle JSONL for the corpus
// TALEBIAS_EMFD alone adds the published lexicon to the "kill" check.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "reference.hpp"
#include "talebias/csv.hpp"
#include "talebias/kernels.hpp"
#include "talebias/pipeline.hpp"

using namespace talebias;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

// Tolerances.
constexpr double kTolStatistic = 1e-9;  // t, r, df (absolute)
constexpr double kTolP = 1e-6;          // p against the reference distribution
constexpr double kTolOrSymmetry = 1e-12;
constexpr double kTolTable = 1e-6;      // mini-corpus report against the scipy oracle
constexpr double kTolPublishedRatio = 0.02;
constexpr double kBudgetOracle = 10.0;  // seconds
constexpr double kBudgetInvariants = 60.0;
constexpr double kBudgetFull = 300.0;

enum class Status { pass, fail, skip };

struct Outcome {
  Status status = Status::pass;
  std::string detail;
};

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  std::size_t failed() const { return failed_; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::string s = std::to_string(checks_ - failed_) + "/" + std::to_string(checks_) + " checks";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string fixture(const std::string& rel) { return std::string(TALEBIAS_FIXTURES) + "/" + rel; }
std::string data_file(const std::string& rel) { return std::string(TALEBIAS_DATA) + "/" + rel; }

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(3);
  out << v;
  return out.str();
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = fs::temp_directory_path() /
            ("talebias_accept_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::vector<double> normal_sample(std::mt19937_64& rng, std::size_t n, double mu, double sd) {
  std::normal_distribution<double> d(mu, sd);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

// ---- statistical core against reference oracles ----

Outcome stats_oracles() {
  const auto t0 = Clock::now();
  Checker c;
  std::mt19937_64 rng(20240517);

  std::size_t n_or = 0;
  const double smoothings[] = {0.0, 0.25, 0.5, 1.0, 2.0};
  while (n_or < 500) {
    const std::int64_t m = rng() % 10001, mr = rng() % 10001;
    const std::int64_t f = rng() % 10001, fr = rng() % 10001;
    const double s = smoothings[rng() % 5];
    if (s == 0.0 && (m == 0 || mr == 0 || f == 0 || fr == 0)) continue;
    const double got = odds_ratio(m, mr, f, fr, s);
    c.expect(reference::correctly_rounded(got, reference::odds_ratio(m, mr, f, fr, s)),
             "odds ratio not exact for " + std::to_string(m) + "," + std::to_string(mr) + "," +
                 std::to_string(f) + "," + std::to_string(fr));
    ++n_or;
  }

  double max_dt = 0, max_dp = 0, max_dr = 0, max_dpr = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = normal_sample(rng, 2 + rng() % 40, 0.0, 0.5 + (rng() % 100) / 50.0);
    const auto b = normal_sample(rng, 2 + rng() % 40, (rng() % 200) / 100.0 - 1.0,
                                 0.5 + (rng() % 100) / 50.0);
    const TestResult w = welch_t_test(a, b);
    const auto ref = reference::welch(a, b);
    const double p_ref = reference::two_tailed(static_cast<double>(ref.t),
                                               static_cast<double>(ref.df));
    const double dt = std::fabs(w.statistic - static_cast<double>(ref.t));
    const double ddf = std::fabs(w.df - static_cast<double>(ref.df));
    const double dp = std::fabs(w.p_value - p_ref);
    max_dt = std::max(max_dt, dt);
    max_dp = std::max(max_dp, dp);
    c.expect(dt <= kTolStatistic, "welch t off by " + fmt(dt));
    c.expect(ddf <= kTolStatistic * std::max(1.0, static_cast<double>(ref.df)),
             "welch df off by " + fmt(ddf));
    c.expect(dp <= kTolP, "welch p off by " + fmt(dp));
  }
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 40;
    const auto x = normal_sample(rng, n, 0.0, 1.0);
    auto y = normal_sample(rng, n, 0.0, 1.0);
    const double slope = (rng() % 400) / 100.0 - 2.0;
    for (std::size_t i = 0; i < n; ++i) y[i] += slope * x[i];
    const TestResult r = pearson(x, y);
    const long double r_ref = reference::pearson(x, y);
    const long double t_ref =
        r_ref * std::sqrt(static_cast<long double>(n - 2) / (1.0L - r_ref * r_ref));
    const double p_ref =
        reference::two_tailed(static_cast<double>(t_ref), static_cast<double>(n - 2));
    const double dr = std::fabs(r.statistic - static_cast<double>(r_ref));
    const double dp = std::fabs(r.p_value - p_ref);
    max_dr = std::max(max_dr, dr);
    max_dpr = std::max(max_dpr, dp);
    c.expect(dr <= kTolStatistic, "pearson r off by " + fmt(dr));
    c.expect(dp <= kTolP, "pearson p off by " + fmt(dp));
  }

  const double secs = seconds_since(t0);
  c.expect(secs < kBudgetOracle, "took " + fmt(secs) + " s");
  return {c.failed() == 0 ? Status::pass : Status::fail,
          std::to_string(n_or) + " OR exact, 300 Welch (max |dt| " + fmt(max_dt) +
              ", |dp| " + fmt(max_dp) + "), 300 Pearson (max |dr| " + fmt(max_dr) +
              ", |dp| " + fmt(max_dpr) + "), " + fmt(secs) + " s; " + c.summary()};
}

// ---- lexicon anchor ----

Outcome kill_anchor() {
  Checker c;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> lexicons = {
      {"fixture", fixture("lexicon.csv")}};
  if (const char* emfd = std::getenv("TALEBIAS_EMFD")) lexicons.emplace_back("eMFD", emfd);
  for (const auto& [name, path] : lexicons) {
    const MoralScore s = score_document("kill", load_lexicon(path));
    c.expect(s.probability[0] == 0.4, name + " care_p " + fmt(s.probability[0]));
    c.expect(s.sentiment[0] == -0.69, name + " care_sent " + fmt(s.sentiment[0]));
    detail += name + " care_p=" + fmt(s.probability[0]) +
              " care_sent=" + fmt(s.sentiment[0]) + "; ";
  }
  if (lexicons.size() == 1) detail += "published lexicon not supplied (TALEBIAS_EMFD); ";
  return {c.failed() == 0 ? Status::pass : Status::fail, detail + c.summary()};
}

// ---- invariants ----

EventInstance event(std::string lemma) {
  EventInstance e;
  e.lemma = std::move(lemma);
  e.trigger = e.lemma;
  e.event_type = std::string(kUntyped);
  e.roles.add(RoleSet::kArg0);
  return e;
}

std::vector<DatasetRow> synthetic_rows(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0.01, 0.5), s(-0.6, 0.6);
  const std::vector<std::string> vocab = {"hunt", "weep", "say", "marry", "spin",
                                          "bake", "kill", "cry", "beg", "ride"};
  std::vector<DatasetRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    DatasetRow r;
    r.story_id = "s" + std::to_string(i % 7) + ".txt";
    r.character_id = "c" + std::to_string(i);
    r.character = r.character_id;
    r.culture = "unknown";
    r.gender = i % 3 == 0 ? Gender::female : Gender::male;
    r.sentences = "x";
    for (std::size_t f = 0; f < kFoundations; ++f) {
      r.moral.probability[f] = u(rng);
      r.moral.sentiment[f] = s(rng);
    }
    r.moral.matched = 1 + rng() % 9;
    r.moral.unmatched = 1 + rng() % 30;
    r.moral.moral_nonmoral_ratio =
        static_cast<double>(r.moral.matched) / static_cast<double>(r.moral.unmatched);
    for (std::size_t k = rng() % 8; k > 0; --k) r.events.push_back(event(vocab[rng() % 10]));
    if (!r.events.empty()) {
      MoralScore e;
      for (std::size_t f = 0; f < kFoundations; ++f) {
        e.probability[f] = u(rng);
        e.sentiment[f] = s(rng);
      }
      e.matched = r.events.size();
      r.event_moral = e;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::string> items(const std::vector<OddsRatioEntry>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(e.item);
  return out;
}

void check_relabel(Checker& c, const std::vector<DatasetRow>& rows, const std::string& tag) {
  auto swapped = rows;
  for (auto& r : swapped) r.gender = opposite(r.gender);
  for (const MoralMode mode : {MoralMode::raw, MoralMode::events_only}) {
    CompareOptions opts;
    opts.mode = mode;
    const auto a = compare_moral_by_gender(rows, opts);
    const auto b = compare_moral_by_gender(swapped, opts);
    for (std::size_t i = 0; i < a.size(); ++i) {
      c.expect(a[i].male_mean == b[i].female_mean && a[i].female_mean == b[i].male_mean,
               tag + " relabel means " + a[i].attribute);
      if (a[i].ratio && b[i].ratio) {
        c.expect(std::fabs(*a[i].ratio * *b[i].ratio - 1.0) <= 1e-12,
                 tag + " relabel ratio " + a[i].attribute);
      }
      c.expect(a[i].test.has_value() == b[i].test.has_value(), tag + " relabel test presence");
      if (a[i].test && b[i].test) {
        c.expect(a[i].test->statistic == -b[i].test->statistic, tag + " relabel t");
        c.expect(a[i].test->p_value == b[i].test->p_value, tag + " relabel p");
      }
      const bool sig = a[i].verdict != Verdict::not_significant;
      c.expect(sig == (b[i].verdict != Verdict::not_significant) &&
                   (!sig || a[i].verdict != b[i].verdict),
               tag + " relabel verdict " + a[i].attribute);
    }
  }
  const auto ra = gendered_event_rankings(rows, Scope::lemma, 10, 1);
  const auto rb = gendered_event_rankings(swapped, Scope::lemma, 10, 1);
  c.expect(items(ra.male) == items(rb.female) && items(ra.female) == items(rb.male),
           tag + " relabel rankings");
}

Outcome invariants() {
  const auto t0 = Clock::now();
  Checker c;
  std::mt19937_64 rng(99);

  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t m = rng() % 5000, mr = rng() % 5000, f = rng() % 5000, fr = rng() % 5000;
    const double a = odds_ratio(m, mr, f, fr, 0.5);
    const double b = odds_ratio(f, fr, m, mr, 0.5);
    c.expect(std::fabs(a * b - 1.0) <= kTolOrSymmetry, "OR antisymmetry");
  }
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = normal_sample(rng, 2 + rng() % 30, 0.0, 1.0);
    const auto y = normal_sample(rng, 2 + rng() % 30, 0.3, 2.0);
    const TestResult ab = welch_t_test(x, y), ba = welch_t_test(y, x);
    c.expect(ab.statistic == -ba.statistic && ab.p_value == ba.p_value && ab.df == ba.df,
             "t antisymmetry");
  }
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 3 + rng() % 30;
    const auto x = normal_sample(rng, n, 0.0, 1.0);
    auto y = normal_sample(rng, n, 0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i) y[i] += 0.7 * x[i];
    const double a = (rng() % 2 ? 1.0 : -1.0) * (0.5 + (rng() % 100) / 10.0);
    const double d = (rng() % 2 ? 1.0 : -1.0) * (0.5 + (rng() % 100) / 10.0);
    std::vector<double> xa(n), yd(n);
    for (std::size_t i = 0; i < n; ++i) {
      xa[i] = a * x[i] + 3.0;
      yd[i] = d * y[i] - 7.0;
    }
    const double r = pearson(x, y).statistic;
    const double r2 = pearson(xa, yd).statistic;
    c.expect(std::fabs(r2 - (a * d > 0 ? r : -r)) <= kTolStatistic, "Pearson affine");
  }

  const MoralLexicon lex = load_lexicon(fixture("lexicon.csv"));
  std::vector<std::string> vocab;
  for (const auto& e : lex.entries()) vocab.push_back(e.word);
  for (const char* w : {"the", "wolf", "forest", "and", "she"}) vocab.push_back(w);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::string> toks(1 + rng() % 60);
    for (auto& t : toks) t = vocab[rng() % vocab.size()];
    const MoralScore base = score_tokens(toks, lex);
    auto shuffled = toks;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    c.expect(score_tokens(shuffled, lex) == base, "score permutation");
    auto doubled = toks;
    doubled.insert(doubled.end(), toks.begin(), toks.end());
    const MoralScore d = score_tokens(doubled, lex);
    c.expect(d.probability == base.probability && d.sentiment == base.sentiment &&
                 d.moral_nonmoral_ratio == base.moral_nonmoral_ratio,
             "score duplication");
  }

  for (int trial = 0; trial < 30; ++trial) check_relabel(c, synthetic_rows(rng, 40), "synthetic");

  const auto corpus = load_corpus(fixture("mini/stories"), fixture("mini/metadata.jsonl"));
  const auto bundle = load_annotation_bundle(fixture("mini/annotations.jsonl"));
  const auto corpus3 = load_corpus(fixture("corpus3"), fixture("corpus3.jsonl"));
  for (const std::uint64_t seed : {0ULL, 7ULL, 12345ULL}) {
    Diagnostics d1;
    const auto mini_rows = build_rows(corpus.stories, lex, &bundle, seed, 1, d1);
    const auto fallback_rows = build_rows(corpus3.stories, lex, nullptr, seed, 1, d1);
    for (std::size_t w = 2; w <= 8; ++w) {
      Diagnostics dw;
      c.expect(build_rows(corpus.stories, lex, &bundle, seed, w, dw) == mini_rows,
               "determinism at " + std::to_string(w) + " workers");
      c.expect(build_rows(corpus3.stories, lex, nullptr, seed, w, dw) == fallback_rows,
               "fallback determinism at " + std::to_string(w) + " workers");
    }
    if (seed == 0) check_relabel(c, mini_rows, "mini");
  }

  const double secs = seconds_since(t0);
  c.expect(secs < kBudgetInvariants, "took " + fmt(secs) + " s");
  return {c.failed() == 0 ? Status::pass : Status::fail, fmt(secs) + " s; " + c.summary()};
}

// ---- mini-corpus golden pipeline ----

RunConfig mini_config(const fs::path& out) {
  RunConfig cfg;
  cfg.corpus = fixture("mini/stories");
  cfg.metadata = fixture("mini/metadata.jsonl");
  cfg.lexicon = fixture("lexicon.csv");
  cfg.annotations = fixture("mini/annotations.jsonl");
  cfg.out = out;
  cfg.min_total = 1;
  cfg.indices = data_file("hofstede_indices.csv");
  cfg.aliases = data_file("culture_aliases.csv");
  return cfg;
}

void run_all(RunConfig cfg) {
  cmd_build(cfg);
  for (const MoralMode m : {MoralMode::raw, MoralMode::events_only}) {
    cfg.mode = m;
    cmd_moral(cfg);
  }
  for (const Scope s : {Scope::lemma, Scope::event_type}) {
    cfg.scope = s;
    cmd_events(cfg);
  }
  cmd_chains(cfg);
  cmd_culture(cfg);
}

Outcome mini_golden() {
  Checker c;
  TempDir a, b;
  RunConfig ca = mini_config(a.path()), cb = mini_config(b.path());
  cb.workers = 4;
  run_all(ca);
  run_all(cb);
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a.path())) {
    const fs::path name = entry.path().filename();
    c.expect(fs::exists(b.path() / name) &&
                 read_file(entry.path()) == read_file(b.path() / name),
             name.string() + " differs between runs");
    ++files;
  }
  c.expect(files >= 14, "only " + std::to_string(files) + " output files");
  c.expect(read_file(dataset_path(ca)) == read_file(fixture("mini/golden_dataset.csv")),
           "dataset.csv differs from golden");
  c.expect(read_file(events_sibling_path(dataset_path(ca))) ==
               read_file(fixture("mini/golden_dataset.events.jsonl")),
           "events sibling differs from golden");

  const auto oracle = parse_csv(read_file(fixture("mini/table_oracle.csv")));
  double max_diff = 0;
  std::size_t compared = 0;
  for (const char* mode : {"raw", "events"}) {
    const auto report = parse_csv(read_file(a.path() / (std::string("moral_") + mode + ".csv")));
    for (const auto& o : oracle) {
      if (o[0] != mode) continue;
      const auto row = std::find_if(report.begin(), report.end(),
                                    [&](const CsvRecord& r) { return r[0] == o[1]; });
      if (row == report.end()) {
        c.expect(false, std::string(mode) + " " + o[1] + " missing");
        continue;
      }
      // oracle male, female, ratio, t, p, df -> report columns
      const std::pair<std::size_t, std::size_t> cols[] = {{2, 1}, {3, 2}, {4, 3},
                                                          {5, 5}, {6, 4}, {7, 6}};
      for (const auto& [oc, rc] : cols) {
        const std::string where = std::string(mode) + " " + o[1] + " column " + std::to_string(oc);
        if (o[oc].empty() || (*row)[rc].empty()) {
          c.expect(o[oc].empty() && (*row)[rc].empty(), where + " presence");
          continue;
        }
        const double diff = std::fabs(*parse_number((*row)[rc]) - *parse_number(o[oc]));
        max_diff = std::max(max_diff, diff);
        c.expect(diff <= kTolTable, where + " off by " + fmt(diff));
        ++compared;
      }
    }
  }
  return {c.failed() == 0 ? Status::pass : Status::fail,
          std::to_string(files) + " files identical across runs, " + std::to_string(compared) +
              " table cells vs oracle (max |diff| " + fmt(max_diff) + "); " + c.summary()};
}

// ---- full corpus ----

struct PublishedRow {
  const char* attribute;
  Verdict direction;
  double ratio;
};

Outcome full_corpus() {
  const char* corpus = std::getenv("TALEBIAS_FULL_CORPUS");
  const char* metadata = std::getenv("TALEBIAS_FULL_METADATA");
  const char* lexicon = std::getenv("TALEBIAS_FULL_LEXICON");
  const char* annotations = std::getenv("TALEBIAS_FULL_ANNOTATIONS");
  if (!corpus || !metadata || !lexicon || !annotations) {
    return {Status::skip,
            "needs the public fairy-tale corpus, its metadata, the eMFD lexicon and an "
            "annotation bundle (TALEBIAS_FULL_CORPUS, _METADATA, _LEXICON, _ANNOTATIONS); "
            "none ship with this repository"};
  }
  const auto t0 = Clock::now();
  Checker c;
  TempDir out;
  RunConfig cfg;
  cfg.corpus = corpus;
  cfg.metadata = metadata;
  cfg.lexicon = lexicon;
  cfg.annotations = annotations;
  cfg.out = out.path();
  cfg.workers = std::max(1u, std::thread::hardware_concurrency());
  cmd_build(cfg);
  const auto rows = read_dataset(dataset_path(cfg));

  std::size_t male = 0, female = 0;
  for (const auto& r : rows) (r.gender == Gender::male ? male : female)++;
  c.expect(male == 4405 && female == 2125,
           "characters " + std::to_string(male) + " male / " + std::to_string(female) + " female");

  const PublishedRow published[] = {{"Care_p", Verdict::female, 0.9831},
                            {"Fairness_p", Verdict::male, 1.0116},
                            {"Loyalty_p", Verdict::female, 0.9829},
                            {"Authority_p", Verdict::male, 1.0325},
                            {"Sanctity_p", Verdict::female, 0.9650},
                            {"Moral_nonmoral_ratio", Verdict::female, 0.9539}};
  const auto table = compare_moral_by_gender(rows);
  for (const auto& p : published) {
    const auto row = std::find_if(table.begin(), table.end(),
                                  [&](const GenderComparisonRow& r) { return r.attribute == p.attribute; });
    c.expect(row->verdict == p.direction, std::string(p.attribute) + " direction " +
                                              std::string(to_string(row->verdict)));
    c.expect(row->ratio && std::fabs(*row->ratio - p.ratio) <= kTolPublishedRatio,
             std::string(p.attribute) + " ratio " + (row->ratio ? fmt(*row->ratio) : "n/a"));
  }

  const auto tables = gendered_event_tables(rows, Scope::lemma);
  c.expect(tables.female.count("marry") == 195 && tables.male.count("marry") == 223,
           "marry " + std::to_string(tables.female.count("marry")) + " female / " +
               std::to_string(tables.male.count("marry")) + " male");

  auto overlap = [](const std::vector<OddsRatioEntry>& got, const std::set<std::string>& want) {
    std::size_t n = 0;
    for (const auto& e : got) n += want.contains(e.item);
    return n;
  };
  const std::set<std::string> lemma_male = {
      "arise", "shoot", "hit", "leap", "chop", "land", "stick", "describe", "judge", "entertain",
      "descend", "cross", "hunt", "thrust", "disturb", "borrow", "destroy", "appoint", "praise",
      "bethink"};
  const std::set<std::string> lemma_female = {
      "spin", "comb", "bake", "reveal", "dry", "soothe", "starve", "dive", "enable", "lament",
      "adorn", "quarrel", "foretell", "foresee", "clean", "blush", "perish", "stray", "betray",
      "kindle"};
  const std::set<std::string> type_male = {
      "Justice:Release-Parole", "Personnel:Start-Position", "Justice:Execute", "Personnel:Elect",
      "Justice:Arrest-Jail", "Conflict:Attack", "Transaction:Transfer-Money",
      "Conflict:Demonstrate", "Personnel:End-Position", "Contact:Meet", "Justice:Sentence",
      "Business:Start-Org", "Life:Die", "Transaction:Transfer-Ownership", "Contact:Phone-Write",
      "Life:Injure", "Movement:Transport", "Personnel:Nominate", "Life:Be-Born",
      "Justice:Charge-Indict"};
  const std::set<std::string> type_female = {
      "Justice:Sue", "Life:Marry", "Justice:Charge-Indict", "Life:Be-Born", "Personnel:Nominate",
      "Movement:Transport", "Life:Injure", "Contact:Phone-Write", "Transaction:Transfer-Ownership",
      "Life:Die", "Business:Start-Org", "Justice:Sentence", "Contact:Meet", "Personnel:End-Position",
      "Conflict:Demonstrate", "Transaction:Transfer-Money", "Conflict:Attack", "Justice:Arrest-Jail",
      "Personnel:Elect", "Justice:Execute"};
  const auto lemmas = gendered_event_rankings(rows, Scope::lemma);
  const auto types = gendered_event_rankings(rows, Scope::event_type);
  const std::pair<std::size_t, const char*> overlaps[] = {
      {overlap(lemmas.male, lemma_male), "male lemmas"},
      {overlap(lemmas.female, lemma_female), "female lemmas"},
      {overlap(types.male, type_male), "male event types"},
      {overlap(types.female, type_female), "female event types"}};
  for (const auto& [n, what] : overlaps) {
    c.expect(n >= 10, std::string(what) + " overlap " + std::to_string(n) + "/20");
  }

  // Culture findings: sign of r between a bias index and a culture dimension.
  Diagnostics diag;
  CultureOptions copts;
  copts.aliases = load_culture_aliases(data_file("culture_aliases.csv"));
  const auto culture =
      culture_correlations(rows, load_culture_indices(data_file("hofstede_indices.csv")), copts, diag);
  const struct {
    std::size_t index, dim;
    int sign;
  } findings[] = {{1, 0, +1}, {3, 0, +1},   // fairness, authority ~ PDI
                  {1, 1, -1}, {3, 1, -1},   // ~ IDV
                  {1, 5, -1}, {3, 5, -1},   // ~ IND
                  {0, 3, -1}, {4, 3, -1},   // care, sanctity ~ UAI
                  {5, 3, -1}};              // care sentiment difference ~ UAI
  for (const auto& f : findings) {
    const auto& cell = culture.cells[f.index][f.dim];
    const std::string what = bias_index_names()[f.index] + " x " +
                             std::string(kCultureDimNames[f.dim]);
    c.expect(cell.result && (cell.result->statistic > 0 ? 1 : -1) == f.sign,
             what + " sign " + (cell.result ? fmt(cell.result->statistic) : cell.note));
  }

  const double secs = seconds_since(t0);
  c.expect(secs < kBudgetFull, "took " + fmt(secs) + " s");
  return {c.failed() == 0 ? Status::pass : Status::fail, fmt(secs) + " s; " + c.summary()};
}

}  // namespace

int main() {
  const struct {
    const char* id;
    const char* name;
    Outcome (*run)();
  } criteria[] = {
      {"A1", "statistical core matches reference oracles", stats_oracles},
      {"A2", "kill scores care_p 0.4, care_sent -0.69", kill_anchor},
      {"A3", "invariant suites", invariants},
      {"A4", "mini-corpus golden pipeline", mini_golden},
      {"A5", "full-corpus directional reproduction", full_corpus},
  };
  std::cout << "kernel backend: " << kernels::backend_name(kernels::active_backend()) << "\n";
  int failed = 0;
  for (const auto& cr : criteria) {
    Outcome o;
    try {
      o = cr.run();
    } catch (const std::exception& e) {
      o = {Status::fail, std::string("threw: ") + e.what()};
    }
    const char* tag = o.status == Status::pass ? "PASS" : o.status == Status::fail ? "FAIL" : "SKIP";
    failed += o.status == Status::fail;
    std::cout << tag << " " << cr.id << " " << cr.name << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
