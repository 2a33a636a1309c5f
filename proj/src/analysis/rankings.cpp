#include "talebias/analysis.hpp"

namespace talebias {

GenderedTables gendered_event_tables(std::span<const DatasetRow> rows, Scope scope) {
  GenderedTables t;
  t.male.scope = scope;
  t.female.scope = scope;
  std::size_t events = 0;
  std::size_t typed = 0;
  for (const DatasetRow& r : rows) {
    EventFrequencyTable& table = r.gender == Gender::male ? t.male : t.female;
    for (const EventInstance& e : r.events) {
      ++events;
      if (scope == Scope::lemma) {
        table.add(e.lemma);
      } else if (e.event_type != kUntyped) {
        ++typed;
        table.add(e.event_type);
      }
    }
  }
  if (scope == Scope::event_type && events > 0 && typed == 0) {
    throw AnalysisError("analysis: event types unavailable in fallback mode");
  }
  return t;
}

RankedOdds gendered_event_rankings(std::span<const DatasetRow> rows, Scope scope,
                                   std::size_t k, std::int64_t min_total, double smoothing) {
  const GenderedTables t = gendered_event_tables(rows, scope);
  return rank_by_odds(t.male, t.female, min_total, k, smoothing);
}

std::vector<GenderedSequence> gendered_sequences(std::span<const DatasetRow> rows) {
  std::vector<GenderedSequence> out;
  out.reserve(rows.size());
  for (const DatasetRow& r : rows) {
    GenderedSequence seq;
    seq.gender = r.gender;
    seq.items.reserve(r.events.size());
    for (const EventInstance& e : r.events) seq.items.push_back(e.lemma);
    out.push_back(std::move(seq));
  }
  return out;
}

std::vector<ChainRanking> chain_analysis(std::span<const DatasetRow> rows,
                                         const ChainOptions& opts, Diagnostics& diag) {
  if (opts.anchors.empty()) throw ConfigError("analysis: no anchors given");
  if (opts.window < 1) throw ConfigError("analysis: window must be at least 1");
  const std::vector<GenderedSequence> seqs = gendered_sequences(rows);
  std::vector<ChainRanking> out;
  for (const std::string& anchor : opts.anchors) {
    for (const Direction dir : {Direction::before, Direction::after}) {
      NeighborTables nt;
      try {
        nt = neighbor_events(seqs, anchor, dir, opts.window);
      } catch (const AnalysisError&) {
        diag.warn("analysis: anchor '" + anchor + "' not found; skipped");
        break;
      }
      ChainRanking cr;
      cr.anchor = anchor;
      cr.direction = dir;
      cr.male_anchor_occurrences = nt.male_anchor_occurrences;
      cr.female_anchor_occurrences = nt.female_anchor_occurrences;
      cr.ranked = rank_by_odds(nt.male, nt.female, opts.min_total, opts.k, opts.smoothing);
      out.push_back(std::move(cr));
    }
  }
  return out;
}

namespace {

std::optional<double> lexicon_ratio(std::span<const EventInstance> events,
                                    const std::set<std::string, std::less<>>& numerator,
                                    const std::set<std::string, std::less<>>& denominator) {
  std::size_t num = 0;
  std::size_t den = 0;
  for (const EventInstance& e : events) {
    if (numerator.contains(e.lemma)) ++num;
    if (denominator.contains(e.lemma)) ++den;
  }
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::optional<double> femininity_score(std::span<const EventInstance> events,
                                       const std::set<std::string, std::less<>>& female_lexicon,
                                       const std::set<std::string, std::less<>>& male_lexicon) {
  return lexicon_ratio(events, female_lexicon, male_lexicon);
}

std::optional<double> masculinity_score(std::span<const EventInstance> events,
                                        const std::set<std::string, std::less<>>& female_lexicon,
                                        const std::set<std::string, std::less<>>& male_lexicon) {
  return lexicon_ratio(events, male_lexicon, female_lexicon);
}

}  // namespace talebias
