#include "blockwake/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "blockwake/error.hpp"
#include "blockwake/format.hpp"

namespace blockwake {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)) without overflow.
double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

std::size_t index(LcrMode mode) { return mode == LcrMode::overlap_over_total ? 0 : 1; }

}  // namespace

std::string IndicatorVariants::flags() const {
  std::string out = "lcr=";
  out += lcr == LcrMode::overlap_over_total ? "ratio" : "literal";
  out += ";urr=";
  switch (urr) {
    case UrrMode::sqrt_product: out += "sqrt"; break;
    case UrrMode::product: out += "product"; break;
    case UrrMode::exponential: out += "exp"; break;
  }
  out += ";iruif=";
  out += iruif == IruifMode::pointwise ? "pointwise" : "cumulative";
  return out;
}

IndicatorVariants IndicatorVariants::parse(std::string_view text) {
  IndicatorVariants v;
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), ',', ';');
  for (const auto& item : split(normalized, ';')) {
    if (item.empty() || item == "default") continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ConfigError("variant flag '" + item + "' needs key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "lcr" && value == "ratio") v.lcr = LcrMode::overlap_over_total;
    else if (key == "lcr" && value == "literal") v.lcr = LcrMode::table_literal;
    else if (key == "urr" && value == "sqrt") v.urr = UrrMode::sqrt_product;
    else if (key == "urr" && value == "product") v.urr = UrrMode::product;
    else if (key == "urr" && value == "exp") v.urr = UrrMode::exponential;
    else if (key == "iruif" && value == "pointwise") v.iruif = IruifMode::pointwise;
    else if (key == "iruif" && value == "cumulative") v.iruif = IruifMode::cumulative;
    else throw ConfigError("unknown variant flag '" + item + "'");
  }
  return v;
}

std::vector<std::size_t> position_cardinalities(const ParameterSpace& space,
                                                std::span<const std::size_t> ordering) {
  std::vector<std::size_t> out;
  out.reserve(ordering.size());
  for (auto p : ordering) out.push_back(space.cardinality(p));
  return out;
}

mpz_class active_block_size(const Block& block, std::span<const std::size_t> cards) {
  mpz_class size = 1;
  for (auto p : block) size *= static_cast<unsigned long>(cards[p]);
  return size;
}

mpz_class local_overlap_size(const Block& a, const Block& b, std::span<const std::size_t> cards) {
  Block shared;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(shared));
  if (shared.empty()) return 0;
  return active_block_size(shared, cards);
}

void SizeLedger::push(const Block& block, std::span<const std::size_t> cards) {
  Entry e;
  e.abs = active_block_size(block, cards);
  e.log_abs = log_of(e.abs);
  if (entries_.empty()) {
    e.gss = e.abs;
    e.tos = 0;
    for (std::size_t i = 0; i < 2; ++i) {
      e.log_lcr[i] = 0.0;
      e.log_cf[i] = e.log_abs / 3.0;
      e.log_ccf[i] = e.log_cf[i];
    }
  } else {
    const Entry& prev = entries_.back();
    e.los = local_overlap_size(blocks_.back(), block, cards);
    e.gss = prev.gss * e.abs;
    e.tos = entries_.size() == 1 ? mpz_class(e.los) : mpz_class(prev.tos * e.los);
    const double log_los = log_of(e.los);
    const double log_pair = prev.log_abs + e.log_abs;
    e.log_lcr[0] = log_los - log_pair;
    if (sgn(e.los) > 0) e.log_lcr[1] = log_pair - log_los;
    for (std::size_t i = 0; i < 2; ++i) {
      if (!e.log_lcr[i] || !prev.log_cf[i]) continue;
      // CF^k = cbrt(prod_{n<=k} LCR^n ABS^n), so log CF^k moves by a third
      // of the new log factor.
      e.log_cf[i] = *prev.log_cf[i] + (*e.log_lcr[i] + e.log_abs) / 3.0;
      e.log_ccf[i] = log_add(*prev.log_ccf[i], *e.log_cf[i]);
    }
  }
  e.nss = e.gss - e.tos;
  entries_.push_back(std::move(e));
  blocks_.push_back(block);
}

const SizeLedger::Entry& SizeLedger::at(std::size_t k) const {
  if (k < 1 || k > entries_.size())
    throw DomainError("iteration " + std::to_string(k) + " not in ledger");
  return entries_[k - 1];
}

CommonalityRatios commonality_ratios(const SizeLedger& ledger, std::size_t k, LcrMode mode) {
  const auto& e = ledger.at(k);
  if (sgn(e.nss) == 0)
    throw DegenerateError("net search size is zero at iteration " + std::to_string(k));
  CommonalityRatios out;
  const mpq_class gcr(e.tos, e.nss);
  out.gcr = gcr.get_d();
  out.cv = e.nss * e.tos;
  mpz_divexact(out.cv.get_mpz_t(), out.cv.get_mpz_t(), e.nss.get_mpz_t());
  if (k == 1) {
    out.lcr = 1.0;
  } else {
    const mpz_class pair = ledger.at(k - 1).abs * e.abs;
    if (mode == LcrMode::overlap_over_total) {
      out.lcr = mpq_class(e.los, pair).get_d();
    } else if (sgn(e.los) > 0) {
      out.lcr = mpq_class(pair, e.los).get_d();
    }
  }
  return out;
}

CommonalityFlow commonality_flow(const SizeLedger& ledger, std::size_t k, LcrMode mode) {
  const auto& e = ledger.at(k);
  return {e.log_cf[index(mode)], e.log_ccf[index(mode)]};
}

WakeFreshness wake_freshness(std::span<const std::size_t> last_visit, std::size_t k) {
  if (k < 1) throw DomainError("wake freshness needs k >= 1");
  if (last_visit.empty()) throw DomainError("wake freshness needs at least one parameter");
  WakeFreshness out;
  for (auto t : last_visit) out.sasw += k - t + 1;
  out.aasw = static_cast<double>(out.sasw) / static_cast<double>(last_visit.size());
  out.fsw = 1.0 / out.aasw;
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> search_move(const Block& from, const Block& to) {
  Block a = from;
  Block b = to;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  const std::size_t n = std::min(a.size(), b.size());
  pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(a[i], b[i]);
  return pairs;
}

std::optional<double> MoveHistory::push(const Block& block) {
  if (!previous_) {
    previous_ = block;
    last_mnsm_.reset();
    return std::nullopt;
  }
  Move move;
  move.pairs = search_move(*previous_, block);
  std::sort(move.pairs.begin(), move.pairs.end());
  move.from_size = previous_->size();
  move.to_size = block.size();

  std::optional<double> result;
  if (moves_.empty()) {
    last_mnsm_.reset();
    result = 1.0;
  } else {
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<std::size_t, std::size_t>> shared;
    for (const Move& past : moves_) {
      shared.clear();
      std::set_intersection(past.pairs.begin(), past.pairs.end(), move.pairs.begin(),
                            move.pairs.end(), std::back_inserter(shared));
      const double mean_size =
          static_cast<double>(past.from_size + past.to_size + move.to_size) / 3.0;
      best = std::min(best, mean_size - static_cast<double>(shared.size()));
    }
    last_mnsm_ = best;
    result = best / static_cast<double>(m_);
  }
  moves_.push_back(std::move(move));
  previous_ = block;
  return result;
}

std::optional<double> move_novelty(std::span<const Block> blocks, std::size_t k, std::size_t m) {
  if (k < 1 || k > blocks.size()) throw DomainError("move novelty iteration out of range");
  MoveHistory history(m);
  std::optional<double> nsm;
  for (std::size_t i = 0; i < k; ++i) nsm = history.push(blocks[i]);
  return nsm;
}

Usefulness composite_usefulness(double fsw, std::optional<double> nsm,
                                std::optional<double> log_ccf, const IndicatorVariants& variants,
                                std::size_t total_iterations,
                                std::optional<double> previous_log_iruif) {
  Usefulness out;
  if (nsm) {
    switch (variants.urr) {
      case UrrMode::sqrt_product: out.urr = std::sqrt(fsw * *nsm); break;
      case UrrMode::product: out.urr = fsw * *nsm; break;
      case UrrMode::exponential:
        out.urr = std::pow(static_cast<double>(total_iterations), (fsw + *nsm) / 2.0);
        break;
    }
  }
  std::optional<double> term;
  if (out.urr && log_ccf) term = *log_ccf + 2.0 * std::log(*out.urr);
  if (variants.iruif == IruifMode::pointwise) {
    out.log_iruif = term;
  } else if (term) {
    out.log_iruif = previous_log_iruif ? log_add(*previous_log_iruif, *term) : *term;
  } else {
    out.log_iruif = previous_log_iruif;
  }
  return out;
}

QualityEfficiency quality_and_efficiency(double f, const mpz_class& nss) {
  QualityEfficiency out;
  out.sq_min = f;
  if (f > 0.0) {
    out.sq_max = 1.0 / f;
    if (sgn(nss) > 0) out.se_log = -std::log(f) - log_of(nss);
  }
  return out;
}

IndicatorAccumulator::IndicatorAccumulator(std::vector<std::size_t> position_cards,
                                           std::size_t total_iterations,
                                           IndicatorVariants variants)
    : cards_(std::move(position_cards)),
      total_(total_iterations),
      variants_(variants),
      moves_(cards_.size()),
      last_visit_(cards_.size(), 0) {
  if (cards_.empty()) throw ConfigError("indicator accumulator needs at least one position");
}

const IndicatorRow& IndicatorAccumulator::push(const Block& block, std::optional<double> f) {
  if (block.empty()) throw PlanError("empty block");
  for (auto p : block)
    if (p >= cards_.size()) throw PlanError("block position out of range");
  const std::size_t k = rows_.size() + 1;
  ledger_.push(block, cards_);
  for (auto p : block) last_visit_[p] = k;

  IndicatorRow row;
  row.iter = k;
  const auto& e = ledger_.at(k);
  row.abs = e.abs;
  row.gss = e.gss;
  row.tos = e.tos;
  row.nss = e.nss;
  const auto ratios = commonality_ratios(ledger_, k, variants_.lcr);
  row.gcr = ratios.gcr;
  row.cv = ratios.cv;
  row.lcr = ratios.lcr;
  const auto flow = commonality_flow(ledger_, k, variants_.lcr);
  row.log_cf = flow.log_cf;
  row.log_ccf = flow.log_ccf;
  const auto wake = wake_freshness(last_visit_, k);
  row.sasw = wake.sasw;
  row.aasw = wake.aasw;
  row.fsw = wake.fsw;
  row.nsm = moves_.push(block);
  const std::optional<double> prev_iruif =
      rows_.empty() ? std::nullopt : rows_.back().log_iruif;
  const auto use = composite_usefulness(row.fsw, row.nsm, row.log_ccf, variants_, total_, prev_iruif);
  row.urr = use.urr;
  row.log_iruif = use.log_iruif;
  if (f) {
    const auto qe = quality_and_efficiency(*f, e.nss);
    row.sq_min = qe.sq_min;
    row.sq_max = qe.sq_max;
    row.se_log = qe.se_log;
  }
  rows_.push_back(std::move(row));
  return rows_.back();
}

std::vector<IndicatorRow> compute_indicators(std::span<const Block> blocks,
                                             std::span<const std::size_t> position_cards,
                                             std::span<const double> values,
                                             const IndicatorVariants& variants) {
  if (!values.empty() && values.size() != blocks.size())
    throw ConfigError("value count differs from block count");
  IndicatorAccumulator acc({position_cards.begin(), position_cards.end()}, blocks.size(), variants);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    acc.push(blocks[i], values.empty() ? std::nullopt : std::optional<double>(values[i]));
  }
  return acc.rows();
}

void write_indicator_csv(std::ostream& out, std::span<const IndicatorRow> rows,
                         const IndicatorVariants& variants) {
  const std::string flags = variants.flags();
  out << "iter,SQ_min,SQ_max,SE_log,GCR,CV,LCR,logCF,logCCF,SASW,AASW,FSW,NSM,URR,logIRUIF,"
         "variant_flags\n";
  for (const auto& r : rows) {
    out << r.iter << ',' << format_optional(r.sq_min) << ',' << format_optional(r.sq_max) << ','
        << format_optional(r.se_log) << ',' << format_double(r.gcr) << ',' << r.cv.get_str()
        << ',' << format_optional(r.lcr) << ',' << format_optional(r.log_cf) << ','
        << format_optional(r.log_ccf) << ',' << r.sasw << ',' << format_double(r.aasw) << ','
        << format_double(r.fsw) << ',' << format_optional(r.nsm) << ','
        << format_optional(r.urr) << ',' << format_optional(r.log_iruif) << ',' << flags
        << '\n';
  }
}

}  // namespace blockwake
