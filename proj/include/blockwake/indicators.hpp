#pragma once

// Search-structure indicators computed iteration by iteration over a block
// sequence.
//
// Sizes (ABS, LOS, GSS, TOS, NSS, CV) are exact big integers. Products and
// roots that grow without bound (CF, CCF, IRUIF, SE) are carried as natural
// logs. Iterations are 1-based; blocks of consecutive cycles are treated as
// successive iterations, so the first block of a cycle follows the last
// block of the previous one.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "blockwake/plan.hpp"
#include "blockwake/space.hpp"

namespace blockwake {

// LOS/(ABS*ABS) or the literal (ABS*ABS)/LOS.
enum class LcrMode { overlap_over_total, table_literal };
// sqrt(FSW*NSM), FSW*NSM, or sqrt(K^FSW * K^NSM).
enum class UrrMode { sqrt_product, product, exponential };
// CCF*URR^2 per iteration, or its running sum.
enum class IruifMode { pointwise, cumulative };

struct IndicatorVariants {
  LcrMode lcr = LcrMode::overlap_over_total;
  UrrMode urr = UrrMode::sqrt_product;
  IruifMode iruif = IruifMode::pointwise;

  // "lcr=ratio;urr=sqrt;iruif=pointwise"
  std::string flags() const;
  // Accepts key=value pairs separated by ';' or ','. Missing keys keep
  // their defaults. Throws ConfigError on unknown keys or values.
  static IndicatorVariants parse(std::string_view text);
};

// Level cardinality of the parameter sitting at each circular position.
std::vector<std::size_t> position_cardinalities(const ParameterSpace& space,
                                                std::span<const std::size_t> ordering);

mpz_class active_block_size(const Block& block, std::span<const std::size_t> cards);

// Product of cardinalities over the intersection; 0 for disjoint blocks.
mpz_class local_overlap_size(const Block& a, const Block& b, std::span<const std::size_t> cards);

// Exact running sizes plus the commonality-flow sums for both LCR
// orientations. Entry k (1-based) is available after k pushes.
class SizeLedger {
 public:
  struct Entry {
    mpz_class abs;
    mpz_class los;  // LOS between blocks k-1 and k; unused for k = 1
    mpz_class gss;
    mpz_class tos;  // 0 at k = 1, product of LOS from k = 2 on
    mpz_class nss;
    double log_abs = 0.0;
    // Indexed by LcrMode. Empty when the orientation has no finite value.
    std::array<std::optional<double>, 2> log_lcr;
    std::array<std::optional<double>, 2> log_cf;
    std::array<std::optional<double>, 2> log_ccf;
  };

  void push(const Block& block, std::span<const std::size_t> cards);

  std::size_t iterations() const { return entries_.size(); }
  const Entry& at(std::size_t k) const;
  const Block& block(std::size_t k) const { return blocks_.at(k - 1); }

 private:
  std::vector<Entry> entries_;
  std::vector<Block> blocks_;
};

struct CommonalityRatios {
  double gcr = 0.0;            // TOS/NSS
  mpz_class cv;                // NSS*GCR, equal to TOS
  std::optional<double> lcr;   // between blocks k-1 and k; 1 at k = 1
};

// Throws DegenerateError when NSS is zero at k.
CommonalityRatios commonality_ratios(const SizeLedger& ledger, std::size_t k,
                                     LcrMode mode = LcrMode::overlap_over_total);

struct CommonalityFlow {
  std::optional<double> log_cf;
  std::optional<double> log_ccf;
};

CommonalityFlow commonality_flow(const SizeLedger& ledger, std::size_t k,
                                 LcrMode mode = LcrMode::overlap_over_total);

struct WakeFreshness {
  std::size_t sasw = 0;
  double aasw = 0.0;
  double fsw = 0.0;
};

// `last_visit[j]` is the last iteration whose block contained position j,
// 0 when never visited. Ages are k - t + 1.
WakeFreshness wake_freshness(std::span<const std::size_t> last_visit, std::size_t k);

// Position-wise pairs between two ascending blocks, up to the shorter length.
std::vector<std::pair<std::size_t, std::size_t>> search_move(const Block& from, const Block& to);

// Past search moves and the novelty of each new one against all of them.
class MoveHistory {
 public:
  explicit MoveHistory(std::size_t m) : m_(m) {}

  // Registers the block of the next iteration and returns NSM for it:
  // empty for the first block, 1 for the first move.
  std::optional<double> push(const Block& block);

  // Minimum elements-of-novelty of the latest move; empty before two moves.
  std::optional<double> last_mnsm() const { return last_mnsm_; }

 private:
  struct Move {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // sorted
    std::size_t from_size = 0;
    std::size_t to_size = 0;
  };

  std::size_t m_;
  std::optional<Block> previous_;
  std::vector<Move> moves_;
  std::optional<double> last_mnsm_;
};

// NSM of iteration k over `blocks[0..k-1]`.
std::optional<double> move_novelty(std::span<const Block> blocks, std::size_t k, std::size_t m);

struct Usefulness {
  std::optional<double> urr;
  std::optional<double> log_iruif;
};

// `total_iterations` is K for the exponential URR. `previous_log_iruif` is
// the running value for the cumulative IRUIF mode.
Usefulness composite_usefulness(double fsw, std::optional<double> nsm,
                                std::optional<double> log_ccf, const IndicatorVariants& variants,
                                std::size_t total_iterations,
                                std::optional<double> previous_log_iruif = std::nullopt);

struct QualityEfficiency {
  double sq_min = 0.0;
  std::optional<double> sq_max;  // 1/f, only for f > 0
  std::optional<double> se_log;  // log(SQ_max / NSS)
};

QualityEfficiency quality_and_efficiency(double f, const mpz_class& nss);

struct IndicatorRow {
  std::size_t iter = 0;
  std::optional<double> sq_min;
  std::optional<double> sq_max;
  std::optional<double> se_log;
  mpz_class abs;
  mpz_class gss;
  mpz_class tos;
  mpz_class nss;
  double gcr = 0.0;
  mpz_class cv;
  std::optional<double> lcr;
  std::optional<double> log_cf;
  std::optional<double> log_ccf;
  std::size_t sasw = 0;
  double aasw = 0.0;
  double fsw = 0.0;
  std::optional<double> nsm;
  std::optional<double> urr;
  std::optional<double> log_iruif;
};

// Incremental indicator computation; one push per iteration.
class IndicatorAccumulator {
 public:
  IndicatorAccumulator(std::vector<std::size_t> position_cards, std::size_t total_iterations,
                       IndicatorVariants variants = {});

  const IndicatorRow& push(const Block& block, std::optional<double> f);

  const std::vector<IndicatorRow>& rows() const { return rows_; }
  const SizeLedger& ledger() const { return ledger_; }
  const IndicatorVariants& variants() const { return variants_; }

 private:
  std::vector<std::size_t> cards_;
  std::size_t total_;
  IndicatorVariants variants_;
  SizeLedger ledger_;
  MoveHistory moves_;
  std::vector<std::size_t> last_visit_;
  std::vector<IndicatorRow> rows_;
};

// Convenience over a whole block sequence; `values[k-1]` is f at iteration k
// (may be empty, in which case SQ/SE stay empty).
std::vector<IndicatorRow> compute_indicators(std::span<const Block> blocks,
                                             std::span<const std::size_t> position_cards,
                                             std::span<const double> values,
                                             const IndicatorVariants& variants = {});

// Header: iter,SQ_min,SQ_max,SE_log,GCR,CV,LCR,logCF,logCCF,SASW,AASW,FSW,NSM,URR,logIRUIF,variant_flags
void write_indicator_csv(std::ostream& out, std::span<const IndicatorRow> rows,
                         const IndicatorVariants& variants);

}  // namespace blockwake
