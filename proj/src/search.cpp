#include "modal/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

namespace modal {

// ===========================================================================
// Budget / encodings
// ===========================================================================

void SearchBudget::validate() const {
  if (max_worlds < 1)
    throw std::invalid_argument("search bound must be at least 1 world");
  if (max_worlds > kMaxSearchWorlds)
    throw std::invalid_argument("search bound " + std::to_string(max_worlds) +
                                " exceeds the supported maximum of " +
                                std::to_string(kMaxSearchWorlds) + " worlds");
  if (max_worlds >= 6 && !use_canonical_pruning)
    throw std::invalid_argument(
        "searching 6 or more worlds requires canonical pruning (2^(n*n) frames "
        "per size)");
}

std::uint64_t relation_space_size(int n_worlds) {
  if (n_worlds < 1 || n_worlds > kMaxSearchWorlds)
    throw std::invalid_argument("relation space is only enumerable for 1.." +
                                std::to_string(kMaxSearchWorlds) + " worlds");
  return std::uint64_t{1} << (n_worlds * n_worlds);
}

namespace {

// Rows of the encoded relation on the stack; rows[s] = bits [s*n, s*n+n).
void rows_from_encoding(int n, std::uint64_t enc, Word* rows) {
  const Word mask = world_mask(n);
  for (int s = 0; s < n; ++s) rows[s] = (enc >> (s * n)) & mask;
}

}  // namespace

Frame frame_from_encoding(int n_worlds, std::uint64_t encoding) {
  if (n_worlds < 1 || n_worlds > kMaxSearchWorlds)
    throw std::invalid_argument("frame encodings cover 1.." +
                                std::to_string(kMaxSearchWorlds) + " worlds");
  if (encoding >= relation_space_size(n_worlds))
    throw std::invalid_argument("encoding out of range for " +
                                std::to_string(n_worlds) + " worlds");
  std::array<Word, kMaxSearchWorlds> rows{};
  rows_from_encoding(n_worlds, encoding, rows.data());
  return Frame::single(
      RelationMatrix::from_rows(n_worlds, {rows.data(), static_cast<size_t>(n_worlds)}));
}

RelationEnumerator::RelationEnumerator(int n_worlds, const SearchBudget& budget)
    : n_(n_worlds), total_(0) {
  budget.validate();
  if (n_worlds < 1)
    throw std::invalid_argument("cannot enumerate frames with fewer than 1 world");
  if (n_worlds > budget.max_worlds)
    throw ResourceLimitError("enumerating " + std::to_string(n_worlds) +
                             "-world frames exceeds the budget bound of " +
                             std::to_string(budget.max_worlds) + " worlds");
  total_ = relation_space_size(n_worlds);
}

std::optional<Frame> RelationEnumerator::next() {
  if (produced_ >= total_) return std::nullopt;
  return frame_from_encoding(n_, produced_++);
}

// ===========================================================================
// Canonical forms
// ===========================================================================

namespace {

// All permutations of 0..n-1 in lexicographic order, built once per size.
const std::vector<std::array<int, kMaxSearchWorlds>>& permutations(int n) {
  static const auto all = [] {
    std::array<std::vector<std::array<int, kMaxSearchWorlds>>, kMaxSearchWorlds + 1> table;
    for (int n_worlds = 1; n_worlds <= kMaxSearchWorlds; ++n_worlds) {
      std::array<int, kMaxSearchWorlds> perm{};
      std::iota(perm.begin(), perm.begin() + n_worlds, 0);
      do {
        table[static_cast<size_t>(n_worlds)].push_back(perm);
      } while (std::next_permutation(perm.begin(), perm.begin() + n_worlds));
    }
    return table;
  }();
  return all[static_cast<size_t>(n)];
}

std::uint64_t permuted_encoding(int n, std::uint64_t enc, const int* perm) {
  std::uint64_t out = 0;
  while (enc) {
    const int bit = std::countr_zero(enc);
    enc &= enc - 1;
    const int s = bit / n;
    const int t = bit % n;
    out |= std::uint64_t{1} << (perm[s] * n + perm[t]);
  }
  return out;
}

// Canonicity test only needs to know whether some permutation goes lower.
bool is_canonical_encoding(int n, std::uint64_t enc) {
  if (n == 1) return true;
  for (const auto& perm : permutations(n))
    if (permuted_encoding(n, enc, perm.data()) < enc) return false;
  return true;
}

}  // namespace

std::uint64_t canonical_encoding(int n_worlds, std::uint64_t encoding) {
  if (n_worlds < 1 || n_worlds > kMaxSearchWorlds)
    throw std::invalid_argument("canonical encodings cover 1.." +
                                std::to_string(kMaxSearchWorlds) + " worlds");
  std::uint64_t best = encoding;
  for (const auto& perm : permutations(n_worlds))
    best = std::min(best, permuted_encoding(n_worlds, encoding, perm.data()));
  return best;
}

Frame canonical_form(const Frame& frame) {
  if (frame.relation_count() != 1)
    throw std::invalid_argument("canonical_form expects a single-relation frame");
  const int n = frame.n_worlds();
  if (n > kMaxSearchWorlds)
    throw std::invalid_argument("canonical_form supports at most " +
                                std::to_string(kMaxSearchWorlds) + " worlds");
  return frame_from_encoding(n, canonical_encoding(n, frame.relation(0).encoding()));
}

// ===========================================================================
// Scan core
// ===========================================================================

namespace {

struct ScanHit {
  int n_worlds = 0;
  std::uint64_t encoding = 0;
};

struct ScanResult {
  std::optional<ScanHit> hit;
  std::uint64_t frames_checked = 0;  // counts the hit frame itself
};

struct ChunkOutcome {
  std::optional<std::uint64_t> hit;
  std::uint64_t checked_before_hit = 0;  // whole chunk when there is no hit
};

// Scans encodings [begin, end); pred(n, rows) == true is a hit and stops the
// chunk.  The predicate must be pure -- it runs on worker threads.
template <typename Pred>
ChunkOutcome scan_chunk(int n, std::uint64_t begin, std::uint64_t end, bool prune,
                        const Pred& pred) {
  ChunkOutcome out;
  std::array<Word, kMaxSearchWorlds> rows{};
  for (std::uint64_t enc = begin; enc < end; ++enc) {
    if (prune && !is_canonical_encoding(n, enc)) continue;
    rows_from_encoding(n, enc, rows.data());
    if (pred(n, rows.data())) {
      out.hit = enc;
      return out;
    }
    ++out.checked_before_hit;
  }
  return out;
}

// Walks sizes min_worlds..max_worlds in order; within a size the encoding
// space may be partitioned across threads, but chunk results are merged
// lowest range first, so the reported hit and frame count are those of a
// sequential scan.
template <typename Pred>
ScanResult scan_sizes(int min_worlds, int max_worlds, bool prune, int threads,
                      const Pred& pred) {
  ScanResult result;
  for (int n = min_worlds; n <= max_worlds; ++n) {
    const std::uint64_t total = relation_space_size(n);
    const int workers =
        (threads > 1 && total >= 8192)
            ? static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total))
            : 1;

    std::vector<ChunkOutcome> outcomes(static_cast<size_t>(workers));
    if (workers == 1) {
      outcomes[0] = scan_chunk(n, 0, total, prune, pred);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<size_t>(workers));
      for (int i = 0; i < workers; ++i) {
        const std::uint64_t begin = total / workers * i + std::min<std::uint64_t>(i, total % workers);
        const std::uint64_t end =
            total / workers * (i + 1) + std::min<std::uint64_t>(i + 1, total % workers);
        pool.emplace_back([&outcomes, i, n, begin, end, prune, &pred] {
          outcomes[static_cast<size_t>(i)] = scan_chunk(n, begin, end, prune, pred);
        });
      }
      for (std::thread& t : pool) t.join();
    }

    for (const ChunkOutcome& outcome : outcomes) {
      result.frames_checked += outcome.checked_before_hit;
      if (outcome.hit) {
        ++result.frames_checked;
        result.hit = ScanHit{n, *outcome.hit};
        return result;
      }
    }
  }
  return result;
}

// Allocation-free variant of check_condition_set for the per-frame hot path.
bool rows_satisfy(int n, const Word* rows, const ConditionSet& conditions) {
  for (int i = 0; i < kConditionCount; ++i) {
    const auto c = static_cast<Condition>(i);
    if (conditions.contains(c) && !condition_holds(n, {rows, static_cast<size_t>(n)}, c))
      return false;
  }
  return true;
}

// Builds the full witness record for a frame that violates one of the
// consequent conditions.
Witness witness_for(const Frame& frame, const ConditionSet& violated_of) {
  std::optional<Condition> failed;
  for (Condition c : violated_of.items()) {
    if (!check_condition(frame, 0, c)) {
      failed = c;
      break;
    }
  }
  if (!failed)
    throw std::logic_error("witness_for called on a frame violating nothing");

  Witness witness{frame, *failed, std::nullopt};
  // The correspondence pairs condition and schema, so a violated condition
  // yields a concrete failing instance of the matching axiom.
  const Axiom axiom = condition_axiom(*failed);
  if (auto failure = frame_find_failure(frame, axiom_schema(axiom)))
    witness.failing_instance =
        FailingInstance{axiom, std::move(failure->valuation), failure->world};
  return witness;
}

std::chrono::milliseconds since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
}

}  // namespace

// ===========================================================================
// Public searches
// ===========================================================================

VerificationReport verify_implication(const ConditionSet& antecedent,
                                      const ConditionSet& consequent,
                                      const SearchBudget& budget) {
  budget.validate();
  const auto start = std::chrono::steady_clock::now();

  const ScanResult scan = scan_sizes(
      1, budget.max_worlds, budget.use_canonical_pruning, budget.parallelism_hint,
      [&antecedent, &consequent](int n, const Word* rows) {
        return rows_satisfy(n, rows, antecedent) && !rows_satisfy(n, rows, consequent);
      });

  VerificationReport report;
  report.claim = "all frames up to " + std::to_string(budget.max_worlds) +
                 " worlds: " + antecedent.to_string() + " => " + consequent.to_string();
  report.bound = budget.max_worlds;
  report.frames_checked = scan.frames_checked;
  if (scan.hit) {
    report.result = Outcome::Refuted;
    report.witness =
        witness_for(frame_from_encoding(scan.hit->n_worlds, scan.hit->encoding), consequent);
  } else {
    report.result = Outcome::Holds;
  }
  report.elapsed = since(start);
  return report;
}

std::optional<Witness> find_countermodel(const ConditionSet& antecedent,
                                         const ConditionSet& consequent,
                                         const SearchBudget& budget) {
  return verify_implication(antecedent, consequent, budget).witness;
}

VerificationReport verify_minimality(const ConditionSet& antecedent,
                                     const ConditionSet& consequent, int size,
                                     const SearchBudget& budget) {
  SearchBudget exact = budget;
  exact.max_worlds = size;
  exact.validate();
  const auto start = std::chrono::steady_clock::now();

  const ScanResult scan = scan_sizes(
      size, size, exact.use_canonical_pruning, exact.parallelism_hint,
      [&antecedent, &consequent](int n, const Word* rows) {
        return rows_satisfy(n, rows, antecedent) && !rows_satisfy(n, rows, consequent);
      });

  VerificationReport report;
  report.claim = "all frames with exactly " + std::to_string(size) +
                 " worlds: " + antecedent.to_string() + " => " + consequent.to_string();
  report.bound = size;
  report.frames_checked = scan.frames_checked;
  if (scan.hit) {
    report.result = Outcome::Refuted;
    report.witness =
        witness_for(frame_from_encoding(scan.hit->n_worlds, scan.hit->encoding), consequent);
  } else {
    report.result = Outcome::Holds;
  }
  report.elapsed = since(start);
  return report;
}

VerificationReport verify_correspondence(Condition condition, Axiom axiom,
                                         const SearchBudget& budget) {
  budget.validate();
  const auto start = std::chrono::steady_clock::now();
  const Formula schema = axiom_schema(axiom);

  const ScanResult scan = scan_sizes(
      1, budget.max_worlds, budget.use_canonical_pruning, budget.parallelism_hint,
      [condition, &schema](int n, const Word* rows) {
        const bool holds_cond = condition_holds(n, {rows, static_cast<size_t>(n)}, condition);
        const Frame frame = Frame::single(
            RelationMatrix::from_rows(n, {rows, static_cast<size_t>(n)}));
        return holds_cond != frame_valid(frame, schema);
      });

  VerificationReport report;
  report.claim = "all frames up to " + std::to_string(budget.max_worlds) +
                 " worlds: " + condition_name(condition) + " <=> valid(" +
                 axiom_name(axiom) + ")";
  report.bound = budget.max_worlds;
  report.frames_checked = scan.frames_checked;
  if (scan.hit) {
    report.result = Outcome::Refuted;
    const Frame frame = frame_from_encoding(scan.hit->n_worlds, scan.hit->encoding);
    Witness witness{frame, condition, std::nullopt};
    if (auto failure = frame_find_failure(frame, schema))
      witness.failing_instance =
          FailingInstance{axiom, std::move(failure->valuation), failure->world};
    report.witness = std::move(witness);
  } else {
    report.result = Outcome::Holds;
  }
  report.elapsed = since(start);
  return report;
}

VerificationReport verify_equivalence(const ConditionSet& left,
                                      const ConditionSet& right,
                                      const SearchBudget& budget) {
  budget.validate();
  const auto start = std::chrono::steady_clock::now();

  const ScanResult scan = scan_sizes(
      1, budget.max_worlds, budget.use_canonical_pruning, budget.parallelism_hint,
      [&left, &right](int n, const Word* rows) {
        return rows_satisfy(n, rows, left) != rows_satisfy(n, rows, right);
      });

  VerificationReport report;
  report.claim = "all frames up to " + std::to_string(budget.max_worlds) +
                 " worlds: " + left.to_string() + " <=> " + right.to_string();
  report.bound = budget.max_worlds;
  report.frames_checked = scan.frames_checked;
  if (scan.hit) {
    report.result = Outcome::Refuted;
    const Frame frame = frame_from_encoding(scan.hit->n_worlds, scan.hit->encoding);
    // Whichever side the frame fails supplies the violated condition.
    const ConditionSet& failing_side =
        check_condition_set(frame, 0, left) ? right : left;
    report.witness = witness_for(frame, failing_side);
  } else {
    report.result = Outcome::Holds;
  }
  report.elapsed = since(start);
  return report;
}

}  // namespace modal
