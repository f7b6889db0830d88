#ifndef EXEL_WORD_ORACLE_HPP_
#define EXEL_WORD_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "exel/groupoid.hpp"
#include "exel/semigroupoid.hpp"

namespace exel::sg {

struct OracleOptions {
  /// Extra internal word length beyond max_len. Rewrite chains are allowed
  /// to pass through words this much longer than the reported bound.
  std::size_t slack = 3;
  /// Hard cap on the number of internal words.
  std::size_t max_internal_words = 4'000'000;
};

/// Partition of the composable words of length <= max_len by the least
/// congruence generated by the defining relations of S(G). Completely
/// independent of the canonical-form arithmetic: it only rewrites words.
struct OracleResult {
  /// Composable words, ordered by (length, lexicographic letters).
  std::vector<Word> words;
  /// Class index per word; classes are numbered by first occurrence.
  std::vector<std::uint32_t> class_of;
  std::uint32_t class_count = 0;
  /// class_count_at_len[k-1] = number of classes among words of length <= k.
  std::vector<std::uint32_t> class_count_at_len;
  /// True iff the class count did not grow from max_len - 1 to max_len.
  bool stable = false;
};

/// Enumerates every composable word of length <= max_len and partitions them
/// by the congruence generated by
///   (i)   [s^{-1}][s][t]  = [s^{-1}][st]
///   (ii)  [s][t][t^{-1}]  = [st][t^{-1}]
///   (iii) [r(s)][s] = [s] = [s][d(s)]
/// applied in both directions at every position, with closure running over
/// words up to max_len + slack letters.
///
/// Throws BudgetExceeded when the internal word pool exceeds its cap. An
/// unstable result (class count still growing at max_len) is returned with
/// stable = false; callers that need a saturated partition must treat that
/// as a budget failure.
OracleResult congruence_classes(const FiniteGroupoid& g, std::size_t max_len,
                                const OracleOptions& options = {});

}  // namespace exel::sg

#endif  // EXEL_WORD_ORACLE_HPP_
