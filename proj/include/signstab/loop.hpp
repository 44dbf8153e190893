#pragma once

#include "signstab/seed.hpp"

#include <optional>

namespace signstab {

/// A mutation loop: base exchange matrix, mutation word (0-based indices) and
/// a trailing permutation. Horizontal loops have the identity permutation.
struct MutationLoop {
  ExchangeMatrix b0;
  std::vector<int> word;
  Perm sigma;

  std::size_t rank() const { return b0.n(); }
  std::size_t length() const { return word.size(); }
  bool fully_mutating() const;
};

/// Builds a loop after range-checking word and permutation sizes. Does not
/// require closure; see validate_loop.
MutationLoop make_loop(ExchangeMatrix b0, std::vector<int> word, Perm sigma);
MutationLoop make_loop(ExchangeMatrix b0, std::vector<int> word);

struct LoopMismatch {
  std::size_t i = 0, j = 0;
  Int expected, got;
};

/// Checks sigma.B^{(t_h)} = B^{(t_0)}; returns the first differing entry on
/// failure, nothing on success.
std::optional<LoopMismatch> validate_loop(const MutationLoop& loop);

/// Exchange matrices B^{(t_0)}, ..., B^{(t_h)} along the word (before sigma).
std::vector<ExchangeMatrix> exchange_matrices_along(const ExchangeMatrix& b0, const std::vector<int>& word);

/// The loop representing phi^n: word blocks sigma^{-(m-1)}(word) for
/// m = 1..n, permutation sigma^n.
MutationLoop expand_loop_power(const MutationLoop& loop, int n);

}  // namespace signstab
