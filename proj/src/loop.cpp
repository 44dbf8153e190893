#include "signstab/loop.hpp"

#include <set>
#include <stdexcept>

namespace signstab {

bool MutationLoop::fully_mutating() const {
  std::set<int> used(word.begin(), word.end());
  return used.size() == rank();
}

MutationLoop make_loop(ExchangeMatrix b0, std::vector<int> word, Perm sigma) {
  if (word.empty()) throw std::invalid_argument("MutationLoop: empty word");
  for (int k : word)
    if (k < 0 || static_cast<std::size_t>(k) >= b0.n())
      throw std::out_of_range("MutationLoop: word index out of range");
  if (sigma.size() != b0.n()) throw std::invalid_argument("MutationLoop: permutation size mismatch");
  return MutationLoop{std::move(b0), std::move(word), std::move(sigma)};
}

MutationLoop make_loop(ExchangeMatrix b0, std::vector<int> word) {
  Perm id(b0.n());
  return make_loop(std::move(b0), std::move(word), id);
}

std::vector<ExchangeMatrix> exchange_matrices_along(const ExchangeMatrix& b0, const std::vector<int>& word) {
  std::vector<ExchangeMatrix> out;
  out.reserve(word.size() + 1);
  out.push_back(b0);
  for (int k : word) out.push_back(mutate_exchange_matrix(out.back(), k));
  return out;
}

std::optional<LoopMismatch> validate_loop(const MutationLoop& loop) {
  ExchangeMatrix b = loop.b0;
  for (int k : loop.word) b = mutate_exchange_matrix(b, k);
  ExchangeMatrix closed = permute_matrix(b, loop.sigma);
  for (std::size_t i = 0; i < loop.rank(); ++i)
    for (std::size_t j = 0; j < loop.rank(); ++j)
      if (closed.entry(i, j) != loop.b0.entry(i, j))
        return LoopMismatch{i, j, loop.b0.entry(i, j), closed.entry(i, j)};
  return std::nullopt;
}

MutationLoop expand_loop_power(const MutationLoop& loop, int n) {
  if (n < 1) throw std::invalid_argument("expand_loop_power: positive power required");
  std::vector<int> word;
  word.reserve(loop.word.size() * static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) {
    Perm rel = loop.sigma.power(-(m - 1));
    for (int k : loop.word) word.push_back(rel(k));
  }
  return MutationLoop{loop.b0, std::move(word), loop.sigma.power(n)};
}

}  // namespace signstab
