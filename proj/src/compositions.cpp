#include "flowcat/compositions.hpp"

#include "flowcat/errors.hpp"

namespace flowcat {

CompositionIterator::CompositionIterator(std::int64_t total, std::size_t parts,
                                         std::vector<bool> support_mask)
    : allowed_(std::move(support_mask)), parts_(parts, 0) {
  if (total < 0) throw InvalidInput("composition total must be nonnegative");
  if (allowed_.empty()) allowed_.assign(parts, true);
  if (allowed_.size() != parts) {
    throw InvalidInput("support mask length must equal the number of parts");
  }
  if (total == 0) return;
  for (std::size_t i = 0; i < parts; ++i) {
    if (allowed_[i]) {
      parts_[i] = total;
      return;
    }
  }
  done_ = true;
}

void CompositionIterator::next() {
  if (done_) return;
  const std::size_t n = parts_.size();
  // Leftmost nonzero allowed position that still has an allowed successor.
  std::size_t i = 0;
  while (i < n && parts_[i] == 0) ++i;
  if (i == n) {
    done_ = true;
    return;
  }
  std::size_t j = i + 1;
  while (j < n && !allowed_[j]) ++j;
  if (j == n) {
    done_ = true;
    return;
  }
  const std::int64_t moved = parts_[i];
  parts_[i] = 0;
  parts_[j] += 1;
  std::size_t first = 0;
  while (!allowed_[first]) ++first;
  parts_[first] += moved - 1;
}

}  // namespace flowcat
