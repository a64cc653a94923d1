#ifndef FLOWCAT_COMPOSITIONS_HPP
#define FLOWCAT_COMPOSITIONS_HPP

#include <cstdint>
#include <vector>

namespace flowcat {

// Iterates weak compositions of `total` into `parts` parts in colexicographic
// order, (total, 0, ..., 0) first. Positions whose support_mask entry is false
// are held at zero. An empty mask allows every position.
class CompositionIterator {
 public:
  CompositionIterator(std::int64_t total, std::size_t parts,
                      std::vector<bool> support_mask = {});

  bool done() const { return done_; }
  const std::vector<std::int64_t>& current() const { return parts_; }
  void next();

 private:
  std::vector<bool> allowed_;
  std::vector<std::int64_t> parts_;
  bool done_ = false;
};

template <class Visit>
void for_each_composition(std::int64_t total, std::size_t parts,
                          std::vector<bool> support_mask, Visit&& visit) {
  for (CompositionIterator it(total, parts, std::move(support_mask));
       !it.done(); it.next()) {
    visit(it.current());
  }
}

}  // namespace flowcat

#endif
