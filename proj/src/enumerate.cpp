#include "lincert/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace lincert {

namespace {

// Walks partitions of `remaining` into squares with parts <= cap, descending.
// The first three parts are bounded so that m1 + m2 + m3 <= d.
class SquarePartitions {
 public:
  SquarePartitions(Int degree, std::vector<LinearSystem>& out) : degree_(degree), out_(out) {}

  void run() { descend(degree_ * degree_, degree_, 0); }

 private:
  void descend(Int remaining, Int cap, Int head_sum) {
    if (remaining == 0) {
      emit();
      return;
    }
    const std::size_t depth = parts_.size();
    Int hi = cap;
    if (depth < 3) hi = std::min(hi, degree_ - head_sum);
    while (hi * hi > remaining) --hi;
    for (Int m = hi; m >= 1; --m) {
      // Once parts drop to 1 the rest of the partition is forced.
      if (m == 1) {
        if (depth < 3 && head_sum + std::min<Int>(remaining, Int(3 - depth)) > degree_) return;
        parts_.insert(parts_.end(), static_cast<std::size_t>(remaining), 1);
        emit();
        parts_.resize(depth);
        return;
      }
      parts_.push_back(m);
      descend(remaining - m * m, m, depth < 3 ? head_sum + m : head_sum);
      parts_.pop_back();
    }
  }

  void emit() {
    Int g = degree_;
    for (Int m : parts_) g = std::gcd(g, m);
    if (g == 1) out_.push_back(LinearSystem::normalize(degree_, parts_));
  }

  Int degree_;
  std::vector<LinearSystem>& out_;
  std::vector<Int> parts_;
};

}  // namespace

std::vector<LinearSystem> enumerate_h_systems(Int max_degree) {
  std::vector<LinearSystem> out;
  for (Int d = 1; d <= max_degree; ++d) {
    const std::size_t first = out.size();
    SquarePartitions(d, out).run();
    std::sort(out.begin() + static_cast<std::ptrdiff_t>(first), out.end());
  }
  return out;
}

}  // namespace lincert
