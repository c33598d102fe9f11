#include <algorithm>
#include <string>

#include "dcrit/error.hpp"
#include "dcrit/hypergraph.hpp"

namespace dcrit::hyper {
namespace {

bool forms_triangle(const Triple& a, const Triple& b, const Triple& c) {
  if (intersection_size(a, b) != 1 || intersection_size(b, c) != 1 || intersection_size(a, c) != 1) {
    return false;
  }
  std::vector<Vertex> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  return std::unique(all.begin(), all.end()) - all.begin() == 6;
}

class RszSearch {
 public:
  explicit RszSearch(std::size_t n) : n_(n), pair_used_(n * n, 0) {
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        for (Vertex c = b + 1; c < n; ++c) triples_.push_back({a, b, c});
      }
    }
    free_pairs_ = n * (n - (n > 0 ? 1 : 0)) / 2;
  }

  std::vector<Triple> run() {
    dfs(0);
    return best_;
  }

 private:
  bool pair_free(const Triple& t) const {
    return !pair_used_[t[0] * n_ + t[1]] && !pair_used_[t[0] * n_ + t[2]] && !pair_used_[t[1] * n_ + t[2]];
  }

  void mark(const Triple& t, char value) {
    pair_used_[t[0] * n_ + t[1]] = value;
    pair_used_[t[0] * n_ + t[2]] = value;
    pair_used_[t[1] * n_ + t[2]] = value;
  }

  bool closes_triangle(const Triple& t) const {
    for (std::size_t i = 0; i < chosen_.size(); ++i) {
      if (intersection_size(chosen_[i], t) != 1) continue;
      for (std::size_t j = i + 1; j < chosen_.size(); ++j) {
        if (forms_triangle(chosen_[i], chosen_[j], t)) return true;
      }
    }
    return false;
  }

  void dfs(std::size_t start) {
    if (chosen_.size() > best_.size()) best_ = chosen_;
    // Each further edge consumes three unused vertex pairs.
    const std::size_t room = std::min(triples_.size() - start, free_pairs_ / 3);
    if (chosen_.size() + room <= best_.size()) return;
    for (std::size_t idx = start; idx < triples_.size(); ++idx) {
      const Triple& t = triples_[idx];
      if (!pair_free(t) || closes_triangle(t)) continue;
      mark(t, 1);
      free_pairs_ -= 3;
      chosen_.push_back(t);
      dfs(idx + 1);
      chosen_.pop_back();
      free_pairs_ += 3;
      mark(t, 0);
      if (chosen_.size() + std::min(triples_.size() - idx - 1, free_pairs_ / 3) <= best_.size()) return;
    }
  }

  std::size_t n_;
  std::vector<Triple> triples_;
  std::vector<char> pair_used_;
  std::size_t free_pairs_ = 0;
  std::vector<Triple> chosen_;
  std::vector<Triple> best_;
};

}  // namespace

RszResult rsz_exhaustive(std::size_t n) {
  if (n > 7) throw TooLarge("exact RSz search is limited to n <= 7");
  RszResult result;
  result.witness = Hypergraph3(n);
  for (const Triple& t : RszSearch(n).run()) result.witness.add_edge(t[0], t[1], t[2]);
  result.value = result.witness.size();
  return result;
}

}  // namespace dcrit::hyper
