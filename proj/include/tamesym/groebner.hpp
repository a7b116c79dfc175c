#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <map>
#include <unordered_map>
#include <vector>

#include "tamesym/field.hpp"
#include "tamesym/presentation.hpp"

namespace tamesym {

/// Shorter words come first; equal lengths compare lexicographically by
/// arrow index. The first word of a polynomial is its leading word, so
/// rewriting always trades a word for longer (or equally long, later) ones.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// Gröbner basis of I + J^N in the path algebra, where J^N (paths of length
/// at least N) is treated as zero throughout.
template <ExactField F>
class TruncatedGroebner {
 public:
  using E = typename F::Element;
  using Poly = std::map<Word, E, WordOrder>;

  TruncatedGroebner(const F& field, const Quiver& quiver, unsigned N)
      : field_(field), quiver_(quiver), N_(N) {}

  void add_relation(const Poly& p) { queue_.push_back(truncate(p)); }

  void complete() {
    while (!queue_.empty()) {
      Poly p = reduce(std::move(queue_.front()));
      queue_.pop_front();
      if (p.empty()) continue;
      const E inv = field_.inv(p.begin()->second);
      for (auto& [w, c] : p) c = c * inv;
      const Word lm = p.begin()->first;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (!active_[i]) continue;
        const Word& other = basis_[i].begin()->first;
        if (other.find(lm) != Word::npos) {
          active_[i] = false;
          lm_index_.erase(other);
          queue_.push_back(basis_[i]);
        }
      }
      basis_.push_back(std::move(p));
      active_.push_back(true);
      const std::size_t idx = basis_.size() - 1;
      lm_index_[lm] = idx;
      for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (!active_[i]) continue;
        push_overlaps(idx, i);
        if (i != idx) push_overlaps(i, idx);
      }
    }
  }

  /// Normal form of p modulo the basis, truncated at N.
  Poly reduce(Poly p) const {
    Poly out;
    while (!p.empty()) {
      auto it = p.begin();
      const Word w = it->first;
      const E c = it->second;
      p.erase(it);
      std::size_t g_idx = 0, at = 0, len = 0;
      if (!find_divisor(w, g_idx, at, len)) {
        out.emplace(w, c);
        continue;
      }
      const Word left = w.substr(0, at), right = w.substr(at + len);
      // w = left * lm(g) * right; subtract c * left * (g - lm(g)) * right.
      bool first = true;
      for (const auto& [gw, gc] : basis_[g_idx]) {
        if (first) {
          first = false;
          continue;
        }
        if (left.size() + gw.size() + right.size() >= N_) continue;
        Word nw = left + gw + right;
        auto [slot, inserted] = p.try_emplace(std::move(nw), field_.zero());
        slot->second -= c * gc;
        if (is_zero(slot->second)) p.erase(slot);
      }
    }
    return out;
  }

  Poly reduce_word(const Word& w) const {
    Poly p;
    if (w.size() < N_) p.emplace(w, field_.one());
    return reduce(std::move(p));
  }

  /// Paths of length 1..N-1 containing no leading word.
  std::vector<Word> normal_words() const {
    std::vector<Word> out;
    std::vector<Word> frontier;
    for (std::size_t a = 0; a < quiver_.arrows.size(); ++a) {
      Word w(1, static_cast<char>(a));
      if (!has_lm_suffix(w) && w.size() < N_) {
        out.push_back(w);
        frontier.push_back(w);
      }
    }
    while (!frontier.empty()) {
      std::vector<Word> next;
      for (const auto& w : frontier) {
        if (w.size() + 1 >= N_) continue;
        const int end = word_end(quiver_, w);
        for (std::size_t a = 0; a < quiver_.arrows.size(); ++a) {
          if (quiver_.arrows[a].source != end) continue;
          Word nw = w + static_cast<char>(a);
          if (has_lm_suffix(nw)) continue;
          out.push_back(nw);
          next.push_back(std::move(nw));
        }
      }
      frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), WordOrder{});
    return out;
  }

  std::size_t basis_size() const {
    std::size_t n = 0;
    for (bool a : active_) n += a;
    return n;
  }

  unsigned truncation() const { return N_; }

 private:
  F field_;
  Quiver quiver_;
  unsigned N_;
  std::vector<Poly> basis_;
  std::vector<bool> active_;
  std::unordered_map<Word, std::size_t> lm_index_;
  std::deque<Poly> queue_;

  Poly truncate(const Poly& p) const {
    Poly out;
    for (const auto& [w, c] : p)
      if (w.size() < N_ && !is_zero(c)) out.emplace(w, c);
    return out;
  }

  bool find_divisor(const Word& w, std::size_t& g_idx, std::size_t& at, std::size_t& len) const {
    for (std::size_t s = 0; s < w.size(); ++s)
      for (std::size_t l = 1; s + l <= w.size(); ++l) {
        auto it = lm_index_.find(w.substr(s, l));
        if (it != lm_index_.end()) {
          g_idx = it->second;
          at = s;
          len = l;
          return true;
        }
      }
    return false;
  }

  bool has_lm_suffix(const Word& w) const {
    for (std::size_t s = 0; s < w.size(); ++s)
      if (lm_index_.count(w.substr(s))) return true;
    return false;
  }

  // Overlaps where a suffix of lm(f) is a proper prefix of lm(g).
  void push_overlaps(std::size_t fi, std::size_t gi) {
    const Word& a = basis_[fi].begin()->first;
    const Word& b = basis_[gi].begin()->first;
    for (std::size_t l = 1; l < a.size() && l < b.size(); ++l) {
      if (a.compare(a.size() - l, l, b, 0, l) != 0) continue;
      if (a.size() + b.size() - l >= N_) continue;
      const Word u = a.substr(0, a.size() - l);
      const Word v = b.substr(l);
      Poly s;
      for (const auto& [w, c] : basis_[fi]) {
        if (w.size() + v.size() >= N_) continue;
        auto [slot, ins] = s.try_emplace(w + v, field_.zero());
        slot->second += c;
      }
      for (const auto& [w, c] : basis_[gi]) {
        if (u.size() + w.size() >= N_) continue;
        auto [slot, ins] = s.try_emplace(u + w, field_.zero());
        slot->second -= c;
      }
      Poly clean;
      for (auto& [w, c] : s)
        if (!is_zero(c)) clean.emplace(w, c);
      if (!clean.empty()) queue_.push_back(std::move(clean));
    }
  }
};

}  // namespace tamesym
