#include "braidcert/todd_coxeter.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace braidcert {

namespace {

// HLT-style enumerator. Each generator g owns two table slots, 2g for g and
// 2g+1 for g^-1; coset ids are 1-based and coset 1 is the subgroup. Rows of
// merged (dead) cosets are kept so queued coincidences can still read them.
class Enumerator {
 public:
  Enumerator(const Presentation& p, const std::vector<Word>& subgroup_gens, long max_cosets)
      : nslots_(static_cast<int>(p.alphabet->size()) * 2), limit_(std::max(1L, max_cosets)) {
    auto to_slots = [](const Word& w) {
      std::vector<int> slots;
      slots.reserve(w.length());
      for (const Letter& l : w.letters()) slots.push_back(2 * l.gen + (l.sign < 0 ? 1 : 0));
      return slots;
    };
    for (const Word& w : p.relators)
      if (!w.is_identity()) rel_words_.push_back(to_slots(w));
    for (const Word& w : subgroup_gens) {
      if (w.mode() != WordMode::Free) throw AlphabetError("subgroup words must be free-mode words");
      if (!(w.alphabet() == p.alphabet || *w.alphabet() == *p.alphabet))
        throw AlphabetError("subgroup word alphabet mismatch");
      if (!w.is_identity()) sub_words_.push_back(to_slots(w));
    }
    rows_.push_back({});  // row 0 unused
    new_coset();          // coset 1
  }

  EnumResult run() {
    bool dirty = true;
    while (dirty && !hit_limit_) {
      dirty = false;
      dirty_ = &dirty;
      for (int alpha = 1; alpha <= static_cast<int>(defined_); ++alpha) {
        if (!alive(alpha)) continue;
        if (!process(alpha)) break;
      }
    }
    EnumResult result{hit_limit_ ? EnumResult::Status::LimitExceeded : EnumResult::Status::Finite,
                      live_, defined_, max_live_, {}};
    if (!result.finite()) return result;

    std::vector<int> newid(static_cast<std::size_t>(defined_) + 1, 0);
    int count = 0;
    for (int c = 1; c <= static_cast<int>(defined_); ++c)
      if (alive(c)) newid[static_cast<std::size_t>(c)] = ++count;
    result.coset_count = count;
    for (int slot = 0; slot < nslots_; slot += 2) {
      std::vector<int> images(static_cast<std::size_t>(count));
      for (int c = 1; c <= static_cast<int>(defined_); ++c) {
        if (!alive(c)) continue;
        int d = cell(c, slot);
        if (!d || !alive(d))
          throw Error("internal: incomplete coset table after a clean pass");
        images[static_cast<std::size_t>(newid[static_cast<std::size_t>(c)] - 1)] =
            newid[static_cast<std::size_t>(d)];
      }
      result.actions.push_back(Perm::from_images(std::move(images)));
    }
    return result;
  }

 private:
  static int inv(int slot) { return slot ^ 1; }
  int& cell(int c, int s) { return rows_[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)]; }
  bool alive(int c) { return parent_[static_cast<std::size_t>(c)] == c; }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  int new_coset() {
    ++defined_;
    ++live_;
    max_live_ = std::max(max_live_, live_);
    rows_.emplace_back(static_cast<std::size_t>(nslots_), 0);
    parent_.push_back(static_cast<int>(defined_));
    return static_cast<int>(defined_);
  }

  // Defines cell(c, s) as a fresh coset; false when the limit is reached.
  bool define(int c, int s) {
    if (defined_ >= limit_) {
      hit_limit_ = true;
      return false;
    }
    int d = new_coset();
    cell(c, s) = d;
    cell(d, inv(s)) = c;
    mark_dirty();
    return true;
  }

  void mark_dirty() {
    if (dirty_) *dirty_ = true;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    int keep = std::min(a, b);
    int lose = std::max(a, b);
    parent_[static_cast<std::size_t>(lose)] = keep;
    --live_;
    queue_.push_back(lose);
    mark_dirty();
  }

  void coincidence(int a, int b) {
    merge(a, b);
    while (!queue_.empty()) {
      int dead = queue_.front();
      queue_.pop_front();
      for (int s = 0; s < nslots_; ++s) {
        int delta = cell(dead, s);
        if (!delta) continue;
        // Remove the stale back pointer so the slot can be rebound below.
        if (cell(delta, inv(s)) == dead) cell(delta, inv(s)) = 0;
        int mu = rep(dead);
        int nu = rep(delta);
        if (int t = cell(mu, s); t != 0) {
          merge(nu, t);
        } else if (int u = cell(nu, inv(s)); u != 0) {
          merge(mu, u);
        } else {
          cell(mu, s) = nu;
          cell(nu, inv(s)) = mu;
        }
      }
    }
  }

  // Scans relator/subgroup word `w` at coset alpha, defining cosets to fill
  // gaps; every scan completes (possibly via a coincidence) unless the coset
  // limit interrupts it. Returns false only on the limit.
  bool scan_and_fill(int alpha, const std::vector<int>& w) {
    int f = alpha;
    int b = alpha;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    while (true) {
      while (i <= j && cell(f, w[static_cast<std::size_t>(i)]) != 0)
        f = cell(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return true;
      }
      while (j >= i && cell(b, inv(w[static_cast<std::size_t>(j)])) != 0)
        b = cell(b, inv(w[static_cast<std::size_t>(j--)]));
      if (j < i) {
        coincidence(f, b);
        return true;
      }
      if (i == j) {
        cell(f, w[static_cast<std::size_t>(i)]) = b;
        cell(b, inv(w[static_cast<std::size_t>(i)])) = f;
        mark_dirty();
        return true;
      }
      if (!define(f, w[static_cast<std::size_t>(i)])) return false;
    }
  }

  bool process(int alpha) {
    if (alpha == 1) {
      for (const auto& w : sub_words_) {
        if (!scan_and_fill(alpha, w)) return false;
      }
    }
    for (const auto& w : rel_words_) {
      if (!scan_and_fill(alpha, w)) return false;
      if (!alive(alpha)) return true;
    }
    for (int s = 0; s < nslots_; ++s)
      if (cell(alpha, s) == 0 && !define(alpha, s)) return false;
    return true;
  }

  int nslots_;
  long limit_;
  std::vector<std::vector<int>> rel_words_;
  std::vector<std::vector<int>> sub_words_;
  std::vector<std::vector<int>> rows_;
  std::vector<int> parent_{0};
  std::deque<int> queue_;
  long defined_ = 0;
  long live_ = 0;
  long max_live_ = 0;
  bool hit_limit_ = false;
  bool* dirty_ = nullptr;
};

}  // namespace

EnumResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                        long max_cosets) {
  return Enumerator(p, subgroup_gens, max_cosets).run();
}

namespace {

EnumResult regular_action(const Presentation& p, long max_cosets) {
  EnumResult table = todd_coxeter(p, {}, max_cosets);
  if (!table.finite())
    throw LimitError("coset enumeration did not close within " + std::to_string(max_cosets) +
                     " cosets");
  return table;
}

}  // namespace

long long element_order(const Presentation& p, const Word& w, long max_cosets) {
  EnumResult table = regular_action(p, max_cosets);
  return word_image(w.in_mode(WordMode::Free), table.actions).order();
}

std::vector<long long> element_orders(const Presentation& p, long max_cosets) {
  EnumResult table = regular_action(p, max_cosets);
  const int n = static_cast<int>(table.coset_count);
  // Representative words via breadth-first search over the coset graph.
  std::vector<Word> reps(static_cast<std::size_t>(n) + 1, Word::identity(p.alphabet, WordMode::Free));
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::queue<int> frontier;
  seen[1] = true;
  frontier.push(1);
  while (!frontier.empty()) {
    int c = frontier.front();
    frontier.pop();
    for (std::size_t g = 0; g < table.actions.size(); ++g) {
      for (int sign : {1, -1}) {
        const Perm& act = table.actions[g];
        int d = sign > 0 ? act.apply(c) : act.inverse().apply(c);
        if (seen[static_cast<std::size_t>(d)]) continue;
        seen[static_cast<std::size_t>(d)] = true;
        reps[static_cast<std::size_t>(d)] =
            reps[static_cast<std::size_t>(c)] *
            Word::generator(p.alphabet, WordMode::Free, static_cast<int>(g), sign);
        frontier.push(d);
      }
    }
  }
  std::vector<long long> orders;
  orders.reserve(static_cast<std::size_t>(n));
  for (int c = 1; c <= n; ++c)
    orders.push_back(word_image(reps[static_cast<std::size_t>(c)], table.actions).order());
  return orders;
}

int coset_apply(const EnumResult& table, int coset, const Word& w) {
  if (!table.finite()) throw DomainError("cannot apply words through an unfinished enumeration");
  return word_image(w.in_mode(WordMode::Free), table.actions).apply(coset);
}

}  // namespace braidcert
