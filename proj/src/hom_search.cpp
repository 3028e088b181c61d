#include "braidcert/hom_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace braidcert {

namespace {

constexpr int kMaxDegree = 6;

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw DomainError("search degree must be between 1 and " + std::to_string(kMaxDegree));
}

// relators_by_depth[g] lists the relators whose highest generator id is g, so
// each one is checked as soon as its last generator image gets assigned.
std::vector<std::vector<const Word*>> bucket_relators(const Presentation& p) {
  std::vector<std::vector<const Word*>> buckets(p.alphabet->size());
  for (const Word& r : p.relators) {
    if (r.is_identity()) continue;  // trivially satisfied
    int highest = 0;
    for (const Letter& l : r.letters()) highest = std::max(highest, l.gen);
    buckets[static_cast<std::size_t>(highest)].push_back(&r);
  }
  return buckets;
}

bool order_exactly_two(const Perm& p) { return !p.is_identity() && (p * p).is_identity(); }

// Evaluates a word whose generators are all already assigned (guaranteed by
// the relator bucketing), without requiring a full image tuple.
Perm partial_image(const Word& w, const std::vector<Perm>& images, int degree) {
  Perm acc = Perm::identity(degree);
  for (const Letter& l : w.letters()) {
    const Perm& g = images[static_cast<std::size_t>(l.gen)];
    acc = acc * (l.sign > 0 ? g : g.inverse());
  }
  return acc;
}

struct Searcher {
  const SearchSpec& spec;
  const std::vector<Perm>& domain;
  const std::vector<std::vector<const Word*>>& buckets;
  std::vector<HomCandidate>& out;
  std::vector<Perm> images;

  bool assigned_ok(std::size_t depth) const {
    for (const Word* r : buckets[depth])
      if (!partial_image(*r, images, spec.degree).is_identity()) return false;
    return true;
  }

  bool constraints_ok() const {
    if (spec.require_nontrivial && word_image(*spec.require_nontrivial, images).is_identity())
      return false;
    for (const Word& w : spec.require_order_two)
      if (!order_exactly_two(word_image(w, images))) return false;
    return true;
  }

  void descend(std::size_t depth) {
    if (depth == spec.presentation.alphabet->size()) {
      if (constraints_ok()) out.push_back(HomCandidate{images});
      return;
    }
    for (const Perm& candidate : domain) {
      images.push_back(candidate);
      if (assigned_ok(depth)) descend(depth + 1);
      images.pop_back();
    }
  }
};

void validate_spec_words(const SearchSpec& spec) {
  auto check_word = [&](const Word& w) {
    if (!(w.alphabet() == spec.presentation.alphabet ||
          *w.alphabet() == *spec.presentation.alphabet))
      throw AlphabetError("constraint word alphabet mismatch");
  };
  if (spec.require_nontrivial) check_word(*spec.require_nontrivial);
  for (const Word& w : spec.require_order_two) check_word(w);
}

}  // namespace

std::vector<Perm> image_domain(int degree, bool involutions_only) {
  check_degree(degree);
  std::vector<int> points(static_cast<std::size_t>(degree));
  std::iota(points.begin(), points.end(), 1);
  std::vector<Perm> out;
  do {
    Perm p = Perm::from_images(points);
    if (!involutions_only || p.is_identity() || order_exactly_two(p)) out.push_back(p);
  } while (std::next_permutation(points.begin(), points.end()));
  return out;
}

std::vector<HomCandidate> search_serial(const SearchSpec& spec) {
  check_degree(spec.degree);
  validate_spec_words(spec);
  const auto domain = image_domain(spec.degree, spec.restrict_to_involutions);
  const auto buckets = bucket_relators(spec.presentation);
  std::vector<HomCandidate> out;
  Searcher searcher{spec, domain, buckets, out, {}};
  searcher.descend(0);
  return out;
}

std::vector<HomCandidate> search(const SearchSpec& spec) {
  check_degree(spec.degree);
  validate_spec_words(spec);
  const std::size_t ngens = spec.presentation.alphabet->size();
  if (ngens == 0) return search_serial(spec);

  const auto domain = image_domain(spec.degree, spec.restrict_to_involutions);
  const auto buckets = bucket_relators(spec.presentation);

  // Fan out over the first generator's image; each branch is an independent
  // serial search, and results are concatenated in branch order so the output
  // does not depend on the thread count.
  std::vector<std::vector<HomCandidate>> partial(domain.size());
#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < static_cast<long long>(domain.size()); ++idx) {
    Searcher searcher{spec, domain, buckets, partial[static_cast<std::size_t>(idx)], {}};
    searcher.images.push_back(domain[static_cast<std::size_t>(idx)]);
    if (searcher.assigned_ok(0)) searcher.descend(1);
  }

  std::vector<HomCandidate> out;
  for (auto& chunk : partial)
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  return out;
}

long long count_all_homs(const Presentation& p, int degree) {
  check_degree(degree);
  const auto domain = image_domain(degree, false);
  const std::size_t ngens = p.alphabet->size();
  double total = std::pow(static_cast<double>(domain.size()), static_cast<double>(ngens));
  if (total > 2e7) throw DomainError("brute-force hom count is guarded to tiny instances");

  std::vector<std::size_t> odo(ngens, 0);
  long long count = 0;
  while (true) {
    std::vector<Perm> images;
    images.reserve(ngens);
    for (std::size_t g = 0; g < ngens; ++g) images.push_back(domain[odo[g]]);
    if (verify_hom(p, images).ok) ++count;
    std::size_t g = 0;
    for (; g < ngens; ++g) {
      if (++odo[g] < domain.size()) break;
      odo[g] = 0;
    }
    if (g == ngens) break;
  }
  return count;
}

}  // namespace braidcert
