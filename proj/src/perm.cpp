#include "braidcert/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>

namespace braidcert {

Perm Perm::identity(int degree) {
  if (degree < 0) throw DomainError("negative permutation degree");
  std::vector<int> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_images(std::vector<int> images) {
  std::vector<bool> seen(images.size(), false);
  for (int& v : images) {
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)])
      throw DomainError("image sequence is not a permutation");
    seen[static_cast<std::size_t>(v - 1)] = true;
    v -= 1;
  }
  return Perm(std::move(images));
}

Perm Perm::transposition(int degree, int a, int b) {
  Perm p = identity(degree);
  if (a < 1 || b < 1 || a > degree || b > degree || a == b)
    throw DomainError("invalid transposition");
  std::swap(p.img_[static_cast<std::size_t>(a - 1)], p.img_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  Perm p = identity(degree);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (from < 1 || from > degree) throw DomainError("cycle entry out of range");
      if (used[static_cast<std::size_t>(from - 1)]) throw DomainError("cycles are not disjoint");
      used[static_cast<std::size_t>(from - 1)] = true;
      p.img_[static_cast<std::size_t>(from - 1)] = to - 1;
    }
  }
  return from_images([&] {
    std::vector<int> one_based(p.img_.size());
    for (std::size_t i = 0; i < p.img_.size(); ++i) one_based[i] = p.img_[i] + 1;
    return one_based;
  }());
}

int Perm::apply(int x) const {
  if (x < 1 || x > degree()) throw DomainError("point out of range");
  return img_[static_cast<std::size_t>(x - 1)] + 1;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Perm Perm::compose(const Perm& then) const {
  if (degree() != then.degree()) throw DomainError("permutation degree mismatch");
  std::vector<int> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    img[i] = then.img_[static_cast<std::size_t>(img_[i])];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<int> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i)
    img[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return Perm(std::move(img));
}

long long Perm::order() const {
  long long result = 1;
  for (const auto& cyc : cycles())
    result = std::lcm(result, static_cast<long long>(cyc.size()));
  return result;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || img_[static_cast<std::size_t>(start)] == start)
      continue;
    std::vector<int> cyc;
    int x = start;
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      cyc.push_back(x + 1);
      x = img_[static_cast<std::size_t>(x)];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string print_perm(const Perm& p) {
  auto cycles = p.cycles();
  if (cycles.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycles) {
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  return out;
}

Perm parse_perm(std::string_view text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '('", 1, static_cast<int>(i) + 1);
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point or ')'", 1, static_cast<int>(i) + 1);
      int at = static_cast<int>(i) + 1;
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > degree) throw ParseError("point out of range", 1, at);
        ++i;
      }
      cyc.push_back(static_cast<int>(v));
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("expected ')'", 1, static_cast<int>(i) + 1);
    ++i;  // ')'
    if (cyc.size() == 1) throw ParseError("cycle of length 1", 1, static_cast<int>(i));
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    any = true;
    skip_ws();
  }
  if (!any) throw ParseError("empty permutation (use '()' for the identity)", 1, 1);
  try {
    return Perm::from_cycles(degree, cycles);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

std::size_t brute_force_order(const std::vector<Perm>& gens) {
  if (gens.empty()) throw DomainError("no generators");
  const int degree = gens.front().degree();
  if (degree > 10) throw DomainError("brute-force closure is guarded to degree <= 10");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw DomainError("permutation degree mismatch");

  std::set<Perm> seen{Perm::identity(degree)};
  std::queue<Perm> frontier;
  frontier.push(Perm::identity(degree));
  while (!frontier.empty()) {
    Perm cur = frontier.front();
    frontier.pop();
    for (const Perm& g : gens) {
      Perm next = cur * g;
      if (seen.insert(next).second) frontier.push(next);
    }
  }
  return seen.size();
}

}  // namespace braidcert
