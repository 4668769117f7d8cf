#include "perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "error.hpp"
#include "graph.hpp"

namespace gia {

int CycleType::degree() const {
  int total = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) total += static_cast<int>(k + 1) * counts[k];
  return total;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    require(v >= 0 && v < n, ErrorCode::InvalidArgument,
            "permutation image " + std::to_string(v) + " out of range [0," + std::to_string(n) + ")");
    require(!seen[static_cast<std::size_t>(v)], ErrorCode::InvalidArgument,
            "permutation image " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
  auto images = identity(n).images_;
  require(a >= 0 && a < n && b >= 0 && b < n, ErrorCode::InvalidArgument, "transposition point out of range");
  std::swap(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]);
  return Permutation(std::move(images));
}

Permutation Permutation::cycle(int n, std::span<const int> points) {
  auto images = identity(n).images_;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const int from = points[k];
    const int to = points[(k + 1) % points.size()];
    require(from >= 0 && from < n && to >= 0 && to < n, ErrorCode::InvalidArgument, "cycle point out of range");
    images[static_cast<std::size_t>(from)] = to;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> images;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      require(used == token.size(), ErrorCode::Parse, "malformed permutation entry '" + token + "'");
      images.push_back(v);
    } catch (const std::logic_error&) {
      fail(ErrorCode::Parse, "malformed permutation entry '" + token + "'");
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::compose(const Permutation& q) const {
  require(size() == q.size(), ErrorCode::InvalidArgument, "composing permutations of different degree");
  std::vector<int> images(images_.size());
  for (int i = 0; i < size(); ++i) images[static_cast<std::size_t>(i)] = (*this)(q(i));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int i = 0; i < size(); ++i) images[static_cast<std::size_t>((*this)(i))] = i;
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

CycleType Permutation::cycle_type() const {
  CycleType type;
  type.counts.assign(images_.size(), 0);
  std::vector<char> seen(images_.size(), 0);
  for (int start = 0; start < size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    int length = 0;
    for (int v = start; !seen[static_cast<std::size_t>(v)]; v = (*this)(v)) {
      seen[static_cast<std::size_t>(v)] = 1;
      ++length;
    }
    ++type.counts[static_cast<std::size_t>(length - 1)];
  }
  return type;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
}

PermGroup close_generators(int n, std::span<const Permutation> generators, std::size_t cap) {
  require(n >= 0, ErrorCode::InvalidArgument, "negative group degree");
  for (const auto& g : generators)
    require(g.size() == n, ErrorCode::InvalidArgument,
            "generator of degree " + std::to_string(g.size()) + " in a group of degree " + std::to_string(n));
  std::set<Permutation> seen{Permutation::identity(n)};
  std::deque<Permutation> frontier{Permutation::identity(n)};
  while (!frontier.empty()) {
    const Permutation x = frontier.front();
    frontier.pop_front();
    for (const auto& g : generators) {
      Permutation y = g.compose(x);
      if (seen.insert(y).second) {
        require(seen.size() <= cap, ErrorCode::CapExceeded,
                "group closure exceeds " + std::to_string(cap) + " elements");
        frontier.push_back(std::move(y));
      }
    }
  }
  return PermGroup(n, std::vector<Permutation>(seen.begin(), seen.end()));
}

PermGroup symmetric_group(int n) {
  require(n >= 0 && n <= 9, ErrorCode::CapExceeded, "explicit symmetric groups are limited to degree 9");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> elements;
  do {
    elements.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return PermGroup(n, std::move(elements));
}

PermGroup trivial_group(int n) { return PermGroup(n, {Permutation::identity(n)}); }

std::pair<int, int> pair_action(const Permutation& p, int i, int j) {
  require(i != j, ErrorCode::InvalidArgument, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                                                  ") is a loop; simple graphs have none");
  require(i >= 0 && j >= 0 && i < p.size() && j < p.size(), ErrorCode::InvalidArgument,
          "pair index out of range");
  const int a = p(i);
  const int b = p(j);
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

std::uint64_t factorial(int n) {
  require(n >= 0 && n <= 20, ErrorCode::CapExceeded, "factorial argument outside [0,20]");
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= static_cast<std::uint64_t>(k);
  return r;
}

std::uint64_t stabilizer_order(const LabeledGraph& g, int n) {
  const int cv = g.support_size();
  require(cv <= kMaxAutomorphismSupport, ErrorCode::CapExceeded,
          "stabilizer order needs cv <= " + std::to_string(kMaxAutomorphismSupport) + ", got " + std::to_string(cv));
  require(n >= 0 && n <= kMaxVertices, ErrorCode::InvalidArgument, "ambient vertex count out of range");
  if (cv > 0) {
    require(g.max_support_vertex() < n, ErrorCode::InvalidArgument,
            "graph uses vertex " + std::to_string(g.max_support_vertex()) + " outside [0," + std::to_string(n) + ")");
  }
  return factorial(n - cv) * support_automorphism_count(g);
}

}  // namespace gia
