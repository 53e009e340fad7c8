#include "jeth/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace jeth::oracle {

namespace {

// Own vertex-to-bit encoding, independent of jetcomplex internals.
// X variables take bits [0, mn), Y variables [mn, 2mn).
std::vector<std::uint64_t> facet_masks_or_throw(const std::vector<Facet>& order,
                                                std::size_t& words_out) {
  const int m = order[0].m, n = order[0].n;
  const int bits = 2 * m * n;
  const std::size_t words = static_cast<std::size_t>((bits + 63) / 64);
  words_out = words;
  std::vector<std::uint64_t> masks(order.size() * words, 0);
  for (std::size_t t = 0; t < order.size(); ++t) {
    for (const auto& v : order[t].vertices()) {
      int b = (v.family == VertexFamily::Y ? m * n : 0) + (v.row - 1) * n +
              (v.col - 1);
      masks[t * words + b / 64] |= std::uint64_t(1) << (b % 64);
    }
  }
  return masks;
}

// Turn count straight from the definition: an E step followed by an S step.
long long turn_count_from_steps(const LatticePath& p) {
  long long t = 0;
  const auto& pts = p.points;
  for (std::size_t i = 2; i < pts.size(); ++i) {
    bool prev_east = pts[i - 1].col == pts[i - 2].col + 1;
    bool next_south = pts[i].row == pts[i - 1].row + 1;
    if (prev_east && next_south) ++t;
  }
  return t;
}

}  // namespace

bool verify_shelling(const std::vector<Facet>& order) {
  if (order.size() <= 1) return true;
  const std::size_t q = order[0].vertices().size();
  for (const auto& f : order)
    if (f.vertices().size() != q)
      throw ParameterError("verify_shelling: facets have unequal vertex counts");
  std::size_t words = 0;
  auto masks = facet_masks_or_throw(order, words);

  const std::size_t e = order.size();
  // corner[i] = union of all singleton differences F_i \ F_s over s < i.
  std::vector<std::uint64_t> corner(e * words, 0);
  for (std::size_t i = 0; i < e; ++i) {
    const std::uint64_t* mi = &masks[i * words];
    for (std::size_t s = 0; s < i; ++s) {
      const std::uint64_t* ms = &masks[s * words];
      int cnt = 0;
      std::size_t hw = 0;
      std::uint64_t hx = 0;
      for (std::size_t w = 0; w < words && cnt <= 1; ++w) {
        std::uint64_t x = mi[w] & ~ms[w];
        if (x) {
          cnt += std::popcount(x);
          hw = w;
          hx = x;
        }
      }
      if (cnt == 1) corner[i * words + hw] |= hx;
    }
  }
  // The shelling condition: every difference F_i \ F_j meets the corner set.
  for (std::size_t i = 1; i < e; ++i) {
    const std::uint64_t* mi = &masks[i * words];
    const std::uint64_t* ci = &corner[i * words];
    for (std::size_t j = 0; j < i; ++j) {
      const std::uint64_t* mj = &masks[j * words];
      bool hit = false;
      for (std::size_t w = 0; w < words; ++w)
        if (mi[w] & ~mj[w] & ci[w]) {
          hit = true;
          break;
        }
      if (!hit) return false;
    }
  }
  return true;
}

std::vector<BigInt> f_vector(const std::vector<Facet>& facets,
                             std::uint64_t max_faces) {
  if (facets.empty()) return {BigInt(1)};
  const int m = facets[0].m, n = facets[0].n;
  const int bits = 2 * m * n;
  const std::size_t q = facets[0].vertices().size();
  for (const auto& f : facets)
    if (f.vertices().size() != q)
      throw ParameterError("f_vector: facets have unequal vertex counts");

  BigInt workload = BigInt(facets.size()) * (BigInt(1) << q);
  if (workload > max_faces)
    throw GuardError("max_faces", workload.str(),
                     "f_vector: " + workload.str() +
                         " face encodings exceed the guard of " +
                         std::to_string(max_faces));
  if (bits > 64)
    throw GuardError("max_faces", workload.str(),
                     "f_vector: vertex set needs " + std::to_string(bits) +
                         " bits, beyond the 64-bit face encoding");

  std::size_t words = 0;
  auto masks = facet_masks_or_throw(facets, words);
  std::unordered_set<std::uint64_t> faces;
  faces.reserve(static_cast<std::size_t>(
      std::min<std::uint64_t>(workload.convert_to<std::uint64_t>(), 1u << 24)));
  for (std::size_t t = 0; t < facets.size(); ++t) {
    std::uint64_t mask = masks[t];
    // Submask walk enumerates every subset of the facet, the empty set last.
    std::uint64_t sub = mask;
    while (true) {
      faces.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
  }
  std::vector<BigInt> f(q + 1, 0);
  for (std::uint64_t face : faces) f[std::popcount(face)] += 1;
  return f;
}

HVector h_from_f(std::span<const BigInt> f, int d) {
  if (static_cast<int>(f.size()) != d + 1)
    throw ParameterError("h_from_f: got " + std::to_string(f.size()) +
                         " face counts, expected d+1 = " + std::to_string(d + 1));
  ExactPolynomial acc;
  for (int i = 0; i <= d; ++i) {
    // f[i] * z^i * (1-z)^(d-i)
    std::vector<BigInt> term(static_cast<std::size_t>(d) + 1, 0);
    for (int t = 0; t + i <= d; ++t)
      term[static_cast<std::size_t>(i + t)] =
          f[i] * binom(d - i, t) * ((t % 2 == 0) ? 1 : -1);
    acc = acc + ExactPolynomial(std::move(term));
  }
  return HVector{std::move(acc.coeffs)};
}

BigInt brute_nonintersecting(std::span<const GridPoint> starts,
                             std::span<const GridPoint> ends,
                             std::optional<long long> k,
                             std::uint64_t max_tuples) {
  if (starts.empty() || starts.size() != ends.size())
    throw ParameterError("brute_nonintersecting: need equally many starts and ends");
  const std::size_t d = starts.size();
  std::vector<std::vector<LatticePath>> all(d);
  BigInt product = 1;
  for (std::size_t r = 0; r < d; ++r) {
    all[r] = enumerate_paths(starts[r], ends[r], max_tuples);
    product *= static_cast<std::uint64_t>(all[r].size());
  }
  if (product > max_tuples)
    throw GuardError("max_tuples", product.str(),
                     "brute_nonintersecting: " + product.str() +
                         " path tuples exceed the guard of " +
                         std::to_string(max_tuples));

  struct PointHash {
    std::size_t operator()(GridPoint p) const {
      return std::hash<long long>()((static_cast<long long>(p.row) << 32) ^
                                    static_cast<unsigned>(p.col));
    }
  };

  BigInt count = 0;
  std::vector<std::size_t> pick(d, 0);
  auto rec = [&](auto&& self, std::size_t r,
                 std::unordered_set<GridPoint, PointHash>& used,
                 long long turns_so_far) -> void {
    if (r == d) {
      if (!k || *k == turns_so_far) count += 1;
      return;
    }
    for (const auto& path : all[r]) {
      bool clash = false;
      for (auto p : path.points)
        if (used.count(p)) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (auto p : path.points) used.insert(p);
      self(self, r + 1, used, turns_so_far + turn_count_from_steps(path));
      for (auto p : path.points) used.erase(p);
    }
  };
  std::unordered_set<GridPoint, PointHash> used;
  rec(rec, 0, used, 0);
  return count;
}

}  // namespace jeth::oracle
