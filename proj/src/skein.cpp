#include "chebyknot/skein.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace chebyknot {

namespace {

// Vertical smoothing joins NW-SW and NE-SE; horizontal joins SW-SE and NW-NE.
constexpr std::array<std::array<Dir, 2>, 2> kVertical = {{{Dir::NW, Dir::SW}, {Dir::NE, Dir::SE}}};
constexpr std::array<std::array<Dir, 2>, 2> kHorizontal = {{{Dir::SW, Dir::SE}, {Dir::NW, Dir::NE}}};

class LoopCounter {
 public:
  explicit LoopCounter(const BilliardDiagram& d)
      : partners_(d.partners()), n_(static_cast<int>(d.crossing_count())), free_(d.free_loops()) {
    parent_.resize(partners_.size());
  }

  int count(std::uint64_t vertical_bits, std::span<const int> order) {
    std::iota(parent_.begin(), parent_.end(), 0);
    int merges = 0;
    auto unite = [&](int x, int y) {
      x = find(x);
      y = find(y);
      if (x != y) {
        parent_[static_cast<std::size_t>(x)] = y;
        ++merges;
      }
    };
    for (int e = 0; e < 4 * n_; ++e) {
      if (e < partners_[static_cast<std::size_t>(e)]) unite(e, partners_[static_cast<std::size_t>(e)]);
    }
    for (int i = 0; i < n_; ++i) {
      int c = order.empty() ? i : order[static_cast<std::size_t>(i)];
      const auto& pairs = ((vertical_bits >> i) & 1U) ? kVertical : kHorizontal;
      for (const auto& pr : pairs) unite(end_id(c, pr[0]), end_id(c, pr[1]));
    }
    return 4 * n_ - merges + free_;
  }

 private:
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& px = parent_[static_cast<std::size_t>(x)];
      px = parent_[static_cast<std::size_t>(px)];
      x = px;
    }
    return x;
  }

  const std::vector<EndId>& partners_;
  int n_;
  int free_;
  std::vector<int> parent_;
};

// hist[e + n][loops] counts states contributing A^e delta^(loops-1).
using Histogram = std::vector<std::vector<Coeff>>;

LaurentPoly from_histogram(const Histogram& hist, int n) {
  std::vector<LaurentPoly> delta_pows;
  LaurentPoly out;
  for (std::size_t idx = 0; idx < hist.size(); ++idx) {
    for (std::size_t loops = 1; loops < hist[idx].size(); ++loops) {
      Coeff c = hist[idx][loops];
      if (c == 0) continue;
      while (delta_pows.size() < loops) delta_pows.push_back(LaurentPoly::delta_power(static_cast<unsigned>(delta_pows.size())));
      out += delta_pows[loops - 1].shifted(static_cast<int>(idx) - n) * LaurentPoly(c);
    }
  }
  return out;
}

void check_limit(std::size_t n, int limit, const char* what) {
  if (static_cast<int>(n) > limit || n >= 63) {
    throw std::length_error(std::string(what) + " limit exceeded: " + std::to_string(n) + " > " +
                            std::to_string(limit));
  }
}

}  // namespace

std::vector<std::uint8_t> state_loop_counts(const BilliardDiagram& d, std::span<const int> order) {
  check_limit(d.crossing_count(), kDefaultCrossingLimit, "crossing");
  const std::uint64_t states = std::uint64_t{1} << d.crossing_count();
  std::vector<std::uint8_t> loops(states);
  LoopCounter counter(d);
  for (std::uint64_t st = 0; st < states; ++st) loops[st] = static_cast<std::uint8_t>(counter.count(st, order));
  return loops;
}

LaurentPoly bracket_bruteforce(const SignedDiagram& d, std::span<const int> order, int crossing_limit) {
  const BilliardDiagram& g = d.diagram();
  const int n = static_cast<int>(g.crossing_count());
  check_limit(g.crossing_count(), crossing_limit, "crossing");
  if (!order.empty()) {
    std::vector<int> sorted(order.begin(), order.end());
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(sorted.size()) != n || sorted[static_cast<std::size_t>(i)] != i) {
        throw std::invalid_argument("smoothing order is not a permutation of the crossings");
      }
    }
  }
  // Bit i set: crossing order[i] gets its A-smoothing.
  std::uint64_t plus_bits = 0;
  for (int i = 0; i < n; ++i) {
    int c = order.empty() ? i : order[static_cast<std::size_t>(i)];
    if (d.sign(c) == Sign::Plus) plus_bits |= std::uint64_t{1} << i;
  }
  Histogram hist(static_cast<std::size_t>(2 * n + 1), std::vector<Coeff>(static_cast<std::size_t>(4 * n + g.free_loops() + 2), 0));
  LoopCounter counter(g);
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::uint64_t a_bits = 0; a_bits < states; ++a_bits) {
    // A-smoothing is vertical exactly on '+' crossings.
    std::uint64_t vertical = ~(a_bits ^ plus_bits) & (states - 1);
    int loops = counter.count(vertical, order);
    int a_count = std::popcount(a_bits);
    ++hist[static_cast<std::size_t>(2 * a_count - n + n)][static_cast<std::size_t>(loops)];
  }
  return from_histogram(hist, n);
}

LaurentPoly bracket_bruteforce(const SignedDiagram& d, int crossing_limit) {
  return bracket_bruteforce(d, std::span<const int>{}, crossing_limit);
}

QuarterPoly jones(const SignedDiagram& d, int crossing_limit) {
  return jones_normalize(bracket_bruteforce(d, crossing_limit), writhe_direct(d));
}

SignSequence signs_for_mask(const BilliardDiagram& d, std::uint64_t mask) {
  std::vector<std::optional<Sign>> slots(d.slot_count());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const auto& c = d.slots()[i];
    if (c) slots[i] = ((mask >> *c) & 1U) ? Sign::Minus : Sign::Plus;
  }
  return SignSequence(std::move(slots));
}

std::map<SignSequence, LaurentPoly> bracket_all_signs(const BilliardDiagram& d, int slot_limit, unsigned threads) {
  const int n = static_cast<int>(d.crossing_count());
  check_limit(d.slot_count(), slot_limit, "slot");
  const std::uint64_t states = std::uint64_t{1} << n;
  const std::vector<std::uint8_t> loops = state_loop_counts(d);
  const std::size_t max_loops = static_cast<std::size_t>(*std::max_element(loops.begin(), loops.end())) + 1;

  std::vector<LaurentPoly> results(states);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    Histogram hist(static_cast<std::size_t>(2 * n + 1), std::vector<Coeff>(max_loops, 0));
    for (std::uint64_t minus = begin; minus < end; ++minus) {
      for (auto& row : hist) std::fill(row.begin(), row.end(), 0);
      for (std::uint64_t vertical = 0; vertical < states; ++vertical) {
        // A-smoothing <=> vertical on '+' or horizontal on '-'.
        int b_count = std::popcount(vertical ^ (~minus & (states - 1)));
        int exponent = n - 2 * b_count;
        ++hist[static_cast<std::size_t>(exponent + n)][loops[vertical]];
      }
      results[minus] = from_histogram(hist, n);
    }
  };
  unsigned workers = threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, states));
  if (workers <= 1) {
    work(0, states);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (states + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t begin = w * chunk;
      std::uint64_t end = std::min(states, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }
  std::map<SignSequence, LaurentPoly> out;
  for (std::uint64_t m = 0; m < states; ++m) out.emplace(signs_for_mask(d, m), std::move(results[m]));
  return out;
}

}  // namespace chebyknot
