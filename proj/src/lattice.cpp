#include "toric/config.hpp"
#include "toric/error.hpp"
#include "toric/ratgeom.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <optional>
#include <string>
#include <thread>

namespace toric {

namespace {

// Integer row <u, w> >= bound, one per half-space of m*P.
template <typename Int>
struct Row {
  std::vector<Int> w;
  Int bound;
};

template <typename Int>
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

template <typename Int>
Int ceil_div(const Int& a, const Int& b) {
  return -floor_div<Int>(-a, b);
}

struct Box {
  std::vector<Integer> lo, hi;
};

template <typename Int>
class Scanner {
 public:
  Scanner(std::vector<Row<Int>> rows, std::vector<Int> lo, std::vector<Int> hi, std::atomic<std::size_t>& counter,
          std::size_t cap)
      : rows_(std::move(rows)), lo_(std::move(lo)), hi_(std::move(hi)), counter_(counter), cap_(cap) {}

  // Emits every point whose first coordinate lies in [first_lo, first_hi], in
  // lexicographic order. Returns false when the shared cap was exceeded.
  bool scan(const Int& first_lo, const Int& first_hi, std::vector<LatticeVector>& out) const {
    const std::size_t n = lo_.size();
    std::vector<Int> u(n);
    if (n == 1) return emit_last(u, 0, first_lo, first_hi, out);
    for (Int x = first_lo; x <= first_hi; ++x) {
      u[0] = x;
      if (!recurse(u, 1, out)) return false;
    }
    return true;
  }

 private:
  bool recurse(std::vector<Int>& u, std::size_t depth, std::vector<LatticeVector>& out) const {
    const std::size_t n = lo_.size();
    if (depth == n - 1) return emit_last(u, depth, lo_[depth], hi_[depth], out);
    for (Int x = lo_[depth]; x <= hi_[depth]; ++x) {
      u[depth] = x;
      if (!recurse(u, depth + 1, out)) return false;
    }
    return true;
  }

  // Solves every row for the last free coordinate, with all earlier
  // coordinates fixed, and emits the resulting integer interval.
  bool emit_last(std::vector<Int>& u, std::size_t last, Int lo, Int hi, std::vector<LatticeVector>& out) const {
    for (const auto& r : rows_) {
      Int partial = 0;
      for (std::size_t i = 0; i < last; ++i) partial += r.w[i] * u[i];
      const Int rhs = r.bound - partial;
      const Int& c = r.w[last];
      if (c > 0) {
        lo = std::max(lo, ceil_div<Int>(rhs, c));
      } else if (c < 0) {
        hi = std::min(hi, floor_div<Int>(rhs, c));
      } else if (rhs > 0) {
        return true;
      }
      if (lo > hi) return true;
    }
    const auto count = static_cast<std::size_t>(hi - lo + 1);
    if (counter_.fetch_add(count) + count > cap_) return false;
    for (Int x = lo; x <= hi; ++x) {
      u[last] = x;
      LatticeVector p(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) p[i] = Integer(u[i]);
      out.push_back(std::move(p));
    }
    return true;
  }

  std::vector<Row<Int>> rows_;
  std::vector<Int> lo_, hi_;
  std::atomic<std::size_t>& counter_;
  std::size_t cap_;
};

template <typename Int>
Int convert(const Integer& v) {
  if constexpr (std::is_same_v<Int, Integer>) {
    return v;
  } else {
    return static_cast<Int>(v);
  }
}

template <typename Int>
std::vector<LatticeVector> run_scan(const std::vector<Row<Integer>>& big_rows, const Box& box) {
  std::vector<Row<Int>> rows;
  for (const auto& r : big_rows) {
    Row<Int> row;
    for (const auto& c : r.w) row.w.push_back(convert<Int>(c));
    row.bound = convert<Int>(r.bound);
    rows.push_back(std::move(row));
  }
  std::vector<Int> lo, hi;
  for (std::size_t i = 0; i < box.lo.size(); ++i) {
    lo.push_back(convert<Int>(box.lo[i]));
    hi.push_back(convert<Int>(box.hi[i]));
  }

  const std::size_t cap = max_lattice_points();
  std::atomic<std::size_t> counter{0};
  Scanner<Int> scanner(std::move(rows), lo, hi, counter, cap);

  // Contiguous slabs of the first coordinate; concatenating the slab results
  // in order reproduces the sequential lexicographic scan.
  const Int span = hi[0] - lo[0] + 1;
  const auto slabs = static_cast<std::size_t>(
      std::max<Int>(1, std::min<Int>(static_cast<Int>(worker_threads()), span)));
  std::vector<std::vector<LatticeVector>> parts(slabs);
  std::vector<char> ok(slabs, 1);
  auto slab_range = [&](std::size_t k) {
    const Int a = lo[0] + span * static_cast<Int>(k) / static_cast<Int>(slabs);
    const Int b = lo[0] + span * static_cast<Int>(k + 1) / static_cast<Int>(slabs) - 1;
    return std::pair<Int, Int>{a, b};
  };
  if (slabs == 1) {
    ok[0] = scanner.scan(lo[0], hi[0], parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < slabs; ++k) {
      pool.emplace_back([&, k] {
        auto [a, b] = slab_range(k);
        ok[k] = scanner.scan(a, b, parts[k]);
      });
    }
    for (auto& t : pool) t.join();
  }
  if (std::find(ok.begin(), ok.end(), 0) != ok.end())
    throw ToricError(ErrorKind::ResourceLimit,
                     "lattice enumeration exceeds " + std::to_string(cap) + " points (TT_MAX_LATTICE_POINTS)");
  std::vector<LatticeVector> out;
  for (auto& part : parts) out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  return out;
}

bool fits_small(const Integer& v) {
  static const Integer limit = Integer(1) << 28;
  return v < limit && v > -limit;
}

}  // namespace

std::vector<LatticeVector> lattice_points(const Polytope& p, std::int64_t m) {
  if (m <= 0) throw ToricError(ErrorKind::Usage, "dilation factor m must be a positive integer");
  const auto& verts = p.vertices();
  const std::size_t n = p.rank();
  const Rational mq(m);

  Box box;
  for (std::size_t i = 0; i < n; ++i) {
    Rational lo = verts.front()[i], hi = verts.front()[i];
    for (const auto& v : verts) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    box.lo.push_back(ceil(mq * lo));
    box.hi.push_back(floor(mq * hi));
    if (box.lo.back() > box.hi.back()) return {};
  }

  std::vector<Row<Integer>> rows;
  for (const auto& h : p.halfspaces())
    rows.push_back({std::vector<Integer>(h.normal.begin(), h.normal.end()), ceil(-mq * h.offset)});

  bool small = n <= 8;
  for (std::size_t i = 0; i < n && small; ++i) small = fits_small(box.lo[i]) && fits_small(box.hi[i]);
  for (const auto& r : rows) {
    for (const auto& c : r.w) small = small && fits_small(c);
    small = small && fits_small(r.bound);
  }
  if (small) return run_scan<std::int64_t>(rows, box);
  return run_scan<Integer>(rows, box);
}

}  // namespace toric
