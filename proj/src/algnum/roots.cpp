#include "subq/algnum/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace subq {

namespace {

struct CPoly {
  QPoly re, im;
};

struct CValue {
  Rational re, im;
};

// p(z0 + d t) split into real and imaginary parts.
CPoly along(const QPoly& p, const CValue& z0, const CValue& d) {
  QPoly u({z0.re, d.re}), v({z0.im, d.im});
  CPoly acc;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    QPoly nre = acc.re * u - acc.im * v + QPoly(p.coeffs()[k]);
    QPoly nim = acc.re * v + acc.im * u;
    acc.re = std::move(nre);
    acc.im = std::move(nim);
  }
  return acc;
}

CValue eval_at(const QPoly& p, const CValue& z) {
  CValue acc{0, 0};
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    Rational re = acc.re * z.re - acc.im * z.im + p.coeffs()[k];
    Rational im = acc.re * z.im + acc.im * z.re;
    acc = {re, im};
  }
  return acc;
}

// Number of roots of p on the closed segment [z0, z1].
int roots_on_segment(const QPoly& p, const CValue& z0, const CValue& z1) {
  CValue d{z1.re - z0.re, z1.im - z0.im};
  if (d.re == 0 && d.im == 0) {
    CValue w = eval_at(p, z0);
    return (w.re == 0 && w.im == 0) ? 1 : 0;
  }
  CPoly c = along(p, z0, d);
  QPoly g = gcd(c.re, c.im);
  if (g.degree() < 1) return 0;
  QPoly sf = squarefree_part(g);
  int n = SturmSequence(sf).count_roots(0, 1);
  if (sf.eval(0) == 0) ++n;
  return n;
}

bool boundary_root_free(const QPoly& p, const ComplexBox& b) {
  CValue v0{b.re.lo, b.im.lo}, v1{b.re.hi, b.im.lo}, v2{b.re.hi, b.im.hi}, v3{b.re.lo, b.im.hi};
  return roots_on_segment(p, v0, v1) == 0 && roots_on_segment(p, v1, v2) == 0 &&
         roots_on_segment(p, v2, v3) == 0 && roots_on_segment(p, v3, v0) == 0;
}

Rational power_of_two_below(const Rational& s) {
  Rational r = 1;
  while (r > s) r /= 2;
  return r;
}

// Lower bound on |Im z| over the non-real roots z of a squarefree polynomial.
Rational imaginary_separation(const QPoly& p) {
  ZPoly z = primitive_integer_part(p);
  const int n = z.degree();
  Integer norm = z.norm1();
  Integer denom = 2;
  Integer nn = n;
  for (int k = 0; k < (n + 3) / 2; ++k) denom *= nn;
  for (int k = 0; k < n - 1; ++k) denom *= norm;
  return power_of_two_below(make_rational(Integer(1), denom));
}

// Picks a split value in (lo, hi) near the midpoint such that the segment
// built by `segment(v)` carries no root.
template <class Segment>
Rational root_free_split(const QPoly& p, const Interval& span, Segment segment) {
  Rational w = span.width();
  Rational mid = span.mid();
  for (int k = 0; k < 64; ++k) {
    int step = (k + 1) / 2;
    Rational cand = mid + ((k % 2) ? Rational(step) : Rational(-step)) * w / 64;
    if (k == 0) cand = mid;
    auto [a, b] = segment(cand);
    if (roots_on_segment(p, a, b) == 0) return cand;
  }
  throw DomainError("could not find a root-free split line");
}

// Halves the longer side; returns (first half, second half).
std::pair<ComplexBox, ComplexBox> split_box(const QPoly& p, const ComplexBox& b) {
  if (b.re.width() >= b.im.width()) {
    Rational x = root_free_split(p, b.re, [&](const Rational& v) {
      return std::pair<CValue, CValue>{{v, b.im.lo}, {v, b.im.hi}};
    });
    return {{{b.re.lo, x}, b.im}, {{x, b.re.hi}, b.im}};
  }
  Rational y = root_free_split(p, b.im, [&](const Rational& v) {
    return std::pair<CValue, CValue>{{b.re.lo, v}, {b.re.hi, v}};
  });
  return {{b.re, {b.im.lo, y}}, {b.re, {y, b.im.hi}}};
}

ComplexBox refine_upper(const QPoly& p, ComplexBox b, const Rational& max_width) {
  while (b.max_width() > max_width) {
    auto [first, second] = split_box(p, b);
    b = winding_count(p, first) == 1 ? first : second;
  }
  return b;
}

}  // namespace

std::vector<Interval> isolate_real_roots(const QPoly& p) {
  std::vector<Interval> out;
  if (p.degree() < 1) return out;
  SturmSequence sturm(p);
  Rational bound = 2 * root_bound(p);
  struct Job {
    Rational lo, hi;
    int count;
  };
  std::vector<Job> stack;
  int total = sturm.count_roots(-bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Job j = stack.back();
    stack.pop_back();
    if (j.count == 1) {
      out.push_back({j.lo, j.hi});
      continue;
    }
    Rational w = j.hi - j.lo;
    Rational mid = (j.lo + j.hi) / 2;
    for (int k = 1; p.eval(mid) == 0; ++k) mid = (j.lo + j.hi) / 2 + w / (Rational(1 << std::min(k, 20)) * 3);
    int left = sturm.count_roots(j.lo, mid);
    if (j.count - left > 0) stack.push_back({mid, j.hi, j.count - left});
    if (left > 0) stack.push_back({j.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  return out;
}

void refine_real_root(const QPoly& p, Interval& iv, const Rational& w) {
  if (iv.lo == iv.hi) return;
  int slo = sgn(p.eval(iv.lo));
  while (iv.width() > w) {
    Rational mid = iv.mid();
    int sm = sgn(p.eval(mid));
    if (sm == 0) {
      iv = Interval::point(mid);
      return;
    }
    if (sm == slo)
      iv.lo = mid;
    else
      iv.hi = mid;
  }
}

int winding_count(const QPoly& p, const ComplexBox& b) {
  CValue v[4] = {{b.re.lo, b.im.lo}, {b.re.hi, b.im.lo}, {b.re.hi, b.im.hi}, {b.re.lo, b.im.hi}};
  CValue vals[4];
  for (int k = 0; k < 4; ++k) vals[k] = eval_at(p, v[k]);
  static const CValue units[] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}, {2, -1}};
  for (const CValue& c : units) {
    bool ok = true;
    for (const auto& w : vals) ok = ok && (c.re * w.im + c.im * w.re) != 0;
    if (!ok) continue;
    int sum = 0;
    for (int k = 0; k < 4; ++k) {
      const CValue& a = v[k];
      const CValue& e = v[(k + 1) % 4];
      CPoly q = along(p, a, {e.re - a.re, e.im - a.im});
      QPoly re = c.re * q.re - c.im * q.im;
      QPoly im = c.re * q.im + c.im * q.re;
      sum += cauchy_index(re, im, 0, 1);
    }
    if (sum % 2 != 0) throw DomainError("odd winding sum: root on boundary");
    return sum / 2;
  }
  throw DomainError("no admissible rotation for winding count");
}

std::optional<int> count_roots_in_region(const QPoly& p, const ComplexBox& r) {
  bool flat_re = r.re.lo == r.re.hi, flat_im = r.im.lo == r.im.hi;
  if (r.re.lo > r.re.hi || r.im.lo > r.im.hi) return 0;
  if (flat_re || flat_im) return roots_on_segment(p, {r.re.lo, r.im.lo}, {r.re.hi, r.im.hi});
  if (!boundary_root_free(p, r)) return std::nullopt;
  return winding_count(p, r);
}

// ---------------------------------------------------------------- RootSet

std::shared_ptr<const RootSet> RootSet::of(const ZPoly& p) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const RootSet>> cache;
  std::string key = p.to_string();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto made = std::make_shared<const RootSet>(p);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(key, made);
  return it->second;
}

RootSet::RootSet(ZPoly squarefree) : poly_(std::move(squarefree)), q_(poly_.to_q()) {
  if (q_.degree() < 1) throw DomainError("root set of a constant polynomial");
  const QPoly& p = q_;
  std::vector<Root> found;
  for (const auto& iv : isolate_real_roots(p)) {
    Root r;
    r.real = true;
    r.initial = r.current = ComplexBox{iv, Interval::point(0)};
    found.push_back(r);
  }
  int upper = (p.degree() - static_cast<int>(found.size())) / 2;
  if (upper > 0) {
    Rational bound = 2 * root_bound(p);
    ComplexBox start{{-bound, bound}, {imaginary_separation(p), bound}};
    std::vector<std::pair<ComplexBox, int>> stack{{start, upper}};
    while (!stack.empty()) {
      auto [b, c] = stack.back();
      stack.pop_back();
      if (c == 1) {
        Root u;
        u.upper = true;
        u.initial = u.current = b;
        Root l;
        l.initial = l.current = b.conjugate();
        found.push_back(u);
        found.push_back(l);
        continue;
      }
      auto [first, second] = split_box(p, b);
      int cf = winding_count(p, first);
      if (c - cf > 0) stack.push_back({second, c - cf});
      if (cf > 0) stack.push_back({first, cf});
    }
  }
  // Conjugate links in discovery order: upper roots are immediately followed
  // by their mirror images.
  for (std::size_t i = 0; i < found.size(); ++i) {
    if (found[i].real) found[i].conj = i;
    else if (found[i].upper) found[i].conj = i + 1;
    else found[i].conj = i - 1;
  }
  roots_ = found;
  // Shrink until the closed initial regions are pairwise disjoint.
  for (bool clash = true; clash;) {
    clash = false;
    for (std::size_t i = 0; i < roots_.size(); ++i)
      for (std::size_t j = i + 1; j < roots_.size(); ++j) {
        if (!roots_[i].current.intersects(roots_[j].current)) continue;
        clash = true;
        for (std::size_t k : {i, j}) {
          refine_locked(k, roots_[k].current.max_width() / 2);
          roots_[roots_[k].conj].initial = roots_[roots_[k].conj].current;
          roots_[k].initial = roots_[k].current;
        }
      }
  }
  std::vector<std::size_t> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) { return less_locked(a, b); });
  std::vector<std::size_t> position(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[order[k]] = k;
  std::vector<Root> sorted(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    sorted[k] = roots_[order[k]];
    sorted[k].conj = position[roots_[order[k]].conj];
  }
  roots_ = std::move(sorted);
  real_part_poly_.reset();
  real_part_roots_.clear();
}

void RootSet::refine_locked(std::size_t i, const Rational& max_width) const {
  Root& r = roots_[i];
  if (r.current.max_width() <= max_width) return;
  if (r.real) {
    refine_real_root(q_, r.current.re, max_width);
    return;
  }
  Root& up = r.upper ? r : roots_[r.conj];
  Root& down = r.upper ? roots_[r.conj] : r;
  up.current = refine_upper(q_, up.current, max_width);
  down.current = up.current.conjugate();
}

ComplexBox RootSet::box(std::size_t i, const Rational& max_width) const {
  std::lock_guard<std::mutex> lock(mu_);
  refine_locked(i, max_width);
  return roots_[i].current;
}

std::optional<Rational> RootSet::exact(std::size_t i) const {
  if (q_.degree() == 1) return -q_.coeff(0) / q_.coeff(1);
  std::lock_guard<std::mutex> lock(mu_);
  const Root& r = roots_[i];
  if (r.real && r.current.re.lo == r.current.re.hi) return r.current.re.lo;
  return std::nullopt;
}

std::size_t RootSet::real_part_index_locked(std::size_t i) const {
  if (!real_part_poly_) {
    // Res_z(p(z), p(2T - z)) vanishes at every (z_i + z_j) / 2.
    const int n = q_.degree();
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= n * n; ++t) {
      xs.emplace_back(t);
      ys.push_back(resultant(q_, compose(q_, QPoly({Rational(2 * t), Rational(-1)}))));
    }
    real_part_poly_ = squarefree_part(interpolate(xs, ys));
    real_part_roots_ = isolate_real_roots(*real_part_poly_);
  }
  Rational w = make_rational(1, 1 << 10);
  while (true) {
    refine_locked(i, w);
    std::size_t hits = 0, which = 0;
    for (std::size_t k = 0; k < real_part_roots_.size(); ++k) {
      refine_real_root(*real_part_poly_, real_part_roots_[k], w);
      if (real_part_roots_[k].intersects(roots_[i].current.re)) {
        ++hits;
        which = k;
      }
    }
    if (hits == 1) return which;
    if (hits == 0) throw DomainError("real part not located");
    w /= 16;
  }
}

bool RootSet::less_locked(std::size_t i, std::size_t j) const {
  if (i == j) return false;
  const Root& a = roots_[i];
  const Root& b = roots_[j];
  if (a.real && b.real) return a.current.re.mid() < b.current.re.mid();
  if (a.conj == j) return !a.upper;
  Rational w = make_rational(1, 1 << 4);
  const Rational floor_width = make_rational(1, 1) / Rational(Integer(1) << 60);
  while (true) {
    refine_locked(i, w);
    refine_locked(j, w);
    const auto& ra = roots_[i].current.re;
    const auto& rb = roots_[j].current.re;
    if (ra.hi < rb.lo) return true;
    if (rb.hi < ra.lo) return false;
    if (w < floor_width) break;
    w /= 16;
  }
  std::size_t ka = real_part_index_locked(i), kb = real_part_index_locked(j);
  if (ka != kb) return ka < kb;
  while (true) {
    refine_locked(i, w);
    refine_locked(j, w);
    const auto& ia = roots_[i].current.im;
    const auto& ib = roots_[j].current.im;
    if (ia.hi < ib.lo) return true;
    if (ib.hi < ia.lo) return false;
    w /= 16;
  }
}

}  // namespace subq
