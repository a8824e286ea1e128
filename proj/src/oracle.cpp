#include "allee/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <thread>

namespace allee {

namespace {

// Interval [lo, hi] * 2^-P with integer endpoints.
struct DI {
  Integer lo;
  Integer hi;
};

using Box = std::vector<DI>;

class Fixed {
 public:
  explicit Fixed(unsigned bits) : P_(bits) {}

  unsigned bits() const { return P_; }

  DI from(const Rational& q) const
  {
    Integer num = q.get_num();
    num <<= P_;
    DI r;
    mpz_fdiv_q(r.lo.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_cdiv_q(r.hi.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    return r;
  }

  DI from(const RatInterval& q) const { return {from(q.lo).lo, from(q.hi).hi}; }
  static DI point(const Integer& v) { return {v, v}; }

  Rational to_rational(const Integer& v) const
  {
    Rational r(v, Integer(1) << P_);
    r.canonicalize();
    return r;
  }
  RatInterval to_interval(const DI& x) const { return {to_rational(x.lo), to_rational(x.hi)}; }

  static DI add(const DI& a, const DI& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  static DI sub(const DI& a, const DI& b) { return {a.lo - b.hi, a.hi - b.lo}; }

  DI mul(const DI& a, const DI& b) const
  {
    Integer p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    const Integer* mn = &p[0];
    const Integer* mx = &p[0];
    for (int i = 1; i < 4; ++i) {
      if (p[i] < *mn) mn = &p[i];
      if (p[i] > *mx) mx = &p[i];
    }
    return {shift_down(*mn, P_), shift_up(*mx, P_)};
  }

  // D^2 and D^3 for D containing 0.
  DI square_sym(const DI& d) const
  {
    const Integer m = std::max(Integer(abs(d.lo)), Integer(abs(d.hi)));
    return {Integer(0), shift_up(Integer(m * m), P_)};
  }
  DI cube(const DI& d) const { return {shift_down(Integer(d.lo * d.lo * d.lo), 2 * P_), shift_up(Integer(d.hi * d.hi * d.hi), 2 * P_)}; }

  static Integer shift_down(const Integer& x, unsigned s)
  {
    Integer r;
    mpz_fdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), s);
    return r;
  }
  static Integer shift_up(const Integer& x, unsigned s)
  {
    Integer r;
    mpz_cdiv_q_2exp(r.get_mpz_t(), x.get_mpz_t(), s);
    return r;
  }

  double to_double(const Integer& v) const { return std::ldexp(v.get_d(), -static_cast<int>(P_)); }
  Integer from_double(double x) const { return Integer(std::ldexp(x, static_cast<int>(P_))); }

 private:
  unsigned P_;
};

bool contains_zero(const DI& x) { return sgn(x.lo) <= 0 && sgn(x.hi) >= 0; }
Integer width(const DI& x) { return x.hi - x.lo; }
Integer max_width(const Box& b)
{
  Integer w = 0;
  for (const auto& x : b) w = std::max(w, width(x));
  return w;
}

// Everything the solver needs about the system in fixed point.
class Engine {
 public:
  Engine(const SeparableSystem& sys, unsigned bits) : sys_(sys), fx_(bits), n_(sys.dim())
  {
    coef_.resize(static_cast<std::size_t>(n_ * n_));
    dcoef_.resize(coef_.size());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        const auto& c = sys.component(i, j);
        auto& e = coef_[idx(i, j)];
        for (int k = 0; k < 4; ++k) e[static_cast<std::size_t>(k)] = fx_.from(c[static_cast<std::size_t>(k)]);
        auto& d = dcoef_[idx(i, j)];
        for (int k = 0; k < 4; ++k) d[static_cast<std::size_t>(k)] = to_double(c[static_cast<std::size_t>(k)]);
      }
    // Fixed-point constants 2 and 3.
    two_ = Fixed::point(Integer(2) << bits);
    three_ = Fixed::point(Integer(3) << bits);
  }

  int n() const { return n_; }
  const Fixed& fx() const { return fx_; }
  const SeparableSystem& system() const { return sys_; }

  static Integer mid(const DI& x)
  {
    Integer s = x.lo + x.hi;
    return Fixed::shift_down(s, 1);
  }

  // p(X) and p'(X) by Taylor expansion at the midpoint.
  void eval_component(int i, int j, const DI& X, DI* value, DI* deriv) const
  {
    const auto& c = coef_[idx(i, j)];
    const Integer m = mid(X);
    const DI M = Fixed::point(m);
    const DI D{X.lo - m, X.hi - m};
    const DI D2 = fx_.square_sym(D);
    // p(m), p'(m), p''(m)/2
    const DI pm = Fixed::add(fx_.mul(Fixed::add(fx_.mul(Fixed::add(fx_.mul(c[3], M), c[2]), M), c[1]), M), c[0]);
    const DI c3m3 = fx_.mul(fx_.mul(three_, c[3]), M);
    const DI dpm = Fixed::add(fx_.mul(Fixed::add(c3m3, fx_.mul(two_, c[2])), M), c[1]);
    const DI half_d2 = Fixed::add(c3m3, c[2]);
    if (value) {
      DI v = Fixed::add(pm, fx_.mul(dpm, D));
      v = Fixed::add(v, fx_.mul(half_d2, D2));
      v = Fixed::add(v, fx_.mul(c[3], fx_.cube(D)));
      *value = v;
    }
    if (deriv) {
      DI d = Fixed::add(dpm, fx_.mul(fx_.mul(two_, half_d2), D));
      d = Fixed::add(d, fx_.mul(fx_.mul(three_, c[3]), D2));
      *deriv = d;
    }
  }

  Box eval(const Box& X) const
  {
    Box F(static_cast<std::size_t>(n_), DI{Integer(0), Integer(0)});
    DI v;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (zero_component(i, j)) continue;
        eval_component(i, j, X[static_cast<std::size_t>(j)], &v, nullptr);
        F[static_cast<std::size_t>(i)] = Fixed::add(F[static_cast<std::size_t>(i)], v);
      }
    return F;
  }

  std::vector<DI> jacobian(const Box& X) const
  {
    std::vector<DI> J(static_cast<std::size_t>(n_ * n_), DI{Integer(0), Integer(0)});
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        if (zero_component(i, j)) continue;
        eval_component(i, j, X[static_cast<std::size_t>(j)], nullptr, &J[idx(i, j)]);
      }
    return J;
  }

  // Inverse of the Jacobian at the box midpoint, in doubles.
  bool preconditioner(const Box& X, std::vector<double>& Y) const
  {
    const std::size_t n = static_cast<std::size_t>(n_);
    std::vector<double> A(n * n), I(n * n, 0.0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        const double x = fx_.to_double(mid(X[static_cast<std::size_t>(j)]));
        const auto& d = dcoef_[idx(i, j)];
        A[idx(i, j)] = d[1] + 2 * d[2] * x + 3 * d[3] * x * x;
      }
    for (std::size_t i = 0; i < n; ++i) I[i * n + i] = 1.0;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      for (std::size_t r = c + 1; r < n; ++r)
        if (std::abs(A[r * n + c]) > std::abs(A[piv * n + c])) piv = r;
      if (std::abs(A[piv * n + c]) < 1e-200) return false;
      for (std::size_t k = 0; k < n; ++k) {
        std::swap(A[c * n + k], A[piv * n + k]);
        std::swap(I[c * n + k], I[piv * n + k]);
      }
      const double p = A[c * n + c];
      for (std::size_t k = 0; k < n; ++k) {
        A[c * n + k] /= p;
        I[c * n + k] /= p;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c) continue;
        const double f = A[r * n + c];
        if (f == 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
          A[r * n + k] -= f * A[c * n + k];
          I[r * n + k] -= f * I[c * n + k];
        }
      }
    }
    for (double v : I)
      if (!std::isfinite(v)) return false;
    Y = std::move(I);
    return true;
  }

  // Krawczyk image of X; nullopt when no preconditioner is available.
  std::optional<Box> krawczyk(const Box& X) const
  {
    std::vector<double> Yd;
    if (!preconditioner(X, Yd)) return std::nullopt;
    const std::size_t n = static_cast<std::size_t>(n_);
    std::vector<DI> Y(n * n);
    for (std::size_t k = 0; k < n * n; ++k) Y[k] = Fixed::point(fx_.from_double(Yd[k]));
    Box M(n), D(n);
    for (std::size_t j = 0; j < n; ++j) {
      const Integer m = mid(X[j]);
      M[j] = Fixed::point(m);
      D[j] = {X[j].lo - m, X[j].hi - m};
    }
    const Box Fm = eval(M);
    const std::vector<DI> J = jacobian(X);
    Box K(n);
    const Integer one = Integer(1) << fx_.bits();
    for (std::size_t i = 0; i < n; ++i) {
      DI acc = M[i];
      for (std::size_t j = 0; j < n; ++j) acc = Fixed::sub(acc, fx_.mul(Y[i * n + j], Fm[j]));
      for (std::size_t j = 0; j < n; ++j) {
        DI e = i == j ? Fixed::point(one) : DI{Integer(0), Integer(0)};
        for (std::size_t k = 0; k < n; ++k) e = Fixed::sub(e, fx_.mul(Y[i * n + k], J[k * n + j]));
        acc = Fixed::add(acc, fx_.mul(e, D[j]));
      }
      K[i] = acc;
    }
    return K;
  }

  bool origin_is_root() const
  {
    std::vector<Rational> zero(static_cast<std::size_t>(n_), Rational(0));
    for (const auto& v : sys_.eval(zero))
      if (v != 0) return false;
    return true;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }
  bool zero_component(int i, int j) const
  {
    const auto& d = sys_.component(i, j);
    return d[0] == 0 && d[1] == 0 && d[2] == 0 && d[3] == 0;
  }
  static double to_double(const Rational& q) { return q.get_d(); }

  const SeparableSystem& sys_;
  Fixed fx_;
  int n_;
  std::vector<std::array<DI, 4>> coef_;
  std::vector<std::array<double, 4>> dcoef_;
  DI two_;
  DI three_;
};

bool inside_interior(const Box& K, const Box& X)
{
  for (std::size_t i = 0; i < K.size(); ++i)
    if (!(K[i].lo > X[i].lo && K[i].hi < X[i].hi)) return false;
  return true;
}

std::optional<Box> intersect(const Box& A, const Box& B)
{
  Box out(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) {
    out[i].lo = std::max(A[i].lo, B[i].lo);
    out[i].hi = std::min(A[i].hi, B[i].hi);
    if (out[i].lo > out[i].hi) return std::nullopt;
  }
  return out;
}

enum class Sign { negative, nonnegative, undecided };

// Contract a box known to hold a unique root until the sign pattern of the
// root is clear.
Sign classify_root(const Engine& eng, Box& X, bool origin_root)
{
  for (int iter = 0; iter < 400; ++iter) {
    bool all_pos = true, any_neg = false, has_origin = true;
    for (const auto& x : X) {
      if (sgn(x.hi) < 0) any_neg = true;
      if (sgn(x.lo) <= 0) all_pos = false;
      if (!contains_zero(x)) has_origin = false;
    }
    if (any_neg) return Sign::negative;
    if (all_pos) return Sign::nonnegative;
    if (has_origin && origin_root) return Sign::nonnegative;
    auto K = eng.krawczyk(X);
    if (!K) return Sign::undecided;
    auto I = intersect(*K, X);
    if (!I) return Sign::undecided;
    if (max_width(*I) == max_width(X) && iter > 8) return Sign::undecided;
    X = std::move(*I);
  }
  return Sign::undecided;
}

// Contract a certified box until its width drops below 2^-target_bits of
// the fixed-point unit or no progress is made.
void tighten(const Engine& eng, Box& X, unsigned target_bits)
{
  const unsigned P = eng.fx().bits();
  const Integer goal = P > target_bits ? Integer(Integer(1) << (P - target_bits)) : Integer(1);
  for (int iter = 0; iter < 200 && max_width(X) > goal; ++iter) {
    auto K = eng.krawczyk(X);
    if (!K) return;
    auto I = intersect(*K, X);
    if (!I) return;
    if (max_width(*I) == max_width(X)) return;
    X = std::move(*I);
  }
}

// Decide, for a certified root box, how the sorted-order constraint holds.
// Returns the orbit weight, 0 when the root is not sorted, -1 if undecided.
int orbit_weight(const Engine& eng, Box X)
{
  const int n = eng.n();
  std::vector<bool> tie(static_cast<std::size_t>(std::max(0, n - 1)), false);
  for (int i = 0; i + 1 < n; ++i) {
    bool decided = false;
    for (int iter = 0; iter < 120 && !decided; ++iter) {
      const DI& u = X[static_cast<std::size_t>(i)];
      const DI& v = X[static_cast<std::size_t>(i + 1)];
      if (u.lo > v.hi) {
        decided = true;
        break;
      }
      if (u.hi < v.lo) return 0;
      Box H = X;
      const DI hull{std::min(u.lo, v.lo), std::max(u.hi, v.hi)};
      H[static_cast<std::size_t>(i)] = hull;
      H[static_cast<std::size_t>(i + 1)] = hull;
      auto KH = eng.krawczyk(H);
      if (KH && inside_interior(*KH, H)) {
        tie[static_cast<std::size_t>(i)] = true;
        decided = true;
        break;
      }
      auto K = eng.krawczyk(X);
      if (!K) return -1;
      auto I = intersect(*K, X);
      if (!I || max_width(*I) == max_width(X)) return -1;
      X = std::move(*I);
    }
    if (!decided) return -1;
  }
  long long w = 1;
  for (int k = 2; k <= n; ++k) w *= k;
  int run = 1;
  for (int i = 0; i + 1 < n; ++i) {
    if (tie[static_cast<std::size_t>(i)]) {
      ++run;
      w /= run;
    } else {
      run = 1;
    }
  }
  return static_cast<int>(w);
}

bool may_be_sorted(const Box& X)
{
  for (std::size_t i = 0; i + 1 < X.size(); ++i)
    if (X[i].hi < X[i + 1].lo) return false;
  return true;
}

struct Shared {
  std::mutex mu;
  std::vector<Box> stack;
  int busy = 0;
  long processed = 0;
  long excluded = 0;
  std::vector<CertifiedBox> found;
  std::vector<Box> unresolved;
  int negative = 0;
  int count = 0;
};

void solve_worker(const Engine& eng, const OracleOptions& opt, bool origin_root, Shared& sh)
{
  const Fixed& fx = eng.fx();
  const Integer min_width = Integer(1) << 12;  // 2^(12 - P): precision exhausted
  while (true) {
    Box X;
    {
      std::unique_lock<std::mutex> lock(sh.mu);
      if (sh.stack.empty()) {
        if (sh.busy == 0) return;
        lock.unlock();
        std::this_thread::yield();
        continue;
      }
      X = std::move(sh.stack.back());
      sh.stack.pop_back();
      ++sh.busy;
      if (sh.processed >= opt.budget) {
        sh.unresolved.push_back(std::move(X));
        --sh.busy;
        continue;
      }
      ++sh.processed;
    }
    std::vector<Box> children;
    std::optional<CertifiedBox> certified;
    bool excluded = false;
    bool unresolved = false;
    bool negative = false;

    if (opt.symmetry && !may_be_sorted(X)) {
      excluded = true;
    } else {
      const Box F = eng.eval(X);
      for (const auto& f : F)
        if (!contains_zero(f)) excluded = true;
    }
    if (!excluded) {
      auto K = eng.krawczyk(X);
      bool split = true;
      Box target = X;
      if (K) {
        if (inside_interior(*K, X)) {
          Box R = *K;
          const Sign s = classify_root(eng, R, origin_root);
          split = false;
          if (s == Sign::undecided) {
            unresolved = true;
          } else if (s == Sign::negative) {
            negative = true;
          } else {
            int weight = 1;
            if (opt.symmetry) weight = orbit_weight(eng, R);
            if (weight < 0) {
              unresolved = true;
            } else if (weight > 0) {
              CertifiedBox cb;
              for (const auto& x : R) cb.box.push_back(fx.to_interval(x));
              cb.status = BoxStatus::unique_root;
              cb.nonnegative = true;
              cb.weight = weight;
              certified = std::move(cb);
            }
          }
        } else {
          auto I = intersect(*K, X);
          if (!I) {
            excluded = true;
            split = false;
          } else {
            target = std::move(*I);
            if (max_width(target) * 10 < max_width(X) * 8) {
              children.push_back(std::move(target));
              split = false;
            }
          }
        }
      }
      if (split) {
        if (max_width(target) < min_width) {
          unresolved = true;
        } else {
          std::size_t k = 0;
          for (std::size_t i = 1; i < target.size(); ++i)
            if (width(target[i]) > width(target[k])) k = i;
          // Off-centre split point so exact rational roots avoid the faces.
          Integer cut = target[k].lo + Integer(width(target[k]) * 61) / 127;
          Box left = target, right = target;
          left[k].hi = cut;
          right[k].lo = cut;
          children.push_back(std::move(right));
          children.push_back(std::move(left));
        }
      }
    }
    {
      std::lock_guard<std::mutex> lock(sh.mu);
      --sh.busy;
      if (excluded) ++sh.excluded;
      if (negative) ++sh.negative;
      if (unresolved) sh.unresolved.push_back(X);
      if (certified) {
        sh.count += certified->weight;
        sh.found.push_back(std::move(*certified));
      }
      for (auto& c : children) sh.stack.push_back(std::move(c));
    }
  }
}

bool box_less(const CertifiedBox& x, const CertifiedBox& y)
{
  for (std::size_t i = 0; i < x.box.size(); ++i) {
    if (x.box[i].lo != y.box[i].lo) return x.box[i].lo < y.box[i].lo;
  }
  return false;
}

std::vector<RatInterval> default_region(int n, const Rational& a)
{
  const Rational R = 2 + n * a;
  return std::vector<RatInterval>(static_cast<std::size_t>(n), RatInterval(Rational(-1, 64), R));
}

}  // namespace

std::vector<Rational> SeparableSystem::eval(const std::vector<Rational>& x) const
{
  std::vector<Rational> out(static_cast<std::size_t>(n_), Rational(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const auto& c = component(i, j);
      const Rational& t = x[static_cast<std::size_t>(j)];
      out[static_cast<std::size_t>(i)] += ((c[3] * t + c[2]) * t + c[1]) * t + c[0];
    }
  return out;
}

SeparableSystem allee_oracle_system(int n, const Rational& a, const Rational& b)
{
  if (n < 1) throw std::invalid_argument("allee_oracle_system: n must be positive");
  SeparableSystem s(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& c = s.component(i, j);
      if (i == j)
        c = {Rational(0), Rational(-b - (n - 1) * a), Rational(1 + b), Rational(-1)};
      else
        c = {Rational(0), a, Rational(0), Rational(0)};
    }
  return s;
}

SeparableSystem shifted_identity_system(int n)
{
  SeparableSystem s(n);
  for (int i = 0; i < n; ++i) s.component(i, i) = {Rational(-(i + 1), 5), Rational(1), Rational(0), Rational(0)};
  return s;
}

OracleResult interval_solve(const SeparableSystem& sys, const std::vector<RatInterval>& region, const OracleOptions& opt)
{
  if (static_cast<int>(region.size()) != sys.dim()) throw std::invalid_argument("interval_solve: region dimension mismatch");
  const Engine eng(sys, opt.precision);
  Shared sh;
  Box start;
  for (const auto& r : region) start.push_back(eng.fx().from(r));
  sh.stack.push_back(std::move(start));
  const bool origin_root = eng.origin_is_root();
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    solve_worker(eng, opt, origin_root, sh);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back([&] { solve_worker(eng, opt, origin_root, sh); });
    for (auto& th : pool) th.join();
  }
  OracleResult res;
  res.n = sys.dim();
  res.count = sh.count;
  res.processed = sh.processed;
  res.excluded = sh.excluded;
  res.negative_roots = sh.negative;
  res.complete = sh.unresolved.empty();
  std::sort(sh.found.begin(), sh.found.end(), box_less);
  res.boxes = std::move(sh.found);
  for (const auto& u : sh.unresolved) {
    CertifiedBox cb;
    for (const auto& x : u) cb.box.push_back(eng.fx().to_interval(x));
    cb.status = BoxStatus::unresolved;
    res.boxes.push_back(std::move(cb));
  }
  return res;
}

OracleResult interval_solve_full(int n, const Rational& a, const Rational& b, const OracleOptions& opt)
{
  const SeparableSystem sys = allee_oracle_system(n, a, b);
  const auto region = opt.region ? *opt.region : default_region(n, a);
  OracleResult res = interval_solve(sys, region, opt);
  if (opt.outer_check && !opt.region) {
    const Rational R = region.front().hi;
    OracleOptions inner = opt;
    inner.symmetry = false;
    bool clear = true;
    for (int k = 0; k < n && clear; ++k) {
      std::vector<RatInterval> shell(static_cast<std::size_t>(n), RatInterval(Rational(-1, 64), 2 * R));
      shell[static_cast<std::size_t>(k)] = RatInterval(R, 2 * R);
      const OracleResult o = interval_solve(sys, shell, inner);
      if (!o.complete || o.count != 0) clear = false;
    }
    res.outer_clear = clear;
    if (!clear) res.complete = false;
  }
  return res;
}

ReductionCheck verify_reduction(const SeparableSystem& sys, const OracleResult& res, const OracleOptions& opt)
{
  ReductionCheck out;
  if (!res.complete) {
    out.detail = "oracle run incomplete";
    return out;
  }
  const Engine eng(sys, opt.precision);
  for (const auto& cb : res.boxes) {
    if (cb.status != BoxStatus::unique_root || !cb.nonnegative) continue;
    Box X;
    for (const auto& x : cb.box) X.push_back(eng.fx().from(x));
    tighten(eng, X, 60);
    std::vector<DI> xs = X;
    std::sort(xs.begin(), xs.end(), [](const DI& p, const DI& q) { return p.lo < q.lo; });
    int clusters = 0;
    Integer reach;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i == 0 || xs[i].lo > reach) {
        ++clusters;
        reach = xs[i].hi;
      } else {
        reach = std::max(reach, xs[i].hi);
      }
    }
    out.max_clusters = std::max(out.max_clusters, clusters);
  }
  out.conclusive = true;
  out.holds = out.max_clusters <= 3;
  out.detail = "at most " + std::to_string(out.max_clusters) + " distinct coordinate values per root";
  return out;
}

ReductionCheck verify_reduction(int n, const Rational& a, const Rational& b, const OracleOptions& opt)
{
  const OracleResult res = interval_solve_full(n, a, b, opt);
  return verify_reduction(allee_oracle_system(n, a, b), res, opt);
}

std::string to_string(BoxStatus s)
{
  switch (s) {
    case BoxStatus::excluded: return "excluded";
    case BoxStatus::unique_root: return "unique-root";
    case BoxStatus::unresolved: return "unresolved";
  }
  return "unknown";
}

nlohmann::json to_json(const OracleResult& r)
{
  nlohmann::json boxes = nlohmann::json::array();
  for (const auto& b : r.boxes) {
    nlohmann::json iv = nlohmann::json::array();
    for (const auto& x : b.box) iv.push_back({{"lo", x.lo.get_str()}, {"hi", x.hi.get_str()}, {"approx", to_decimal(x.mid(), 12)}});
    boxes.push_back({{"status", to_string(b.status)}, {"nonnegative", b.nonnegative}, {"weight", b.weight}, {"box", iv}});
  }
  nlohmann::json j = {{"n", r.n},           {"count", r.count},       {"complete", r.complete}, {"processed", r.processed},
                      {"excluded", r.excluded}, {"negative_roots", r.negative_roots}, {"boxes", boxes}};
  if (r.outer_clear) j["outer_clear"] = *r.outer_clear;
  return j;
}

}  // namespace allee
