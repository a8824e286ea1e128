#include "allee/borderpoly.hpp"

#include "allee/elimination.hpp"
#include "allee/mgcd.hpp"
#include "allee/serialize.hpp"
#include "allee/systems.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <sstream>
#include <functional>
#include <thread>
#include <stdexcept>

namespace allee {

namespace {

MultiPoly v(Var x) { return MultiPoly::var(x); }

using Raw = std::vector<std::pair<MultiPoly, std::string>>;

void add_trivial(Raw& raw)
{
  raw.emplace_back(v(Var::a), kTagTrivial);
  raw.emplace_back(v(Var::b), kTagTrivial);
  raw.emplace_back(Rational(2) * v(Var::b) - MultiPoly(1), kTagTrivial);
}

// Squarefree with respect to x and free of content in x; the stripped
// content goes to raw with the leading-coefficient tag.
MultiPoly squarefree_in(const MultiPoly& r, Var x, Raw& raw)
{
  if (r.is_zero()) throw std::logic_error("border polynomial: elimination vanished identically");
  const MultiPoly cont = content(r, x);
  if (!cont.is_constant()) raw.emplace_back(cont, kTagLeading);
  MultiPoly p = r.exact_div(cont);
  const MultiPoly g = gcd(p, p.derivative(x));
  return p.exact_div(g).normalized();
}

// Projection of the curve p(x, a, b) = 0: discriminant, leading
// coefficient and the value at x = 0.
void project_curve(const MultiPoly& p, Var x, Raw& raw)
{
  if (p.degree(x) >= 2) raw.emplace_back(discriminant(p, x), kTagJacobian);
  raw.emplace_back(p.to_dense(x).back(), kTagLeading);
  raw.emplace_back(p.substitute(x, Rational(0)), kTagBoundary);
}

MultiPoly res_after(const VietaSystem& vs, const MultiPoly& z_value)
{
  const MultiPoly f = vs.e1.substitute(Var::z, z_value);
  const MultiPoly g = vs.e2.substitute(Var::z, z_value);
  return resultant(f, g, Var::y);
}

std::mutex g_memo_mutex;
std::map<std::pair<int, int>, BorderPoly> g_memo_g1;
std::map<std::array<int, 3>, BorderPoly> g_memo_g2;

bool less_poly(const MultiPoly& p, const MultiPoly& q)
{
  if (p.total_degree() != q.total_degree()) return p.total_degree() < q.total_degree();
  if (p.size() != q.size()) return p.size() < q.size();
  return p.to_string() < q.to_string();
}

}  // namespace

MultiPoly BorderPoly::product() const
{
  MultiPoly p(1);
  for (const auto& f : factors) p = p * f.poly.pow(static_cast<unsigned>(f.multiplicity));
  return p;
}

bool BorderPoly::vanishes_at(const Rational& a, const Rational& b) const
{
  const std::map<Var, Rational> pt{{Var::a, a}, {Var::b, b}};
  return std::any_of(factors.begin(), factors.end(), [&](const BorderFactor& f) { return f.poly.eval(pt) == 0; });
}

std::optional<std::size_t> BorderPoly::find(const MultiPoly& p) const
{
  const MultiPoly np = p.normalized();
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i].poly.divide(np)) return i;
  return std::nullopt;
}

std::vector<MultiPoly> BorderPoly::polys() const
{
  std::vector<MultiPoly> out;
  for (const auto& f : factors) out.push_back(f.poly);
  return out;
}

BorderPoly make_border_poly(int n, const Raw& raw)
{
  std::vector<MultiPoly> inputs;
  std::vector<std::string> tags;
  for (const auto& [p, tag] : raw) {
    if (p.is_zero()) throw std::logic_error("border polynomial: zero factor");
    if (p.is_constant()) continue;
    inputs.push_back(p);
    tags.push_back(tag);
  }
  const auto cb = coprime_basis(inputs);
  std::vector<BorderFactor> fs(cb.basis.size());
  for (std::size_t j = 0; j < cb.basis.size(); ++j) fs[j].poly = cb.basis[j].normalized();
  for (std::size_t i = 0; i < inputs.size(); ++i)
    for (std::size_t j : cb.support[i]) fs[j].provenance.insert(tags[i]);
  std::sort(fs.begin(), fs.end(), [](const BorderFactor& x, const BorderFactor& y) { return less_poly(x.poly, y.poly); });
  return {n, std::move(fs)};
}

G1Elimination g1_elimination(int n1, int n2)
{
  const ReducedSystem sys = build_reduced(n1 + n2, {n1, n2});
  const auto g11 = sys.equations[0].to_dense(Var::z);
  const auto g12 = sys.equations[1].to_dense(Var::z);
  if (g11.size() != 2) throw std::logic_error("g1_elimination: z must enter G11 linearly");
  const MultiPoly& A = g11[1];
  const MultiPoly Bneg = -g11[0];
  const int d = static_cast<int>(g12.size()) - 1;
  MultiPoly P;
  for (int k = 0; k <= d; ++k) P += g12[static_cast<std::size_t>(k)] * Bneg.pow(static_cast<unsigned>(k)) * A.pow(static_cast<unsigned>(d - k));
  const auto Q = P.divide(allee_cubic(Var::y));
  if (!Q) throw std::logic_error("g1_elimination: c(y) does not divide the eliminant");
  return {*Q, Bneg, A};
}

void clear_border_poly_memo()
{
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_memo_g1.clear();
  g_memo_g2.clear();
}

BorderPoly bp_G1(int n1, int n2)
{
  if (n1 < n2 || n2 < 1) throw std::invalid_argument("bp_G1: need n1 >= n2 >= 1");
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo_g1.find({n1, n2});
    if (it != g_memo_g1.end()) return it->second;
  }
  const G1Elimination el = g1_elimination(n1, n2);
  Raw raw;
  add_trivial(raw);
  const MultiPoly& Q = el.q;
  raw.emplace_back(discriminant(Q, Var::y), kTagJacobian);
  raw.emplace_back(Q.to_dense(Var::y).back(), kTagLeading);
  raw.emplace_back(Q.substitute(Var::y, Rational(0)), kTagBoundary);
  raw.emplace_back(Q.substitute(Var::y, v(Var::b)), kTagJacobian);
  raw.emplace_back(Q.substitute(Var::y, Rational(1)), kTagJacobian);
  raw.emplace_back(resultant(Q, el.z_num, Var::y), kTagBoundary);
  BorderPoly bp = make_border_poly(n1 + n2, raw);
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_memo_g1.emplace(std::make_pair(n1, n2), bp);
  return bp;
}

VietaSystem vieta_system(int n1, int n2, int n3)
{
  const int n = n1 + n2 + n3;
  const MultiPoly y = v(Var::y), z = v(Var::z), a = v(Var::a), b = v(Var::b);
  const MultiPoly w = MultiPoly(1) + b - y - z;
  VietaSystem vs;
  vs.e1 = y * z + (y + z) * w - b - Rational(n) * a;
  vs.e2 = y * z * w - a * (Rational(n1) * y + Rational(n2) * z + Rational(n3) * w);
  return vs;
}

BorderPoly bp_G2(int n1, int n2, int n3)
{
  if (n1 < n2 || n2 < n3 || n3 < 1) throw std::invalid_argument("bp_G2: need n1 >= n2 >= n3 >= 1");
  {
    std::lock_guard<std::mutex> lock(g_memo_mutex);
    auto it = g_memo_g2.find({n1, n2, n3});
    if (it != g_memo_g2.end()) return it->second;
  }
  const VietaSystem vs = vieta_system(n1, n2, n3);
  const MultiPoly y = v(Var::y), b = v(Var::b);
  Raw raw;
  add_trivial(raw);
  project_curve(squarefree_in(resultant(vs.e1, vs.e2, Var::z), Var::y, raw), Var::y, raw);
  project_curve(squarefree_in(resultant(vs.e1, vs.e2, Var::y), Var::z, raw), Var::z, raw);
  raw.emplace_back(res_after(vs, MultiPoly(1) + b - y), kTagBoundary);
  raw.emplace_back(res_after(vs, y), kTagJacobian);
  raw.emplace_back(res_after(vs, MultiPoly(1) + b - Rational(2) * y), kTagJacobian);
  raw.emplace_back(res_after(vs, (MultiPoly(1) + b - y) * Rational(1, 2)), kTagJacobian);
  const std::array<std::pair<int, int>, 3> merged{{{n1 + n2, n3}, {n1 + n3, n2}, {n2 + n3, n1}}};
  for (auto [p, q] : merged) {
    if (p < q) std::swap(p, q);
    for (const auto& f : bp_G1(p, q).factors)
      for (const auto& tag : f.provenance) raw.emplace_back(f.poly, tag);
  }
  BorderPoly bp = make_border_poly(n1 + n2 + n3, raw);
  std::lock_guard<std::mutex> lock(g_memo_mutex);
  g_memo_g2.emplace(std::array<int, 3>{n1, n2, n3}, bp);
  return bp;
}

BorderPoly bp_total(int n, int jobs)
{
  if (n < 2) throw std::invalid_argument("bp_total: n must be at least 2");
  const PartitionSet ps = partitions(n);
  std::vector<std::function<BorderPoly()>> tasks;
  for (auto [n1, n2] : ps.pairs) tasks.push_back([n1, n2] { return bp_G1(n1, n2); });
  for (auto t : ps.triples) tasks.push_back([t] { return bp_G2(t[0], t[1], t[2]); });

  std::vector<BorderPoly> parts(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) parts[i] = tasks[i]();
  } else {
    for (std::size_t start = 0; start < tasks.size(); start += static_cast<std::size_t>(jobs)) {
      std::vector<std::future<BorderPoly>> fut;
      const std::size_t end = std::min(tasks.size(), start + static_cast<std::size_t>(jobs));
      for (std::size_t i = start; i < end; ++i) fut.push_back(std::async(std::launch::async, tasks[i]));
      for (std::size_t i = start; i < end; ++i) parts[i] = fut[i - start].get();
    }
  }
  Raw raw;
  add_trivial(raw);
  for (const auto& part : parts)
    for (const auto& f : part.factors)
      for (const auto& tag : f.provenance) raw.emplace_back(f.poly, tag);
  return make_border_poly(n, raw);
}

std::filesystem::path bp_cache_path(const std::filesystem::path& dir, int n)
{
  return dir / ("bp_n" + std::to_string(n) + "_v" + std::to_string(kBorderPolyVersion) + ".json");
}

json to_json(const BorderPoly& bp)
{
  json fs = json::array();
  for (const auto& f : bp.factors)
    fs.push_back({{"poly", to_json(f.poly)}, {"multiplicity", f.multiplicity}, {"provenance", std::vector<std::string>(f.provenance.begin(), f.provenance.end())}});
  return {{"n", bp.n}, {"version", kBorderPolyVersion}, {"factors", fs}};
}

BorderPoly border_poly_from_json(const json& j)
{
  BorderPoly bp;
  bp.n = j.at("n").get<int>();
  for (const auto& f : j.at("factors")) {
    BorderFactor bf;
    bf.poly = multipoly_from_json(f.at("poly"));
    bf.multiplicity = f.at("multiplicity").get<int>();
    for (const auto& t : f.at("provenance")) bf.provenance.insert(t.get<std::string>());
    bp.factors.push_back(std::move(bf));
  }
  return bp;
}

BorderPoly bp_total_cached(int n, const std::filesystem::path& dir, int jobs)
{
  const auto path = bp_cache_path(dir, n);
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    json j = json::parse(in, nullptr, false);
    if (!j.is_discarded() && j.value("version", -1) == kBorderPolyVersion && j.value("n", -1) == n) return border_poly_from_json(j);
  }
  BorderPoly bp = bp_total(n, jobs);
  std::filesystem::create_directories(dir);
  std::ostringstream tmpname;
  tmpname << path.filename().string() << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id());
  const auto tmp = dir / tmpname.str();
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << to_json(bp).dump(1) << "\n";
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
  return bp;
}

BorderPoly prune_positive_quadrant(const BorderPoly& bp)
{
  BorderPoly out;
  out.n = bp.n;
  for (const auto& f : bp.factors) {
    const auto& t = f.poly.terms();
    const int s = sign(t.front().coeff);
    const bool one_sign = std::all_of(t.begin(), t.end(), [s](const MultiPoly::Term& x) { return sign(x.coeff) == s; });
    // a and b themselves bound the box and stay.
    const bool is_var = t.size() == 1;
    if (one_sign && !is_var) continue;
    out.factors.push_back(f);
  }
  return out;
}

}  // namespace allee
