#include "allee/classify.hpp"

#include <future>
#include <set>
#include <sstream>

namespace allee {

namespace {

Rational rational_from_json(const json& j) { return Rational(j.get<std::string>()); }

json box_to_json(const ParamBox& b)
{
  return {{"a_lo", b.a_lo.get_str()}, {"a_hi", b.a_hi.get_str()}, {"b_lo", b.b_lo.get_str()}, {"b_hi", b.b_hi.get_str()}};
}

ParamBox box_from_json(const json& j)
{
  ParamBox b;
  b.a_lo = rational_from_json(j.at("a_lo"));
  b.a_hi = rational_from_json(j.at("a_hi"));
  b.b_lo = rational_from_json(j.at("b_lo"));
  b.b_hi = rational_from_json(j.at("b_hi"));
  return b;
}

}  // namespace

std::vector<long long> ClassificationReport::distinct_totals() const
{
  std::set<long long> s;
  for (const auto& c : cells) s.insert(c.total);
  return {s.begin(), s.end()};
}

std::map<long long, int> ClassificationReport::cells_per_total() const
{
  std::map<long long, int> m;
  for (const auto& c : cells) ++m[c.total];
  return m;
}

std::string count_key(const ReducedCount& c)
{
  std::string s = c.mult.size() == 2 ? "G1(" : "G2(";
  for (std::size_t i = 0; i < c.mult.size(); ++i) s += (i ? "," : "") + std::to_string(c.mult[i]);
  return s + ")";
}

ClassificationReport classify(int n, const ClassifyOptions& opt)
{
  if (n < 2) throw std::invalid_argument("classify: n must be at least 2");
  ClassificationReport r;
  r.n = n;
  r.mode = opt.mode;
  r.bp = opt.cache_dir ? bp_total_cached(n, *opt.cache_dir, opt.jobs) : bp_total(n, opt.jobs);
  r.box.a_hi = opt.amax ? *opt.amax : amax_bound(r.bp);
  if (r.box.a_hi <= 0) throw std::invalid_argument("classify: amax must be positive");
  const OpenCad cad = sample_cells(r.bp, r.box, opt.jobs);

  auto one = [&](const CellSample& s) {
    CellReport c;
    c.sample = s;
    c.counts = count_all(s.a, s.b, n);
    c.total = assemble_total(n, c.counts, opt.mode).assembled_total;
    return c;
  };
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, opt.jobs));
  r.cells.reserve(cad.cells.size());
  for (std::size_t start = 0; start < cad.cells.size(); start += jobs) {
    const std::size_t end = std::min(cad.cells.size(), start + jobs);
    if (jobs == 1) {
      r.cells.push_back(one(cad.cells[start]));
      continue;
    }
    std::vector<std::future<CellReport>> fut;
    for (std::size_t i = start; i < end; ++i) fut.push_back(std::async(std::launch::async, one, std::cref(cad.cells[i])));
    for (auto& f : fut) r.cells.push_back(f.get());
  }
  return r;
}

json to_json(const ClassificationReport& r)
{
  json cells = json::array();
  for (const auto& c : r.cells) {
    json counts = json::object();
    for (const auto& rc : c.counts)
      counts[count_key(rc)] = {{"total_positive", rc.total_positive}, {"off_diagonal", rc.off_diagonal}, {"c_value", rc.c_value}};
    cells.push_back({{"cell_id", c.sample.cell_id},
                     {"a", c.sample.a.get_str()},
                     {"b", c.sample.b.get_str()},
                     {"counts", counts},
                     {"total", c.total}});
  }
  json per = json::object();
  for (const auto& [t, k] : r.cells_per_total()) per[std::to_string(t)] = k;
  return {{"n", r.n},
          {"bp_version", r.bp_version},
          {"mode", to_string(r.mode)},
          {"box", box_to_json(r.box)},
          {"bp", to_json(r.bp)},
          {"cells", cells},
          {"summary", {{"distinct_totals", r.distinct_totals()}, {"cells_per_total", per}}}};
}

ClassificationReport report_from_json(const json& j)
{
  ClassificationReport r;
  r.n = j.at("n").get<int>();
  r.bp_version = j.at("bp_version").get<int>();
  r.mode = parse_formula_mode(j.at("mode").get<std::string>());
  r.box = box_from_json(j.at("box"));
  r.bp = border_poly_from_json(j.at("bp"));
  for (const auto& jc : j.at("cells")) {
    CellReport c;
    c.sample.cell_id = jc.at("cell_id").get<std::string>();
    c.sample.a = rational_from_json(jc.at("a"));
    c.sample.b = rational_from_json(jc.at("b"));
    const auto colon = c.sample.cell_id.find(':');
    c.sample.a_index = std::stoul(c.sample.cell_id.substr(0, colon));
    c.sample.b_index = std::stoul(c.sample.cell_id.substr(colon + 1));
    for (const auto& [key, v] : jc.at("counts").items()) {
      ReducedCount rc;
      std::string inner = key.substr(3, key.size() - 4);
      std::stringstream ss(inner);
      for (std::string part; std::getline(ss, part, ',');) rc.mult.push_back(std::stoi(part));
      rc.total_positive = v.at("total_positive").get<int>();
      rc.off_diagonal = v.at("off_diagonal").get<int>();
      rc.c_value = v.at("c_value").get<int>();
      c.counts.push_back(std::move(rc));
    }
    c.total = jc.at("total").get<long long>();
    r.cells.push_back(std::move(c));
  }
  return r;
}

std::string to_csv(const ClassificationReport& r)
{
  std::ostringstream out;
  out << "cell_id,a,b,total";
  std::vector<std::string> keys;
  if (!r.cells.empty())
    for (const auto& rc : r.cells.front().counts) keys.push_back(count_key(rc));
  for (const auto& k : keys) out << ",\"" << k << "\"";
  out << "\n";
  for (const auto& c : r.cells) {
    out << c.sample.cell_id << "," << c.sample.a.get_str() << "," << c.sample.b.get_str() << "," << c.total;
    for (const auto& rc : c.counts) out << "," << rc.off_diagonal;
    out << "\n";
  }
  return out.str();
}

}  // namespace allee
