#include "commands.hpp"

#include "render.hpp"

#include "allee/classify.hpp"
#include "allee/oracle.hpp"

#include <fstream>

namespace allee::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::filesystem::path& p, const std::string& text)
{
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw IoError("cannot open " + p.string() + " for writing");
  f << text;
  if (!f) throw IoError("write failed: " + p.string());
}

std::string read_file(const std::filesystem::path& p)
{
  std::ifstream f(p, std::ios::binary);
  if (!f) throw IoError("cannot read " + p.string());
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

std::string replace_ext(const std::filesystem::path& p, const char* ext)
{
  std::filesystem::path q = p;
  q.replace_extension(ext);
  return q.string();
}

template <class F>
int guarded(std::ostream& err, F&& f)
{
  try {
    return f();
  } catch (const NonGenericError& e) {
    err << "non-generic parameters: " << e.what() << "\n";
    return kNonGeneric;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

void require_point(const RunConfig& cfg)
{
  if (!cfg.a || !cfg.b) throw std::invalid_argument("--a and --b are required");
}

}  // namespace

int run_bp(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    if (cfg.n < 1) throw std::invalid_argument("--n must be positive");
    BorderPoly bp;
    try {
      bp = bp_total_cached(cfg.n, cfg.cache_dir, cfg.jobs);
    } catch (const std::runtime_error& e) {
      throw IoError(e.what());
    }
    out << "bp_total(" << cfg.n << "): " << bp.factors.size() << " factors, cached at " << bp_cache_path(cfg.cache_dir, cfg.n).string()
        << "\n";
    for (std::size_t i = 0; i < bp.factors.size(); ++i) {
      const auto& f = bp.factors[i];
      out << "  [" << i << "] deg " << f.poly.total_degree() << ", " << f.poly.terms().size() << " terms, {";
      bool first = true;
      for (const auto& t : f.provenance) out << (first ? "" : ", ") << t, first = false;
      out << "}: " << f.poly.to_string() << "\n";
    }
    if (cfg.out) write_file(*cfg.out, to_json(bp).dump(1) + "\n");
    return kOk;
  });
}

int run_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    ClassifyOptions opt;
    opt.amax = cfg.amax;
    opt.cache_dir = cfg.cache_dir;
    opt.mode = cfg.mode;
    opt.jobs = cfg.jobs;
    const ClassificationReport r = classify(cfg.n, opt);
    const std::filesystem::path json_path = cfg.out ? *cfg.out : std::filesystem::path("classify_n" + std::to_string(cfg.n) + ".json");
    const std::filesystem::path svg_path = cfg.svg ? *cfg.svg : std::filesystem::path(replace_ext(json_path, ".svg"));
    write_file(json_path, to_json(r).dump(1) + "\n");
    write_file(replace_ext(json_path, ".csv"), to_csv(r));
    RenderOptions ro;
    ro.columns = cfg.columns;
    ro.jobs = cfg.jobs;
    write_file(svg_path, render_svg(r, ro));
    out << "n=" << r.n << " cells=" << r.cells.size() << " amax=" << r.box.a_hi.get_str() << " mode=" << to_string(r.mode) << "\n";
    for (const auto& [t, k] : r.cells_per_total()) out << "  total " << t << ": " << k << " cells\n";
    out << "wrote " << json_path.string() << ", " << replace_ext(json_path, ".csv") << ", " << svg_path.string() << "\n";
    return kOk;
  });
}

int run_count(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    require_point(cfg);
    if (cfg.n < 2) throw std::invalid_argument("--n must be at least 2");
    const auto counts = count_all(*cfg.a, *cfg.b, cfg.n);
    const auto dedup = assemble_total(cfg.n, counts, FormulaMode::dedup).assembled_total;
    const auto closed = assemble_total(cfg.n, counts, FormulaMode::closed_form).assembled_total;
    const auto example = example_expression(cfg.n, counts);
    out << "n=" << cfg.n << " a=" << cfg.a->get_str() << " b=" << cfg.b->get_str() << "\n";
    json j = {{"n", cfg.n}, {"a", cfg.a->get_str()}, {"b", cfg.b->get_str()}};
    for (const auto& c : counts) {
      const char* name = c.mult.size() == 2 ? "c1" : "c2";
      const std::string key = count_key(c);
      out << "  " << name << key.substr(2) << " = " << c.c_value << "  (positive " << c.total_positive << ", distinct-valued "
          << c.off_diagonal << ")\n";
      j["counts"][key] = {{"total_positive", c.total_positive}, {"off_diagonal", c.off_diagonal}, {"c_value", c.c_value}};
    }
    out << "  total (dedup) = " << dedup << (cfg.mode == FormulaMode::dedup ? "  <- selected" : "") << "\n";
    out << "  total (closed formula) = " << closed << (cfg.mode == FormulaMode::closed_form ? "  <- selected" : "") << "\n";
    j["total_dedup"] = dedup;
    j["total_closed_formula"] = closed;
    if (example) {
      out << "  printed example expression = " << *example << "\n";
      j["example_expression"] = *example;
    }
    if (cfg.out) write_file(*cfg.out, j.dump(1) + "\n");
    return kOk;
  });
}

int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    require_point(cfg);
    if (cfg.n < 1) throw std::invalid_argument("--n must be positive");
    OracleOptions opt;
    opt.budget = cfg.budget;
    opt.symmetry = cfg.symmetry;
    opt.jobs = cfg.jobs;
    const OracleResult r = interval_solve_full(cfg.n, *cfg.a, *cfg.b, opt);
    const std::string text = to_json(r).dump(1) + "\n";
    if (cfg.out)
      write_file(*cfg.out, text);
    else
      out << text;
    if (!r.complete) {
      err << "warning: oracle incomplete after " << r.processed << " boxes\n";
      return kIncomplete;
    }
    if (cfg.out) out << "count " << r.count << "\n";
    return kOk;
  });
}

int run_render(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&] {
    if (!cfg.report) throw std::invalid_argument("--report is required");
    json j;
    try {
      j = json::parse(read_file(*cfg.report));
    } catch (const json::exception& e) {
      throw IoError(cfg.report->string() + ": " + e.what());
    }
    const ClassificationReport r = report_from_json(j);
    RenderOptions ro;
    ro.columns = cfg.columns;
    ro.view_amax = cfg.amax;
    ro.jobs = cfg.jobs;
    const std::filesystem::path svg_path = cfg.svg ? *cfg.svg : std::filesystem::path(replace_ext(*cfg.report, ".svg"));
    write_file(svg_path, render_svg(r, ro));
    out << "wrote " << svg_path.string() << "\n";
    return kOk;
  });
}

}  // namespace allee::cli
