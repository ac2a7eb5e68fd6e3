// cblab: command-line driver for conformal-block ranks, Chern classes,
// scaling identities and the reproduction suite.
//
// Exit codes: 0 ok / identity holds, 1 verified mismatch or counterexample,
// 2 usage or internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "cblab/chern.hpp"
#include "cblab/fusion.hpp"
#include "cblab/hypotheses.hpp"
#include "cblab/json_io.hpp"
#include "cblab/parallel.hpp"
#include "cblab/picard.hpp"
#include "cblab/ranks.hpp"
#include "cblab/reproduce.hpp"
#include "cblab/scaling.hpp"

using namespace cblab;

namespace {

enum class Format { text, csv, json };

// What a subcommand produced. `rows` feeds csv and the default text view.
struct Output {
  Json json;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> text;  // overrides the table in text mode
  int code = 0;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void emit(const Output& out, Format fmt) {
  switch (fmt) {
    case Format::json:
      std::cout << out.json.dump(2) << "\n";
      return;
    case Format::csv: {
      for (std::size_t i = 0; i < out.columns.size(); ++i) {
        std::cout << (i ? "," : "") << csv_field(out.columns[i]);
      }
      std::cout << "\n";
      for (const auto& row : out.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "," : "") << csv_field(row[i]);
        std::cout << "\n";
      }
      return;
    }
    case Format::text:
      if (!out.text.empty()) {
        for (const auto& line : out.text) std::cout << line << "\n";
        return;
      }
      std::vector<std::size_t> width(out.columns.size());
      for (std::size_t i = 0; i < out.columns.size(); ++i) width[i] = out.columns[i].size();
      for (const auto& row : out.rows) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
          width[i] = std::max(width[i], row[i].size());
        }
      }
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) s += "  ";
          s += cells[i];
          if (i + 1 < cells.size()) s += std::string(width[i] - cells[i].size(), ' ');
        }
        std::cout << s << "\n";
      };
      line(out.columns);
      for (const auto& row : out.rows) line(row);
      return;
  }
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error("malformed " + what + " JSON: " + e.what());
  }
}

struct SpecInput {
  std::string text;
  std::string file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--spec", text, "bundle spec as JSON: {\"r\",\"level\",\"genus\",\"weights\"}");
    cmd->add_option("--spec-file", file, "read the bundle spec from a file (- for stdin)");
  }
  bool given() const { return !text.empty() || !file.empty(); }
  BundleSpec get() const {
    if (text.empty() && file.empty()) throw Error("a bundle spec is required (--spec or --spec-file)");
    return bundle_spec_from_json(parse_json(text.empty() ? slurp(file) : text, "spec"));
  }
};

std::string str(const BigInt& z) { return to_string(z); }
std::string str(const Rational& q) { return to_string(q); }

Json spec_json(const BundleSpec& s) { return to_json(s); }

TreeShape parse_shape(const std::string& s) {
  if (s == "caterpillar") return TreeShape::caterpillar;
  if (s == "balanced") return TreeShape::balanced;
  throw Error("unknown tree shape '" + s + "'");
}

// ---------------------------------------------------------------------------

Output cmd_rank(const BundleSpec& spec, const std::string& shape) {
  spec.validate();
  const BigInt rk = rank(spec, parse_shape(shape));
  Output o;
  o.json = {{"spec", spec_json(spec)}, {"rank", to_json(rk)}};
  o.columns = {"rank"};
  o.rows = {{str(rk)}};
  return o;
}

Output cmd_rank_seq(const BundleSpec& spec, int max_m) {
  const RankSequence seq = rank_sequence(spec, max_m);
  Output o;
  o.json = to_json(seq);
  o.columns = {"m", "rank"};
  for (std::size_t m = 0; m < seq.values.size(); ++m) o.rows.push_back({std::to_string(m), str(seq.values[m])});
  return o;
}

Output cmd_fuse(const BundleSpec& spec) {
  if (spec.n() != 3 || spec.genus != 0) throw Error("fuse needs three weights in genus 0");
  const std::int64_t n = fuse3(spec.weights[0], spec.weights[1], spec.weights[2], spec.level);
  Output o;
  o.json = {{"spec", spec_json(spec)}, {"N", std::to_string(n)}};
  o.columns = {"N"};
  o.rows = {{std::to_string(n)}};
  return o;
}

Output cmd_deg04(const BundleSpec& spec) {
  const BigInt d = deg_m04(spec);
  Output o;
  o.json = {{"spec", spec_json(spec)}, {"degree", to_json(d)}};
  o.columns = {"degree"};
  o.rows = {{str(d)}};
  return o;
}

Output cmd_c1(const BundleSpec& spec, bool basis5) {
  const DivisorClassM0n c = c1_fvector(spec);
  Output o;
  if (basis5) {
    if (spec.n() != 5) throw Error("--basis5 needs n = 5");
    const auto x = to_nonadjacent_basis_n5(c);
    const char* names[] = {"d13", "d14", "d24", "d25", "d35"};
    Json coords = Json::object();
    o.columns = {"generator", "coefficient"};
    for (int i = 0; i < 5; ++i) {
      coords[names[i]] = to_json(x[i]);
      o.rows.push_back({names[i], str(x[i])});
    }
    o.json = {{"spec", spec_json(spec)}, {"basis", coords}};
    return o;
  }
  const auto curves = fcurves(spec.n());
  o.json = {{"spec", spec_json(spec)}, {"fvector", to_json(c)}};
  o.columns = {"fcurve", "degree"};
  for (std::size_t i = 0; i < curves.size(); ++i) o.rows.push_back({to_string(curves[i]), str(c.values[i])});
  return o;
}

Output report_output(const ScalingReport& rep, const std::vector<BigInt>& values) {
  Output o;
  o.json = to_json(rep);
  Json vals = Json::array();
  for (const auto& v : values) vals.push_back(to_json(v));
  o.json["values"] = vals;
  std::string cands;
  for (std::size_t i = 0; i < rep.candidates.size(); ++i) cands += (i ? "; " : "") + rep.candidates[i];
  o.columns = {"d", "D", "Delta", "samples", "candidates"};
  o.rows = {{std::to_string(rep.d), str(rep.D), str(rep.Delta), std::to_string(rep.samples), cands}};
  return o;
}

std::vector<BigInt> parse_values(const std::string& text) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error("empty entry in --values");
    out.push_back(parse_bigint(item.substr(b, e - b + 1)));
  }
  return out;
}

Output cmd_classify(const SpecInput& in, const std::string& values, int max_m) {
  if (!values.empty()) {
    const auto f = parse_values(values);
    return report_output(classify(f), f);
  }
  RankSequence seq;
  const ScalingReport rep = classify_spec(in.get(), seq, max_m);
  Output o = report_output(rep, seq.values);
  o.json["spec"] = spec_json(seq.spec);
  return o;
}

// kind "auto": classify the spec and eliminate with R = f(1), D.
IdentityCoefficients resolve_identity(const std::string& kind, int d, int R, int D, const SpecInput& in,
                                      int max_m) {
  if (kind != "auto") return identity_coeffs(kind, d);
  if (R > 0 && D > 0) return identity_coeffs_general(R, D);
  RankSequence seq;
  const ScalingReport rep = classify_spec(in.get(), seq, max_m);
  if (rep.Delta != 0) throw Error("auto identity needs Delta = 0 rank scaling");
  return identity_coeffs_general(static_cast<int>(seq.values.at(1).get_si()),
                                 static_cast<int>(rep.D.get_si()));
}

Output cmd_identity(const IdentityCoefficients& c, int m) {
  const auto beta = c.beta(m);
  Output o;
  Json terms = Json::array();
  o.columns = {"multiple", "coefficient"};
  for (std::size_t j = 0; j < beta.size(); ++j) {
    terms.push_back({{"multiple", c.basis[j]}, {"coefficient", to_json(beta[j])}});
    o.rows.push_back({std::to_string(c.basis[j]), str(beta[j])});
  }
  o.json = {{"kind", c.kind}, {"m", m}, {"terms", terms}, {"anomaly_support", c.anomaly_support}};
  return o;
}

// Classes for `verify`: tabulated family, a JSON file {"m": class, ...}, or
// computed from a genus-0 spec.
Output cmd_verify(const IdentityCoefficients& coeffs, int m, const std::string& table,
                  const std::string& classes_file, const SpecInput& in) {
  Output o;
  auto finish_small = [&](const DivisorClassSmall& res) {
    const DivisorClassSmall norm = res.normalized();
    o.json = {{"m", m}, {"kind", coeffs.kind}, {"residual", to_json(norm)}, {"holds", res.is_zero()}};
    o.columns = {"generator", "residual"};
    const auto& names = generator_names(norm.space);
    for (std::size_t i = 0; i < names.size(); ++i) o.rows.push_back({names[i], str(norm.coords[i])});
    o.code = res.is_zero() ? 0 : 1;
  };
  if (!table.empty()) {
    const ClassTable t = tabulated_classes(table);
    auto classes = [&](int j) {
      auto it = t.entries.find(j);
      if (it == t.entries.end()) throw Error("no tabulated class for m = " + std::to_string(j));
      return it->second;
    };
    finish_small(verify_identity(classes, coeffs, m));
    return o;
  }
  if (!classes_file.empty()) {
    const Json j = parse_json(slurp(classes_file), "classes");
    std::map<int, DivisorClassSmall> small;
    std::map<int, DivisorClassM0n> m0n;
    for (auto it = j.begin(); it != j.end(); ++it) {
      const int key = std::stoi(it.key());
      if (it.value().is_object()) {
        small[key] = small_class_from_json(it.value());
      } else {
        m0n[key] = m0n_class_from_json(it.value());
      }
    }
    if (!small.empty() && !m0n.empty()) throw Error("verify: classes live in different spaces");
    if (!small.empty()) {
      finish_small(verify_identity([&](int k) { return small.at(k); }, coeffs, m));
      return o;
    }
    const auto res = verify_identity([&](int k) { return m0n.at(k); }, coeffs, m);
    o.json = {{"m", m}, {"kind", coeffs.kind}, {"residual", to_json(res)}, {"holds", res.is_zero()}};
    o.columns = {"fcurve", "residual"};
    const auto curves = fcurves(res.n);
    for (std::size_t i = 0; i < curves.size(); ++i) o.rows.push_back({to_string(curves[i]), str(res.values[i])});
    o.code = res.is_zero() ? 0 : 1;
    return o;
  }
  const BundleSpec spec = in.get();
  if (spec.genus != 0) throw Error("verify from a spec needs genus 0; use --table or --classes");
  if (spec.n() == 4) {
    const Rational res = verify_identity([&](int k) { return Rational(deg_m04(scale_bundle(spec, k))); },
                                         coeffs, m);
    o.json = {{"m", m}, {"kind", coeffs.kind}, {"residual", to_json(res)}, {"holds", res == 0}};
    o.columns = {"residual"};
    o.rows = {{str(res)}};
    o.code = res == 0 ? 0 : 1;
    return o;
  }
  std::map<int, DivisorClassM0n> memo;
  auto classes = [&](int k) {
    auto it = memo.find(k);
    if (it == memo.end()) it = memo.emplace(k, c1_fvector(scale_bundle(spec, k))).first;
    return it->second;
  };
  const auto res = verify_identity(classes, coeffs, m);
  Json residual = to_json(res);
  o.columns = {"fcurve", "residual"};
  const auto curves = fcurves(res.n);
  for (std::size_t i = 0; i < curves.size(); ++i) o.rows.push_back({to_string(curves[i]), str(res.values[i])});
  o.json = {{"m", m}, {"kind", coeffs.kind}, {"residual", residual}, {"holds", res.is_zero()}};
  if (res.n == 5) {
    const auto x = to_nonadjacent_basis_n5(res);
    Json basis = Json::array();
    for (const auto& v : x) basis.push_back(to_json(v));
    o.json["residual_basis5"] = basis;
  }
  o.code = res.is_zero() ? 0 : 1;
  return o;
}

Output cmd_hypotheses(const BundleSpec& spec, int max_m) {
  const HypothesisReport r = check_boundary_hypotheses(spec, max_m);
  Output o;
  o.json = to_json(r);
  o.columns = {"stratum", "conserved", "free", "quasi_rank_one", "socle", "pass", "failure"};
  for (const auto& s : r.strata) {
    std::string socle = "-";
    if (s.socle) socle = to_string(s.socle->mu) + (s.socle->pass ? " ok" : " bad");
    o.rows.push_back({to_string(s.stratum), s.conserved ? "yes" : "no", s.free ? "yes" : "no",
                      s.quasi_rank_one ? "yes" : "no", socle, s.pass ? "pass" : "fail", s.failure});
  }
  o.rows.push_back({"overall", "", "", "", "", r.pass ? "pass" : "fail", r.failure});
  o.code = r.pass ? 0 : 1;
  return o;
}

Output cmd_anomaly(int m) {
  const AnomalyM2 a = anomaly_m2_level1(m);
  Output o;
  o.json = {{"m", m},
            {"pigtail", to_json(a.pigtail)},
            {"elliptic", to_json(a.elliptic)},
            {"alpha", to_json(a.alpha)},
            {"beta", to_json(a.beta)}};
  o.columns = {"m", "pigtail", "elliptic", "alpha", "beta"};
  o.rows = {{std::to_string(m), str(a.pigtail), str(a.elliptic), str(a.alpha), str(a.beta)}};
  return o;
}

Output cmd_reproduce(const std::vector<std::string>& ids) {
  const auto results = run_repro_cases(ids);
  Output o;
  o.json = Json::array();
  o.columns = {"case", "check", "expected", "actual", "status"};
  for (const auto& r : results) {
    o.json.push_back(to_json(r));
    std::string status = r.reproduced() ? "reproduced" : "MISMATCH";
    if (r.counterexample) status += ", counterexample";
    char secs[32];
    std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
    o.text.push_back("== " + r.id + ": " + r.description + " [" + status + "] (" + secs + ")");
    for (const auto& c : r.checks) {
      o.text.push_back(std::string("  ") + (c.ok ? "ok   " : "FAIL ") + c.name + ": expected " +
                       c.expected + ", got " + c.actual);
      o.rows.push_back({r.id, c.name, c.expected, c.actual, c.ok ? "ok" : "fail"});
    }
    for (const auto& n : r.notes) o.text.push_back("  note " + n);
    if (r.counterexample) o.text.push_back("  counterexample: " + r.counterexample_detail);
  }
  o.code = repro_exit_code(results);
  return o;
}

Output cmd_cache(const std::string& path, int warm_r, int warm_level, bool clear) {
  FusionCache& cache = FusionCache::global();
  Output o;
  if (clear) {
    cache.clear();
    cache.save(path);
  } else {
    std::ifstream probe(path);
    if (probe) cache.load(path);
  }
  if (warm_r > 0) {
    for (int l = 0; l <= warm_level; ++l) {
      const auto& ws = level_weight_set(warm_r, l);
      for (std::size_t a = 0; a < ws.size(); ++a) {
        for (std::size_t b = a; b < ws.size(); ++b) {
          for (std::size_t c = b; c < ws.size(); ++c) fuse3(ws[a], ws[b], ws[c], l);
        }
      }
    }
    cache.save(path);
  }
  o.json = {{"path", path}, {"records", cache.size()}};
  o.columns = {"path", "records"};
  o.rows = {{path, std::to_string(cache.size())}};
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conformal blocks: ranks, first Chern classes and scaling identities"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  int jobs_n = 1;
  std::string cache_path;
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--jobs", jobs_n, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--cache", cache_path, "fusion cache file (JSON lines)")->envname("CBLAB_CACHE");

  std::function<Output()> action;
  SpecInput spec_in;
  std::string shape = "caterpillar";
  int max_m = 6;
  int cap_m = 8;
  int m = 1;
  std::string kind = "auto";
  int quad_d = 0, gen_R = 0, gen_D = 0;
  std::string values, table, classes_file;
  bool fv = false, basis5 = false;
  std::vector<std::string> ids;
  std::string cache_arg;
  int warm_r = 0, warm_level = 0;
  bool cache_clear = false;

  auto* rank_cmd = app.add_subcommand("rank", "rank of V(sl_{r+1}, weights, level) on M_{g,n}");
  spec_in.attach(rank_cmd);
  rank_cmd->add_option("--shape", shape, "factorization tree: caterpillar or balanced");
  rank_cmd->callback([&] { action = [&] { return cmd_rank(spec_in.get(), shape); }; });

  auto* seq_cmd = app.add_subcommand("rank-seq", "ranks of V[m] for m = 0..M");
  spec_in.attach(seq_cmd);
  seq_cmd->add_option("--max-m", max_m, "largest multiple")->capture_default_str();
  seq_cmd->callback([&] { action = [&] { return cmd_rank_seq(spec_in.get(), max_m); }; });

  auto* fuse_cmd = app.add_subcommand("fuse", "three-point fusion coefficient");
  spec_in.attach(fuse_cmd);
  fuse_cmd->callback([&] { action = [&] { return cmd_fuse(spec_in.get()); }; });

  auto* deg_cmd = app.add_subcommand("deg04", "degree on M_{0,4}");
  spec_in.attach(deg_cmd);
  deg_cmd->callback([&] { action = [&] { return cmd_deg04(spec_in.get()); }; });

  auto* c1_cmd = app.add_subcommand("c1", "first Chern class on M_{0,n}");
  spec_in.attach(c1_cmd);
  auto* fv_opt = c1_cmd->add_flag("--fcurves", fv, "F-curve pairing vector (default)");
  c1_cmd->add_flag("--basis5", basis5, "coordinates in {d13, d14, d24, d25, d35}")->excludes(fv_opt);
  c1_cmd->callback([&] { action = [&] { return cmd_c1(spec_in.get(), basis5); }; });

  auto* cls_cmd = app.add_subcommand("classify", "rank scaling type of a spec or a value list");
  spec_in.attach(cls_cmd);
  cls_cmd->add_option("--values", values, "comma-separated f(0), f(1), ...");
  cls_cmd->add_option("--max-m", cap_m, "largest multiple tried")->capture_default_str();
  cls_cmd->callback([&] { action = [&] { return cmd_classify(spec_in, values, cap_m); }; });

  const std::vector<std::string> kinds = {"auto", "quadric", "veronese", "scroll12", "p1o3",
                                          "coble-quartic", "coble-cubic", "two-quadrics"};
  auto* id_cmd = app.add_subcommand("identity", "coefficients of c1(V[m]) in lower multiples");
  spec_in.attach(id_cmd);
  id_cmd->add_option("--kind", kind, "identity kind")->check(CLI::IsMember(kinds))->capture_default_str();
  id_cmd->add_option("--m", m, "multiple")->required()->check(CLI::PositiveNumber);
  id_cmd->add_option("--d", quad_d, "dimension for --kind quadric");
  id_cmd->add_option("--R", gen_R, "rank for --kind auto without a spec");
  id_cmd->add_option("--D", gen_D, "degree for --kind auto without a spec");
  id_cmd->callback([&] {
    action = [&] { return cmd_identity(resolve_identity(kind, quad_d, gen_R, gen_D, spec_in, cap_m), m); };
  });

  auto* ver_cmd = app.add_subcommand("verify", "residual of the identity at multiple m");
  spec_in.attach(ver_cmd);
  ver_cmd->add_option("--kind", kind, "identity kind")->check(CLI::IsMember(kinds))->capture_default_str();
  ver_cmd->add_option("--m", m, "multiple")->required()->check(CLI::PositiveNumber);
  ver_cmd->add_option("--d", quad_d, "dimension for --kind quadric");
  ver_cmd->add_option("--R", gen_R, "rank for --kind auto");
  ver_cmd->add_option("--D", gen_D, "degree for --kind auto");
  ver_cmd->add_option("--table", table, "tabulated family: coble-quartic, coble-cubic, two-quadrics");
  ver_cmd->add_option("--classes", classes_file, "JSON file {\"m\": class}");
  ver_cmd->callback([&] {
    action = [&] {
      SpecInput none;
      const auto coeffs = resolve_identity(kind, quad_d, gen_R, gen_D, spec_in, cap_m);
      return cmd_verify(coeffs, m, table, classes_file, spec_in.given() ? spec_in : none);
    };
  });

  auto* hyp_cmd = app.add_subcommand("hypotheses", "boundary hypotheses on every divisor");
  spec_in.attach(hyp_cmd);
  hyp_cmd->add_option("--max-m", cap_m, "largest multiple used for scaling")->capture_default_str();
  hyp_cmd->callback([&] { action = [&] { return cmd_hypotheses(spec_in.get(), cap_m); }; });

  auto* an_cmd = app.add_subcommand("anomaly-m2", "anomaly of V(sl2, 1)[m] on M_2");
  an_cmd->add_option("--m", m, "multiple")->required()->check(CLI::PositiveNumber);
  an_cmd->callback([&] { action = [&] { return cmd_anomaly(m); }; });

  auto* rep_cmd = app.add_subcommand("reproduce", "run reproduction cases");
  rep_cmd->add_option("ids", ids, "case ids or 'all'")->required();
  rep_cmd->callback([&] { action = [&] { return cmd_reproduce(ids); }; });

  auto* cache_cmd = app.add_subcommand("cache", "inspect, warm or clear a fusion cache file");
  cache_cmd->add_option("path", cache_arg, "cache file")->required();
  cache_cmd->add_option("--warm-r", warm_r, "fill all triples for sl(r+1)");
  cache_cmd->add_option("--warm-level", warm_level, "up to this level");
  cache_cmd->add_flag("--clear", cache_clear, "empty the file");
  cache_cmd->callback([&] { action = [&] { return cmd_cache(cache_arg, warm_r, warm_level, cache_clear); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  set_jobs(jobs_n);
  const Format fmt = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;
  try {
    if (!cache_path.empty()) {
      std::ifstream probe(cache_path);
      if (probe) FusionCache::global().load(cache_path);
    }
    const Output out = action();
    emit(out, fmt);
    if (!cache_path.empty() && !cache_cmd->parsed()) FusionCache::global().save(cache_path);
    return out.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
