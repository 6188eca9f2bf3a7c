#include "qvertex/io.hpp"
#include "qvertex/kp.hpp"
#include "qvertex/vertex.hpp"

#include "CLI11.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

using namespace qvertex;

namespace {

Partition parse_partition(const std::string& s) {
  Json j = Json::parse(s);
  return partition_of_json(j);
}

Framing parse_framing(const std::string& s) {
  std::vector<long> a;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) a.push_back(std::stol(item));
  if (a.size() != 3)
    throw std::domain_error("framing: need exactly three integers a1,a2,a3");
  return Framing{a[0], a[1], a[2]};
}

// "lo..hi" -> all framing triples with each component in [lo, hi],
// lexicographic order.
std::vector<Framing> parse_framing_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw std::domain_error("framings: expected a range like -1..1");
  long lo = std::stol(s.substr(0, dots));
  long hi = std::stol(s.substr(dots + 2));
  if (lo > hi) throw std::domain_error("framings: empty range");
  std::vector<Framing> out;
  for (long a1 = lo; a1 <= hi; ++a1)
    for (long a2 = lo; a2 <= hi; ++a2)
      for (long a3 = lo; a3 <= hi; ++a3) out.push_back(Framing{a1, a2, a3});
  return out;
}

Rat parse_u0(const std::string& s) {
  Rat v = rat_parse(s);
  if (v == 0 || v == 1 || v == -1)
    throw std::domain_error("u0: must differ from 0 and +-1");
  return v;
}

enum Pipeline { kSkew = 0, kDetF = 1, kBog = 2 };

std::vector<Pipeline> parse_pipelines(const std::string& s) {
  std::vector<Pipeline> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "skew")
      out.push_back(kSkew);
    else if (item == "detf")
      out.push_back(kDetF);
    else if (item == "bog")
      out.push_back(kBog);
    else
      throw std::domain_error("pipelines: unknown name '" + item +
                              "' (expected skew, detf, bog)");
  }
  if (out.empty()) throw std::domain_error("pipelines: empty selection");
  return out;
}

const char* pipeline_name(Pipeline p) {
  switch (p) {
    case kSkew: return "skew";
    case kDetF: return "detf";
    case kBog: return "bog";
  }
  return "?";
}

QRat run_pipeline(Pipeline p, const VertexKey& key) {
  switch (p) {
    case kSkew: return w_skew(key);
    case kDetF: return w_det_f(key);
    case kBog: return w_bogoliubov(key);
  }
  throw std::logic_error("unreachable");
}

// Runs fn(0..n-1) on `jobs` worker threads (serially when jobs <= 1).
void for_indices(size_t n, long jobs, const std::function<void(size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  size_t count = std::min<size_t>(static_cast<size_t>(jobs), n);
  workers.reserve(count);
  for (size_t w = 0; w < count; ++w)
    workers.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < n;) fn(i);
    });
  for (auto& t : workers) t.join();
}

// All (mu1, mu2, mu3) with every leg of size <= n, in enumeration order.
std::vector<std::array<Partition, 3>> leg_triples(long n) {
  const auto shapes = enumerate_upto(n);
  std::vector<std::array<Partition, 3>> out;
  out.reserve(shapes.size() * shapes.size() * shapes.size());
  for (const auto& m1 : shapes)
    for (const auto& m2 : shapes)
      for (const auto& m3 : shapes) out.push_back({m1, m2, m3});
  return out;
}

std::string cache_dir_or_env(const std::string& flag) {
  if (!flag.empty()) return flag;
  const char* env = std::getenv("VERTEX_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

struct Computed {
  QRat w;
  bool agree = true;
  bool from_cache = false;
};

// One key end to end: cache lookup, else all selected pipelines plus the
// cross-check; successful fresh values are stored back.
Computed compute_key(const VertexKey& key, const std::vector<Pipeline>& pipes,
                     VertexCache* cache, std::mutex* cache_mu) {
  Computed r;
  if (cache) {
    std::lock_guard<std::mutex> lock(*cache_mu);
    if (auto hit = cache->lookup(key)) {
      r.w = *hit;
      r.from_cache = true;
      return r;
    }
  }
  std::vector<QRat> vals;
  vals.reserve(pipes.size());
  for (Pipeline p : pipes) vals.push_back(run_pipeline(p, key));
  r.w = vals.front();
  for (const auto& v : vals) r.agree = r.agree && (v == r.w);
  if (cache && r.agree) {
    std::lock_guard<std::mutex> lock(*cache_mu);
    cache->store(key, r.w);
  }
  return r;
}

int cmd_compute(const std::string& mu1s, const std::string& mu2s,
                const std::string& mu3s, const std::string& framings,
                const std::string& pipeliness, const std::string& cachedirs) {
  VertexKey key{parse_partition(mu1s), parse_partition(mu2s),
                parse_partition(mu3s), parse_framing(framings)};
  auto pipes = parse_pipelines(pipeliness);
  std::unique_ptr<VertexCache> cache;
  std::mutex cache_mu;
  if (std::string dir = cache_dir_or_env(cachedirs); !dir.empty())
    cache = std::make_unique<VertexCache>(dir);
  Computed r = compute_key(key, pipes, cache.get(), &cache_mu);
  Json rec = vertex_record(key, r.w, r.agree, r.w.half_lattice());
  std::cout << canonical_dump(rec) << "\n";
  if (cache) std::cerr << "cache_hits=" << cache->hits() << "\n";
  return r.agree ? 0 : 1;
}

int cmd_verify(long max_size, long hard_limit, const std::string& framingss,
               const std::string& pipeliness, long jobs) {
  if (max_size < 0 || max_size > hard_limit)
    throw std::domain_error("verify: max-size must lie in [0, " +
                            std::to_string(hard_limit) + "]");
  auto pipes = parse_pipelines(pipeliness);
  auto framings = parse_framing_range(framingss);
  auto triples = leg_triples(max_size);

  std::vector<VertexKey> keys;
  keys.reserve(triples.size() * framings.size());
  for (const auto& t : triples)
    for (const auto& f : framings) keys.push_back(VertexKey{t[0], t[1], t[2], f});

  // Test hook: corrupt one pipeline's output to exercise mismatch reporting.
  const char* perturb_env = std::getenv("QVERTEX_PERTURB");
  std::string perturb = perturb_env ? perturb_env : "";

  struct Row {
    std::vector<QRat> vals;
  };
  std::vector<Row> rows(keys.size());
  for_indices(keys.size(), jobs, [&](size_t i) {
    Row& row = rows[i];
    row.vals.reserve(pipes.size());
    for (Pipeline p : pipes) {
      QRat v = run_pipeline(p, keys[i]);
      if (!perturb.empty() && perturb == pipeline_name(p)) v = v + QRat(1);
      row.vals.push_back(v);
    }
  });

  size_t mismatches = 0;
  for (size_t i = 0; i < keys.size(); ++i) {
    const auto& vals = rows[i].vals;
    for (size_t p = 1; p < vals.size(); ++p) {
      if (vals[p] != vals[0]) {
        if (mismatches == 0) {
          std::cout << "mismatch at key " << canonical_dump(json_of(keys[i]))
                    << "\n";
          std::cout << "  " << pipeline_name(pipes[0]) << " = " << vals[0].str()
                    << "\n";
          std::cout << "  " << pipeline_name(pipes[p]) << " = " << vals[p].str()
                    << "\n";
        }
        ++mismatches;
        break;
      }
    }
  }

  Json summary;
  summary["keys"] = keys.size();
  summary["max_size"] = max_size;
  summary["framings"] = framingss;
  summary["mismatches"] = mismatches;
  std::cout << canonical_dump(summary) << "\n";
  return mismatches == 0 ? 0 : 1;
}

int cmd_kp_check(int components, long cutoff, long degree,
                 const std::string& u0s, const std::string& framings) {
  if (components != 1 && components != 3)
    throw std::domain_error("kp-check: components must be 1 or 3");
  if (cutoff < 0) cutoff = (components == 1) ? 6 : 4;
  if (degree < 0) degree = std::min<long>(cutoff, (components == 1) ? 3 : 2);
  Rat u0 = parse_u0(u0s);
  Framing framing = parse_framing(framings);

  TauSeries tau = build_tau(components, framing, cutoff, u0);
  BilinearReport rep = (components == 1)
                           ? hirota_residue_1kp(tau, degree, degree + 2)
                           : hirota_residue_3kp(tau, degree, degree + 2);

  Json offending = Json::array();
  for (const auto& e : rep.entries)
    if (e.cutoff_stable && e.value != 0)
      offending.push_back({monomial_str(e.monomial, components, cutoff, true),
                           e.value.get_str()});

  Json out;
  out["params"] = {{"components", components},
                   {"cutoff", cutoff},
                   {"u0", rat_str(u0)},
                   {"framing", json_of(framing)}};
  out["checked"] = rep.checked();
  out["stable"] = rep.stable();
  out["nonzero_stable"] = rep.nonzero_stable();
  out["max_degree"] = degree;
  if (!offending.empty()) out["offending"] = offending;
  std::cout << canonical_dump(out) << "\n";
  return rep.pass() ? 0 : 1;
}

int cmd_table(long max_size, const std::string& framings,
              const std::string& formats, const std::string& pipeliness,
              const std::string& cachedirs, long jobs) {
  if (max_size < 0) throw std::domain_error("table: max-size must be >= 0");
  if (formats != "json" && formats != "csv")
    throw std::domain_error("table: format must be json or csv");
  Framing framing = parse_framing(framings);
  auto pipes = parse_pipelines(pipeliness);
  std::unique_ptr<VertexCache> cache;
  std::mutex cache_mu;
  if (std::string dir = cache_dir_or_env(cachedirs); !dir.empty())
    cache = std::make_unique<VertexCache>(dir);

  auto triples = leg_triples(max_size);
  std::vector<VertexKey> keys;
  keys.reserve(triples.size());
  for (const auto& t : triples)
    keys.push_back(VertexKey{t[0], t[1], t[2], framing});

  std::vector<Computed> rows(keys.size());
  for_indices(keys.size(), jobs, [&](size_t i) {
    rows[i] = compute_key(keys[i], pipes, cache.get(), &cache_mu);
  });

  bool all_agree = true;
  if (formats == "csv") std::cout << "mu1,mu2,mu3,a1,a2,a3,w\n";
  for (size_t i = 0; i < keys.size(); ++i) {
    const VertexKey& k = keys[i];
    const Computed& r = rows[i];
    all_agree = all_agree && r.agree;
    if (formats == "json") {
      Json rec = vertex_record(k, r.w, r.agree, r.w.half_lattice());
      std::cout << canonical_dump(rec) << "\n";
    } else {
      std::cout << '"' << canonical_dump(json_of(k.mu1)) << "\",\""
                << canonical_dump(json_of(k.mu2)) << "\",\""
                << canonical_dump(json_of(k.mu3)) << "\"," << k.framing.a1
                << ',' << k.framing.a2 << ',' << k.framing.a3 << ",\""
                << r.w.str() << "\"\n";
    }
  }
  if (cache) std::cerr << "cache_hits=" << cache->hits() << "\n";
  return all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Framed topological vertex calculator and identity checker"};
  app.require_subcommand(1);

  std::string mu1 = "[]", mu2 = "[]", mu3 = "[]";
  std::string framing = "0,0,0";
  std::string framings = "-1..1";
  std::string pipelines = "skew,detf,bog";
  std::string u0 = "2/3";
  std::string format = "json";
  std::string cache_dir;
  long max_size = 2, hard_limit = 5, jobs = 1;
  long cutoff = -1, degree = -1;
  int components = 1;

  CLI::App* compute = app.add_subcommand(
      "compute", "One vertex value as a JSON record");
  compute->add_option("--mu1", mu1, "First leg as a JSON array, e.g. [2,1]");
  compute->add_option("--mu2", mu2, "Second leg");
  compute->add_option("--mu3", mu3, "Third leg");
  compute->add_option("--framing", framing, "Framing integers a1,a2,a3");
  compute->add_option("--pipelines", pipelines,
                      "Comma list from skew, detf, bog");
  compute->add_option("--cache-dir", cache_dir,
                      "Value cache directory (default $VERTEX_CACHE_DIR)");

  CLI::App* verify = app.add_subcommand(
      "verify", "Cross-check the pipelines over a sweep of keys");
  verify->add_option("--max-size", max_size, "Largest leg size in the sweep");
  verify->add_option("--limit", hard_limit, "Upper bound accepted for --max-size");
  verify->add_option("--framings", framings, "Framing component range lo..hi");
  verify->add_option("--pipelines", pipelines, "Comma list from skew, detf, bog");
  verify->add_option("--jobs", jobs, "Worker threads");

  CLI::App* kp = app.add_subcommand(
      "kp-check", "Hirota bilinear residue check of the generating series");
  kp->add_option("--components", components, "1 or 3");
  kp->add_option("--cutoff", cutoff, "Series truncation N (default 6 / 4)");
  kp->add_option("--degree", degree, "Residual degree bound d (default 3 / 2)");
  kp->add_option("--u0", u0, "Exact rational value of q^{1/2}, as p/q");
  kp->add_option("--framing", framing, "Framing integers a1,a2,a3");

  CLI::App* table = app.add_subcommand(
      "table", "Vertex values for all leg triples up to a size bound");
  table->add_option("--max-size", max_size, "Largest leg size");
  table->add_option("--framing", framing, "Framing integers a1,a2,a3");
  table->add_option("--format", format, "json or csv");
  table->add_option("--pipelines", pipelines, "Comma list from skew, detf, bog");
  table->add_option("--cache-dir", cache_dir,
                    "Value cache directory (default $VERTEX_CACHE_DIR)");
  table->add_option("--jobs", jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed())
      return cmd_compute(mu1, mu2, mu3, framing, pipelines, cache_dir);
    if (verify->parsed())
      return cmd_verify(max_size, hard_limit, framings, pipelines, jobs);
    if (kp->parsed())
      return cmd_kp_check(components, cutoff, degree, u0, framing);
    if (table->parsed())
      return cmd_table(max_size, framing, format, pipelines, cache_dir, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
