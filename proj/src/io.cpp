#include "qvertex/io.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#ifdef _WIN32
#else
#include <unistd.h>
#endif

namespace qvertex {

std::string rat_str(const Rat& v) { return v.get_str(); }

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw BadSerialization("rat_parse: empty string");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw BadSerialization("rat_parse: bad character in \"" + s + "\"");
  Rat v;
  if (v.set_str(s, 10) != 0) throw BadSerialization("rat_parse: unparsable \"" + s + "\"");
  if (v.get_den() == 0) throw BadSerialization("rat_parse: zero denominator");
  v.canonicalize();
  return v;
}

namespace {

Json json_of_poly(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(Json::array({e, rat_str(c)}));
  return arr;
}

LaurentPoly poly_of_json(const Json& j) {
  if (!j.is_array()) throw BadSerialization("polynomial JSON must be an array");
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
        !term[1].is_string())
      throw BadSerialization("polynomial term must be [e48, \"p/q\"]");
    p.add_term(term[0].get<Exp>(), rat_parse(term[1].get<std::string>()));
  }
  return p;
}

}  // namespace

Json json_of(const QRat& v) {
  return Json{{"num", json_of_poly(v.num())}, {"den", json_of_poly(v.den())}};
}

QRat qrat_of_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw BadSerialization("QRat JSON must have num and den");
  return QRat(poly_of_json(j["num"]), poly_of_json(j["den"]));
}

Json json_of(const Partition& p) {
  Json arr = Json::array();
  for (long x : p.parts()) arr.push_back(x);
  return arr;
}

Partition partition_of_json(const Json& j) {
  if (!j.is_array()) throw BadSerialization("partition JSON must be an array");
  std::vector<long> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw BadSerialization("partition parts must be integers");
    parts.push_back(x.get<long>());
  }
  return Partition(std::move(parts));
}

Json json_of(const Frobenius& f) {
  return Json{{"m", f.ms}, {"n", f.ns}};
}

Frobenius frobenius_of_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n"))
    throw BadSerialization("Frobenius JSON must have m and n");
  Frobenius f;
  f.ms = j["m"].get<std::vector<long>>();
  f.ns = j["n"].get<std::vector<long>>();
  return f;
}

Json json_of(const Framing& f) { return Json::array({f.a1, f.a2, f.a3}); }

Framing framing_of_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw BadSerialization("framing JSON must be [a1,a2,a3]");
  Framing f;
  f.a1 = j[0].get<long>();
  f.a2 = j[1].get<long>();
  f.a3 = j[2].get<long>();
  return f;
}

Json json_of(const VertexKey& k) {
  return Json{{"framing", json_of(k.framing)},
              {"mu1", json_of(k.mu1)},
              {"mu2", json_of(k.mu2)},
              {"mu3", json_of(k.mu3)}};
}

VertexKey key_of_json(const Json& j) {
  if (!j.is_object()) throw BadSerialization("vertex key JSON must be an object");
  VertexKey k;
  k.mu1 = partition_of_json(j.at("mu1"));
  k.mu2 = partition_of_json(j.at("mu2"));
  k.mu3 = partition_of_json(j.at("mu3"));
  k.framing = framing_of_json(j.at("framing"));
  return k;
}

Json json_of(const MiwaPoly& p) {
  Json arr = Json::array();
  for (const auto& [key, c] : p.terms())
    arr.push_back(Json{{"coeff", rat_str(c)}, {"expo", key}});
  return arr;
}

std::string canonical_dump(const Json& j) { return j.dump(); }

Json vertex_record(const VertexKey& key, const QRat& w, bool pipelines_agree,
                   bool half_lattice) {
  return Json{{"half_lattice", half_lattice},
              {"key", json_of(key)},
              {"pipelines_agree", pipelines_agree},
              {"w", json_of(w)}};
}

VertexCache::VertexCache(std::string dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

namespace {

std::string fnv1a_hex(const std::string& s) {
  unsigned long long h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", h);
  return buf;
}

}  // namespace

std::string VertexCache::path_for(const VertexKey& key) const {
  return dir_ + "/" + fnv1a_hex(canonical_dump(json_of(key))) + ".json";
}

std::optional<QRat> VertexCache::lookup(const VertexKey& key) {
  std::ifstream in(path_for(key));
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  try {
    Json j = Json::parse(in);
    if (key_of_json(j.at("key")) == key) {
      ++hits_;
      return qrat_of_json(j.at("w"));
    }
  } catch (const std::exception&) {
    // fall through: unreadable entries count as misses
  }
  ++misses_;
  return std::nullopt;
}

void VertexCache::store(const VertexKey& key, const QRat& value) {
  Json j{{"key", json_of(key)}, {"w", json_of(value)}};
#ifdef _WIN32
  const long pid = 0;
#else
  const long pid = static_cast<long>(::getpid());
#endif
  std::string tmp = dir_ + "/.tmp-" + std::to_string(pid) + "-" + std::to_string(seq_++);
  {
    std::ofstream out(tmp);
    out << canonical_dump(j);
    if (!out) {
      std::remove(tmp.c_str());
      return;  // cache is best-effort; computation still succeeded
    }
  }
  std::filesystem::rename(tmp, path_for(key));
}

}  // namespace qvertex
