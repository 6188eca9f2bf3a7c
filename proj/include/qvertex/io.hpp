#pragma once

#include "qvertex/miwa.hpp"
#include "qvertex/partition.hpp"
#include "qvertex/qrat.hpp"
#include "qvertex/vertex.hpp"

#include "json.hpp"

#include <optional>

namespace qvertex {

using Json = nlohmann::json;

struct BadSerialization : std::domain_error {
  explicit BadSerialization(const std::string& what) : std::domain_error(what) {}
};

/// Canonical fraction string: "p" for integers, "p/q" otherwise (mpq form).
std::string rat_str(const Rat& v);
Rat rat_parse(const std::string& s);

/// {"num": [[e48, "p/q"], ...], "den": [...]}, terms in ascending e48.
/// Round-trips bit-exactly because the stored representation is canonical.
Json json_of(const QRat& v);
QRat qrat_of_json(const Json& j);

/// Plain array of parts, e.g. [3,1]; validation happens in the Partition
/// constructor.
Json json_of(const Partition& p);
Partition partition_of_json(const Json& j);

/// {"m": [...], "n": [...]}.
Json json_of(const Frobenius& f);
Frobenius frobenius_of_json(const Json& j);

/// [a1, a2, a3].
Json json_of(const Framing& f);
Framing framing_of_json(const Json& j);

/// {"framing": [...], "mu1": [...], "mu2": [...], "mu3": [...]}.
Json json_of(const VertexKey& k);
VertexKey key_of_json(const Json& j);

/// List of {"coeff": "p/q", "expo": [e1, ..., eK]} in term order.
Json json_of(const MiwaPoly& p);

/// Deterministic single-line rendering (sorted object keys, no spaces).
std::string canonical_dump(const Json& j);

/// The per-key record the CLI prints.
Json vertex_record(const VertexKey& key, const QRat& w, bool pipelines_agree,
                   bool half_lattice);

/// One-file-per-key store for computed vertex values.  The file name is a
/// hash of the canonical key JSON; the stored key is compared on read so a
/// hash collision degrades to a miss.  Writes go through a temporary file
/// and an atomic rename, so concurrent writers can only replace whole
/// values, never interleave them.
class VertexCache {
 public:
  explicit VertexCache(std::string dir);

  const std::string& dir() const { return dir_; }
  std::optional<QRat> lookup(const VertexKey& key);
  void store(const VertexKey& key, const QRat& value);

  size_t hits() const { return hits_; }
  size_t misses() const { return misses_; }

 private:
  std::string dir_;
  size_t hits_ = 0, misses_ = 0;
  unsigned long seq_ = 0;
  std::string path_for(const VertexKey& key) const;
};

}  // namespace qvertex
