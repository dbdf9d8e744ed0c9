#include "admperm/io.hpp"

#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace admperm {

namespace {

using nlohmann::json;

json qvec_json(const QVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(x.str());
  return a;
}

QVec qvec_from_json(const json& a) {
  QVec v;
  for (const auto& e : a) v.push_back(Rat::parse(e.get<std::string>()));
  return v;
}

json word_json(const std::vector<int>& w) {
  json a = json::array();
  for (int i : w) a.push_back(i);
  return a;
}

std::vector<int> word_from_json(const json& a) {
  std::vector<int> w;
  for (const auto& e : a) w.push_back(e.get<int>());
  return w;
}

std::uint64_t fnv1a(const void* data, std::size_t n, std::uint64_t h = 0xcbf29ce484222325ULL) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint32_t kIndexCacheVersion = 1;
constexpr char kIndexCacheMagic[8] = {'A', 'P', 'G', 'I', 'D', 'X', '0', '1'};

template <typename T>
void write_vec(std::ofstream& out, const std::vector<T>& v) {
  std::uint64_t n = v.size();
  out.write(reinterpret_cast<const char*>(&n), sizeof(n));
  out.write(reinterpret_cast<const char*>(v.data()), n * sizeof(T));
}

template <typename T>
bool read_vec(std::ifstream& in, std::vector<T>& v) {
  std::uint64_t n = 0;
  in.read(reinterpret_cast<char*>(&n), sizeof(n));
  if (!in) return false;
  v.resize(n);
  in.read(reinterpret_cast<char*>(v.data()), n * sizeof(T));
  return static_cast<bool>(in);
}

template <typename T>
std::uint64_t vec_checksum(const std::vector<T>& v, std::uint64_t h) {
  return fnv1a(v.data(), v.size() * sizeof(T), h);
}

std::string index_cache_path(const std::string& dir, const std::string& label) {
  return dir + "/index_" + label + ".bin";
}

std::string interval_cache_path(const std::string& dir, const std::string& label) {
  return dir + "/intervals_" + label + ".json";
}

}  // namespace

std::string element_stream_line(const RootDatum&, const QVec& lambda,
                                const std::vector<int>& word) {
  json j;
  j["lambda"] = qvec_json(lambda);
  j["word"] = word_json(word);
  return j.dump();
}

ExtAffElt element_from_json(const RootDatum& datum, const std::string& json_text) {
  json j = json::parse(json_text);
  QVec lambda = qvec_from_json(j.at("lambda"));
  if (static_cast<int>(lambda.size()) != datum.dim)
    throw std::invalid_argument("element: lambda has wrong dimension");
  return aff_make(datum, lambda, from_word(datum, word_from_json(j.at("word"))));
}

namespace {

json perm_certificate_json(const RootDatum& datum, const PermResult& perm) {
  json p;
  p["verdict"] = perm.permissible;
  if (!perm.permissible) {
    p["failing_vertex"] = perm.failing_vertex;
    p["failure"] = perm.failure;
    return p;
  }
  const PermCertificate& cert = *perm.certificate;
  p["translation_coords"] = cert.translation_coords;
  json verts = json::object();
  for (std::size_t i = 0; i < cert.vertices.size(); ++i) {
    const VertexMembership& vm = cert.vertices[i];
    json v;
    v["vector"] = qvec_json(vm.displacement);
    v["dominant_rep"] = qvec_json(vm.cert.dominant);
    v["w_word"] = word_json(reduced_word(datum, vm.cert.w));
    v["coefficients"] = qvec_json(vm.cert.coefficients);
    verts["a" + std::to_string(i + 1)] = v;
  }
  p["vertices"] = verts;
  return p;
}

json helam_json(const RootDatum& datum, const HeLamPair& pair) {
  json a;
  a["z1_word"] = word_json(reduced_word(datum, pair.z1));
  a["z2_word"] = word_json(reduced_word(datum, pair.z2));
  a["verdict"] = pair.admissible;
  json t;
  t["word_of_z1"] = word_json(pair.trace.word_of_z1);
  json applied = json::array();
  for (bool b : pair.trace.applied) applied.push_back(b);
  t["applied"] = applied;
  t["residue_word"] = word_json(pair.trace.residue_word);
  a["trace"] = t;
  return a;
}

}  // namespace

std::string certificate_to_json(const RootDatum& datum, const Coweight& mu,
                                const ExtAffElt& x, const PermResult& perm,
                                const HeLamPair* pair, const bool* haines_verdict) {
  json j;
  j["case"] = datum.type_label;
  j["type"] = datum.type_label;
  j["coweight"] = qvec_json(mu.vec);
  j["element"]["lambda"] = qvec_json(x.lambda);
  j["element"]["word"] = word_json(reduced_word(datum, x.w));
  j["permissible"] = perm_certificate_json(datum, perm);
  if (pair) j["admissible"] = helam_json(datum, *pair);
  if (haines_verdict) j["haines"]["verdict"] = *haines_verdict;
  return j.dump(2);
}

std::string counterexample_report_to_json(const CounterexampleReport& report) {
  const RootDatum& d = *report.datum;
  json j = json::parse(certificate_to_json(d, report.mu, report.x, report.perm,
                                           &report.pair, &report.haines));
  j["case"] = report.case_label;
  json checks = json::array();
  for (const SubCheck& sc : report.checks) {
    json c;
    c["name"] = sc.name;
    c["pass"] = sc.pass;
    if (!sc.detail.empty()) c["detail"] = sc.detail;
    checks.push_back(c);
  }
  j["checks"] = checks;
  j["all_pass"] = report.all_pass;
  return j.dump(2);
}

RecheckResult recheck_certificate(const std::string& json_text) {
  RecheckResult res;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    res.detail = std::string("parse error: ") + e.what();
    return res;
  }
  try {
    RootDatum datum = build_root_datum(j.at("type").get<std::string>());
    Coweight mu = make_coweight(datum, qvec_from_json(j.at("coweight")));
    QVec lambda = qvec_from_json(j.at("element").at("lambda"));
    WeylElt w = from_word(datum, word_from_json(j.at("element").at("word")));
    ExtAffElt x = aff_make(datum, lambda, w);

    const json& p = j.at("permissible");
    if (p.at("verdict").get<bool>()) {
      std::vector<QVec> verts = alcove_vertices(datum);
      QVec mu_dom = dominant_representative(datum, mu.vec).dominant;
      for (std::size_t i = 0; i < verts.size(); ++i) {
        const json& v = p.at("vertices").at("a" + std::to_string(i + 1));
        QVec stored = qvec_from_json(v.at("vector"));
        QVec expected = qvec_sub(aff_act(datum, x, verts[i]), verts[i]);
        if (stored != expected) {
          res.detail = "vertex vector mismatch at a" + std::to_string(i + 1);
          return res;
        }
        QVec dom = qvec_from_json(v.at("dominant_rep"));
        WeylElt wv = from_word(datum, word_from_json(v.at("w_word")));
        if (act(datum, wv, stored) != dom) {
          res.detail = "dominant representative mismatch at a" + std::to_string(i + 1);
          return res;
        }
        QVec coeffs = qvec_from_json(v.at("coefficients"));
        QVec sum(datum.dim);
        for (int k = 1; k <= datum.rank; ++k) {
          if (coeffs[k - 1] < Rat(0)) {
            res.detail = "negative hull coefficient at a" + std::to_string(i + 1);
            return res;
          }
          sum = qvec_add(sum, qvec_scaled(datum.simple_coroot(k), coeffs[k - 1]));
        }
        if (sum != qvec_sub(mu_dom, dom)) {
          res.detail = "hull coefficients do not reproduce mu - v+ at a" +
                       std::to_string(i + 1);
          return res;
        }
      }
    }

    if (j.contains("admissible")) {
      const json& a = j.at("admissible");
      WeylElt z1 = from_word(datum, word_from_json(a.at("z1_word")));
      WeylElt z2 = from_word(datum, word_from_json(a.at("z2_word")));
      ExtAffElt rebuilt = aff_mul(
          datum,
          aff_mul(datum, aff_from_finite(datum, z2), aff_translation(datum, mu.vec)),
          aff_from_finite(datum, weyl_inverse(z1)));
      if (rebuilt != x) {
        res.detail = "z2 t_mu z1^{-1} does not rebuild the element";
        return res;
      }
      if (bruhat_le(datum, z2, z1) != a.at("verdict").get<bool>()) {
        res.detail = "admissibility verdict does not replay";
        return res;
      }
    }

    if (j.contains("haines")) {
      bool verdict = j.at("haines").at("verdict").get<bool>();
      if (haines_necessary(datum, mu, x) != verdict) {
        res.detail = "Haines verdict does not replay";
        return res;
      }
    }
  } catch (const std::exception& e) {
    res.detail = std::string("recheck error: ") + e.what();
    return res;
  }
  res.ok = true;
  res.detail = "certificate consistent";
  return res;
}

void save_group_index_cache(const std::string& cache_dir, const RootDatum& datum,
                            const GroupIndex& index) {
  std::filesystem::create_directories(cache_dir);
  std::string path = index_cache_path(cache_dir, datum.type_label);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write index cache: " + tmp);
    out.write(kIndexCacheMagic, sizeof(kIndexCacheMagic));
    out.write(reinterpret_cast<const char*>(&kIndexCacheVersion), sizeof(kIndexCacheVersion));
    std::uint32_t label_len = static_cast<std::uint32_t>(datum.type_label.size());
    out.write(reinterpret_cast<const char*>(&label_len), sizeof(label_len));
    out.write(datum.type_label.data(), label_len);
    std::uint64_t size = index.size();
    out.write(reinterpret_cast<const char*>(&size), sizeof(size));
    std::uint8_t has_tables = index.has_tables() ? 1 : 0;
    out.write(reinterpret_cast<const char*>(&has_tables), sizeof(has_tables));

    std::uint64_t checksum = 0xcbf29ce484222325ULL;
    checksum = vec_checksum(index.raw_lengths(), checksum);
    checksum = vec_checksum(index.raw_keys(), checksum);
    checksum = vec_checksum(index.raw_left(), checksum);
    checksum = vec_checksum(index.raw_right(), checksum);
    checksum = vec_checksum(index.raw_inv(), checksum);
    out.write(reinterpret_cast<const char*>(&checksum), sizeof(checksum));

    write_vec(out, index.raw_lengths());
    write_vec(out, index.raw_keys());
    write_vec(out, index.raw_left());
    write_vec(out, index.raw_right());
    write_vec(out, index.raw_inv());
    if (!out) throw std::runtime_error("short write on index cache: " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::optional<GroupIndex> load_group_index_cache(const std::string& cache_dir,
                                                 const RootDatum& datum,
                                                 bool with_tables) {
  std::string path = index_cache_path(cache_dir, datum.type_label);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || !std::equal(magic, magic + 8, kIndexCacheMagic)) return std::nullopt;
  std::uint32_t version = 0;
  in.read(reinterpret_cast<char*>(&version), sizeof(version));
  if (version != kIndexCacheVersion) return std::nullopt;
  std::uint32_t label_len = 0;
  in.read(reinterpret_cast<char*>(&label_len), sizeof(label_len));
  if (!in || label_len > 16) return std::nullopt;
  std::string label(label_len, '\0');
  in.read(label.data(), label_len);
  if (label != datum.type_label) return std::nullopt;
  std::uint64_t size = 0;
  in.read(reinterpret_cast<char*>(&size), sizeof(size));
  if (size != datum.weyl_order()) return std::nullopt;
  std::uint8_t has_tables = 0;
  in.read(reinterpret_cast<char*>(&has_tables), sizeof(has_tables));
  if (with_tables && !has_tables) return std::nullopt;
  std::uint64_t stored_checksum = 0;
  in.read(reinterpret_cast<char*>(&stored_checksum), sizeof(stored_checksum));

  std::vector<std::uint8_t> lengths;
  std::vector<std::int32_t> keys;
  std::vector<std::uint32_t> left, right, inv;
  if (!read_vec(in, lengths) || !read_vec(in, keys) || !read_vec(in, left) ||
      !read_vec(in, right) || !read_vec(in, inv))
    return std::nullopt;

  std::uint64_t checksum = 0xcbf29ce484222325ULL;
  checksum = vec_checksum(lengths, checksum);
  checksum = vec_checksum(keys, checksum);
  checksum = vec_checksum(left, checksum);
  checksum = vec_checksum(right, checksum);
  checksum = vec_checksum(inv, checksum);
  if (checksum != stored_checksum) return std::nullopt;

  try {
    return GroupIndex::from_raw(datum, has_tables != 0, std::move(lengths),
                                std::move(keys), std::move(left), std::move(right),
                                std::move(inv));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::map<std::string, unsigned long long> load_interval_cache(
    const std::string& cache_dir, const std::string& type_label) {
  std::map<std::string, unsigned long long> out;
  std::ifstream in(interval_cache_path(cache_dir, type_label));
  if (!in) return out;
  json j;
  try {
    in >> j;
  } catch (const std::exception&) {
    return out;
  }
  if (j.value("format", 0) != 1 || j.value("type", "") != type_label) return out;
  for (const auto& [k, v] : j.at("entries").items())
    out[k] = v.get<unsigned long long>();
  return out;
}

void save_interval_cache(const std::string& cache_dir, const std::string& type_label,
                         const std::map<std::string, unsigned long long>& counts) {
  std::filesystem::create_directories(cache_dir);
  json j;
  j["format"] = 1;
  j["type"] = type_label;
  j["entries"] = json::object();
  for (const auto& [k, v] : counts) j["entries"][k] = v;
  std::string path = interval_cache_path(cache_dir, type_label);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump(1) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

std::string enum_report_to_json(const EnumReport& report) {
  json j;
  j["type"] = report.type_label;
  j["coweight"] = report.mu_desc;
  j["set"] = report.kind;
  j["cardinality"] = report.cardinality;
  if (!report.stream_location.empty()) j["stream"] = report.stream_location;
  j["wall_seconds"] = report.wall_seconds;
  j["workers"] = report.workers;
  return j.dump(2);
}

}  // namespace admperm
