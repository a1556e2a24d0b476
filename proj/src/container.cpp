#include "wcsd/container.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

namespace wcsd {

namespace {

constexpr char kMagic[5] = {'W', 'C', 'I', 'X', '1'};
constexpr std::uint8_t kVersion = 1;

void put_varint(std::string& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7F) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_double(std::string& out, double d) {
  std::uint64_t bits;
  std::memcpy(&bits, &d, sizeof(bits));
  put_u64(out, bits);
}

class Reader {
 public:
  explicit Reader(std::string data) : data_(std::move(data)) {}

  std::uint8_t u8() {
    need(1);
    return static_cast<std::uint8_t>(data_[pos_++]);
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8_raw()) << (8 * i);
    return v;
  }
  std::uint64_t varint() {
    std::uint64_t v = 0;
    int shift = 0;
    while (true) {
      need(1);
      std::uint8_t b = u8_raw();
      if (shift >= 64) throw ContainerError("corrupt container: varint overflow");
      v |= static_cast<std::uint64_t>(b & 0x7F) << shift;
      if ((b & 0x80) == 0) return v;
      shift += 7;
    }
  }
  std::uint32_t varint32() {
    std::uint64_t v = varint();
    if (v > 0xFFFFFFFFull) throw ContainerError("corrupt container: value out of range");
    return static_cast<std::uint32_t>(v);
  }
  double f64() {
    std::uint64_t bits = u64();
    double d;
    std::memcpy(&d, &bits, sizeof(d));
    return d;
  }
  void expect_magic() {
    need(sizeof(kMagic));
    if (std::memcmp(data_.data() + pos_, kMagic, sizeof(kMagic)) != 0) {
      throw ContainerError("corrupt container: bad magic");
    }
    pos_ += sizeof(kMagic);
  }
  bool at_end() const { return pos_ == data_.size(); }

 private:
  std::uint8_t u8_raw() { return static_cast<std::uint8_t>(data_[pos_++]); }
  void need(std::size_t k) const {
    if (pos_ + k > data_.size()) throw ContainerError("corrupt container: truncated file");
  }
  std::string data_;
  std::size_t pos_ = 0;
};

void write_file(const std::string& path, const std::string& buf) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ContainerError("cannot open for writing: " + path);
  out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
  if (!out) throw ContainerError("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContainerError("cannot open: " + path);
  std::string buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return buf;
}

void put_header(std::string& out, SectionTag tag, std::uint64_t fingerprint,
                const std::vector<double>& quality_table, const VertexOrder& order) {
  out.append(kMagic, sizeof(kMagic));
  out.push_back(static_cast<char>(kVersion));
  out.push_back(static_cast<char>(tag));
  put_u64(out, fingerprint);
  put_varint(out, quality_table.size());
  for (double q : quality_table) put_double(out, q);
  put_varint(out, order.sequence.size());
  for (VertexId v : order.sequence) put_varint(out, v);
}

}  // namespace

QualityRank LoadedIndex::rank_for_threshold(double w) const {
  auto it = std::lower_bound(quality_table.begin(), quality_table.end(), w);
  return static_cast<QualityRank>(it - quality_table.begin());
}

void save_index(const std::string& path, const WcIndex& idx,
                const std::vector<double>& quality_table) {
  SectionTag tag = SectionTag::kWc;
  if (idx.directed) tag = SectionTag::kWcDirected;
  else if (idx.path_mode) tag = SectionTag::kWcPath;

  std::string out;
  put_header(out, tag, idx.fingerprint, quality_table, idx.order);
  int families = idx.directed ? 2 : 1;
  for (int fam = 0; fam < families; ++fam) {
    for (VertexId v = 0; v < idx.num_vertices(); ++v) {
      const LabelSet& ls = idx.labels[fam][v];
      put_varint(out, ls.size());
      auto es = ls.entries();
      for (std::size_t i = 0; i < es.size(); ++i) {
        put_varint(out, es[i].hub_rank);
        put_varint(out, es[i].dist);
        put_varint(out, es[i].quality);
        if (idx.path_mode) put_varint(out, ls.parent_at(i));
      }
    }
  }
  write_file(path, out);
}

void save_index(const std::string& path, const PerThresholdIndex& idx,
                const std::vector<double>& quality_table) {
  std::string out;
  put_header(out, SectionTag::kNaive, idx.fingerprint, quality_table, idx.order);
  put_varint(out, idx.thresholds.size());
  VertexId n = static_cast<VertexId>(idx.order.sequence.size());
  for (std::size_t k = 0; k < idx.thresholds.size(); ++k) {
    put_varint(out, idx.thresholds[k]);
    for (VertexId v = 0; v < n; ++v) {
      const auto& l = idx.labels[k][v];
      put_varint(out, l.size());
      for (const auto& e : l) {
        put_varint(out, e.hub_rank);
        put_varint(out, e.dist);
      }
    }
  }
  write_file(path, out);
}

LoadedIndex load_index(const std::string& path) {
  Reader r(read_file(path));
  r.expect_magic();
  std::uint8_t version = r.u8();
  if (version != kVersion) {
    throw ContainerError("unsupported container version " + std::to_string(version));
  }
  std::uint8_t tag_byte = r.u8();
  if (tag_byte < 1 || tag_byte > 4) throw ContainerError("corrupt container: unknown section tag");

  LoadedIndex out;
  out.tag = static_cast<SectionTag>(tag_byte);
  out.fingerprint = r.u64();
  std::size_t qn = r.varint();
  out.quality_table.reserve(qn);
  for (std::size_t i = 0; i < qn; ++i) out.quality_table.push_back(r.f64());
  std::size_t n = r.varint();
  std::vector<VertexId> seq(n);
  for (auto& v : seq) {
    v = r.varint32();
    if (v >= n) throw ContainerError("corrupt container: order entry out of range");
  }
  VertexOrder order = VertexOrder::from_sequence(std::move(seq));

  if (out.tag == SectionTag::kNaive) {
    PerThresholdIndex idx;
    idx.order = std::move(order);
    idx.fingerprint = out.fingerprint;
    std::size_t tn = r.varint();
    idx.labels.resize(tn);
    for (std::size_t k = 0; k < tn; ++k) {
      idx.thresholds.push_back(r.varint32());
      idx.labels[k].resize(n);
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t cnt = r.varint();
        auto& l = idx.labels[k][v];
        l.reserve(cnt);
        for (std::size_t i = 0; i < cnt; ++i) {
          PerThresholdIndex::Entry e;
          e.hub_rank = r.varint32();
          e.dist = r.varint32();
          l.push_back(e);
        }
      }
    }
    if (!r.at_end()) throw ContainerError("corrupt container: trailing bytes");
    out.naive = std::move(idx);
    return out;
  }

  WcIndex idx;
  idx.order = std::move(order);
  idx.fingerprint = out.fingerprint;
  idx.directed = out.tag == SectionTag::kWcDirected;
  idx.path_mode = out.tag == SectionTag::kWcPath;
  int families = idx.directed ? 2 : 1;
  for (int fam = 0; fam < families; ++fam) {
    idx.labels[fam].resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::size_t cnt = r.varint();
      LabelSet& ls = idx.labels[fam][v];
      std::uint32_t prev_hub = 0;
      for (std::size_t i = 0; i < cnt; ++i) {
        std::uint32_t hub = r.varint32();
        Dist dist = r.varint32();
        QualityRank quality = r.varint32();
        VertexId parent = 0;
        if (idx.path_mode) parent = r.varint32();
        if (hub >= n || (i > 0 && hub < prev_hub)) {
          throw ContainerError("corrupt container: label entries out of order");
        }
        prev_hub = hub;
        ls.append(hub, dist, quality, parent, idx.path_mode);
      }
    }
  }
  if (!r.at_end()) throw ContainerError("corrupt container: trailing bytes");
  out.wc = std::move(idx);
  return out;
}

void verify_fingerprint(const LoadedIndex& idx, const QualityGraph& g) {
  if (idx.fingerprint != g.fingerprint()) {
    throw ContainerError("fingerprint mismatch: index was built over a different graph");
  }
}

}  // namespace wcsd
