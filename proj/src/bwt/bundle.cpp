#include "bwt/bundle.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>

#include "lz/lz_core.hpp"

namespace qstring {

namespace fs = std::filesystem;
using nlohmann::json;

std::pair<Text, PairLayout> concat_pair(const Text& s1, const Text& s2) {
  symbol_t top = 0;
  for (auto c : s1) top = std::max(top, c);
  for (auto c : s2) top = std::max(top, c);
  PairLayout layout{s1.size(), s2.size(), top + 1};
  Text t(s1);
  t.push_back(layout.separator);
  t.insert(t.end(), s2.begin(), s2.end());
  return {std::move(t), layout};
}

namespace {
std::ofstream open_out(const fs::path& p, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(p, mode);
  if (!out) throw IoError("cannot write " + p.string());
  return out;
}

std::ifstream open_in(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw IoError("cannot read " + p.string());
  return in;
}

json parse_json(const fs::path& p) {
  auto in = open_in(p);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw IoError(p.string() + ": " + e.what());
  }
}
}  // namespace

void write_bundle(const fs::path& dir, const IndexBundle& b) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  const RIndex& idx = b.index;

  json header = {{"format", "qstring-index"},
                 {"version", kBundleVersion},
                 {"n", idx.size()},
                 {"r", idx.runs()},
                 {"tau", idx.tau()},
                 {"pair", b.pair.has_value()}};
  open_out(dir / "header.json") << header.dump() << '\n';
  {
    auto out = open_out(dir / "rlbwt.txt");
    write_rlbwt_text(out, idx.bwt());
  }
  {
    auto out = open_out(dir / "shortcut");
    write_shortcut(out, idx.shortcut());
  }
  {
    auto out = open_out(dir / "samples");
    out << idx.samples().tau << ' ' << idx.samples().rows.size() << '\n';
    for (auto [row, v] : idx.samples().rows) out << row << ' ' << v << '\n';
  }
  {
    auto out = open_out(dir / "text.lz.jsonl");
    write_jsonl(out, lz77_greedy(idx.text()));
  }
  if (b.pair) {
    json pj = {{"len1", b.pair->len1}, {"len2", b.pair->len2}, {"separator", b.pair->separator}};
    open_out(dir / "pair.json") << pj.dump() << '\n';
  }
}

IndexBundle read_bundle(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw IoError("no index bundle at " + dir.string());
  const json header = parse_json(dir / "header.json");
  if (header.value("format", "") != "qstring-index" || header.value("version", 0) != kBundleVersion)
    throw ValidationError("unsupported index bundle header");

  auto bwt_in = open_in(dir / "rlbwt.txt");
  RlBwt bwt = read_rlbwt_text(bwt_in);
  auto sc_in = open_in(dir / "shortcut");
  LfShortcut shortcut = read_shortcut(sc_in);
  auto s_in = open_in(dir / "samples");
  SampledSa samples;
  std::size_t count = 0;
  if (!(s_in >> samples.tau >> count)) throw IoError("samples: missing header");
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t row = 0, v = 0;
    if (!(s_in >> row >> v)) throw IoError("samples: truncated");
    samples.rows.emplace_back(row, v);
  }
  if (!std::is_sorted(samples.rows.begin(), samples.rows.end())) throw ValidationError("samples: unsorted rows");
  auto t_in = open_in(dir / "text.lz.jsonl");
  Text text = decompress(read_jsonl(t_in));

  IndexBundle b{RIndex(std::move(text), std::move(bwt), std::move(shortcut), std::move(samples)), std::nullopt};
  if (b.index.size() != header.value("n", std::size_t{0}) || b.index.runs() != header.value("r", std::size_t{0}))
    throw ValidationError("index bundle header disagrees with its contents");
  if (header.value("pair", false)) {
    const json pj = parse_json(dir / "pair.json");
    PairLayout layout{pj.at("len1").get<std::size_t>(), pj.at("len2").get<std::size_t>(),
                      pj.at("separator").get<symbol_t>()};
    if (layout.len1 + layout.len2 + 1 != b.index.text_length())
      throw ValidationError("pair layout disagrees with the indexed text");
    b.pair = layout;
  }
  return b;
}

}  // namespace qstring
