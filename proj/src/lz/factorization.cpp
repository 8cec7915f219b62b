#include "lz/factorization.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

namespace qstring {

std::string kind_name(FactorizationKind k) {
  switch (k) {
    case FactorizationKind::lz77: return "lz77";
    case FactorizationKind::non_overlapping: return "nonoverlapping";
    case FactorizationKind::lz_end: return "lzend";
    case FactorizationKind::lz_end_tau: return "lzend_tau";
  }
  return "?";
}

FactorizationKind parse_kind(const std::string& name) {
  if (name == "lz77") return FactorizationKind::lz77;
  if (name == "nonoverlapping") return FactorizationKind::non_overlapping;
  if (name == "lzend") return FactorizationKind::lz_end;
  if (name == "lzend_tau") return FactorizationKind::lz_end_tau;
  throw ValidationError("unknown factorization kind: " + name);
}

Text decompress(const Factorization& f) {
  Text out;
  out.reserve(f.text_len);
  const bool overlap_ok = f.kind == FactorizationKind::lz77;
  for (const Phrase& p : f.phrases) {
    if (p.literal) {
      out.push_back(p.symbol);
      continue;
    }
    const std::size_t start = out.size() + 1;
    if (p.len == 0) throw ValidationError("copy phrase of length zero");
    if (p.src < 1 || p.src >= start) throw ValidationError("copy phrase source does not precede the phrase");
    if (!overlap_ok && p.src + p.len > start) throw ValidationError("copy phrase source overlaps the phrase");
    for (std::size_t k = 0; k < p.len; ++k) out.push_back(out[p.src - 1 + k]);
  }
  if (out.size() != f.text_len) throw ValidationError("phrase lengths do not sum to text length");
  return out;
}

void validate(const Factorization& f) {
  decompress(f);
  if (f.kind != FactorizationKind::lz_end && f.kind != FactorizationKind::lz_end_tau) return;
  if (f.kind == FactorizationKind::lz_end_tau && f.tau == 0) throw ValidationError("lzend_tau factorization with tau 0");
  std::vector<bool> is_end(f.text_len + 1, false);
  std::size_t pos = 0;
  for (const Phrase& p : f.phrases) {
    if (!p.literal) {
      std::size_t q = p.src + p.len - 1;
      bool ok = is_end[q] || (f.kind == FactorizationKind::lz_end_tau && q % f.tau == 1 % f.tau);
      if (!ok) throw ValidationError("copy source does not end at an eligible position");
    }
    pos += p.length();
    is_end[pos] = true;
  }
}

void write_jsonl(std::ostream& out, const Factorization& f) {
  out << "{\"kind\": \"" << kind_name(f.kind) << "\", \"tau\": ";
  if (f.kind == FactorizationKind::lz_end_tau)
    out << f.tau;
  else
    out << "null";
  out << ", \"n\": " << f.text_len << "}\n";
  for (const Phrase& p : f.phrases) {
    if (p.literal)
      out << "{\"lit\": " << p.symbol << "}\n";
    else
      out << "{\"src\": " << p.src << ", \"len\": " << p.len << "}\n";
  }
}

Factorization read_jsonl(std::istream& in) {
  using nlohmann::json;
  std::string line;
  Factorization f;
  if (!std::getline(in, line)) throw ValidationError("missing factorization header");
  try {
    json h = json::parse(line);
    f.kind = parse_kind(h.at("kind").get<std::string>());
    f.tau = h.at("tau").is_null() ? 0 : h.at("tau").get<std::size_t>();
    f.text_len = h.at("n").get<std::size_t>();
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      json p = json::parse(line);
      if (p.contains("lit"))
        f.phrases.push_back(Phrase::Literal(p.at("lit").get<symbol_t>()));
      else
        f.phrases.push_back(Phrase::Copy(p.at("src").get<std::size_t>(), p.at("len").get<std::size_t>()));
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed factorization line: ") + e.what());
  }
  return f;
}

std::ostream& operator<<(std::ostream& out, const Phrase& p) {
  if (p.literal) return out << "Literal(" << p.symbol << ")";
  return out << "Copy(" << p.src << "," << p.len << ")";
}

}  // namespace qstring
