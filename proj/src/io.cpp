#include "fintop/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fintop::io {

namespace {

[[noreturn]] void parse_fail(const std::string& message) { throw Error(Errc::ParseError, message); }

const Json& require_field(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) parse_fail(std::string("missing field '") + key + "'");
  return *it;
}

std::string as_label(const Json& value, const char* where) {
  if (!value.is_string()) parse_fail(std::string(where) + ": labels must be strings");
  return value.get<std::string>();
}

std::vector<std::string> label_list(const Json& value, const char* where) {
  if (!value.is_array()) parse_fail(std::string(where) + " must be an array of labels");
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const auto& v : value) out.push_back(as_label(v, where));
  return out;
}

std::vector<LabelPair> pair_list(const Json& value, const char* where) {
  if (!value.is_array()) parse_fail(std::string(where) + " must be an array of pairs");
  std::vector<LabelPair> out;
  out.reserve(value.size());
  for (const auto& p : value) {
    if (!p.is_array() || p.size() != 2) parse_fail(std::string(where) + " entries must be two-element arrays");
    out.emplace_back(as_label(p[0], where), as_label(p[1], where));
  }
  return out;
}

void check_version(const Json& doc) {
  if (!doc.is_object()) parse_fail("document must be a JSON object");
  if (auto it = doc.find("format_version"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int>() != kFormatVersion) {
      parse_fail("unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");
    }
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    parse_fail("at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

FiniteSpace space_from_json(const Json& doc) {
  check_version(doc);
  std::vector<std::string> elements = label_list(require_field(doc, "elements"), "elements");
  const int kinds = static_cast<int>(doc.contains("relations")) + static_cast<int>(doc.contains("covers")) +
                    static_cast<int>(doc.contains("open_sets"));
  if (kinds != 1) parse_fail("space document needs exactly one of 'relations', 'covers', 'open_sets'");

  if (doc.contains("relations")) {
    return FiniteSpace::from_relations(std::move(elements), pair_list(doc["relations"], "relations"));
  }
  if (doc.contains("covers")) {
    const auto covers = pair_list(doc["covers"], "covers");
    std::vector<LabelPair> relations;
    relations.reserve(covers.size());
    for (const auto& [upper, lower] : covers) {
      if (upper == lower) throw Error(Errc::CoversNotAcyclic, "cover pair '" + upper + "' relates an element to itself");
      relations.emplace_back(lower, upper);
    }
    FiniteSpace space = FiniteSpace::from_relations(std::move(elements), relations);
    if (!space.is_t0()) {
      for (Element i = 0; i < space.size(); ++i)
        for (Element j = i + 1; j < space.size(); ++j)
          if (space.equivalent(i, j)) {
            throw Error(Errc::CoversNotAcyclic,
                        "covers form a cycle through '" + space.label(i) + "' and '" + space.label(j) + "'", {i, j});
          }
    }
    return space;
  }
  const Json& opens = doc["open_sets"];
  if (!opens.is_array()) parse_fail("open_sets must be an array of label arrays");
  std::vector<std::vector<std::string>> sets;
  for (const auto& o : opens) sets.push_back(label_list(o, "open_sets"));
  return FiniteSpace::from_open_sets(std::move(elements), sets);
}

FiniteSpace parse_space(std::string_view text) { return space_from_json(parse_json(text)); }

Json space_to_json(const FiniteSpace& x_space) {
  Json doc;
  doc["format_version"] = kFormatVersion;
  doc["elements"] = x_space.labels();
  Json relations = Json::array();
  for (Element a = 0; a < x_space.size(); ++a)
    for (Element b = 0; b < x_space.size(); ++b)
      if (a != b && x_space.leq(a, b)) relations.push_back(Json::array({x_space.label(a), x_space.label(b)}));
  doc["relations"] = std::move(relations);
  return doc;
}

std::string serialize_space(const FiniteSpace& x_space) { return space_to_json(x_space).dump(2) + "\n"; }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

FiniteSpace load_space(const std::filesystem::path& path) { return parse_space(read_file(path)); }

SpaceMap parse_map(std::string_view text, const std::filesystem::path& base_dir) {
  const Json doc = parse_json(text);
  check_version(doc);
  auto resolve = [&](const char* key) {
    const Json& ref = require_field(doc, key);
    if (ref.is_string()) {
      std::filesystem::path p = ref.get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      return load_space(p);
    }
    if (ref.is_object()) return space_from_json(ref);
    parse_fail(std::string(key) + " must be a path or an inline space document");
  };
  FiniteSpace domain = resolve("domain");
  FiniteSpace codomain = resolve("codomain");
  return make_map_by_labels(std::move(domain), std::move(codomain), pair_list(require_field(doc, "values"), "values"));
}

SpaceMap load_map(const std::filesystem::path& path) { return parse_map(read_file(path), path.parent_path()); }

std::string render_dot(const FiniteSpace& x_space) {
  const QuotientData q = kolmogorov_quotient(x_space);
  const FiniteSpace& p = q.quotient;
  const auto classes = q.classes();
  const std::size_t k = p.size();

  // height = length of the longest chain ending at the element
  std::vector<std::size_t> height(k, 0);
  std::vector<Element> by_size(k);
  for (Element c = 0; c < k; ++c) by_size[c] = c;
  auto down_count = [&](Element c) {
    std::size_t n = 0;
    for (Element d = 0; d < k; ++d) n += p.leq(d, c);
    return n;
  };
  std::stable_sort(by_size.begin(), by_size.end(), [&](Element a, Element b) { return down_count(a) < down_count(b); });
  for (Element c : by_size)
    for (Element d = 0; d < k; ++d)
      if (p.lt(d, c)) height[c] = std::max(height[c], height[d] + 1);

  std::ostringstream out;
  out << "digraph finite_space {\n  node [shape=circle];\n";
  for (Element c = 0; c < k; ++c) {
    std::string label;
    for (std::size_t i = 0; i < classes[c].size(); ++i) label += (i ? "," : "") + x_space.label(classes[c][i]);
    out << "  n" << c << " [label=" << quote_dot(label);
    if (classes[c].size() > 1) out << ", shape=box";
    out << "];\n";
  }
  for (Element upper = 0; upper < k; ++upper)
    for (Element lower = 0; lower < k; ++lower) {
      if (!p.lt(lower, upper)) continue;
      bool cover = true;
      for (Element mid = 0; mid < k && cover; ++mid)
        if (p.lt(lower, mid) && p.lt(mid, upper)) cover = false;
      if (cover) out << "  n" << upper << " -> n" << lower << ";\n";
    }
  const std::size_t top = k == 0 ? 0 : *std::max_element(height.begin(), height.end()) + 1;
  for (std::size_t level = 0; level < top; ++level) {
    out << "  { rank=same;";
    for (Element c = 0; c < k; ++c)
      if (height[c] == level) out << " n" << c << ";";
    out << " }\n";
  }
  out << "}\n";
  return out.str();
}

Json labels_json(const FiniteSpace& x_space, const ElementSet& elements) {
  Json out = Json::array();
  for (Element e : elements) out.push_back(x_space.label(e));
  return out;
}

Json retraction_json(const SpaceMap& r, const Subspace& a) {
  Json out = Json::array();
  for (Element x = 0; x < r.domain().size(); ++x)
    if (!a.contains(x)) out.push_back(Json::array({r.domain().label(x), r.codomain().label(r(x))}));
  return out;
}

Json retract_certificate_json(const FiniteSpace& x_space, const Subspace& a, const RetractCertificate& cert) {
  Json out;
  out["verdict"] = cert.ok();
  if (cert.ok()) {
    out["retraction"] = retraction_json(*cert.retraction, a);
  } else {
    Json failure;
    failure["witness"] = x_space.label(*cert.failure_witness);
    failure["down_set_meet"] = labels_json(x_space, cert.witness_set);
    out["failure"] = std::move(failure);
  }
  return out;
}

Json removal_trace_json(const FiniteSpace& x_space, const RemovalTrace& trace) {
  Json out = Json::array();
  for (const auto& step : trace)
    out.push_back(Json::array({x_space.label(step.removed), x_space.label(step.lower_cover)}));
  return out;
}

Json cofibration_report_json(const CofibrationReport& report) {
  Json out;
  out["verdict"] = report.verdict;
  Json embedding;
  embedding["ok"] = report.embedding_ok;
  if (report.embedding_witness && !report.embedding_witness->ok) {
    const auto& w = *report.embedding_witness;
    embedding[w.failure == EmbeddingCheck::Failure::Collapsed ? "collapsed" : "not_reflected"] =
        Json::array({report.source.label(w.first), report.source.label(w.second)});
  }
  out["embedding"] = std::move(embedding);
  Json components = Json::array();
  for (const auto& check : report.per_component) {
    Json c;
    c["component"] = labels_json(report.quotient.quotient, check.component);
    c["subspace"] = labels_json(check.component_space, check.target.indices());
    c["dbp_retract"] = retract_certificate_json(check.component_space, check.target, check.certificate);
    components.push_back(std::move(c));
  }
  out["components"] = std::move(components);
  if (report.assembled_retraction) out["retraction"] = retraction_json(*report.assembled_retraction, report.subspace);
  return out;
}

Json beat_search_json(const FiniteSpace& x_space, const BeatSearchResult& result) {
  Json out;
  out["found"] = result.found;
  Json seq = Json::array();
  for (const auto& step : result.sequence) {
    seq.push_back(Json::array({x_space.label(step.removed), step.kind == BeatRemoval::Kind::Down ? "down" : "up",
                               x_space.label(step.partner)}));
  }
  out["sequence"] = std::move(seq);
  out["states_explored"] = result.states_explored;
  return out;
}

Json jx_diagnostics_json(const CylinderSpace& c, const JxDiagnostics& diag) {
  const FiniteSpace& x = c.source_map.domain();
  const FiniteSpace& y = c.source_map.codomain();
  Json out;
  out["verdict"] = diag.verdict;
  out["criterion_used"] = diag.criterion_used;
  Json pre = Json::array();
  for (const auto& check : diag.preimages) {
    Json p;
    p["y"] = y.label(check.y);
    p["preimage"] = labels_json(x, check.preimage);
    p["maximum"] = check.maximum ? Json(x.label(*check.maximum)) : Json(nullptr);
    pre.push_back(std::move(p));
  }
  out["preimages"] = std::move(pre);
  out["generic"] = cofibration_report_json(diag.report);
  return out;
}

}  // namespace fintop::io
