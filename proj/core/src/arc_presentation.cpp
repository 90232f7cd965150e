#include "equiknot/arc_presentation.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "equiknot/error.hpp"

namespace equiknot {

ArcPresentation ArcPresentation::validate(
    const std::vector<std::pair<int, int>>& raw, int declared_n) {
  if (raw.empty()) raise(ErrorCode::CountMismatch, "empty arc list");

  int max_index = 0;
  for (const auto& [a, b] : raw) {
    if (a <= 0 || b <= 0)
      raise(ErrorCode::SyntaxError, "binding indices must be positive");
    if (a == b)
      raise(ErrorCode::LoopArc,
            "arc {" + std::to_string(a) + "," + std::to_string(b) +
                "} joins an index to itself");
    max_index = std::max({max_index, a, b});
  }

  const int n = declared_n >= 0 ? declared_n : max_index;
  if (static_cast<int>(raw.size()) != n || max_index > n)
    raise(ErrorCode::CountMismatch,
          "presentation needs as many arcs as binding indices (got " +
              std::to_string(raw.size()) + " arcs, indices up to " +
              std::to_string(max_index) + ", n = " + std::to_string(n) + ")");

  std::vector<int> degree(n + 1, 0);
  for (const auto& [a, b] : raw) {
    degree[a]++;
    degree[b]++;
  }
  for (int i = 1; i <= n; ++i)
    if (degree[i] != 2)
      raise(ErrorCode::DegreeError, "binding index " + std::to_string(i) +
                                        " has degree " +
                                        std::to_string(degree[i]) +
                                        ", expected 2");

  std::vector<Arc> arcs;
  arcs.reserve(raw.size());
  for (const auto& [a, b] : raw) arcs.emplace_back(a, b);

  // Alternating arc/index walk must close up after visiting all n arcs.
  std::vector<std::vector<int>> at_index(n + 1);
  for (int k = 0; k < n; ++k) {
    at_index[arcs[k].lo].push_back(k);
    at_index[arcs[k].hi].push_back(k);
  }
  int arc = 0, entry = arcs[0].lo;
  std::vector<bool> seen(n, false);
  int visited = 0;
  while (!seen[arc]) {
    seen[arc] = true;
    ++visited;
    int exit = arcs[arc].other(entry);
    const auto& pair = at_index[exit];
    int next = pair[0] == arc ? pair[1] : pair[0];
    // Duplicate arcs: pair[0] == pair[1] == arc cannot happen since the
    // two entries are distinct page slots.
    arc = next;
    entry = exit;
  }
  if (visited != n)
    raise(ErrorCode::Disconnected,
          "presentation splits into more than one closed cycle (" +
              std::to_string(visited) + " of " + std::to_string(n) +
              " arcs in the first)");

  return ArcPresentation(std::move(arcs));
}

std::pair<int, int> ArcPresentation::pages_at(int index) const {
  int first = -1, second = -1;
  for (int k = 0; k < page_count(); ++k) {
    if (arcs_[k].contains(index)) {
      if (first < 0)
        first = k;
      else
        second = k;
    }
  }
  if (second < 0) raise(ErrorCode::Internal, "binding index not of degree 2");
  return {first, second};
}

bool ArcPresentation::has_arc(const Arc& a) const {
  return std::find(arcs_.begin(), arcs_.end(), a) != arcs_.end();
}

ArcPresentation page_rotate(const ArcPresentation& p, int m) {
  const int n = p.page_count();
  std::vector<std::pair<int, int>> raw(n);
  for (int k = 0; k < n; ++k) {
    const Arc& a = p.arc(((k + m) % n + n) % n);
    raw[k] = {a.lo, a.hi};
  }
  return ArcPresentation::validate(raw);
}

ArcPresentation binding_rotate(const ArcPresentation& p, int m) {
  const int n = p.page_count();
  auto shift = [&](int i) { return ((i - 1 + m) % n + n) % n + 1; };
  std::vector<std::pair<int, int>> raw(n);
  for (int k = 0; k < n; ++k)
    raw[k] = {shift(p.arc(k).lo), shift(p.arc(k).hi)};
  return ArcPresentation::validate(raw);
}

ArcPresentation normalize_no_extremal_arc(const ArcPresentation& p,
                                          int* rotation_out) {
  const int n = p.page_count();
  for (int m = 0; m < n; ++m) {
    ArcPresentation q = binding_rotate(p, m);
    if (!q.has_arc(Arc(1, n))) {
      if (rotation_out) *rotation_out = m;
      return q;
    }
  }
  raise(ErrorCode::NoValidRotation,
        "every binding rotation keeps an arc joining the extremes; the "
        "presentation is a reducible cycle of adjacent arcs");
}

ArcPresentation parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> raw;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    int a, b;
    if (!(ls >> a)) continue;  // blank or comment-only line
    if (!(ls >> b))
      raise(ErrorCode::SyntaxError,
            "line " + std::to_string(line_no) + ": expected two integers");
    std::string trailing;
    if (ls >> trailing)
      raise(ErrorCode::SyntaxError,
            "line " + std::to_string(line_no) + ": trailing content '" +
                trailing + "'");
    if (a <= 0 || b <= 0)
      raise(ErrorCode::SyntaxError, "line " + std::to_string(line_no) +
                                        ": indices must be positive");
    raw.emplace_back(a, b);
  }
  return ArcPresentation::validate(raw);
}

std::string serialize_text(const ArcPresentation& p) {
  std::ostringstream os;
  for (const Arc& a : p.arcs()) os << a.lo << " " << a.hi << "\n";
  return os.str();
}

ArcPresentation parse_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    raise(ErrorCode::SyntaxError, std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("arcs") || !j["arcs"].is_array())
    raise(ErrorCode::SyntaxError, "JSON needs an \"arcs\" array");
  std::vector<std::pair<int, int>> raw;
  for (const auto& e : j["arcs"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      raise(ErrorCode::SyntaxError, "each arc must be a pair of integers");
    raw.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  int declared_n = -1;
  if (j.contains("n")) {
    if (!j["n"].is_number_integer())
      raise(ErrorCode::SyntaxError, "\"n\" must be an integer");
    declared_n = j["n"].get<int>();
  }
  return ArcPresentation::validate(raw, declared_n);
}

std::string serialize_json(const ArcPresentation& p) {
  nlohmann::json j;
  j["n"] = p.page_count();
  auto arr = nlohmann::json::array();
  for (const Arc& a : p.arcs()) arr.push_back({a.lo, a.hi});
  j["arcs"] = arr;
  return j.dump();
}

}  // namespace equiknot
