#pragma once

#include <string>
#include <utility>
#include <vector>

namespace equiknot {

/// Unordered pair of binding indices, stored with lo < hi. 1-based.
struct Arc {
  int lo = 0;
  int hi = 0;

  Arc() = default;
  Arc(int a, int b) : lo(a < b ? a : b), hi(a < b ? b : a) {}

  bool operator==(const Arc& o) const { return lo == o.lo && hi == o.hi; }
  bool contains(int index) const { return lo == index || hi == index; }
  int other(int index) const { return lo == index ? hi : lo; }
};

/// An arc presentation: n binding indices on an axis and n arcs, one per
/// page, arc k living on page k in cyclic page order. Always valid by
/// construction; build instances through validate() or the parsers.
class ArcPresentation {
 public:
  /// Checks the full invariant set: n arcs on n indices, no loop arcs,
  /// every index of degree 2, single closed cycle. declared_n < 0 means
  /// "infer from the data".
  static ArcPresentation validate(const std::vector<std::pair<int, int>>& raw,
                                  int declared_n = -1);

  int page_count() const { return static_cast<int>(arcs_.size()); }
  int index_count() const { return page_count(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int page) const { return arcs_[page]; }

  /// The two pages meeting binding index r (1-based), in page order.
  std::pair<int, int> pages_at(int index) const;

  bool has_arc(const Arc& a) const;

  bool operator==(const ArcPresentation& o) const { return arcs_ == o.arcs_; }

 private:
  explicit ArcPresentation(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {}
  std::vector<Arc> arcs_;
};

/// Cyclic shift of the page list by m (endpoints untouched).
ArcPresentation page_rotate(const ArcPresentation& p, int m);

/// Relabels every binding index i to ((i - 1 + m) mod n) + 1.
ArcPresentation binding_rotate(const ArcPresentation& p, int m);

/// Smallest m >= 0 with no {1, n} arc in binding_rotate(p, m); throws
/// NoValidRotation when every rotation keeps an extremal arc (the cycle
/// of cyclically adjacent arcs — a reducible presentation).
ArcPresentation normalize_no_extremal_arc(const ArcPresentation& p,
                                          int* rotation_out = nullptr);

/// Text format: one arc per line, "i j"; '#' starts a comment, blank
/// lines skipped. n is inferred as the max index and cross-checked
/// against the arc count.
ArcPresentation parse_text(const std::string& text);
std::string serialize_text(const ArcPresentation& p);

/// JSON mirror {"n": int, "arcs": [[i,j],...]}.
ArcPresentation parse_json(const std::string& json_text);
std::string serialize_json(const ArcPresentation& p);

}  // namespace equiknot
