#include "ribbonball/classify.hpp"

#include <algorithm>
#include <map>

#include "ribbonball/isomorphism.hpp"

namespace ribbonball {

std::string_view to_string(Certification c) {
  switch (c) {
    case Certification::search: return "search";
    case Certification::table: return "table";
    case Certification::arithmetic: break;
  }
  return "arithmetic";
}

ArithmeticBound arithmetic_min_b(const PatternType& t) {
  const int k = t.k, l = t.l, n = t.n, m = t.m();
  // Both inequalities read num <= b * c after clearing denominators.
  int num, c;
  if (n >= 2) {
    num = 12 * m;
    c = 6 * m + 6 * k - (n + 1) * k * m;
  } else {
    num = 4 * l;
    c = 2 * l + 2 * k - k * l;
  }
  if (c <= 0) {
    const std::string which = n >= 2 ? "key inequality: 6m + 6k - (n+1)km = " : "valence-4 inequality: 2l + 2k - kl = ";
    return {std::nullopt, which + std::to_string(c) + " <= 0"};
  }
  int b = (num + c - 1) / c;
  // w = kb/m and e = kb(1+n)/2 are integral for b a multiple of 2m, so this
  // terminates within 2m steps.
  while ((k * b) % m != 0 || (k * b * (1 + n)) % 2 != 0) ++b;
  return {b, {}};
}

namespace {

const RowInfo* catalog_row_for(const PatternType& t) {
  for (const auto& r : catalog_rows()) {
    if (r.m == t.m() && r.n == t.n && (r.family() || r.k == t.k)) return &r;
  }
  return nullptr;
}

}  // namespace

Classification feasible_rows(int k_max) {
  ScanWindow w;
  w.k_max = k_max;
  return feasible_rows(w);
}

Classification feasible_rows(const ScanWindow& window) {
  Classification out;
  for (int k = 3; k <= window.k_max; ++k) {
    for (int l = 3; l <= window.l_max; ++l) {
      for (int n = 1; n <= std::min(window.n_max, l); ++n) {
        if (l % n != 0) continue;
        const PatternType t(k, l, n);
        const auto bound = arithmetic_min_b(t);
        const RowInfo* info = catalog_row_for(t);
        if (!bound.min_b) {
          out.infeasible.push_back({t, bound.reason});
          continue;
        }
        if (!info) {
          out.unexplained.push_back(t);
          continue;
        }
        ClassRow row;
        row.row = info->row;
        row.type = t;
        row.realization = {info->row, info->family() ? k : 0};
        row.arithmetic_b = *bound.min_b;
        const int realized_b = counts(dual(minimal_realization(row.realization))).b;
        row.min_b = realized_b;
        if (row.arithmetic_b >= realized_b) {
          row.certification = Certification::arithmetic;
        } else {
          // Exclude every smaller b by search where the dart count allows it.
          row.certification = Certification::search;
          for (int b = row.arithmetic_b; b < realized_b; ++b) {
            if ((k * b) % t.m() != 0 || (k * b * (1 + n)) % 2 != 0) continue;
            if (k * b * (1 + n) > window.dart_cap) {
              row.certification = Certification::table;
              break;
            }
            if (!exhaustive_search(t, b, window.dart_cap).empty()) {
              row.min_b = b;
              break;
            }
          }
        }
        row.min_w = k * row.min_b / t.m();
        out.rows.push_back(row);
      }
    }
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const ClassRow& a, const ClassRow& b) {
    return std::pair{a.row, a.type.k} < std::pair{b.row, b.type.k};
  });
  return out;
}

namespace {

// Backtracking over edge pairings of a dual graph with fixed rotations.
// Vertices are discovered in breadth-first order from black dart 0, each new
// vertex entering at a normalized position, so every map rooted at a black
// dart is produced once.
class Search {
 public:
  Search(const PatternType& t, int b, int w) : t_(t), b_(b), w_(w) {
    n_darts_ = t.k * b + t.l * w;
    faces_target_ = 2 - (b + w) + n_darts_ / 2;
    min_len_ = t.n == 1 ? 4 : 3;
    max_len_ = n_darts_ - (faces_target_ - 1) * min_len_;
    sigma_.resize(n_darts_);
    sigma_inv_.resize(n_darts_);
    for (int v = 0; v < b + w; ++v) {
      const int deg = v < b ? t.k : t.l, start = first_dart(v);
      for (int i = 0; i < deg; ++i) {
        sigma_[start + i] = start + (i + 1) % deg;
        sigma_inv_[start + (i + 1) % deg] = start + i;
      }
    }
    alpha_.assign(n_darts_, -1);
  }

  std::vector<RibbonGraph> run() {
    if (faces_target_ < 1) return {};
    order_.push_back(0);
    blacks_used_ = 1;
    recurse();
    std::vector<RibbonGraph> out;
    for (auto& [code, g] : found_) out.push_back(std::move(g));
    return out;
  }

 private:
  int first_dart(int v) const { return v < b_ ? v * t_.k : b_ * t_.k + (v - b_) * t_.l; }
  int degree(int v) const { return v < b_ ? t_.k : t_.l; }
  bool is_black(int v) const { return v < b_; }
  // Position p of a white vertex is a black-neighbor slot iff p % n == 0.
  bool leads_to_black(int v, int pos) const { return is_black(v) || pos % t_.n == 0; }
  int vertex_of(Dart d) const { return d < b_ * t_.k ? d / t_.k : b_ + (d - b_ * t_.k) / t_.l; }
  int pos_of(Dart d) const { return d < b_ * t_.k ? d % t_.k : (d - b_ * t_.k) % t_.l; }

  Dart phi(Dart d) const { return alpha_[d] < 0 ? -1 : sigma_[alpha_[d]]; }
  Dart phi_inv(Dart d) const { return alpha_[sigma_inv_[d]]; }

  // Returns the closed face length through d, or -(open chain length).
  int chain(Dart d, bool& saw, Dart other) const {
    int len = 1;
    saw = d == other;
    for (Dart x = phi(d); x != d; x = phi(x)) {
      if (x < 0) {
        for (Dart y = phi_inv(d); y >= 0; y = phi_inv(y)) ++len;
        return -len;
      }
      saw = saw || x == other;
      ++len;
    }
    return len;
  }

  // Applies the face bookkeeping for a new edge {d, e}. Returns the number of
  // faces closed, or -1 when the partial map cannot be completed.
  int closes(Dart d, Dart e) {
    int closed = 0;
    bool saw = false;
    for (Dart x : {d, e}) {
      if (x == e && saw) break;
      const int len = chain(x, saw, e);
      if (len < 0) {
        if (-len > max_len_) return -1;
        continue;
      }
      if (len < min_len_ || len > max_len_) return -1;
      ++closed;
      faces_done_ += 1;
      darts_done_ += len;
    }
    return closed;
  }

  void match(Dart d, Dart e) {
    alpha_[d] = e;
    alpha_[e] = d;
  }

  void unmatch(Dart d, Dart e) {
    alpha_[d] = -1;
    alpha_[e] = -1;
  }

  bool feasible() const {
    return faces_done_ <= faces_target_ && (faces_target_ - faces_done_) * min_len_ <= n_darts_ - darts_done_;
  }

  void try_pair(Dart d, Dart e) {
    match(d, e);
    const int faces0 = faces_done_, darts0 = darts_done_;
    if (closes(d, e) >= 0 && feasible()) recurse();
    faces_done_ = faces0;
    darts_done_ = darts0;
    unmatch(d, e);
  }

  void recurse() {
    Dart d = -1;
    for (int v : order_) {
      for (int i = 0; i < degree(v) && d < 0; ++i) {
        if (alpha_[first_dart(v) + i] < 0) d = first_dart(v) + i;
      }
      if (d >= 0) break;
    }
    if (d < 0) {
      if (blacks_used_ == b_ && whites_used_ == w_ && faces_done_ == faces_target_) record();
      return;
    }
    const int v = vertex_of(d);
    const bool want_black = !is_black(v) && leads_to_black(v, pos_of(d));
    // Partners on discovered vertices. Indexed, since deeper levels push to
    // order_ (and pop again before returning).
    for (std::size_t oi = 0, on = order_.size(); oi < on; ++oi) {
      const int u = order_[oi];
      if (is_black(u) != want_black) continue;
      for (int i = 0; i < degree(u); ++i) {
        const Dart e = first_dart(u) + i;
        if (e == d || alpha_[e] >= 0) continue;
        if (!want_black && leads_to_black(u, i) != is_black(v)) continue;
        try_pair(d, e);
      }
    }
    // A new vertex.
    if (want_black) {
      if (blacks_used_ < b_) {
        const int u = blacks_used_++;
        order_.push_back(u);
        try_pair(d, first_dart(u));
        order_.pop_back();
        --blacks_used_;
      }
    } else if (whites_used_ < w_) {
      const int u = b_ + whites_used_++;
      order_.push_back(u);
      if (is_black(v)) {
        try_pair(d, first_dart(u));
      } else {
        for (int r = 1; r < t_.n; ++r) try_pair(d, first_dart(u) + r);
      }
      order_.pop_back();
      --whites_used_;
    }
  }

  void record() {
    std::vector<Color> vc(n_darts_);
    for (Dart d = 0; d < n_darts_; ++d) vc[d] = is_black(vertex_of(d)) ? Color::black : Color::white;
    RibbonGraph g(sigma_, alpha_, Role::dual, {}, std::move(vc));
    RibbonGraph p = dual(g);
    auto code = canonical_form(p);
    found_.emplace(std::move(code), std::move(p));
  }

  PatternType t_;
  int b_, w_;
  int n_darts_ = 0;
  int faces_target_ = 0;
  int min_len_ = 3;
  int max_len_ = 0;
  std::vector<Dart> sigma_, sigma_inv_, alpha_;
  std::vector<int> order_;
  int blacks_used_ = 0;
  int whites_used_ = 0;
  int faces_done_ = 0;
  int darts_done_ = 0;
  std::map<std::string, RibbonGraph> found_;
};

}  // namespace

std::vector<RibbonGraph> exhaustive_search(const PatternType& t, int b, int dart_cap) {
  if (b < 1) throw Error("b must be positive");
  if ((t.k * b) % t.m() != 0) return {};
  const int w = t.k * b / t.m();
  const int darts = t.k * b + t.l * w;
  if (darts % 2 != 0) return {};
  if (darts > dart_cap)
    throw Error("search needs " + std::to_string(darts) + " darts, above the cap of " + std::to_string(dart_cap));
  return Search(t, b, w).run();
}

}  // namespace ribbonball
